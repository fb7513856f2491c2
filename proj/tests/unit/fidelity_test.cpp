// Copyright 2026 The qroute Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/fidelity.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qroute/errors.hpp"
#include "qroute/fockoracle.hpp"

namespace qroute {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PairFidelityFromAmplitude, Endpoints) {
  EXPECT_DOUBLE_EQ(pair_fidelity_from_amplitude({1.0, 0.0}).fidelity, 1.0);
  EXPECT_DOUBLE_EQ(pair_fidelity_from_amplitude({0.0, 0.0}).fidelity, 0.25);
  EXPECT_THROW(pair_fidelity_from_amplitude({1.01, 0.0}), InvalidArgument);
  EXPECT_NO_THROW(pair_fidelity_from_amplitude({1.0 + 1e-12, 0.0}));
}

TEST(PairFidelityFromAmplitude, AgreesWithOracleOnPartialSwap) {
  // Resonant pair stopped early so that |K(1,0)| = |sin(omega0 t)| = 0.9.
  const double omega0 = 1.0;
  const double t = std::asin(0.9) / omega0;
  const auto w = program_subcube_split(SubcubeSplit(1, {}, 0.0, omega0));
  const auto k = evolve_modes(w, t);
  const auto alpha = transfer_amplitude(k, 0, 1);
  ASSERT_NEAR(std::abs(alpha), 0.9, 1e-14);

  const auto closed = pair_fidelity_from_amplitude(std::polar(0.9, kPi / 3));
  EXPECT_NEAR(closed.fidelity, 0.9025, 1e-15);
  EXPECT_NEAR(closed.correction_phase, wrap_phase(-kPi / 3), 1e-15);

  const auto state = evolve_oscillator(prepare_initial(2, {0}), k);
  const auto exact = bell_fidelity(state, 0, 1, phase_correction(k, 0, 1));
  EXPECT_NEAR(exact.fidelity, 0.9025, 1e-12);
}

TEST(HypercubeBound, NoChannelBitsIsPerfect) {
  for (double eta : {0.01, 0.3, 1.5}) EXPECT_EQ(hypercube_bound(0, eta), 1.0);
}

TEST(HypercubeBound, WorstCaseDirectEvaluation) {
  EXPECT_NEAR(hypercube_bound_with_sin2(2, 0.1, 1.0), 0.97, 1e-15);
}

TEST(HypercubeBound, VanishesAtResonance) {
  // sin(xi) = 0 under the transfer-time convention at eta = 1/sqrt(3).
  const double eta = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(hypercube_bound(1, eta, XiConvention::kTransferTime), 1.0, 1e-15);
  // The printed convention places the zero elsewhere: sqrt(1 + eta^-2) = pi.
  const double printed_zero = 1.0 / std::sqrt(kPi * kPi - 1.0);
  EXPECT_NEAR(hypercube_bound(1, printed_zero, XiConvention::kPrinted), 1.0, 1e-15);
  EXPECT_LT(hypercube_bound(1, printed_zero, XiConvention::kTransferTime), 1.0 - 1e-3);
}

TEST(HypercubeBound, ClampedAndMonotoneInWorstCase) {
  EXPECT_EQ(hypercube_bound_with_sin2(3, 2.0, 1.0), 0.0);
  double prev = 1.0;
  for (double eta = 0.0; eta < 1.0; eta += 0.01) {
    const double b = hypercube_bound_with_sin2(2, eta, 1.0);
    EXPECT_LE(b, prev);
    prev = b;
  }
}

TEST(CompleteBound, DirectEvaluation) {
  EXPECT_NEAR(complete_bound(0.1), 1.0 - kPi * kPi / 200.0, 1e-15);
  EXPECT_NEAR(complete_bound(0.1), 0.950652, 1e-6);
  EXPECT_EQ(complete_bound(0.0), 1.0);
  EXPECT_NEAR(complete_bound(1e-6), 1.0, 1e-11);
  // 1 - (pi^2/2) * 0.2025 = 7.03e-4.
  EXPECT_NEAR(complete_bound(0.45), 1.0 - 0.5 * kPi * kPi * 0.2025, 1e-15);
  EXPECT_NEAR(complete_bound(0.45), 7.03e-4, 1e-6);
  EXPECT_EQ(complete_bound(0.5), 0.0);
}

TEST(FindResonances, LocatesExactZerosOfTheLeakage) {
  const auto roots = find_resonances(1, 0.05, 2.0, 100);
  // 1/sqrt(4k^2 - 1) for k = 1..10 lie in [0.05, 2].
  ASSERT_EQ(roots.size(), 10u);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    EXPECT_NEAR(roots[i], 1.0 / std::sqrt(4.0 * k * k - 1.0), 1e-12);
    EXPECT_LE(std::abs(channel_leakage(roots[i])), 1e-10);
  }
  EXPECT_NEAR(roots[0], 0.5773502691896258, 1e-12);
  EXPECT_NEAR(roots[1], 0.2581988897471611, 1e-12);
  EXPECT_TRUE(std::is_sorted(roots.rbegin(), roots.rend()));
}

TEST(FindResonances, CountAndEmptyRange) {
  EXPECT_EQ(find_resonances(2, 0.01, 2.0, 3).size(), 3u);
  EXPECT_TRUE(find_resonances(1, 0.6, 2.0, 5).empty());
  EXPECT_THROW(find_resonances(1, 0.0, 1.0, 1), InvalidArgument);
  EXPECT_THROW(find_resonances(1, 0.5, 2.5, 1), InvalidArgument);
}

TEST(FindResonances, TransferTimeConventionMatchesExactRoots) {
  // The exact zeros sit where (pi/2) sqrt(1 + eta^-2) is a multiple of pi;
  // the printed sqrt(1 + eta^-2) is smaller by exactly pi/2 there.
  for (double eta : find_resonances(1, 0.1, 2.0, 10)) {
    const double xi_exact = resonance_phase(eta, XiConvention::kTransferTime);
    EXPECT_NEAR(std::sin(xi_exact), 0.0, 1e-9);
    EXPECT_NEAR(xi_exact / resonance_phase(eta, XiConvention::kPrinted), kPi / 2, 1e-15);
  }
}

TEST(FindResonances, PerfectParallelTransferAtResonance) {
  const double eta = find_resonances(1, 0.1, 2.0, 1).at(0);
  const auto split = SubcubeSplit::from_eta(2, 1, eta, 1.0);
  const auto pairs = qubit_compatible_pairs(split);
  for (const auto& f : parallel_fidelities(pairs.senders, pairs.receivers, split, transfer_time(1.0))) {
    EXPECT_NEAR(f.fidelity, 1.0, 1e-6);
  }
}

TEST(PhaseCorrection, SingleSwap) {
  EXPECT_NEAR(phase_correction(SubcubeSplit(1, {}, 0.0, 1.0), 0, 1, transfer_time(1.0)), kPi / 2, 1e-12);
}

TEST(PhaseCorrection, ThreeBitsAccumulate) {
  const SubcubeSplit split(3, {}, 0.0, 1.0);
  const double t = transfer_time(1.0);
  const double phi = phase_correction(split, 0, 7, t);
  EXPECT_NEAR(phi, 3 * kPi / 2, 1e-9);
  const auto dense = evolve_modes(program_subcube_split(split), t);
  EXPECT_NEAR(phase_correction(dense, 0, 7), phi, 1e-9);
}

TEST(PhaseCorrection, FactoredAgreesWithDense) {
  const double t = transfer_time(1.0);
  for (double eta : {0.1, 0.25, 0.6}) {
    const auto split = SubcubeSplit::from_eta(4, 2, eta, 1.0);
    const auto dense = evolve_modes(program_subcube_split(split), t);
    for (NodeId s = 0; s < split.node_count(); ++s) {
      const double a = phase_correction(split, s, split.antipode(s), t);
      const double b = phase_correction(dense, s, split.antipode(s));
      EXPECT_NEAR(std::abs(std::polar(1.0, a) - std::polar(1.0, b)), 0.0, 1e-9);
    }
  }
}

TEST(PhaseCorrection, RejectsNonAntipodalPair) {
  EXPECT_THROW(phase_correction(SubcubeSplit(3, {2}, 4.0, 1.0), 0, 7, 1.0), ContractViolation);
}

}  // namespace
}  // namespace qroute
