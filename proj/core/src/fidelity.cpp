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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "qroute/errors.hpp"

namespace qroute {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLeakageTolerance = 1e-10;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_eta(double eta) {
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw InvalidArgument("eta must be finite and non-negative, got " + std::to_string(eta));
  }
}

// u = sqrt(1 + eta^-2) and its inverse; resonances are evenly spaced in u.
double u_of_eta(double eta) { return std::sqrt(1.0 + 1.0 / (eta * eta)); }
double eta_of_u(double u) { return 1.0 / std::sqrt(u * u - 1.0); }

}  // namespace

const char* to_string(FidelityMethod method) {
  switch (method) {
    case FidelityMethod::kAnalyticBound:
      return "analytic-bound";
    case FidelityMethod::kAmplitude:
      return "amplitude";
    case FidelityMethod::kExactOracle:
      return "exact-oracle";
  }
  return "unknown";
}

double wrap_phase(double phi) {
  double w = std::fmod(phi, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

PairFidelity pair_fidelity_from_amplitude(Amplitude alpha, NodeId sender, NodeId receiver) {
  const double mag = std::abs(alpha);
  if (!(mag <= 1.0 + 1e-9)) {
    throw InvalidArgument("transfer amplitude magnitude exceeds 1: " + std::to_string(mag));
  }
  const double a = std::min(mag, 1.0);
  PairFidelity out;
  out.sender = sender;
  out.receiver = receiver;
  out.fidelity = 0.25 * (1.0 + a) * (1.0 + a);
  out.correction_phase = (mag == 0.0) ? 0.0 : wrap_phase(-std::arg(alpha));
  out.method = FidelityMethod::kAmplitude;
  return out;
}

double resonance_phase(double eta, XiConvention convention) {
  check_eta(eta);
  const double xi = u_of_eta(eta);
  return convention == XiConvention::kTransferTime ? 0.5 * kPi * xi : xi;
}

double hypercube_bound_with_sin2(int m, double eta, double sin2) {
  if (m < 0) throw InvalidArgument("hypercube_bound: m must be non-negative");
  check_eta(eta);
  if (m == 0 || eta == 0.0) return 1.0;
  return clamp01(1.0 - 1.5 * m * eta * eta * sin2);
}

double hypercube_bound(int m, double eta, XiConvention convention) {
  if (m == 0 || eta == 0.0) return hypercube_bound_with_sin2(m, eta, 0.0);
  const double s = std::sin(resonance_phase(eta, convention));
  return hypercube_bound_with_sin2(m, eta, s * s);
}

double complete_bound(double eta) {
  check_eta(eta);
  return clamp01(1.0 - 0.5 * kPi * kPi * eta * eta);
}

double channel_leakage(double eta) {
  if (!(eta > 0.0)) throw InvalidArgument("channel_leakage: eta must be positive");
  // Bit 0 transfers, bit 1 is the channel bit. After one swap time the
  // transfer factor is exactly -i, so K(3, 0) = (-i) * (channel flip amplitude)
  // is real and its sign follows sin(xi).
  const auto split = SubcubeSplit(2, {1}, 2.0 / eta, 1.0);
  const auto k = evolve_modes(program_subcube_split(split), transfer_time(1.0));
  return -k(3, 0).real();
}

std::vector<double> find_resonances(int m, double eta_lo, double eta_hi, std::size_t count) {
  if (m < 1) throw InvalidArgument("find_resonances: need at least one channel bit");
  if (!(eta_lo > 0.0) || !(eta_hi <= 2.0) || !(eta_lo <= eta_hi)) {
    throw InvalidArgument("find_resonances: range must be a nonempty interval within (0, 2]");
  }
  std::vector<double> out;
  if (count == 0) return out;

  // March from eta_hi downwards in u, where consecutive zeros are a constant
  // distance apart; the step resolves every sign change.
  constexpr double kStep = 0.05;
  const double u_begin = u_of_eta(eta_hi);
  const double u_end = u_of_eta(eta_lo);
  double u_prev = u_begin;
  double g_prev = channel_leakage(eta_hi);
  if (std::abs(g_prev) <= kLeakageTolerance) out.push_back(eta_hi);

  boost::math::tools::eps_tolerance<double> tol(52);
  while (out.size() < count && u_prev < u_end) {
    const double u_next = std::min(u_prev + kStep, u_end);
    const double g_next = channel_leakage(eta_of_u(u_next));
    if (g_next == 0.0) {
      out.push_back(eta_of_u(u_next));
    } else if (g_prev != 0.0 && std::signbit(g_prev) != std::signbit(g_next)) {
      std::uintmax_t iters = 100;
      const auto [a, b] = boost::math::tools::toms748_solve(
          [](double u) { return channel_leakage(eta_of_u(u)); }, u_prev, u_next, g_prev, g_next,
          tol, iters);
      const double u_root = 0.5 * (a + b);
      out.push_back(eta_of_u(u_root));
    }
    u_prev = u_next;
    g_prev = g_next;
  }

  // Verify each candidate on an (m+1)-cube: only the antipode of the sender may
  // be reached.
  std::vector<double> verified;
  for (double eta : out) {
    const auto split = SubcubeSplit::from_eta(m + 1, m, eta, 1.0);
    const auto k = evolve_modes(program_subcube_split(split), transfer_time(1.0));
    double leak = 0.0;
    for (NodeId r = 0; r < split.node_count(); ++r) {
      if (r != split.antipode(0)) leak = std::max(leak, std::abs(k(r, 0)));
    }
    if (leak > kLeakageTolerance) {
      throw NumericalError("find_resonances: candidate eta=" + std::to_string(eta) +
                           " leaves leakage " + std::to_string(leak));
    }
    verified.push_back(eta);
  }
  std::sort(verified.begin(), verified.end(), std::greater<>());
  return verified;
}

double phase_correction(const ModeEvolution& k, NodeId sender, NodeId receiver) {
  return wrap_phase(-std::arg(transfer_amplitude(k, sender, receiver)));
}

double phase_correction(const SubcubeSplit& split, NodeId sender, NodeId receiver, double t) {
  if (sender >= split.node_count() || receiver >= split.node_count()) {
    throw InvalidArgument("phase_correction: node index out of range");
  }
  if (receiver != split.antipode(sender)) {
    throw ContractViolation("phase_correction: node " + std::to_string(receiver) +
                            " is not the subcube antipode of node " + std::to_string(sender));
  }
  const FactoredHypercubeEvolution k(split, t);
  return wrap_phase(-std::arg(transfer_amplitude(k, sender, receiver)));
}

}  // namespace qroute
