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

#pragma once

// Bell-pair fidelities: closed forms, perturbative cross-talk bounds and
// resonance location.
//
// eta = 2 * omega0 / detuning is the cross-talk parameter. Bounds are
// perturbative and go negative for large eta; every bound returned here is
// clamped to [0, 1].

#include <complex>
#include <cstddef>
#include <vector>

#include "qroute/modevo.hpp"
#include "qroute/netgraph.hpp"

namespace qroute {

enum class FidelityMethod { kAnalyticBound, kAmplitude, kExactOracle };

const char* to_string(FidelityMethod method);

struct PairFidelity {
  NodeId sender = 0;
  NodeId receiver = 0;
  double fidelity = 0.0;          // in [0, 1]
  double correction_phase = 0.0;  // radians, in [0, 2 pi)
  FidelityMethod method = FidelityMethod::kAmplitude;
};

/// Single-sender Bell fidelity after the local phase correction:
/// F = ((1 + |alpha|) / 2)^2 and phi = -arg(alpha).
/// Throws InvalidArgument when |alpha| > 1 + 1e-9.
PairFidelity pair_fidelity_from_amplitude(Amplitude alpha, NodeId sender = 0, NodeId receiver = 0);

/// How the resonance phase xi_T of a detuned channel bit is evaluated.
///   kPrinted:      xi = sqrt(1 + eta^-2)
///   kTransferTime: xi = (pi/2) * sqrt(1 + eta^-2), the rotation angle of a
///                  detuned bit over one swap time T = pi / (2 omega0).
/// The zeros of sin(xi) under kTransferTime coincide with the zero-leakage
/// points of the exact evolution (eta_k = 1 / sqrt(4k^2 - 1)); the printed form
/// misses the factor omega0 * T = pi / 2.
enum class XiConvention { kPrinted, kTransferTime };

double resonance_phase(double eta, XiConvention convention = XiConvention::kPrinted);

/// 1 - (3/2) m eta^2 sin^2(xi), clamped to [0, 1]. m == 0 or eta == 0 gives 1.
double hypercube_bound(int m, double eta, XiConvention convention = XiConvention::kPrinted);
/// Same with an explicit sin^2(xi); sin2 = 1 is the worst case used for rates.
double hypercube_bound_with_sin2(int m, double eta, double sin2);

/// 1 - (pi^2 / 2) eta^2, clamped to [0, 1].
double complete_bound(double eta);

/// Signed cross-talk amplitude leaked across one detuned channel bit during a
/// swap time, read off the dense mode evolution of a 2-cube with one channel
/// bit. Its zeros are the resonances.
double channel_leakage(double eta);

/// Resonant detuning ratios in [eta_lo, eta_hi] (within (0, 2]), sorted
/// descending, at most `count` of them. Each value zeroes the per-bit leakage
/// to 1e-10 and is verified against the dense evolution of an (m+1)-cube.
/// No resonance in range gives an empty list.
std::vector<double> find_resonances(int m, double eta_lo, double eta_hi, std::size_t count);

/// phi = -arg(K(r, s)) in [0, 2 pi) for an antipodal pair of a subcube.
/// Throws ContractViolation unless r is the subcube antipode of s.
double phase_correction(const SubcubeSplit& split, NodeId sender, NodeId receiver, double t);
double phase_correction(const ModeEvolution& k, NodeId sender, NodeId receiver);

/// Wrap an angle into [0, 2 pi).
double wrap_phase(double phi);

}  // namespace qroute
