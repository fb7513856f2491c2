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

// Single-particle mode evolution K(t) = exp(-i * Omega * t).
//
// Amplitude convention: the Schroedinger-picture creation operator of mode s
// evolves as U a_s^dagger U^dagger = sum_r K(r, s) a_r^dagger, so column s of K
// holds the amplitudes that an excitation injected at s reaches every node.
// Omega is real symmetric, hence K is symmetric and K(r, s) == K(s, r).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "qroute/netgraph.hpp"

namespace qroute {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDenseEvolutionCap = 4096;
inline constexpr double kUnitarityTolerance = 1e-10;

class ModeEvolution {
 public:
  ModeEvolution(Eigen::MatrixXcd k, double time, std::uint64_t source_fingerprint);

  std::size_t size() const { return static_cast<std::size_t>(k_.rows()); }
  double time() const { return time_; }
  std::uint64_t source_fingerprint() const { return fingerprint_; }
  const Eigen::MatrixXcd& matrix() const { return k_; }
  Amplitude operator()(NodeId row, NodeId col) const {
    return k_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  /// max |K^dagger K - I| over entries.
  double unitarity_defect() const;

 private:
  Eigen::MatrixXcd k_;
  double time_;
  std::uint64_t fingerprint_;
};

/// FNV-1a over the bytes of the matrix entries and its size.
std::uint64_t fingerprint(const Eigen::MatrixXd& omega);

/// Dense path: eigendecomposition of Omega. N is capped at kDenseEvolutionCap.
/// t == 0 returns the identity exactly.
ModeEvolution evolve_modes(const CouplingMatrix& omega, double t);
/// Same, for a raw generator; throws NumericalError when it is not symmetric.
ModeEvolution evolve_modes(const Eigen::MatrixXd& omega, double t);

/// K(t) of a programmed hypercube kept as one 2x2 factor per bit position.
/// Entries cost O(d) each and nothing of size N^2 is stored, so this scales to
/// the full hypercube dimension range.
class FactoredHypercubeEvolution {
 public:
  FactoredHypercubeEvolution(const SubcubeSplit& split, double t);

  int dimension() const { return static_cast<int>(factors_.size()); }
  std::size_t size() const { return std::size_t{1} << factors_.size(); }
  double time() const { return time_; }
  const Eigen::Matrix2cd& factor(int bit) const { return factors_.at(static_cast<std::size_t>(bit)); }
  Amplitude operator()(NodeId row, NodeId col) const;

 private:
  std::vector<Eigen::Matrix2cd> factors_;
  double time_;
};

/// Factored path for programmed hypercubes, materialized: K is the tensor
/// product of one 2x2 exponential per bit position. O(d * 4^d) work; N is
/// capped at kDenseEvolutionCap like the dense path.
ModeEvolution evolve_hypercube_fast(const SubcubeSplit& split, double t);

/// The 2x2 factor exp(-i (omega0 X + (detuning/2) Z) t) for one bit position
/// (pass detuning = 0 for a transfer bit). Row/column 0 is bit value 0.
Eigen::Matrix2cd bit_factor(double omega0, double detuning, double t);

/// Amplitude for an excitation injected at `sender` to be found at `receiver`.
Amplitude transfer_amplitude(const ModeEvolution& k, NodeId sender, NodeId receiver);
Amplitude transfer_amplitude(const FactoredHypercubeEvolution& k, NodeId sender, NodeId receiver);

/// Swap time pi / (2 * omega0) of a resonant coupled pair (and of a hypercube).
double transfer_time(double omega0);

/// Debug dump: header line "N t", then N rows of "re,im" pairs separated by spaces.
void write_matrix_text(std::ostream& out, const ModeEvolution& k);

}  // namespace qroute
