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

// Exact entanglement-transfer simulation, used as ground truth for the bounds.
//
// Each sender s_j owns an auxiliary qubit b_j that starts in a Bell pair with
// the oscillator at s_j. States are sparse maps from occupation tuples
// (aux occupations first, then network-mode occupations) to amplitudes.
//
// Oscillator networks are linear, so a basis state evolves by pushing each of
// its creation operators through K(t) and re-expanding in the occupation basis
// (with the 1/sqrt(n!) normalization of repeated modes). Qubit networks use the
// hard-core constraint (occupation <= 1) and are evolved sector by sector with
// a dense exponential of the hopping Hamiltonian restricted to k excitations.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qroute/fidelity.hpp"
#include "qroute/modevo.hpp"
#include "qroute/netgraph.hpp"

namespace qroute {

inline constexpr std::size_t kMaxSenders = 12;
inline constexpr int kMaxQubitExcitations = 4;
inline constexpr std::size_t kMaxQubitSectorDimension = 8192;

using Occupations = std::vector<std::uint8_t>;

struct OccupationsHash {
  std::size_t operator()(const Occupations& occ) const noexcept;
};

enum class NodeModel { kOscillator, kQubit };

class FockState {
 public:
  using AmplitudeMap = std::unordered_map<Occupations, Amplitude, OccupationsHash>;

  /// Empty state (no amplitudes) over `modes` network modes, one aux qubit per
  /// sender. `truncation` bounds each network-mode occupation; hard-core
  /// states require truncation == 1.
  FockState(std::size_t modes, std::vector<NodeId> senders, int truncation, NodeModel model);

  std::size_t mode_count() const { return modes_; }
  std::size_t aux_count() const { return senders_.size(); }
  const std::vector<NodeId>& senders() const { return senders_; }
  int truncation() const { return truncation_; }
  NodeModel model() const { return model_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }

  Amplitude amplitude(const Occupations& occ) const;
  /// Accumulate `a` onto basis state `occ`; rejects occupations beyond truncation.
  void add(const Occupations& occ, Amplitude a);
  double norm() const;
  /// Largest number of network excitations over the support.
  int max_network_excitations() const;

  /// Number of network excitations in the mode part of `occ`.
  int network_excitations(const Occupations& occ) const;

 private:
  std::size_t modes_;
  std::vector<NodeId> senders_;
  int truncation_;
  NodeModel model_;
  AmplitudeMap amplitudes_;
};

/// 2^(-M/2) prod_j (1 + a_{s_j}^dagger b_j^dagger) |vac>. Truncation defaults to
/// M for oscillators (no amplitude can be cut) and is 1 for qubits.
FockState prepare_initial(std::size_t modes, const std::vector<NodeId>& senders,
                          NodeModel model = NodeModel::kOscillator, int truncation = -1);

/// Linear-network evolution through K. Throws ContractViolation when the
/// truncation is smaller than the largest excitation number in the support.
FockState evolve_oscillator(const FockState& state, const ModeEvolution& k);
FockState evolve_oscillator(const FockState& state, const CouplingMatrix& omega, double t);

/// Hard-core evolution under the same coupling matrix. Sectors of up to
/// kMaxQubitExcitations excitations and dimension kMaxQubitSectorDimension.
FockState evolve_qubit(const FockState& state, const CouplingMatrix& omega, double t);

/// <Phi+| rho |Phi+> for the pair (aux qubit of sender `aux_index`, mode
/// `receiver`) after applying phase e^{i phi} to the aux |1> component.
/// Receiver occupations >= 2 keep their trace weight but have no overlap.
PairFidelity bell_fidelity(const FockState& state, std::size_t aux_index, NodeId receiver,
                           double phi);

struct TransferPairs {
  std::vector<NodeId> senders;
  std::vector<NodeId> receivers;
};

/// One sender per subcube channel, all transferring from transfer-bit pattern
/// 0...0 to 1...1 (qubit-compatible scheme).
TransferPairs qubit_compatible_pairs(const SubcubeSplit& split);
/// Every node sends to its subcube antipode (massively parallel scheme).
TransferPairs massively_parallel_pairs(const SubcubeSplit& split);

/// Joint evolution of all senders under the programmed hypercube, then one
/// Bell fidelity per pair with its single-particle phase correction.
/// Throws ContractViolation unless each receiver is its sender's subcube antipode.
std::vector<PairFidelity> parallel_fidelities(const std::vector<NodeId>& senders,
                                              const std::vector<NodeId>& receivers,
                                              const SubcubeSplit& split, double t,
                                              NodeModel model = NodeModel::kOscillator);

}  // namespace qroute
