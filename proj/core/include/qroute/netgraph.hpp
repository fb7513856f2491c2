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

// Network topologies and frequency programs.
//
// A network is a graph of oscillators with uniform coupling Omega0 on every
// edge. A "program" assigns node frequencies (the diagonal of the coupling
// matrix) so that the network splits into weakly coupled channels. All
// frequencies are angular (rad/s) and measured in a rotating frame whose
// carrier is zero; only relative detunings affect the dynamics.
//
// Hypercube node indexing: node index == integer value of its bit label,
// bit 0 is the least significant bit.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace qroute {

using NodeId = std::size_t;

enum class TopologyKind { kHypercube, kComplete, kCustom };

const char* to_string(TopologyKind kind);

struct Edge {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kMaxHypercubeDimension = 20;

class NetworkTopology {
 public:
  /// Custom graph from an explicit edge list. Edges are normalized to u < v;
  /// self-loops and duplicates are rejected.
  static NetworkTopology custom(std::size_t node_count, std::vector<Edge> edges);

  TopologyKind kind() const { return kind_; }
  std::size_t node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Hypercube dimension d; 0 for other kinds.
  int dimension() const { return dimension_; }
  bool adjacent(NodeId u, NodeId v) const;
  /// Bit-string label of a hypercube node, most significant bit first.
  std::string label(NodeId v) const;

 private:
  friend NetworkTopology build_hypercube(int d);
  friend NetworkTopology build_complete(std::size_t n);
  NetworkTopology(TopologyKind kind, std::size_t n, int d, std::vector<Edge> edges);

  TopologyKind kind_;
  std::size_t node_count_;
  int dimension_;
  std::vector<Edge> edges_;  // sorted
};

NetworkTopology build_hypercube(int d);
NetworkTopology build_complete(std::size_t n);

/// Real symmetric N x N matrix of node frequencies (diagonal) and couplings.
class CouplingMatrix {
 public:
  /// Uniform coupling `omega0` on every topology edge, `frequencies` on the diagonal.
  CouplingMatrix(const NetworkTopology& topology, const std::vector<double>& frequencies,
                 double omega0);

  std::size_t size() const { return static_cast<std::size_t>(matrix_.rows()); }
  double operator()(NodeId u, NodeId v) const { return matrix_(u, v); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  double coupling() const { return omega0_; }

 private:
  Eigen::MatrixXd matrix_;
  double omega0_;
};

/// Programming of a d-cube into 2^m subcube channels by detuning m channel bits.
class SubcubeSplit {
 public:
  /// `channel_bits` are bit positions in [0, d); order does not matter.
  /// `detuning` is the step between adjacent subcubes (rad/s); it is ignored
  /// when there are no channel bits.
  SubcubeSplit(int d, std::vector<int> channel_bits, double detuning, double omega0);

  /// The preset used throughout: channel bits are the top m bits {d-m, ..., d-1}.
  static SubcubeSplit top_bits(int d, int m, double detuning, double omega0);
  /// Same as top_bits, with the detuning chosen so that 2*omega0/detuning == eta.
  static SubcubeSplit from_eta(int d, int m, double eta, double omega0);

  int dimension() const { return d_; }
  /// Number of channel bits m.
  int channel_bit_count() const { return static_cast<int>(channel_bits_.size()); }
  /// Number of subcube channels, 2^m.
  std::size_t channel_count() const { return std::size_t{1} << channel_bits_.size(); }
  const std::vector<int>& channel_bits() const { return channel_bits_; }
  double detuning() const { return detuning_; }
  double coupling() const { return omega0_; }
  /// 2*omega0/detuning; 0 for the ideal (m == 0 or infinite detuning) limit.
  double eta() const;

  std::uint64_t channel_mask() const { return channel_mask_; }
  std::uint64_t transfer_mask() const { return transfer_mask_; }
  std::size_t node_count() const { return std::size_t{1} << d_; }
  /// Channel id of a node: its channel bits packed in ascending bit order.
  std::size_t channel_of(NodeId v) const;
  /// Antipode of v within its subcube (all transfer bits flipped).
  NodeId antipode(NodeId v) const { return v ^ transfer_mask_; }
  /// Frequency of node v: (detuning/2) * sum over channel bits of (+1 for bit 0, -1 for bit 1).
  double frequency(NodeId v) const;

 private:
  int d_;
  std::vector<int> channel_bits_;  // sorted ascending
  double detuning_;
  double omega0_;
  std::uint64_t channel_mask_ = 0;
  std::uint64_t transfer_mask_ = 0;
};

/// Programming of a complete graph into N/2 resonant pairs on a frequency ladder.
class PairingProgram {
 public:
  PairingProgram(std::size_t n, std::vector<std::pair<NodeId, NodeId>> matching,
                 double detuning, double omega0, double base_frequency = 0.0);

  std::size_t node_count() const { return n_; }
  const std::vector<std::pair<NodeId, NodeId>>& matching() const { return matching_; }
  double detuning() const { return detuning_; }
  double coupling() const { return omega0_; }
  double base_frequency() const { return base_; }
  /// Pair k sits at base + k * detuning.
  double frequency(NodeId v) const { return frequencies_[v]; }
  /// Index of the pair that contains v.
  std::size_t pair_of(NodeId v) const { return pair_index_[v]; }
  NodeId partner(NodeId v) const;

 private:
  std::size_t n_;
  std::vector<std::pair<NodeId, NodeId>> matching_;
  double detuning_;
  double omega0_;
  double base_;
  std::vector<double> frequencies_;
  std::vector<std::size_t> pair_index_;
};

CouplingMatrix program_subcube_split(const SubcubeSplit& split);
CouplingMatrix program_pairing(const PairingProgram& program);

/// The d commuting summands of a programmed hypercube coupling matrix, one per
/// bit position: omega0*X on bit j, plus (detuning/2)*Z when j is a channel bit.
std::vector<Eigen::MatrixXd> subcube_split_terms(const SubcubeSplit& split);

}  // namespace qroute
