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

#include "qroute/netgraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qroute/errors.hpp"

namespace qroute {

const char* to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::kHypercube:
      return "hypercube";
    case TopologyKind::kComplete:
      return "complete";
    case TopologyKind::kCustom:
      return "custom";
  }
  return "unknown";
}

NetworkTopology::NetworkTopology(TopologyKind kind, std::size_t n, int d, std::vector<Edge> edges)
    : kind_(kind), node_count_(n), dimension_(d), edges_(std::move(edges)) {}

NetworkTopology NetworkTopology::custom(std::size_t node_count, std::vector<Edge> edges) {
  if (node_count == 0) throw InvalidArgument("custom topology needs at least one node");
  for (auto& e : edges) {
    if (e.u == e.v) throw InvalidArgument("self-loop on node " + std::to_string(e.u));
    if (e.u >= node_count || e.v >= node_count) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidArgument("duplicate edge in custom topology");
  }
  return NetworkTopology(TopologyKind::kCustom, node_count, 0, std::move(edges));
}

bool NetworkTopology::adjacent(NodeId u, NodeId v) const {
  if (u == v) return false;
  switch (kind_) {
    case TopologyKind::kHypercube:
      return std::popcount(static_cast<std::uint64_t>(u ^ v)) == 1;
    case TopologyKind::kComplete:
      return u < node_count_ && v < node_count_;
    case TopologyKind::kCustom:
      break;
  }
  const Edge key{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

std::string NetworkTopology::label(NodeId v) const {
  if (kind_ != TopologyKind::kHypercube) return std::to_string(v);
  std::string out(static_cast<std::size_t>(dimension_), '0');
  for (int j = 0; j < dimension_; ++j) {
    if ((v >> j) & 1U) out[static_cast<std::size_t>(dimension_ - 1 - j)] = '1';
  }
  return out;
}

NetworkTopology build_hypercube(int d) {
  if (d < 1 || d > kMaxHypercubeDimension) {
    throw InvalidArgument("hypercube dimension must be in [1, " +
                          std::to_string(kMaxHypercubeDimension) + "], got " + std::to_string(d));
  }
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(d) * n / 2);
  for (NodeId u = 0; u < n; ++u) {
    for (int j = 0; j < d; ++j) {
      const NodeId v = u ^ (NodeId{1} << j);
      if (u < v) edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end());
  return NetworkTopology(TopologyKind::kHypercube, n, d, std::move(edges));
}

NetworkTopology build_complete(std::size_t n) {
  if (n < 2) throw InvalidArgument("complete graph needs N >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return NetworkTopology(TopologyKind::kComplete, n, 0, std::move(edges));
}

CouplingMatrix::CouplingMatrix(const NetworkTopology& topology,
                               const std::vector<double>& frequencies, double omega0)
    : omega0_(omega0) {
  const auto n = topology.node_count();
  if (frequencies.size() != n) {
    throw InvalidArgument("frequency vector has " + std::to_string(frequencies.size()) +
                          " entries for " + std::to_string(n) + " nodes");
  }
  const auto ni = static_cast<Eigen::Index>(n);
  matrix_ = Eigen::MatrixXd::Zero(ni, ni);
  for (std::size_t v = 0; v < n; ++v) {
    matrix_(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) = frequencies[v];
  }
  for (const auto& e : topology.edges()) {
    const auto u = static_cast<Eigen::Index>(e.u);
    const auto v = static_cast<Eigen::Index>(e.v);
    matrix_(u, v) = omega0;
    matrix_(v, u) = omega0;
  }
}

SubcubeSplit::SubcubeSplit(int d, std::vector<int> channel_bits, double detuning, double omega0)
    : d_(d), channel_bits_(std::move(channel_bits)), detuning_(detuning), omega0_(omega0) {
  if (d < 1 || d > kMaxHypercubeDimension) {
    throw InvalidArgument("subcube split: dimension out of range: " + std::to_string(d));
  }
  std::sort(channel_bits_.begin(), channel_bits_.end());
  if (std::adjacent_find(channel_bits_.begin(), channel_bits_.end()) != channel_bits_.end()) {
    throw InvalidArgument("subcube split: channel bits must be distinct");
  }
  for (int b : channel_bits_) {
    if (b < 0 || b >= d) {
      throw InvalidArgument("subcube split: channel bit " + std::to_string(b) +
                            " outside [0, " + std::to_string(d) + ")");
    }
    channel_mask_ |= std::uint64_t{1} << b;
  }
  if (!channel_bits_.empty() && !(detuning_ > 0.0)) {
    throw InvalidArgument("subcube split: detuning must be positive when m > 0");
  }
  if (!(omega0_ > 0.0)) throw InvalidArgument("subcube split: coupling must be positive");
  const std::uint64_t all = (d == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << d) - 1);
  transfer_mask_ = all & ~channel_mask_;
}

SubcubeSplit SubcubeSplit::top_bits(int d, int m, double detuning, double omega0) {
  if (m < 0 || m > d) throw InvalidArgument("subcube split: need 0 <= m <= d");
  std::vector<int> bits;
  for (int j = d - m; j < d; ++j) bits.push_back(j);
  return SubcubeSplit(d, std::move(bits), detuning, omega0);
}

SubcubeSplit SubcubeSplit::from_eta(int d, int m, double eta, double omega0) {
  if (m > 0 && !(eta > 0.0)) throw InvalidArgument("subcube split: eta must be positive");
  const double detuning = (m > 0) ? 2.0 * omega0 / eta : 0.0;
  return top_bits(d, m, detuning, omega0);
}

double SubcubeSplit::eta() const {
  if (channel_bits_.empty() || !std::isfinite(detuning_)) return 0.0;
  return 2.0 * omega0_ / detuning_;
}

std::size_t SubcubeSplit::channel_of(NodeId v) const {
  std::size_t id = 0;
  for (std::size_t k = 0; k < channel_bits_.size(); ++k) {
    if ((v >> channel_bits_[k]) & 1U) id |= std::size_t{1} << k;
  }
  return id;
}

double SubcubeSplit::frequency(NodeId v) const {
  double f = 0.0;
  for (int b : channel_bits_) f += ((v >> b) & 1U) ? -0.5 * detuning_ : 0.5 * detuning_;
  return f;
}

PairingProgram::PairingProgram(std::size_t n, std::vector<std::pair<NodeId, NodeId>> matching,
                               double detuning, double omega0, double base_frequency)
    : n_(n), matching_(std::move(matching)), detuning_(detuning), omega0_(omega0),
      base_(base_frequency) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("pairing program needs an even node count >= 2, got " +
                          std::to_string(n));
  }
  if (matching_.size() != n / 2) {
    throw InvalidArgument("pairing program: matching must have N/2 pairs");
  }
  if (!(omega0_ > 0.0)) throw InvalidArgument("pairing program: coupling must be positive");
  if (n > 2 && !(detuning_ > 0.0)) {
    throw InvalidArgument("pairing program: detuning must be positive");
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  pair_index_.assign(n, kUnset);
  frequencies_.assign(n, 0.0);
  for (std::size_t k = 0; k < matching_.size(); ++k) {
    const auto [a, b] = matching_[k];
    if (a >= n || b >= n || a == b) throw InvalidArgument("pairing program: bad pair");
    if (pair_index_[a] != kUnset || pair_index_[b] != kUnset) {
      throw InvalidArgument("pairing program: node appears in more than one pair");
    }
    pair_index_[a] = pair_index_[b] = k;
    frequencies_[a] = frequencies_[b] = base_ + static_cast<double>(k) * detuning_;
  }
}

NodeId PairingProgram::partner(NodeId v) const {
  const auto& p = matching_.at(pair_index_.at(v));
  return p.first == v ? p.second : p.first;
}

CouplingMatrix program_subcube_split(const SubcubeSplit& split) {
  const auto topo = build_hypercube(split.dimension());
  std::vector<double> freqs(topo.node_count());
  for (NodeId v = 0; v < freqs.size(); ++v) freqs[v] = split.frequency(v);
  return CouplingMatrix(topo, freqs, split.coupling());
}

CouplingMatrix program_pairing(const PairingProgram& program) {
  const auto topo = build_complete(program.node_count());
  std::vector<double> freqs(program.node_count());
  for (NodeId v = 0; v < freqs.size(); ++v) freqs[v] = program.frequency(v);
  return CouplingMatrix(topo, freqs, program.coupling());
}

std::vector<Eigen::MatrixXd> subcube_split_terms(const SubcubeSplit& split) {
  const auto n = static_cast<Eigen::Index>(split.node_count());
  std::vector<Eigen::MatrixXd> terms;
  terms.reserve(static_cast<std::size_t>(split.dimension()));
  for (int j = 0; j < split.dimension(); ++j) {
    Eigen::MatrixXd term = Eigen::MatrixXd::Zero(n, n);
    const bool channel = (split.channel_mask() >> j) & 1U;
    for (Eigen::Index v = 0; v < n; ++v) {
      term(v, v ^ (Eigen::Index{1} << j)) = split.coupling();
      if (channel) term(v, v) = ((v >> j) & 1) ? -0.5 * split.detuning() : 0.5 * split.detuning();
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace qroute
