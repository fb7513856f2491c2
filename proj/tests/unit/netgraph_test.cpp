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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "qroute/errors.hpp"

namespace qroute {
namespace {

TEST(BuildHypercube, SingleEdgeForDimensionOne) {
  const auto cube = build_hypercube(1);
  EXPECT_EQ(cube.node_count(), 2u);
  ASSERT_EQ(cube.edges().size(), 1u);
  EXPECT_EQ(cube.edges()[0], (Edge{0, 1}));
}

TEST(BuildHypercube, CountsMatchDimension) {
  for (int d = 1; d <= 10; ++d) {
    const auto cube = build_hypercube(d);
    EXPECT_EQ(cube.node_count(), std::size_t{1} << d);
    EXPECT_EQ(cube.edges().size(), static_cast<std::size_t>(d) << (d - 1));
  }
  EXPECT_EQ(build_hypercube(3).edges().size(), 12u);
}

TEST(BuildHypercube, NeighboursDifferInOneBit) {
  const auto cube = build_hypercube(4);
  std::vector<NodeId> neighbours;
  for (NodeId v = 0; v < cube.node_count(); ++v) {
    if (cube.adjacent(0b0101, v)) neighbours.push_back(v);
  }
  std::vector<NodeId> expected{0b1101, 0b0001, 0b0111, 0b0100};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(neighbours, expected);
  EXPECT_EQ(cube.label(0b0101), "0101");
}

TEST(BuildHypercube, NoSelfLoopsOrDuplicates) {
  const auto cube = build_hypercube(6);
  auto edges = cube.edges();
  for (const auto& e : edges) EXPECT_LT(e.u, e.v);
  EXPECT_EQ(std::adjacent_find(edges.begin(), edges.end()), edges.end());
}

TEST(BuildHypercube, RejectsOutOfRange) {
  EXPECT_THROW(build_hypercube(0), InvalidArgument);
  EXPECT_THROW(build_hypercube(21), InvalidArgument);
}

TEST(BuildComplete, EdgeCounts) {
  EXPECT_EQ(build_complete(2).edges().size(), 1u);
  EXPECT_EQ(build_complete(8).edges().size(), 28u);
  const auto k3 = build_complete(3);
  EXPECT_EQ(k3.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_THROW(build_complete(1), InvalidArgument);
}

TEST(CustomTopology, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(NetworkTopology::custom(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(NetworkTopology::custom(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(NetworkTopology::custom(3, {{0, 3}}), InvalidArgument);
  const auto g = NetworkTopology::custom(3, {{2, 0}});
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(ProgramSubcubeSplit, SingleDetunedPair) {
  const double omega0 = 1.3;
  const double detuning = 7.0;
  const auto w = program_subcube_split(SubcubeSplit(1, {0}, detuning, omega0));
  EXPECT_DOUBLE_EQ(w(0, 0), detuning / 2);
  EXPECT_DOUBLE_EQ(w(1, 1), -detuning / 2);
  EXPECT_DOUBLE_EQ(w(0, 1), omega0);
  EXPECT_DOUBLE_EQ(w(1, 0), omega0);
}

TEST(ProgramSubcubeSplit, UndetunedSquare) {
  const auto w = program_subcube_split(SubcubeSplit(2, {}, 0.0, 1.0));
  const auto cube = build_hypercube(2);
  for (NodeId u = 0; u < 4; ++u) {
    EXPECT_EQ(w(u, u), 0.0);
    for (NodeId v = 0; v < 4; ++v) {
      if (u != v) EXPECT_EQ(w(u, v), cube.adjacent(u, v) ? 1.0 : 0.0);
    }
  }
}

TEST(ProgramSubcubeSplit, SubcubesShareAFrequency) {
  const double detuning = 10.0;
  const auto w = program_subcube_split(SubcubeSplit(3, {2}, detuning, 1.0));
  for (NodeId v = 0; v < 4; ++v) EXPECT_EQ(w(v, v), detuning / 2);
  for (NodeId v = 4; v < 8; ++v) EXPECT_EQ(w(v, v), -detuning / 2);
}

TEST(ProgramSubcubeSplit, ExactlySymmetricWithMatchingSparsity) {
  for (int d = 1; d <= 5; ++d) {
    for (int m = 0; m <= d; ++m) {
      const auto split = SubcubeSplit::from_eta(d, m, 0.3, 2.0);
      const auto w = program_subcube_split(split);
      const auto cube = build_hypercube(d);
      EXPECT_TRUE((w.matrix().array() == w.matrix().transpose().array()).all());
      for (NodeId u = 0; u < w.size(); ++u) {
        for (NodeId v = 0; v < w.size(); ++v) {
          if (u != v && !cube.adjacent(u, v)) EXPECT_EQ(w(u, v), 0.0);
        }
      }
    }
  }
}

TEST(ProgramSubcubeSplit, TermsCommuteAndSumToMatrix) {
  for (int d = 1; d <= 4; ++d) {
    for (int m = 0; m <= d; ++m) {
      const auto split = SubcubeSplit::from_eta(d, m, 0.2, 1.0);
      const auto terms = subcube_split_terms(split);
      ASSERT_EQ(terms.size(), static_cast<std::size_t>(d));
      Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(terms[0].rows(), terms[0].cols());
      for (std::size_t a = 0; a < terms.size(); ++a) {
        sum += terms[a];
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
          const Eigen::MatrixXd comm = terms[a] * terms[b] - terms[b] * terms[a];
          EXPECT_LE(comm.cwiseAbs().maxCoeff(), 1e-12) << "d=" << d << " m=" << m;
        }
      }
      EXPECT_LE((sum - program_subcube_split(split).matrix()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

// Property: permuting the channel-bit positions relabels nodes by the same
// bit permutation.
TEST(ProgramSubcubeSplit, RelabelingInvariance) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const int m = static_cast<int>(rng() % static_cast<unsigned>(d + 1));
    std::vector<int> bits(perm.begin(), perm.begin() + m);
    std::vector<int> mapped;
    // Relabel bit j -> perm[j].
    for (int b : bits) mapped.push_back(perm[static_cast<std::size_t>(b)]);
    const auto a = program_subcube_split(SubcubeSplit(d, bits, 5.0, 1.0));
    const auto b = program_subcube_split(SubcubeSplit(d, mapped, 5.0, 1.0));
    auto relabel = [&](NodeId v) {
      NodeId out = 0;
      for (int j = 0; j < d; ++j) {
        if ((v >> j) & 1U) out |= NodeId{1} << perm[static_cast<std::size_t>(j)];
      }
      return out;
    };
    for (NodeId u = 0; u < a.size(); ++u) {
      for (NodeId v = 0; v < a.size(); ++v) ASSERT_EQ(a(u, v), b(relabel(u), relabel(v)));
    }
  }
}

TEST(SubcubeSplit, ValidatesChannelBits) {
  EXPECT_THROW(SubcubeSplit(3, {0, 0}, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(SubcubeSplit(3, {3}, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(SubcubeSplit(3, {1}, 0.0, 1.0), InvalidArgument);
  const SubcubeSplit ideal(3, {}, 0.0, 1.0);
  EXPECT_EQ(ideal.eta(), 0.0);
  const auto split = SubcubeSplit::from_eta(3, 1, 0.25, 2.0);
  EXPECT_DOUBLE_EQ(split.eta(), 0.25);
  EXPECT_EQ(split.channel_bits(), std::vector<int>{2});
  EXPECT_EQ(split.antipode(0), 3u);
  EXPECT_EQ(split.channel_of(5), 1u);
}

TEST(ProgramPairing, ResonantPairOnTwoNodes) {
  const auto w = program_pairing(PairingProgram(2, {{0, 1}}, 3.0, 1.0));
  EXPECT_EQ(w(0, 0), w(1, 1));
  EXPECT_EQ(w(0, 1), 1.0);
}

TEST(ProgramPairing, FrequencyLadder) {
  const double step = 4.0;
  const auto w = program_pairing(PairingProgram(4, {{0, 1}, {2, 3}}, step, 1.0));
  EXPECT_EQ(w(0, 0), 0.0);
  EXPECT_EQ(w(1, 1), 0.0);
  EXPECT_EQ(w(2, 2), step);
  EXPECT_EQ(w(3, 3), step);
  for (NodeId u = 0; u < 4; ++u) {
    for (NodeId v = 0; v < 4; ++v) {
      if (u != v) EXPECT_EQ(w(u, v), 1.0);
    }
  }
}

TEST(ProgramPairing, EightNodesFourPairs) {
  const PairingProgram program(8, {{0, 7}, {1, 6}, {2, 5}, {3, 4}}, 2.0, 1.0);
  const auto w = program_pairing(program);
  std::vector<double> diag;
  for (NodeId v = 0; v < 8; ++v) diag.push_back(w(v, v));
  std::sort(diag.begin(), diag.end());
  diag.erase(std::unique(diag.begin(), diag.end()), diag.end());
  EXPECT_EQ(diag, (std::vector<double>{0.0, 2.0, 4.0, 6.0}));
  EXPECT_DOUBLE_EQ(diag.back() - diag.front(), (8.0 / 2 - 1) * 2.0);
  EXPECT_EQ(program.partner(6), 1u);
}

TEST(ProgramPairing, RejectsBadMatchings) {
  EXPECT_THROW(PairingProgram(3, {{0, 1}}, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(PairingProgram(4, {{0, 1}, {1, 2}}, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(PairingProgram(4, {{0, 1}}, 1.0, 1.0), InvalidArgument);
}

}  // namespace
}  // namespace qroute
