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

#include "qroute/routing.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>

#include "qroute/errors.hpp"
#include "qroute/fidelity.hpp"
#include "qroute/modevo.hpp"

namespace qroute {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t mask_of(const std::vector<int>& bits) {
  std::uint64_t m = 0;
  for (int b : bits) m |= std::uint64_t{1} << b;
  return m;
}

// Scatter the low bits of `value` into the set bits of `mask` (software pdep).
std::uint64_t deposit(std::uint64_t value, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
    const std::uint64_t lowest = mask & (~mask + 1);
    if (value & bit) out |= lowest;
    mask &= mask - 1;
  }
  return out;
}

void check_dimension(int d) {
  if (d < 1 || d > kMaxHypercubeDimension) {
    throw InvalidArgument("schedule: hypercube dimension must be in [1, " +
                          std::to_string(kMaxHypercubeDimension) + "]");
  }
}

void check_schedule_dimension(int d) {
  check_dimension(d);
  if (d > kMaxScheduleDimension) {
    throw ResourceError("schedules are materialized up to d = " +
                        std::to_string(kMaxScheduleDimension));
  }
}

// Ideal transfer over k transfer bits picks up (-i)^k.
double ideal_correction(int transfer_bits) { return wrap_phase(0.5 * kPi * transfer_bits); }

void check_budget(const BandwidthBudget& budget) {
  if (!(budget.width() > 0.0)) throw InvalidArgument("bandwidth budget must have positive width");
}

}  // namespace

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kQubitCompatible:
      return "QC";
    case Scheme::kMassivelyParallel:
      return "MP";
    case Scheme::kComplete:
      return "COMPLETE";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "qc") return Scheme::kQubitCompatible;
  if (t == "mp") return Scheme::kMassivelyParallel;
  if (t == "complete") return Scheme::kComplete;
  throw InvalidArgument("unknown scheme '" + text + "' (expected qc, mp or complete)");
}

int Round::channel_bit_count() const {
  if (const auto* s = std::get_if<SplitShape>(&program)) {
    return static_cast<int>(s->channel_bits.size());
  }
  return 0;
}

Schedule::Schedule(Scheme scheme, std::size_t node_count, int dimension, std::vector<Round> rounds)
    : scheme_(scheme), node_count_(node_count), dimension_(dimension), rounds_(std::move(rounds)) {}

std::size_t Schedule::task_count() const {
  std::size_t n = 0;
  for (const auto& r : rounds_) n += r.tasks.size();
  return n;
}

double Schedule::distribution_time(double omega0) const {
  return static_cast<double>(rounds_.size()) * transfer_time(omega0);
}

std::vector<std::vector<int>> hypercube_splittings(int d) {
  check_dimension(d);
  std::vector<std::vector<int>> out;
  for (int m = 0; m < d; ++m) {
    // Lexicographic m-subsets of {0, ..., d-1}.
    std::vector<int> bits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) bits[static_cast<std::size_t>(i)] = i;
    while (true) {
      out.push_back(bits);
      int i = m - 1;
      while (i >= 0 && bits[static_cast<std::size_t>(i)] == d - m + i) --i;
      if (i < 0) break;
      ++bits[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) {
        bits[static_cast<std::size_t>(j)] = bits[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

Schedule qc_schedule(int d) {
  check_schedule_dimension(d);
  const std::uint64_t all = (std::uint64_t{1} << d) - 1;
  std::vector<Round> rounds;
  for (auto& bits : hypercube_splittings(d)) {
    const int m = static_cast<int>(bits.size());
    const int k = d - m;
    const std::uint64_t channel_mask = mask_of(bits);
    const std::uint64_t transfer_mask = all & ~channel_mask;
    // Antipodal pairs of a k-cube are indexed by the low k-1 transfer bits
    // (the top transfer bit of the sender is 0).
    const std::uint64_t low_transfer = transfer_mask & ~(std::uint64_t{1} << (63 - std::countl_zero(transfer_mask)));
    const double phase = ideal_correction(k);
    for (std::uint64_t pair = 0; pair < (std::uint64_t{1} << (k - 1)); ++pair) {
      Round round{SplitShape{bits}, {}};
      round.tasks.reserve(std::size_t{1} << m);
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << m); ++c) {
        const NodeId s = deposit(c, channel_mask) | deposit(pair, low_transfer);
        round.tasks.push_back({s, s ^ transfer_mask, c, phase});
      }
      rounds.push_back(std::move(round));
    }
  }
  return Schedule(Scheme::kQubitCompatible, std::size_t{1} << d, d, std::move(rounds));
}

Schedule mp_schedule(int d) {
  check_schedule_dimension(d);
  const std::uint64_t all = (std::uint64_t{1} << d) - 1;
  const std::size_t n = std::size_t{1} << d;
  std::vector<Round> rounds;
  for (auto& bits : hypercube_splittings(d)) {
    const std::uint64_t transfer_mask = all & ~mask_of(bits);
    const double phase = ideal_correction(d - static_cast<int>(bits.size()));
    Round round{SplitShape{bits}, {}};
    round.tasks.reserve(n);
    for (NodeId v = 0; v < n; ++v) {
      std::size_t channel = 0;
      for (std::size_t k = 0; k < bits.size(); ++k) {
        if ((v >> bits[k]) & 1U) channel |= std::size_t{1} << k;
      }
      round.tasks.push_back({v, v ^ transfer_mask, channel, phase});
    }
    rounds.push_back(std::move(round));
  }
  return Schedule(Scheme::kMassivelyParallel, n, d, std::move(rounds));
}

Schedule complete_schedule(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("complete schedule needs an even N >= 2, got " + std::to_string(n));
  }
  if (n > kMaxCompleteScheduleNodes) {
    throw ResourceError("complete schedules are materialized up to N = " +
                        std::to_string(kMaxCompleteScheduleNodes));
  }
  const std::size_t ring = n - 1;
  const double phase = ideal_correction(1);
  std::vector<Round> rounds;
  rounds.reserve(ring);
  for (std::size_t k = 0; k < ring; ++k) {
    PairingShape shape;
    shape.matching.emplace_back(k, n - 1);
    for (std::size_t i = 1; i < n / 2; ++i) {
      shape.matching.emplace_back((k + i) % ring, (k + ring - i) % ring);
    }
    Round round{shape, {}};
    for (std::size_t p = 0; p < shape.matching.size(); ++p) {
      const auto [a, b] = shape.matching[p];
      round.tasks.push_back({a, b, p, phase});
      round.tasks.push_back({b, a, p, phase});
    }
    rounds.push_back(std::move(round));
  }
  return Schedule(Scheme::kComplete, n, 0, std::move(rounds));
}

std::string validate_schedule(const Schedule& schedule) {
  const std::size_t n = schedule.node_count();
  const int d = schedule.dimension();
  std::vector<std::uint8_t> directed(n * n, 0);
  std::vector<std::uint8_t> undirected(n * n, 0);
  const auto where = [](std::size_t r) { return "round " + std::to_string(r) + ": "; };

  for (std::size_t r = 0; r < schedule.round_count(); ++r) {
    const Round& round = schedule.rounds()[r];
    std::vector<std::uint8_t> busy(n, 0);
    if (schedule.scheme() == Scheme::kComplete) {
      const auto* shape = std::get_if<PairingShape>(&round.program);
      if (!shape) return where(r) + "complete round without a pairing";
      if (shape->matching.size() != n / 2) return where(r) + "matching is not perfect";
      for (const auto& [a, b] : shape->matching) {
        if (a >= n || b >= n || a == b || busy[a] || busy[b]) {
          return where(r) + "matching is not perfect";
        }
        busy[a] = busy[b] = 1;
      }
      if (round.tasks.size() != n) return where(r) + "expected two tasks per matched pair";
      for (const auto& t : round.tasks) {
        const auto& p = shape->matching.at(t.channel);
        if (!((p.first == t.sender && p.second == t.receiver) ||
              (p.second == t.sender && p.first == t.receiver))) {
          return where(r) + "task does not follow its matched pair";
        }
      }
    } else {
      const auto* shape = std::get_if<SplitShape>(&round.program);
      if (!shape) return where(r) + "hypercube round without a split";
      const std::uint64_t all = (std::uint64_t{1} << d) - 1;
      const std::uint64_t transfer_mask = all & ~mask_of(shape->channel_bits);
      const std::size_t channels = std::size_t{1} << shape->channel_bits.size();
      const std::size_t expected =
          schedule.scheme() == Scheme::kQubitCompatible ? channels : n;
      if (round.tasks.size() != expected) {
        return where(r) + "expected " + std::to_string(expected) + " tasks, found " +
               std::to_string(round.tasks.size());
      }
      std::vector<std::uint8_t> channel_used(channels, 0);
      for (const auto& t : round.tasks) {
        if (t.sender >= n || t.receiver != (t.sender ^ transfer_mask)) {
          return where(r) + "receiver is not the subcube antipode of its sender";
        }
        if (busy[t.sender]) return where(r) + "node sends twice";
        busy[t.sender] = 1;
        if (schedule.scheme() == Scheme::kQubitCompatible) {
          if (t.channel >= channels || channel_used[t.channel]) {
            return where(r) + "more than one task on a channel";
          }
          channel_used[t.channel] = 1;
        }
      }
    }
    for (const auto& t : round.tasks) {
      if (t.sender == t.receiver) return where(r) + "task sends to itself";
      ++directed[t.sender * n + t.receiver];
      const auto lo = std::min(t.sender, t.receiver);
      const auto hi = std::max(t.sender, t.receiver);
      // Both directions of a complete-graph pair share one use of the pair.
      if (schedule.scheme() != Scheme::kComplete || t.sender < t.receiver) ++undirected[lo * n + hi];
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto pair = "pair {" + std::to_string(u) + "," + std::to_string(v) + "} ";
      if (schedule.scheme() == Scheme::kMassivelyParallel) {
        if (directed[u * n + v] != 1 || directed[v * n + u] != 1) {
          return pair + "is not covered once in each direction";
        }
      } else if (undirected[u * n + v] != 1) {
        return pair + "is covered " + std::to_string(undirected[u * n + v]) + " times";
      }
    }
  }
  return {};
}

BandwidthBudget BandwidthBudget::of_width(double width) { return BandwidthBudget{0.0, width}; }

double hypercube_eta(int m, double omega0, const BandwidthBudget& budget) {
  check_budget(budget);
  if (m < 0) throw InvalidArgument("hypercube_eta: m must be non-negative");
  if (m == 0) return 0.0;
  // Adjacent subcubes sit delta apart and the ladder spans m steps: W = m * delta.
  return 2.0 * omega0 * m / budget.width();
}

double complete_eta(std::size_t n, double omega0, const BandwidthBudget& budget) {
  check_budget(budget);
  // N/2 pairs on a ladder of step delta: W = N delta / 2.
  return omega0 * static_cast<double>(n) / budget.width();
}

double attenuation_factor(Scheme scheme, double transfer_time, const DecoherenceParams& decoherence) {
  const auto& tau = (scheme == Scheme::kMassivelyParallel) ? decoherence.t1 : decoherence.t2;
  if (!tau) return 1.0;
  if (!(*tau > 0.0)) throw InvalidArgument("decoherence times must be positive");
  return std::exp(-transfer_time / *tau);
}

RateReport distribution_rate(const Schedule& schedule, double omega0, const BandwidthBudget& budget,
                             const DecoherenceParams& decoherence, FidelityModel model) {
  check_budget(budget);
  RateReport report;
  report.scheme = schedule.scheme();
  report.node_count = schedule.node_count();
  report.dimension = schedule.dimension();
  report.transfer_time = transfer_time(omega0);
  report.distribution_time = schedule.distribution_time(omega0);
  report.attenuation = attenuation_factor(schedule.scheme(), report.transfer_time, decoherence);

  double sum = 0.0;
  report.rounds.reserve(schedule.round_count());
  for (std::size_t r = 0; r < schedule.round_count(); ++r) {
    const Round& round = schedule.rounds()[r];
    RoundRate rr;
    rr.round = r;
    if (schedule.scheme() == Scheme::kComplete) {
      rr.eta = complete_eta(schedule.node_count(), omega0, budget);
      rr.fidelity = complete_bound(rr.eta);
    } else {
      rr.m = round.channel_bit_count();
      rr.eta = hypercube_eta(rr.m, omega0, budget);
      rr.fidelity = (model == FidelityModel::kWorstCase)
                        ? hypercube_bound_with_sin2(rr.m, rr.eta, 1.0)
                        : hypercube_bound(rr.m, rr.eta, XiConvention::kTransferTime);
    }
    const double round_sum = rr.fidelity * static_cast<double>(round.tasks.size());
    sum += round_sum;
    rr.sum_fidelity = report.attenuation * round_sum;
    report.rounds.push_back(rr);
  }
  // Attenuation is applied once to the ideal rate so that it scales the result exactly.
  report.total_weighted_pairs = report.attenuation * sum;
  report.rate = report.attenuation * (sum / report.distribution_time);
  report.rate_in_transfer_units = report.attenuation * (sum / static_cast<double>(schedule.round_count()));
  return report;
}

double closed_form_rate_per_transfer_time(Scheme scheme, std::size_t node_count, double omega0,
                                          const BandwidthBudget& budget) {
  check_budget(budget);
  const double n = static_cast<double>(node_count);
  const double x = omega0 * omega0 / (budget.width() * budget.width());
  // Losses saturate at zero rate, like the per-pair bounds.
  if (scheme == Scheme::kComplete) return n * std::max(0.0, 1.0 - 0.5 * kPi * kPi * x * n * n);
  if (node_count < 2 || !std::has_single_bit(node_count)) {
    throw InvalidArgument("hypercube closed forms need N = 2^d");
  }
  const double d = std::log2(n);
  const double loss = std::max(0.0, 1.0 - 0.75 * x * d * d * (d + 3.0));
  return (scheme == Scheme::kQubitCompatible ? std::pow(4.0 / 3.0, d) : n) * loss;
}

double figure3_omega0() { return 2.0 * kPi * 20e6; }
BandwidthBudget figure3_budget() { return BandwidthBudget::of_width(2.0 * kPi * 2e9); }

std::vector<SweepRow> figure3_sweep(std::size_t n_min, std::size_t n_max, double omega0,
                                    const BandwidthBudget& budget) {
  if (n_min < 2 || n_max < n_min) throw InvalidArgument("figure3_sweep: need 2 <= n_min <= n_max");
  std::vector<SweepRow> rows;
  auto add = [&](const Schedule& s) {
    const auto rep = distribution_rate(s, omega0, budget);
    rows.push_back({s.scheme(), s.node_count(), s.dimension(), rep.rate_per_transfer_time(),
                    rep.rate,
                    closed_form_rate_per_transfer_time(s.scheme(), s.node_count(), omega0, budget)});
  };
  for (int d = 1; d <= kMaxScheduleDimension; ++d) {
    const std::size_t n = std::size_t{1} << d;
    if (n > n_max) break;
    if (n < n_min) continue;
    add(mp_schedule(d));
    add(qc_schedule(d));
  }
  // Every even N up to 64, then powers of two, keeps the O(N^2) schedules cheap.
  for (std::size_t n = n_min + (n_min % 2); n <= n_max; n += 2) {
    if (n > 64 && !std::has_single_bit(n)) continue;
    add(complete_schedule(n));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.scheme != b.scheme ? a.scheme < b.scheme : a.node_count < b.node_count;
  });
  return rows;
}

}  // namespace qroute
