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

// Entanglement-distribution schedules and rates.
//
// A schedule is a sequence of rounds. Each round reprograms the network
// (a subcube split for hypercubes, a pairing for complete graphs), runs for
// one swap time T = pi / (2 omega0), and carries a set of directed transfers.
// The distribution rate sums the fidelities of all directed transfers and
// divides by the total time (number of rounds) * T.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qroute/netgraph.hpp"

namespace qroute {

enum class Scheme { kQubitCompatible, kMassivelyParallel, kComplete };

const char* to_string(Scheme scheme);
/// Accepts "qc", "mp", "complete" (case-insensitive).
Scheme parse_scheme(const std::string& text);

struct TransferTask {
  NodeId sender = 0;
  NodeId receiver = 0;
  std::size_t channel = 0;
  /// Phase that undoes the ideal (zero cross-talk) transfer phase.
  double correction_phase = 0.0;
};

/// Frequency program of one hypercube round: which bits are channel bits.
struct SplitShape {
  std::vector<int> channel_bits;  // ascending
};
/// Frequency program of one complete-graph round: the perfect matching.
struct PairingShape {
  std::vector<std::pair<NodeId, NodeId>> matching;
};

struct Round {
  std::variant<SplitShape, PairingShape> program;
  std::vector<TransferTask> tasks;

  /// Number of channel bits for hypercube rounds, 0 for pairing rounds.
  int channel_bit_count() const;
};

class Schedule {
 public:
  Schedule(Scheme scheme, std::size_t node_count, int dimension, std::vector<Round> rounds);

  Scheme scheme() const { return scheme_; }
  std::size_t node_count() const { return node_count_; }
  /// Hypercube dimension; 0 for complete-graph schedules.
  int dimension() const { return dimension_; }
  const std::vector<Round>& rounds() const { return rounds_; }
  std::size_t round_count() const { return rounds_.size(); }
  std::size_t task_count() const;
  /// Number of rounds times the swap time.
  double distribution_time(double omega0) const;

 private:
  Scheme scheme_;
  std::size_t node_count_;
  int dimension_;
  std::vector<Round> rounds_;
};

/// Largest hypercube dimension for which full schedules are materialized
/// (QC at d = 11 has 88573 rounds and C(2048, 2) tasks).
inline constexpr int kMaxScheduleDimension = 11;
inline constexpr std::size_t kMaxCompleteScheduleNodes = 2048;

/// Splittings in schedule order: ascending m, channel-bit sets in lexicographic order.
std::vector<std::vector<int>> hypercube_splittings(int d);

Schedule qc_schedule(int d);
Schedule mp_schedule(int d);
/// Circle-method round robin: N - 1 perfect matchings covering every pair once.
Schedule complete_schedule(std::size_t n);

/// Check the per-scheme round structure and pair coverage. Returns an empty
/// string when valid, otherwise a description of the first problem found.
std::string validate_schedule(const Schedule& schedule);

struct BandwidthBudget {
  double omega_min = 0.0;  // rad/s
  double omega_max = 0.0;  // rad/s
  double width() const { return omega_max - omega_min; }
  /// Budget of the given width starting at 0.
  static BandwidthBudget of_width(double width);
};

struct DecoherenceParams {
  std::optional<double> t1;  // dissipation time (s)
  std::optional<double> t2;  // dephasing time (s)
};

/// eta = 2 omega0 m / W for a hypercube splitting with m channel bits (0 for m == 0).
double hypercube_eta(int m, double omega0, const BandwidthBudget& budget);
/// eta = omega0 N / W for the N/2-pair complete-graph ladder.
double complete_eta(std::size_t n, double omega0, const BandwidthBudget& budget);

enum class FidelityModel {
  kWorstCase,  // sin^2(xi) = 1 for hypercube rounds
  kResonant,   // sin^2(xi) evaluated at the actual eta (exploits resonances)
};

struct RoundRate {
  std::size_t round = 0;
  int m = 0;
  double eta = 0.0;
  double fidelity = 0.0;  // per task, before attenuation
  double sum_fidelity = 0.0;  // over the round's tasks, after attenuation
};

struct RateReport {
  Scheme scheme = Scheme::kMassivelyParallel;
  std::size_t node_count = 0;
  int dimension = 0;
  double transfer_time = 0.0;      // T (s)
  double distribution_time = 0.0;  // T_D (s)
  double total_weighted_pairs = 0.0;
  double rate = 0.0;               // 1/s
  /// R * T, formed as pairs per round so the ideal limits are exact integers.
  double rate_in_transfer_units = 0.0;
  double rate_per_transfer_time() const { return rate_in_transfer_units; }
  double attenuation = 1.0;
  std::vector<RoundRate> rounds;
};

/// e^{-T/T2} for single-excitation schemes (QC, complete), e^{-T/T1} for MP;
/// 1 when the relevant time is absent.
double attenuation_factor(Scheme scheme, double transfer_time, const DecoherenceParams& decoherence);

RateReport distribution_rate(const Schedule& schedule, double omega0, const BandwidthBudget& budget,
                             const DecoherenceParams& decoherence = {},
                             FidelityModel model = FidelityModel::kWorstCase);

/// Large-N closed forms, in units of 1/T:
///   complete: N (1 - (pi^2/2) omega0^2 N^2 / W^2)
///   QC:       (4/3)^d (1 - (3/4) omega0^2 d^2 (d+3) / W^2)
///   MP:       N (1 - (3/4) omega0^2 d^2 (d+3) / W^2)
/// with the bracket clamped at 0.
double closed_form_rate_per_transfer_time(Scheme scheme, std::size_t node_count, double omega0,
                                          const BandwidthBudget& budget);

struct SweepRow {
  Scheme scheme;
  std::size_t node_count;
  int dimension;  // 0 for complete
  double rate_per_transfer_time;
  double rate;
  double closed_form_per_transfer_time;
};

/// Default rate-sweep parameters: omega0 / 2pi = 20 MHz, W / 2pi = 2 GHz.
double figure3_omega0();
BandwidthBudget figure3_budget();

/// Rates for all three schemes for every N in [n_min, n_max]: hypercube
/// schemes at powers of two, the complete graph at even N.
std::vector<SweepRow> figure3_sweep(std::size_t n_min, std::size_t n_max, double omega0,
                                    const BandwidthBudget& budget);

}  // namespace qroute
