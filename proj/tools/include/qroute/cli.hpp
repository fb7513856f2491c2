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

// Command-line front end. A run is described by an ExperimentConfig, built
// from an optional JSON config file and command-line flags (flags win).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qroute/errors.hpp"
#include "qroute/fidelity.hpp"
#include "qroute/fockoracle.hpp"
#include "qroute/routing.hpp"

namespace qroute::cli {

enum class Experiment { kEvolve, kFidelitySweep, kSchedule, kRate, kFigure2, kFigure3 };
enum class OutputFormat { kCsv, kJson };

const char* to_string(Experiment experiment);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitResource = 3;

/// Bad flag or config value. The message names the flag or the config line.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::kFigure3;
  std::optional<int> d;
  std::optional<std::size_t> n;
  int m = 1;
  Scheme scheme = Scheme::kMassivelyParallel;
  NodeModel model = NodeModel::kOscillator;
  // Explicit grid; when empty the grid is eta_count log-spaced points.
  std::vector<double> eta;
  double eta_min = 0.01;
  double eta_max = 1.0;
  std::size_t eta_count = 200;
  std::optional<double> bandwidth;  // W (rad/s)
  double omega0 = figure3_omega0();
  DecoherenceParams decoherence;
  FidelityModel fidelity_model = FidelityModel::kWorstCase;
  XiConvention xi = XiConvention::kPrinted;
  std::optional<double> time;     // evolve: defaults to the swap time
  std::optional<std::string> network;  // evolve: network document path
  std::optional<std::size_t> random_nodes;  // evolve: random graph size
  std::size_t n_min = 2;
  std::size_t n_max = 1024;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t seed = 1;
};

/// Apply a JSON config document on top of `base`. Errors carry the line.
ExperimentConfig apply_config_text(std::string_view text, ExperimentConfig base);
/// Apply one setting given as text (the value of a command-line flag).
void apply_flag(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Parses argv. Returns nullopt when help was printed to `out`.
std::optional<ExperimentConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Throws ConfigError for inconsistent or out-of-range settings.
void validate(const ExperimentConfig& config);
std::vector<double> eta_grid(const ExperimentConfig& config);

/// From QROUTE_WORKERS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// The full output document; nothing is written.
std::string render(const ExperimentConfig& config);

/// validate + render + write. Diagnostics go to `err`, stdout output to `out`.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qroute::cli
