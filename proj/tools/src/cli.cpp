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

#include "qroute/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qroute/modevo.hpp"
#include "qroute/netgraph.hpp"
#include "qroute/serialize.hpp"

namespace qroute::cli {
namespace {

using nlohmann::json;

struct Setting {
  const char* key;
  const char* help;
  bool text;  // value is a plain string rather than JSON
};

// Flags mirror config keys one-to-one.
constexpr Setting kSettings[] = {
    {"d", "hypercube dimension", false},
    {"N", "complete-graph node count", false},
    {"m", "number of channel bits", false},
    {"scheme", "qc | mp | complete", true},
    {"model", "oscillator | qubit", true},
    {"eta", "explicit eta grid, comma separated", true},
    {"eta-min", "lower end of the log-spaced eta grid", false},
    {"eta-max", "upper end of the log-spaced eta grid", false},
    {"eta-count", "number of log-spaced eta points", false},
    {"bandwidth", "frequency budget W (rad/s)", false},
    {"omega0", "coupling (rad/s)", false},
    {"t1", "dissipation time (s)", false},
    {"t2", "dephasing time (s)", false},
    {"fidelity-model", "worst-case | resonant", true},
    {"xi", "printed | transfer-time", true},
    {"time", "evolution time (s)", false},
    {"network", "network document (JSON)", true},
    {"random-nodes", "evolve a random graph of this size", false},
    {"n-min", "smallest N of the figure3 sweep", false},
    {"n-max", "largest N of the figure3 sweep", false},
    {"output", "output path (default stdout)", true},
    {"format", "csv | json", true},
    {"seed", "seed for random graphs", false},
};

constexpr std::pair<const char*, Experiment> kExperiments[] = {
    {"evolve", Experiment::kEvolve},   {"fidelity-sweep", Experiment::kFidelitySweep},
    {"schedule", Experiment::kSchedule}, {"rate", Experiment::kRate},
    {"figure2", Experiment::kFigure2}, {"figure3", Experiment::kFigure3},
};

Experiment parse_experiment(const std::string& name) {
  for (const auto& [k, e] : kExperiments) {
    if (name == k) return e;
  }
  throw ConfigError("unknown experiment '" + name + "'");
}

template <typename T>
T as(const json& v, const char* what) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("expected ") + what);
  }
}

double positive(const json& v) {
  const auto x = as<double>(v, "a number");
  if (!std::isfinite(x) || x <= 0) throw ConfigError("must be positive");
  return x;
}

std::size_t count(const json& v) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ConfigError("expected a non-negative integer");
  return v.get<std::size_t>();
}

void apply(ExperimentConfig& c, const std::string& key, const json& v) {
  if (key == "experiment") {
    c.experiment = parse_experiment(as<std::string>(v, "a string"));
  } else if (key == "d") {
    c.d = static_cast<int>(count(v));
  } else if (key == "N") {
    c.n = count(v);
  } else if (key == "m") {
    c.m = static_cast<int>(count(v));
  } else if (key == "scheme") {
    c.scheme = parse_scheme(as<std::string>(v, "a string"));
  } else if (key == "model") {
    const auto s = as<std::string>(v, "a string");
    if (s == "oscillator") {
      c.model = NodeModel::kOscillator;
    } else if (s == "qubit") {
      c.model = NodeModel::kQubit;
    } else {
      throw ConfigError("unknown model '" + s + "'");
    }
  } else if (key == "eta") {
    if (!v.is_array()) throw ConfigError("expected a list of numbers");
    c.eta.clear();
    for (const auto& x : v) c.eta.push_back(positive(x));
    if (c.eta.empty()) throw ConfigError("eta grid is empty");
  } else if (key == "eta-min") {
    c.eta_min = positive(v);
  } else if (key == "eta-max") {
    c.eta_max = positive(v);
  } else if (key == "eta-count") {
    c.eta_count = count(v);
  } else if (key == "bandwidth") {
    c.bandwidth = positive(v);
  } else if (key == "omega0") {
    c.omega0 = positive(v);
  } else if (key == "t1") {
    c.decoherence.t1 = positive(v);
  } else if (key == "t2") {
    c.decoherence.t2 = positive(v);
  } else if (key == "fidelity-model") {
    const auto s = as<std::string>(v, "a string");
    if (s == "worst-case") {
      c.fidelity_model = FidelityModel::kWorstCase;
    } else if (s == "resonant") {
      c.fidelity_model = FidelityModel::kResonant;
    } else {
      throw ConfigError("unknown fidelity model '" + s + "'");
    }
  } else if (key == "xi") {
    const auto s = as<std::string>(v, "a string");
    if (s == "printed") {
      c.xi = XiConvention::kPrinted;
    } else if (s == "transfer-time") {
      c.xi = XiConvention::kTransferTime;
    } else {
      throw ConfigError("unknown xi convention '" + s + "'");
    }
  } else if (key == "time") {
    c.time = positive(v);
  } else if (key == "network") {
    c.network = as<std::string>(v, "a string");
  } else if (key == "random-nodes") {
    c.random_nodes = count(v);
  } else if (key == "n-min") {
    c.n_min = count(v);
  } else if (key == "n-max") {
    c.n_max = count(v);
  } else if (key == "output") {
    c.output = as<std::string>(v, "a string");
  } else if (key == "format") {
    const auto s = as<std::string>(v, "a string");
    if (s == "csv") {
      c.format = OutputFormat::kCsv;
    } else if (s == "json") {
      c.format = OutputFormat::kJson;
    } else {
      throw ConfigError("unknown format '" + s + "'");
    }
  } else if (key == "seed") {
    c.seed = as<std::uint64_t>(v, "a non-negative integer");
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

std::size_t line_of(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(a + (b - a) * double(i) / double(n - 1));
  out.back() = hi;
  return out;
}

// Runs fn(i) for i in [0, n) on the worker pool; results land in grid order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

const char* model_name(NodeModel model) { return model == NodeModel::kQubit ? "qubit" : "oscillator"; }

BandwidthBudget budget_of(const ExperimentConfig& c) {
  return c.bandwidth ? BandwidthBudget::of_width(*c.bandwidth) : figure3_budget();
}

Schedule schedule_of(const ExperimentConfig& c) {
  switch (c.scheme) {
    case Scheme::kQubitCompatible:
      return qc_schedule(*c.d);
    case Scheme::kMassivelyParallel:
      return mp_schedule(*c.d);
    case Scheme::kComplete:
      break;
  }
  return complete_schedule(*c.n);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CouplingMatrix evolve_coupling(const ExperimentConfig& c) {
  if (c.network) {
    const auto doc = read_network_document(read_file(*c.network));
    if (doc.split) return program_subcube_split(*doc.split);
    if (doc.pairing) return program_pairing(*doc.pairing);
    return CouplingMatrix(doc.topology, std::vector<double>(doc.topology.node_count(), 0.0), c.omega0);
  }
  if (c.random_nodes) {
    const std::size_t n = *c.random_nodes;
    std::mt19937_64 rng(c.seed);
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> freq(-c.omega0, c.omega0);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    std::vector<double> freqs(n);
    for (auto& f : freqs) f = freq(rng);
    return CouplingMatrix(NetworkTopology::custom(n, std::move(edges)), freqs, c.omega0);
  }
  if (c.d) {
    if (c.m > 0 && !c.eta.empty()) {
      return program_subcube_split(SubcubeSplit::from_eta(*c.d, c.m, c.eta.front(), c.omega0));
    }
    const auto topo = build_hypercube(*c.d);
    return CouplingMatrix(topo, std::vector<double>(topo.node_count(), 0.0), c.omega0);
  }
  const auto topo = build_complete(*c.n);
  return CouplingMatrix(topo, std::vector<double>(topo.node_count(), 0.0), c.omega0);
}

std::string render_evolve(const ExperimentConfig& c) {
  const auto omega = evolve_coupling(c);
  const double t = c.time ? *c.time : transfer_time(c.omega0);
  const auto k = evolve_modes(omega, t);
  if (c.format == OutputFormat::kJson) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < k.size(); ++r) {
      json rr = json::array();
      json ri = json::array();
      for (std::size_t s = 0; s < k.size(); ++s) {
        rr.push_back(k(r, s).real());
        ri.push_back(k(r, s).imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    json j{{"format", "qroute-evolution"}, {"version", kCsvSchemaVersion}, {"N", k.size()}, {"t", t},
           {"unitarity_defect", k.unitarity_defect()}, {"re", re}, {"im", im}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "row,col,re,im\n";
  for (std::size_t r = 0; r < k.size(); ++r) {
    for (std::size_t s = 0; s < k.size(); ++s) {
      out << r << ',' << s << ',' << format_number(k(r, s).real()) << ',' << format_number(k(r, s).imag())
          << '\n';
    }
  }
  return out.str();
}

struct SweepPoint {
  std::size_t pairs = 0;
  double min_fidelity = 0.0;
  double mean_fidelity = 0.0;
};

SweepPoint sweep_point(int d, int m, double eta, Scheme scheme, NodeModel model, double omega0) {
  const auto split = SubcubeSplit::from_eta(d, m, eta, omega0);
  const auto pairs = scheme == Scheme::kQubitCompatible ? qubit_compatible_pairs(split)
                                                        : massively_parallel_pairs(split);
  const auto fids = parallel_fidelities(pairs.senders, pairs.receivers, split, transfer_time(omega0), model);
  SweepPoint p;
  p.pairs = fids.size();
  p.min_fidelity = 1.0;
  for (const auto& f : fids) {
    p.min_fidelity = std::min(p.min_fidelity, f.fidelity);
    p.mean_fidelity += f.fidelity;
  }
  p.mean_fidelity /= static_cast<double>(fids.size());
  return p;
}

std::string render_fidelity_sweep(const ExperimentConfig& c) {
  const auto grid = eta_grid(c);
  const auto points = parallel_map<SweepPoint>(grid.size(), [&](std::size_t i) {
    return sweep_point(*c.d, c.m, grid[i], c.scheme, c.model, c.omega0);
  });
  if (c.format == OutputFormat::kJson) {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rows.push_back({{"eta", grid[i]},
                      {"pairs", points[i].pairs},
                      {"min_fidelity", points[i].min_fidelity},
                      {"mean_fidelity", points[i].mean_fidelity},
                      {"bound", hypercube_bound(c.m, grid[i], c.xi)}});
    }
    json j{{"format", "qroute-fidelity-sweep"}, {"version", kCsvSchemaVersion}, {"d", *c.d}, {"m", c.m},
           {"scheme", to_string(c.scheme)}, {"model", model_name(c.model)}, {"rows", rows}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "d,m,eta,scheme,model,pairs,min_fidelity,mean_fidelity,bound\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << *c.d << ',' << c.m << ',' << format_number(grid[i]) << ',' << to_string(c.scheme) << ','
        << model_name(c.model) << ',' << points[i].pairs << ',' << format_number(points[i].min_fidelity)
        << ',' << format_number(points[i].mean_fidelity) << ','
        << format_number(hypercube_bound(c.m, grid[i], c.xi)) << '\n';
  }
  return out.str();
}

constexpr int kFigure2MinDimension = 2;
constexpr int kFigure2MaxDimension = 6;

std::string render_figure2(const ExperimentConfig& c) {
  const auto grid = eta_grid(c);
  const std::size_t dims = kFigure2MaxDimension - kFigure2MinDimension + 1;
  // Largest cubes first so the slowest points do not trail at the end.
  const auto values = parallel_map<double>(dims * grid.size(), [&](std::size_t i) {
    const int d = kFigure2MaxDimension - static_cast<int>(i / grid.size());
    return sweep_point(d, 1, grid[i % grid.size()], Scheme::kQubitCompatible, NodeModel::kQubit, c.omega0)
        .min_fidelity;
  });
  auto value = [&](int d, std::size_t e) {
    return values[static_cast<std::size_t>(kFigure2MaxDimension - d) * grid.size() + e];
  };
  if (c.format == OutputFormat::kJson) {
    json rows = json::array();
    for (int d = kFigure2MinDimension; d <= kFigure2MaxDimension; ++d) {
      for (std::size_t e = 0; e < grid.size(); ++e) {
        rows.push_back({{"d", d},
                        {"eta", grid[e]},
                        {"qubit_fidelity", value(d, e)},
                        {"oscillator_bound", hypercube_bound(1, grid[e], c.xi)}});
      }
    }
    json j{{"format", "qroute-figure2"}, {"version", kCsvSchemaVersion}, {"rows", rows}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "d,eta,qubit_fidelity,oscillator_bound\n";
  for (int d = kFigure2MinDimension; d <= kFigure2MaxDimension; ++d) {
    for (std::size_t e = 0; e < grid.size(); ++e) {
      out << d << ',' << format_number(grid[e]) << ',' << format_number(value(d, e)) << ','
          << format_number(hypercube_bound(1, grid[e], c.xi)) << '\n';
    }
  }
  return out.str();
}

std::string render_figure3(const ExperimentConfig& c) {
  const auto rows = figure3_sweep(c.n_min, c.n_max, c.omega0, budget_of(c));
  if (c.format == OutputFormat::kJson) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"scheme", to_string(r.scheme)},
                     {"N", r.node_count},
                     {"d", r.dimension},
                     {"R_T", r.rate_per_transfer_time},
                     {"R", r.rate},
                     {"closed_form", r.closed_form_per_transfer_time}});
    }
    json j{{"format", "qroute-figure3"}, {"version", kCsvSchemaVersion}, {"omega0", c.omega0},
           {"bandwidth", budget_of(c).width()}, {"rows", arr}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "scheme,N,d,R_T,R,closed_form\n";
  for (const auto& r : rows) {
    out << to_string(r.scheme) << ',' << r.node_count << ',' << r.dimension << ','
        << format_number(r.rate_per_transfer_time) << ',' << format_number(r.rate) << ','
        << format_number(r.closed_form_per_transfer_time) << '\n';
  }
  return out.str();
}

}  // namespace

const char* to_string(Experiment experiment) {
  for (const auto& [k, e] : kExperiments) {
    if (e == experiment) return k;
  }
  return "?";
}

ExperimentConfig apply_config_text(std::string_view text, ExperimentConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config line 1: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    try {
      apply(base, key, value);
    } catch (const InvalidArgument& e) {
      const auto line = line_of(text, key);
      throw ConfigError("config" + (line ? " line " + std::to_string(line) : std::string()) + ": '" + key +
                        "': " + e.what());
    }
  }
  return base;
}

void apply_flag(ExperimentConfig& config, const std::string& key, const std::string& value) {
  const Setting* setting = nullptr;
  for (const auto& s : kSettings) {
    if (key == s.key) setting = &s;
  }
  if (!setting) throw ConfigError("--" + key + ": unknown flag");
  json v;
  if (key == "eta") {
    v = json::array();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        v.push_back(json::parse(item));
      } catch (const json::exception&) {
        throw ConfigError("--eta: '" + item + "' is not a number");
      }
    }
  } else if (setting->text) {
    v = value;
  } else {
    try {
      v = json::parse(value);
    } catch (const json::exception&) {
      throw ConfigError("--" + key + ": '" + value + "' is not a number");
    }
  }
  try {
    apply(config, key, v);
  } catch (const InvalidArgument& e) {
    throw ConfigError("--" + key + ": " + e.what());
  }
}

std::optional<ExperimentConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"qroute: parallel state transfer and entanglement routing"};
  app.require_subcommand(0, 1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override its values");
  std::map<std::string, std::string> flags;
  for (const auto& s : kSettings) app.add_option(std::string("--") + s.key, flags[s.key], s.help);
  std::vector<std::pair<CLI::App*, Experiment>> subs;
  for (const auto& [name, e] : kExperiments) subs.emplace_back(app.add_subcommand(name)->fallthrough(), e);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, out);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  ExperimentConfig config;
  bool have_experiment = false;
  if (!config_path.empty()) {
    const auto text = read_file(config_path);
    config = apply_config_text(text, config);
    have_experiment = json::parse(text).contains("experiment");
  }
  for (const auto& [sub, e] : subs) {
    if (sub->parsed()) {
      config.experiment = e;
      have_experiment = true;
    }
  }
  if (!have_experiment) throw ConfigError("no experiment given (evolve, fidelity-sweep, schedule, rate, figure2, figure3)");
  for (const auto& s : kSettings) {
    if (app.count(std::string("--") + s.key) > 0) apply_flag(config, s.key, flags[s.key]);
  }
  return config;
}

std::vector<double> eta_grid(const ExperimentConfig& config) {
  if (!config.eta.empty()) return config.eta;
  if (config.eta_count == 0) throw ConfigError("eta grid is empty (eta-count = 0)");
  if (config.eta_min > config.eta_max) throw ConfigError("eta-min exceeds eta-max");
  return log_spaced(config.eta_min, config.eta_max, config.eta_count);
}

void validate(const ExperimentConfig& c) {
  auto need_d = [&] {
    if (!c.d || *c.d < 1) throw ConfigError("--d: a hypercube dimension >= 1 is required");
  };
  switch (c.experiment) {
    case Experiment::kEvolve: {
      const int sources = int(c.network.has_value()) + int(c.random_nodes.has_value()) + int(c.d.has_value()) +
                          int(c.n.has_value());
      if (sources != 1) throw ConfigError("evolve needs exactly one of --network, --random-nodes, --d, --N");
      if (c.d && *c.d < 1) throw ConfigError("--d: must be >= 1");
      if (c.d && c.m > *c.d) throw ConfigError("--m: exceeds --d");
      if (c.n && *c.n < 1) throw ConfigError("--N: must be >= 1");
      if (c.random_nodes && *c.random_nodes < 1) throw ConfigError("--random-nodes: must be >= 1");
      break;
    }
    case Experiment::kFidelitySweep:
      need_d();
      if (c.m > *c.d) throw ConfigError("--m: exceeds --d");
      if (c.scheme == Scheme::kComplete) throw ConfigError("--scheme: fidelity-sweep takes qc or mp");
      if (c.scheme == Scheme::kMassivelyParallel && c.model == NodeModel::kQubit) {
        throw ConfigError("--model: the mp scheme needs oscillator nodes");
      }
      eta_grid(c);
      break;
    case Experiment::kFigure2:
      eta_grid(c);
      break;
    case Experiment::kSchedule:
    case Experiment::kRate:
      if (c.scheme == Scheme::kComplete) {
        if (!c.n || *c.n < 2 || *c.n % 2 != 0) throw ConfigError("--N: an even node count >= 2 is required");
      } else {
        need_d();
      }
      break;
    case Experiment::kFigure3:
      if (c.n_min < 2) throw ConfigError("--n-min: must be >= 2");
      if (c.n_min > c.n_max) throw ConfigError("--n-min: exceeds --n-max");
      break;
  }
}

std::size_t worker_count() {
  if (const char* env = std::getenv("QROUTE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string render(const ExperimentConfig& c) {
  switch (c.experiment) {
    case Experiment::kEvolve:
      return render_evolve(c);
    case Experiment::kFidelitySweep:
      return render_fidelity_sweep(c);
    case Experiment::kSchedule: {
      const auto s = schedule_of(c);
      if (c.format == OutputFormat::kJson) return write_schedule_json(s);
      std::ostringstream out;
      write_schedule_csv(out, s);
      return out.str();
    }
    case Experiment::kRate: {
      const auto rep = distribution_rate(schedule_of(c), c.omega0, budget_of(c), c.decoherence, c.fidelity_model);
      if (c.format == OutputFormat::kJson) return write_rate_json(rep);
      std::ostringstream out;
      write_rate_csv(out, rep);
      return out.str();
    }
    case Experiment::kFigure2:
      return render_figure2(c);
    case Experiment::kFigure3:
      return render_figure3(c);
  }
  return {};
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const auto text = render(config);
    if (config.output.empty()) {
      out << text;
      return kExitOk;
    }
    // Write beside the target and rename, so a failed run leaves nothing behind.
    const std::filesystem::path target(config.output);
    auto tmp = target;
    tmp += ".partial";
    {
      std::ofstream f(tmp, std::ios::binary);
      f << text;
      if (!f) throw ResourceError("cannot write '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
    return kExitOk;
  } catch (const ResourceError& e) {
    err << "qroute: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvalidArgument& e) {
    err << "qroute: invalid config: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "qroute: " << e.what() << '\n';
    return kExitFailure;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<ExperimentConfig> config;
  try {
    config = parse_command_line(argc, argv, out);
  } catch (const InvalidArgument& e) {
    err << "qroute: invalid config: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  if (!config) return kExitOk;
  return run(*config, out, err);
}

}  // namespace qroute::cli
