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

#include "qroute/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qroute/errors.hpp"

namespace qroute {

namespace {

using nlohmann::json;

// 1-based line of the first occurrence of "key" in the source, 0 if absent.
std::size_t line_of(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n'));
}

[[noreturn]] void fail(std::string_view text, std::string_view key, const std::string& what) {
  const auto line = line_of(text, key);
  throw InvalidArgument("network document" +
                        (line ? " line " + std::to_string(line) : std::string()) + ": " + what);
}

template <typename T>
T get(const json& obj, std::string_view text, const char* key) {
  if (!obj.contains(key)) fail(text, key, std::string("missing key '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(text, key, std::string("bad value for '") + key + "': " + e.what());
  }
}

std::vector<std::pair<NodeId, NodeId>> pairs_of(const json& arr, std::string_view text,
                                                const char* key) {
  std::vector<std::pair<NodeId, NodeId>> out;
  if (!arr.is_array()) fail(text, key, std::string("'") + key + "' must be a list of pairs");
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
      fail(text, key, std::string("'") + key + "' entries must be [u, v] node pairs");
    }
    out.emplace_back(p[0].get<NodeId>(), p[1].get<NodeId>());
  }
  return out;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string write_network_document(const NetworkDocument& doc) {
  json j;
  j["format"] = "qroute-network";
  j["version"] = kNetworkDocumentVersion;
  json topo;
  topo["kind"] = to_string(doc.topology.kind());
  switch (doc.topology.kind()) {
    case TopologyKind::kHypercube:
      topo["d"] = doc.topology.dimension();
      break;
    case TopologyKind::kComplete:
      topo["N"] = doc.topology.node_count();
      break;
    case TopologyKind::kCustom: {
      topo["N"] = doc.topology.node_count();
      json edges = json::array();
      for (const auto& e : doc.topology.edges()) edges.push_back({e.u, e.v});
      topo["edges"] = edges;
      break;
    }
  }
  j["topology"] = topo;
  if (doc.split) {
    j["program"] = {{"type", "subcube-split"},
                    {"channel_bits", doc.split->channel_bits()},
                    {"detuning", doc.split->detuning()},
                    {"omega0", doc.split->coupling()}};
  } else if (doc.pairing) {
    json matching = json::array();
    for (const auto& [a, b] : doc.pairing->matching()) matching.push_back({a, b});
    j["program"] = {{"type", "pairing"},
                    {"matching", matching},
                    {"detuning", doc.pairing->detuning()},
                    {"omega0", doc.pairing->coupling()},
                    {"base_frequency", doc.pairing->base_frequency()}};
  }
  return j.dump(2) + "\n";
}

NetworkDocument read_network_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("network document: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("network document: top level must be an object");
  const auto version = get<int>(j, text, "version");
  if (version != kNetworkDocumentVersion) {
    fail(text, "version", "unsupported version " + std::to_string(version));
  }
  if (!j.contains("topology") || !j["topology"].is_object()) {
    fail(text, "topology", "missing 'topology' object");
  }
  const json& topo = j["topology"];
  const auto kind = get<std::string>(topo, text, "kind");
  std::optional<NetworkTopology> topology;
  try {
    if (kind == "hypercube") {
      topology = build_hypercube(get<int>(topo, text, "d"));
    } else if (kind == "complete") {
      topology = build_complete(get<std::size_t>(topo, text, "N"));
    } else if (kind == "custom") {
      std::vector<Edge> edges;
      const json empty = json::array();
      for (const auto& [u, v] : pairs_of(topo.contains("edges") ? topo["edges"] : empty, text, "edges")) {
        edges.push_back({u, v});
      }
      topology = NetworkTopology::custom(get<std::size_t>(topo, text, "N"), std::move(edges));
    } else {
      fail(text, "kind", "unknown topology kind '" + kind + "'");
    }
  } catch (const InvalidArgument& e) {
    if (std::string_view(e.what()).starts_with("network document")) throw;
    fail(text, "topology", e.what());
  }

  NetworkDocument doc{*topology, std::nullopt, std::nullopt};
  if (!j.contains("program") || j["program"].is_null()) return doc;
  const json& prog = j["program"];
  const auto type = get<std::string>(prog, text, "type");
  try {
    if (type == "subcube-split") {
      if (doc.topology.kind() != TopologyKind::kHypercube) {
        fail(text, "type", "subcube-split needs a hypercube topology");
      }
      doc.split = SubcubeSplit(doc.topology.dimension(),
                               get<std::vector<int>>(prog, text, "channel_bits"),
                               get<double>(prog, text, "detuning"), get<double>(prog, text, "omega0"));
    } else if (type == "pairing") {
      if (doc.topology.kind() != TopologyKind::kComplete) {
        fail(text, "type", "pairing needs a complete topology");
      }
      const double base = prog.contains("base_frequency") ? get<double>(prog, text, "base_frequency") : 0.0;
      doc.pairing = PairingProgram(doc.topology.node_count(), pairs_of(prog.value("matching", json::array()), text, "matching"),
                                   get<double>(prog, text, "detuning"), get<double>(prog, text, "omega0"), base);
    } else {
      fail(text, "type", "unknown program type '" + type + "'");
    }
  } catch (const InvalidArgument& e) {
    if (std::string_view(e.what()).starts_with("network document")) throw;
    fail(text, "program", e.what());
  }
  return doc;
}

std::string write_schedule_json(const Schedule& schedule) {
  json j;
  j["format"] = "qroute-schedule";
  j["version"] = kCsvSchemaVersion;
  j["scheme"] = to_string(schedule.scheme());
  j["N"] = schedule.node_count();
  j["d"] = schedule.dimension();
  j["rounds_count"] = schedule.round_count();
  json rounds = json::array();
  for (const auto& r : schedule.rounds()) {
    json jr;
    if (const auto* s = std::get_if<SplitShape>(&r.program)) {
      jr["program"] = {{"type", "subcube-split"}, {"channel_bits", s->channel_bits}};
    } else {
      json matching = json::array();
      for (const auto& [a, b] : std::get<PairingShape>(r.program).matching) matching.push_back({a, b});
      jr["program"] = {{"type", "pairing"}, {"matching", matching}};
    }
    json tasks = json::array();
    for (const auto& t : r.tasks) {
      tasks.push_back({{"sender", t.sender},
                       {"receiver", t.receiver},
                       {"channel", t.channel},
                       {"correction_phase", t.correction_phase}});
    }
    jr["tasks"] = tasks;
    rounds.push_back(jr);
  }
  j["rounds"] = rounds;
  return j.dump(2) + "\n";
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule) {
  out << "round,m,channel_bits,channel,sender,receiver,correction_phase\n";
  for (std::size_t r = 0; r < schedule.round_count(); ++r) {
    const auto& round = schedule.rounds()[r];
    std::string bits;
    if (const auto* s = std::get_if<SplitShape>(&round.program)) {
      for (std::size_t i = 0; i < s->channel_bits.size(); ++i) {
        if (i) bits += ' ';
        bits += std::to_string(s->channel_bits[i]);
      }
    }
    for (const auto& t : round.tasks) {
      out << r << ',' << round.channel_bit_count() << ',' << bits << ',' << t.channel << ','
          << t.sender << ',' << t.receiver << ',' << format_number(t.correction_phase) << '\n';
    }
  }
}

void write_rate_csv(std::ostream& out, const RateReport& report, bool header) {
  if (header) out << "scheme,N,d,m,round,T_D,sumF,R,eta,attenuation\n";
  const std::string prefix = std::string(to_string(report.scheme)) + ',' +
                             std::to_string(report.node_count) + ',' +
                             std::to_string(report.dimension) + ',';
  const std::string suffix_td = format_number(report.distribution_time);
  const std::string rate = format_number(report.rate);
  const std::string att = format_number(report.attenuation);
  for (const auto& r : report.rounds) {
    out << prefix << r.m << ',' << r.round << ',' << suffix_td << ',' << format_number(r.sum_fidelity)
        << ',' << rate << ',' << format_number(r.eta) << ',' << att << '\n';
  }
  out << prefix << ",total," << suffix_td << ',' << format_number(report.total_weighted_pairs) << ','
      << rate << ",," << att << '\n';
}

std::string write_rate_json(const RateReport& report) {
  json j;
  j["format"] = "qroute-rate";
  j["version"] = kCsvSchemaVersion;
  j["scheme"] = to_string(report.scheme);
  j["N"] = report.node_count;
  j["d"] = report.dimension;
  j["T"] = report.transfer_time;
  j["T_D"] = report.distribution_time;
  j["sumF"] = report.total_weighted_pairs;
  j["R"] = report.rate;
  j["R_times_T"] = report.rate_per_transfer_time();
  j["attenuation"] = report.attenuation;
  json rounds = json::array();
  for (const auto& r : report.rounds) {
    rounds.push_back({{"round", r.round}, {"m", r.m}, {"eta", r.eta}, {"fidelity", r.fidelity},
                      {"sumF", r.sum_fidelity}});
  }
  j["rounds"] = rounds;
  return j.dump(2) + "\n";
}

}  // namespace qroute
