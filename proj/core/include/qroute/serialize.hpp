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

// Text formats: the versioned network document (JSON), schedule export and
// rate tables (CSV). The schemas are described in docs/formats.md.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qroute/netgraph.hpp"
#include "qroute/routing.hpp"

namespace qroute {

inline constexpr int kNetworkDocumentVersion = 1;
inline constexpr int kCsvSchemaVersion = 1;

struct NetworkDocument {
  NetworkTopology topology;
  std::optional<SubcubeSplit> split;
  std::optional<PairingProgram> pairing;
};

std::string write_network_document(const NetworkDocument& doc);
/// Throws InvalidArgument; parse errors name the line and column.
NetworkDocument read_network_document(std::string_view text);

/// Locale-independent, 12 significant digits.
std::string format_number(double x);

/// Schedule as a JSON document (rounds with their frequency program and tasks).
std::string write_schedule_json(const Schedule& schedule);
/// One row per task: round,m,channel_bits,channel,sender,receiver,correction_phase.
void write_schedule_csv(std::ostream& out, const Schedule& schedule);

/// Header: scheme,N,d,m,round,T_D,sumF,R,eta,attenuation. One row per round
/// (sumF of that round) followed by a "total" row.
void write_rate_csv(std::ostream& out, const RateReport& report, bool header = true);
std::string write_rate_json(const RateReport& report);

}  // namespace qroute
