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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace qroute::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "qroute");
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::path(::testing::TempDir()) / name;
}

TEST(Cli, Figure3DefaultsEmitThreeSeries) {
  const auto r = invoke({"figure3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], "scheme,N,d,R_T,R,closed_form");
  std::set<std::string> schemes;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto scheme = rows[i].substr(0, rows[i].find(','));
    schemes.insert(scheme);
    // Every rate is non-negative.
    std::stringstream ss(rows[i]);
    std::string cell;
    for (int c = 0; std::getline(ss, cell, ','); ++c) {
      if (c == 3 || c == 4) EXPECT_GE(std::stod(cell), 0.0) << rows[i];
    }
  }
  EXPECT_EQ(schemes, (std::set<std::string>{"QC", "MP", "COMPLETE"}));
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const auto a = invoke({"fidelity-sweep", "--d", "2", "--m", "1", "--eta", "0.1,0.3"});
  const auto b = invoke({"fidelity-sweep", "--d", "2", "--m", "1", "--eta", "0.1,0.3"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto rows = lines(a.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "d,m,eta,scheme,model,pairs,min_fidelity,mean_fidelity,bound");
}

TEST(Cli, WorkerCountDoesNotChangeOutput) {
  ::setenv("QROUTE_WORKERS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  const auto serial = invoke({"fidelity-sweep", "--d", "3", "--m", "1", "--eta-count", "5", "--eta-max", "0.5"});
  ::setenv("QROUTE_WORKERS", "4", 1);
  EXPECT_EQ(worker_count(), 4u);
  const auto pooled = invoke({"fidelity-sweep", "--d", "3", "--m", "1", "--eta-count", "5", "--eta-max", "0.5"});
  ::unsetenv("QROUTE_WORKERS");
  ASSERT_EQ(serial.code, kExitOk) << serial.err;
  EXPECT_EQ(serial.out, pooled.out);
}

TEST(Cli, EmptyGridIsInvalidConfigWithNoOutput) {
  const auto path = temp_path("empty_grid.csv");
  std::filesystem::remove(path);
  const auto r = invoke({"fidelity-sweep", "--d", "2", "--m", "1", "--eta-count", "0", "--output", path.c_str()});
  EXPECT_EQ(r.code, kExitInvalidConfig);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(std::filesystem::exists(path));
  EXPECT_NE(r.err.find("empty"), std::string::npos);
}

TEST(Cli, ResourceGuardSurfaces) {
  // 64 simultaneous senders exceed the exact oracle's limit.
  const auto r = invoke({"fidelity-sweep", "--d", "6", "--m", "1", "--scheme", "mp", "--eta", "0.1"});
  EXPECT_EQ(r.code, kExitResource) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ConfigFileLineAnchoredErrors) {
  const auto path = temp_path("bad.json");
  {
    std::ofstream f(path);
    f << "{\n  \"experiment\": \"rate\",\n  \"scheme\": \"mp\",\n  \"omega0\": -3\n}\n";
  }
  const auto r = invoke({"--config", path.c_str()});
  EXPECT_EQ(r.code, kExitInvalidConfig);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
}

TEST(Cli, FlagsOverrideConfigFile) {
  const auto path = temp_path("rate.json");
  {
    std::ofstream f(path);
    f << "{\"experiment\": \"rate\", \"scheme\": \"mp\", \"d\": 5, \"format\": \"json\"}\n";
  }
  const auto from_file = invoke({"--config", path.c_str()});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_NE(from_file.out.find("\"N\": 32"), std::string::npos);
  const auto overridden = invoke({"--config", path.c_str(), "--d", "3"});
  ASSERT_EQ(overridden.code, kExitOk) << overridden.err;
  EXPECT_NE(overridden.out.find("\"N\": 8"), std::string::npos);
}

TEST(Cli, ScheduleAndRate) {
  const auto s = invoke({"schedule", "--scheme", "complete", "--N", "6"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_EQ(lines(s.out).size(), 1u + 30u);  // both directions of each pair
  const auto bad = invoke({"schedule", "--scheme", "complete", "--N", "7"});
  EXPECT_EQ(bad.code, kExitInvalidConfig);
  const auto r = invoke({"rate", "--scheme", "qc", "--d", "3", "--t2", "1e-5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out).size(), 1u + 13u + 1u);
}

TEST(Cli, EvolveSwapPair) {
  const auto r = invoke({"evolve", "--d", "1", "--omega0", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "row,col,re,im");
  EXPECT_EQ(rows[2], "0,1,0,-1");
  EXPECT_EQ(invoke({"evolve", "--d", "2", "--N", "4"}).code, kExitInvalidConfig);
  const auto random = invoke({"evolve", "--random-nodes", "4", "--seed", "9", "--format", "json"});
  EXPECT_EQ(random.code, kExitOk);
  EXPECT_EQ(random.out, invoke({"evolve", "--random-nodes", "4", "--seed", "9", "--format", "json"}).out);
}

TEST(Cli, Figure2SmallGrid) {
  const auto r = invoke({"figure2", "--eta", "0.01"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 1u + 5u);
  EXPECT_EQ(rows[0], "d,eta,qubit_fidelity,oscillator_bound");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][0], char('0' + i + 1));
}

TEST(Cli, UnknownInputs) {
  EXPECT_EQ(invoke({}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"figure3", "--bogus", "1"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"rate", "--scheme", "ring", "--d", "2"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"rate", "--scheme", "mp", "--d", "x"}).code, kExitInvalidConfig);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace qroute::cli
