// Copyright 2026 The Authors.
//
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

#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "golden_cases.hpp"
#include "json.hpp"
#include "submod/cli.hpp"

namespace submod::cli {
namespace {

using nlohmann::json;

using golden::comparable;
using golden::expand;
using golden::golden_cases;
using golden::kFixtures;
using golden::run_case;

TEST(Cli, GoldenReports) {
  const bool update = std::getenv("SUBMOD_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    SCOPED_TRACE(c.name);
    const Outcome o = run_case(c.args);
    EXPECT_EQ(o.exit_code, c.exit_code);
    json got = comparable(o, c.args);
    if (!o.stream.empty()) got["stream"] = o.stream;
    const std::string path = golden::golden_path(c);
    if (update) {
      std::ofstream(path) << got.dump(2) << "\n";
      continue;
    }
    std::ifstream in(path);
    ASSERT_TRUE(in) << "missing golden " << path;
    EXPECT_EQ(got, json::parse(in)) << got.dump(2);
  }
}

TEST(Cli, ExitCodeMatchesStatus) {
  for (const auto& c : golden_cases()) {
    const Outcome o = run_case(c.args);
    const std::string status = o.report["status"];
    EXPECT_EQ(o.report["exit_code"], o.exit_code);
    EXPECT_EQ(status == "ok", o.exit_code == kExitOk) << c.name;
    EXPECT_EQ(status == "negative", o.exit_code == kExitNegative) << c.name;
    EXPECT_EQ(status == "error", o.exit_code == kExitError) << c.name;
    if (o.exit_code == kExitError) {
      EXPECT_TRUE(o.report["error"]["code"].is_string()) << c.name;
    }
  }
}

TEST(Cli, DeterministicOutput) {
  for (const auto& c : golden_cases()) {
    Outcome a = run_case(c.args);
    Outcome b = run_case(c.args);
    a.report.erase("wall_time_ms");
    b.report.erase("wall_time_ms");
    EXPECT_EQ(render(a), render(b)) << c.name;
  }
}

TEST(Cli, SweepIsSeedReproducible) {
  const std::vector<std::string> args = {"sweep", "--suite", "hierarchy", "--reps", "4",
                                         "--n-max", "5", "--points", "10", "--seed", "3"};
  Outcome a = run(args);
  Outcome b = run(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.stream, b.stream);
  EXPECT_EQ(a.report["result"], b.report["result"]);
  EXPECT_EQ(a.stream.size(), 4u);
  EXPECT_TRUE(a.report["result"]["rate_monotone"].get<bool>());
}

TEST(Cli, EverySweepSuiteIsClean) {
  for (const char* suite :
       {"third-max", "hierarchy", "m-natural", "fujishige", "supergradients", "positive-max"}) {
    const Outcome o = run({"sweep", "--suite", suite, "--reps", "20", "--n-max", "6", "--points", "15"});
    EXPECT_EQ(o.exit_code, kExitOk) << suite << " " << o.report.dump();
    EXPECT_EQ(o.report["result"]["violations"], 0) << suite;
    EXPECT_EQ(o.stream.size(), 20u) << suite;
  }
}

TEST(Cli, SweepConfigFile) {
  const std::string path = ::testing::TempDir() + "/sweep_config.json";
  std::ofstream(path) << R"({"suite": "fujishige", "family": "graph_cut", "n_max": 4, "reps": 3})";
  const Outcome o = run({"sweep", "--config", path, "--seed", "5"});
  EXPECT_EQ(o.exit_code, 0) << o.report.dump();
  EXPECT_EQ(o.report["result"]["seed"], 5);
  EXPECT_EQ(o.report["result"]["family"], "graph_cut");
  EXPECT_EQ(o.report["result"]["count"], 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, kExitError);
  EXPECT_EQ(run({"sweep"}).exit_code, kExitError);
  EXPECT_EQ(run({"sweep", "--suite", "nope"}).exit_code, kExitError);
  EXPECT_EQ(run({"sweep", "--suite", "third-max", "--family", "nope"}).exit_code, kExitError);
  const Outcome o = run(expand({"member", "-i", "$F/triangle_cut.json", "--poly", "round",
                                "--point", "0,0,0"}));
  EXPECT_EQ(o.report["error"]["code"], "usage_error");
  const Outcome cap = run(expand({"member", "-i", "$F/triangle_cut.json", "--poly", "super-outer",
                                  "--k", "5", "--point", "0,0,0"}));
  EXPECT_EQ(cap.report["error"]["code"], "descriptor_mismatch");
}

TEST(Cli, HelpAndVersion) {
  const Outcome help = run({"--help"});
  EXPECT_EQ(help.exit_code, 0);
  ASSERT_TRUE(help.text.has_value());
  EXPECT_NE(help.text->find("third-max"), std::string::npos);
  const Outcome version = run({"--version"});
  EXPECT_EQ(*version.text, std::string(kToolVersion) + "\n");
}

}  // namespace
}  // namespace submod::cli
