// Copyright 2026 The kassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kassoc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "kassoc/scenarios.hpp"

namespace kassoc {
namespace {

using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kassoc_cli_test_" + name);
}

TEST(Cli, MarkovBlanketOfExampleOne) {
  const CliRun r = invoke({"mb", "--scenario", "builtin:example1", "--target", "Y", "--mode", "modified"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["command"], "mb");
  EXPECT_EQ(j["result"]["blanket"], json({"X", "Z"}));
  EXPECT_EQ(j["result"]["matches_graph"], true);
  EXPECT_GT(j["oracle"]["queries"].get<int>(), 0);
  EXPECT_TRUE(j.contains(cli::kTimingField));

  const CliRun classic = invoke({"mb", "--scenario", "builtin:example1", "--target", "Y", "--mode", "classic"});
  EXPECT_EQ(classic.report()["result"]["blanket"], json::array());
}

TEST(Cli, OrientExampleTwo) {
  const CliRun r = invoke({"orient", "--scenario", "builtin:example2", "--center", "Y", "--left", "X,Z", "--right", "W"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json v = r.report()["result"]["verdict"];
  EXPECT_EQ(v["outcome"], "collider");
  EXPECT_EQ(v["oriented"], json({"W->Y", "X->Y", "Z->Y"}));
}

TEST(Cli, OrientPreconditionFailureExitsOne) {
  const CliRun r = invoke({"orient", "--scenario", "builtin:cancel3", "--center", "Y", "--left", "X", "--right", "Z"});
  EXPECT_EQ(r.code, cli::kExitPrecondition);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OtherSubcommands) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"assoc", "--scenario", "builtin:example1"},
           {"assoc", "--scenario", "builtin:cancel4", "--target", "X"},
           {"sp", "--scenario", "builtin:example2"},
           {"audit", "--scenario", "builtin:example1"},
           {"mb", "--scenario", "builtin:xor-chain", "--target", "Z", "--oracle", "graph"},
           {"sample", "--scenario", "builtin:example1", "--samples", "200", "--seed", "3"},
           {"mb", "--scenario", "builtin:example1", "--target", "Y", "--oracle", "gtest", "--samples", "5000"}}) {
    const CliRun r = invoke(args);
    EXPECT_EQ(r.code, cli::kExitOk) << args[0] << ": " << r.err;
    EXPECT_NO_THROW(r.report()) << args[0];
  }
  const json sp = invoke({"sp", "--scenario", "builtin:example2"}).report();
  EXPECT_EQ(sp["result"]["min_edges"], 3);
  const json audit = invoke({"audit", "--scenario", "builtin:example1"}).report();
  EXPECT_EQ(audit["result"]["checks"]["AF"]["holds"], false);
}

TEST(Cli, MalformedInputExitsTwo) {
  const auto path = temp_path("bad.json");
  std::ofstream(path) << R"({"name": "bad", "nodes": ["A"], "edges": []})";
  const CliRun bad = invoke({"audit", "--scenario", path.string()});
  EXPECT_EQ(bad.code, cli::kExitInput);
  EXPECT_NE(bad.err.find("payload"), std::string::npos);
  std::filesystem::remove(path);

  EXPECT_EQ(invoke({"audit", "--scenario", "builtin:nope"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"mb", "--scenario", "builtin:example1", "--target", "Q"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"mb", "--scenario", "builtin:example1", "--target", "Y", "--mode", "odd"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"mb", "--scenario", "builtin:example1"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

TEST(Cli, ReportsAreStableApartFromTiming) {
  const std::vector<std::string> args{"assoc", "--scenario", "builtin:noisy-copy"};
  json a = invoke(args).report();
  json b = invoke(args).report();
  a.erase(cli::kTimingField);
  b.erase(cli::kTimingField);
  EXPECT_EQ(a.dump(2), b.dump(2));
}

TEST(Cli, WritesFiles) {
  const auto report = temp_path("report.json");
  const auto trace = temp_path("trace.json");
  const CliRun r = invoke({"mb", "--scenario", "builtin:example2", "--target", "W", "--out", report.string(), "--trace",
                        trace.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream rf(report);
  const json j = json::parse(rf);
  EXPECT_EQ(j["result"]["blanket"], json({"X", "Y", "Z"}));
  std::ifstream tf(trace);
  const json t = json::parse(tf);
  ASSERT_TRUE(t.is_array());
  EXPECT_EQ(t.size(), j["result"]["trace_steps"].get<std::size_t>());
  std::filesystem::remove(report);
  std::filesystem::remove(trace);
}

TEST(Cli, ScenarioFilesWork) {
  const auto path = temp_path("ex1.json");
  save_scenario(builtin_scenario("example1"), path);
  const CliRun r = invoke({"mb", "--scenario", path.string(), "--target", "Y"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.report()["result"]["blanket"], json({"X", "Z"}));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace kassoc
