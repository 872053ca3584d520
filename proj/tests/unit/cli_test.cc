// Copyright 2026 The stablefix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <json.hpp>

#include "fixture_runner.h"
#include "stablefix/cli.h"
#include "stablefix/error.h"
#include "stablefix/io.h"

namespace stablefix {
namespace {

using testing::CliRun;
using testing::report_value;
using testing::run_cli;

const std::string kDir = STABLEFIX_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kDir + "/" + name; }

TEST(CliManifest, ExitCodesRoundTripsAndDeterminism) {
  const auto cases = testing::load_manifest(kDir);
  ASSERT_GE(cases.size(), 20u);
  for (const auto& c : cases) {
    SCOPED_TRACE("manifest line " + std::to_string(c.line) + ": " + c.label);
    const CliRun a = run_cli(c.args);
    const CliRun b = run_cli(c.args);
    EXPECT_EQ(a.code, c.expected_exit) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
    if (a.code == 2) {
      EXPECT_FALSE(a.err.empty());
    } else {
      EXPECT_FALSE(a.out.empty());
      const auto problem = testing::check_round_trip(c, a);
      EXPECT_FALSE(problem) << *problem;
    }
  }
}

TEST(CliManifest, EveryVerbIsCovered) {
  std::set<std::string> verbs;
  for (const auto& c : testing::load_manifest(kDir)) {
    for (const auto& a : c.args) {
      if (a.rfind("--", 0) != 0) {
        verbs.insert(a);
        break;
      }
    }
  }
  for (const char* v : {"check", "partition", "delete-min", "delete-subset", "bribe", "extend",
                        "strat-extend", "redblue", "oracle"}) {
    EXPECT_TRUE(verbs.count(v)) << v;
  }
}

TEST(Cli, PartitionOddRing) {
  auto r = run_cli({"partition", fixture("odd_ring.sf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(report_value(r.out, "odd_cycle"), "(1 2 3)");
  EXPECT_EQ(report_value(r.out, "pi"), "1->2 2->3 3->1");
  EXPECT_EQ(report_value(r.out, "stable_matching_exists"), "no");
}

TEST(Cli, DeleteMinOddRing) {
  auto r = run_cli({"delete-min", fixture("odd_ring.sf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(report_value(r.out, "removed"), "1");
  EXPECT_EQ(report_value(r.out, "matching"), "2 3");
  r = run_cli({"delete-min", fixture("two_odd_rings.sf")});
  EXPECT_EQ(report_value(r.out, "size"), "2");
}

TEST(Cli, BribeCosts) {
  auto cost = [](std::vector<std::string> args) {
    return report_value(run_cli(args).out, "cost").value_or("?");
  };
  EXPECT_EQ(cost({"bribe", "--mode", "exact-bipartite", fixture("gadget_edge.sf")}), "1");
  EXPECT_EQ(cost({"bribe", "--mode", "exact-bipartite", fixture("gadget_k22.sf")}), "2");
  EXPECT_EQ(cost({"bribe", "--mode", "brute", fixture("gadget_triangle.sf")}), "2");
  EXPECT_EQ(cost({"bribe", fixture("three_targets.sf")}), "2");
  EXPECT_EQ(cost({"bribe", "--mode", "frozen", fixture("frozen.sf")}), "1");
  auto r = run_cli({"bribe", fixture("clamp.sf")});
  EXPECT_EQ(report_value(r.out, "change"), "u v 7 5");
  r = run_cli({"bribe", "--mode", "frozen", fixture("frozen_tie.sf")});
  EXPECT_EQ(report_value(r.out, "dominated"), "u w at u");
  r = run_cli({"bribe", "--mode", "approx", fixture("c5.sf")});
  EXPECT_TRUE(report_value(r.out, "certified_ratio"));
  EXPECT_TRUE(report_value(r.out, "lower_bound"));
}

TEST(Cli, BruteAgreesWithSolversOnFixtures) {
  int compared = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kDir)) {
    if (entry.path().extension() != ".sf") continue;
    InstanceFile f;
    try {
      f = read_instance_file(entry.path().string());
    } catch (const Error&) {
      continue;
    }
    if (!f.instance.values || !f.matching) continue;
    SCOPED_TRACE(entry.path().filename().string());
    const std::string path = entry.path().string();
    const CliRun brute = run_cli({"bribe", "--mode", "brute", path});
    const CliRun approx = run_cli({"bribe", "--mode", "approx", path});
    EXPECT_EQ(brute.code, approx.code);
    if (brute.code != 0) continue;
    const double opt = std::stod(*report_value(brute.out, "cost"));
    EXPECT_LE(std::stod(*report_value(approx.out, "cost")), 2 * opt + 1e-6);
    if (f.instance.graph.bipartition()) {
      const CliRun exact = run_cli({"bribe", "--mode", "exact-bipartite", path});
      EXPECT_NEAR(std::stod(*report_value(exact.out, "cost")), opt, 1e-6);
    }
    ++compared;
  }
  EXPECT_GE(compared, 8);
}

TEST(Cli, ExtendAnswers) {
  EXPECT_EQ(run_cli({"extend", fixture("path_yes.sf")}).code, 0);
  auto r = run_cli({"extend", fixture("path_no.sf")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(report_value(r.out, "status"), "no extension");
  EXPECT_EQ(run_cli({"extend", "--lower-bounds", fixture("path_lb.sf")}).code, 1);
  EXPECT_EQ(run_cli({"extend", fixture("path_lb.sf")}).code, 0);
}

TEST(Cli, JsonReport) {
  auto r = run_cli({"--json", "bribe", "--mode", "approx", fixture("weighted.sf")});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verb"], "bribe");
  EXPECT_EQ(j["status"], "solved");
  EXPECT_DOUBLE_EQ(j["cost"].get<double>(), 3.0);
  EXPECT_TRUE(j["change"].is_array());
  EXPECT_TRUE(j["instance"].is_string());
  // Flag accepted after the verb as well.
  auto k = run_cli({"bribe", "--json", "--mode", "approx", fixture("weighted.sf")});
  EXPECT_EQ(k.out, r.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"partition"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"partition", fixture("missing.sf")}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"partition", fixture("path_values.sf")}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"oracle", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(run_cli({"delete-subset", fixture("odd_ring.sf"), "--cap", "2"}).code,
            cli::kExitUsage);
  auto help = run_cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("strat-extend"), std::string::npos);
  auto bad = run_cli({"check", fixture("bad_rank.sf")});
  EXPECT_NE(bad.err.find("line 24, column 5"), std::string::npos);
}

TEST(Cli, SweepFindsNoMismatch) {
  auto r = run_cli({"oracle", "sweep", "--seed", "3", "--count", "30"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(report_value(r.out, "mismatches"), "0");
}

}  // namespace
}  // namespace stablefix
