// Copyright 2026 The cardcut Authors.
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "cardcut.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(CARDCUT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(CARDCUT_DATA_DIR) + "/" + name; }

cardcut::json first_line(const CliRun& r) { return cardcut::json::parse(r.out.substr(0, r.out.find('\n'))); }

TEST(Cli, CheckProperReportsPatternCount) {
  const CliRun r = run("check-proper " + data("inst_b.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = first_line(r);
  EXPECT_EQ(j["delta_count"], 4);
  EXPECT_EQ(j["is_proper"], true);
  EXPECT_EQ(j["affine_rank"], 4);
}

TEST(Cli, DeltaListsPatternsInOrder) {
  const CliRun r = run("delta " + data("inst_a.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r)["patterns"], cardcut::json::parse("[[0,0],[1,0],[1,1]]"));
}

TEST(Cli, DecomposeOnePattern) {
  const CliRun r = run("decompose " + data("inst_b.json") + " --pattern 1,0,0");
  ASSERT_EQ(r.code, 0);
  const auto j = first_line(r);
  EXPECT_EQ(j["i_star"], cardcut::json::parse("[2]"));
  EXPECT_EQ(j["j0"], cardcut::json::parse("[1,2]"));
  EXPECT_EQ(j["blocks"], cardcut::json::parse(R"([{"block":[3,4],"i":2}])"));
}

TEST(Cli, NestedCutAtGivenPair) {
  const CliRun r = run("cuts nested " + data("inst_a.json") + " --p 1 --sprime 1,2,4,5 --family upper");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r)["text"], "z1 + z2 + z4 + z5 + d1 <= 3");
}

TEST(Cli, NestedDefaultIsReducedSystem) {
  const CliRun r = run("cuts nested " + data("inst_a.json"));
  ASSERT_EQ(r.code, 0);
  const auto inst = cardcut::parse_instance(R"({"n":5,"l":1,"u":3,"sets":[[1,2],[1,2,3]]})");
  const auto rows = cardcut::reduced_formulation(inst);
  std::string expected;
  for (const auto& e : rows) {
    auto j = cardcut::to_json(e);
    j["text"] = cardcut::format(e);
    expected += j.dump() + "\n";
  }
  EXPECT_EQ(r.out, expected);
}

TEST(Cli, GeneralCut) {
  const CliRun r = run("cuts general " + data("inst_b.json") + " --order [1,2] --sprime 1,2,3 --family upper");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r)["text"], "z1 + z2 + z3 + 2 d1 + d2 <= 3");
}

TEST(Cli, CompleteReportsNu) {
  const CliRun r = run("complete " + data("inst_a.json") + " --alpha 1,1,1,1,1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r)["nu"], cardcut::json::parse(R"(["3/1","3/1","2/1"])"));
}

TEST(Cli, SeparateInlinePoint) {
  const CliRun r = run("separate " + data("inst_a.json") +
                    " --family upper --point '{\"z\":[\"1/2\",\"1/2\",0,\"1/2\",\"1/2\"],\"delta\":[1,0]}'");
  ASSERT_EQ(r.code, 0);
  const auto j = first_line(r);
  EXPECT_EQ(j["found"], true);
}

TEST(Cli, SolveMatchesEnumeration) {
  const CliRun r = run("solve " + data("inst_a.json") + " --objective 1,1,1,1,1,0,0");
  ASSERT_EQ(r.code, 0);
  const auto j = first_line(r);
  EXPECT_EQ(j["method"], "cutting-plane");
  EXPECT_EQ(j["value"], "3/1");
  EXPECT_EQ(j["certificate_ok"], true);
}

TEST(Cli, SolveNonNestedUsesExtendedFormulation) {
  const CliRun r = run("solve " + data("inst_b.json") + " --objective 0,0,0,0,0,1,1,1");
  ASSERT_EQ(r.code, 0);
  const auto j = first_line(r);
  EXPECT_EQ(j["method"], "extended-formulation");
  EXPECT_EQ(j["value"], "3/1");
  EXPECT_EQ(j["certificate_ok"], true);
}

TEST(Cli, VerifyCompletenessPasses) {
  const CliRun r = run("verify completeness " + data("inst_a.json") + " --trials 100 --seed 7");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r)["discrepancies"].size(), 0u);
}

TEST(Cli, VerifyOtherKindsPass) {
  for (const char* kind : {"validity", "separation", "dimension", "facet"}) {
    EXPECT_EQ(run(std::string("verify ") + kind + " " + data("inst_a.json")).code, 0) << kind;
  }
}

TEST(Cli, VerifyRejectsInvalidInequality) {
  const CliRun r = run("verify validity " + data("inst_a.json") + " --inequality '{\"alpha\":{\"1\":1,\"2\":1},\"gamma\":1}'");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, BadInstanceExitsOne) {
  EXPECT_EQ(run("check-proper " + data("bad_bounds.json")).code, 1);
  EXPECT_EQ(run("check-proper " + data("missing.json")).code, 1);
  EXPECT_EQ(run("cuts nested " + data("inst_b.json")).code, 1);
}

TEST(Cli, UsageErrorsExit64) {
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("verify maybe " + data("inst_a.json")).code, 64);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, GuardEnvironmentIsHonored) {
  EXPECT_EQ(run("delta " + data("inst_a.json")).code, 0);
  const std::string cmd = "env CARDCUT_GUARD_N=3 " + std::string(CARDCUT_CLI) + " delta " + data("inst_a.json") + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "verify completeness " + data("inst_a.json") + " --trials 20 --seed 3";
  const CliRun a = run("extform " + data("inst_a.json"));
  const CliRun b = run("extform " + data("inst_a.json"));
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, StdinInstance) {
  const CliRun r = run("delta - < " + data("inst_b.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r)["count"], 4);
}

}  // namespace
