// Copyright 2026 The kdsm Authors.
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

#include "kdsm/cli.h"

#include <gtest/gtest.h>
#include <stdlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kdsm {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kdsm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return RunCli(args, out_, err_);
  }

  Json Out() const { return Json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

constexpr const char* kFullIndicator = R"({"n":3,"k":2,"values":["0","0","0","0","0","0","0","-1"]})";
constexpr const char* kPairIndicator = R"({"n":3,"k":2,"values":["0","0","0","-1","0","0","0","0"]})";
constexpr const char* kUniformRank = R"({"n":3,"k":2,"values":["0","1","1","2","1","2","2","2"]})";

TEST_F(CliTest, MinimizeFullIndicator) {
  ASSERT_EQ(Run({"minimize", "--instance", Write("f.json", kFullIndicator)}), kExitOk);
  const Json j = Out();
  EXPECT_EQ(j["min"], "-1");
  EXPECT_EQ(j["argmin"], Json::array({"a", "b", "c"}));
}

TEST_F(CliTest, CheckReportsViolation) {
  ASSERT_EQ(Run({"check", "--instance", Write("f.json", kPairIndicator), "--k", "2"}), kExitFailure);
  const Json j = Out();
  EXPECT_FALSE(j["holds"].get<bool>());
  EXPECT_EQ(j["violation"], Json::array({Json::array({"a", "b"}), Json::array({"c"})}));
}

TEST_F(CliTest, CheckHolds) {
  EXPECT_EQ(Run({"check", "--instance", Write("f.json", kUniformRank)}), kExitOk);
  EXPECT_TRUE(Out()["holds"].get<bool>());
}

TEST_F(CliTest, Bounds) {
  ASSERT_EQ(Run({"bounds", "--instance", Write("f.json", kUniformRank), "--k", "2"}), kExitOk);
  const Json j = Out();
  EXPECT_EQ(j["M"], "9");
  EXPECT_EQ(j["lower"], "-7");
  EXPECT_EQ(j["upper"], "9");
}

TEST_F(CliTest, MaximizeVerified) {
  const std::string f = Write("f.json", kUniformRank);
  const std::string w = Write("w.json", R"(["3","2","1"])");
  ASSERT_EQ(Run({"maximize", "--instance", f, "--weights", w, "--verify", "--json"}), kExitOk);
  const Json j = Out();
  EXPECT_EQ(j["value"], "5");
  EXPECT_EQ(j["x"], Json::array({"1", "1", "0"}));
  EXPECT_EQ(j["verified"], "feasible+optimal");
}

TEST_F(CliTest, Family) {
  ASSERT_EQ(Run({"family", "--n", "4", "--k", "3"}), kExitOk);
  EXPECT_EQ(Out()["size"], 14);
  EXPECT_EQ(Out()["bound"], 25);
}

TEST_F(CliTest, MatroidIntersection) {
  const std::string m1 = Write("m1.json", R"({"n":4,"r":2,"kind":"sparse_paving","forbidden":[[1,2]]})");
  const std::string m2 = Write("m2.json", R"({"n":4,"r":2,"kind":"sparse_paving","forbidden":[[3,4]]})");
  const std::string w = Write("w.json", "[1,1,1,1]");
  ASSERT_EQ(Run({"mi", "--m1", m1, "--m2", m2, "--weights", w, "--verify"}), kExitOk) << err_.str();
  EXPECT_EQ(Out()["weight"], "2");
}

TEST_F(CliTest, GenIsDeterministicAndLoadable) {
  ASSERT_EQ(Run({"gen", "cut", "--n", "6", "--k", "3", "--seed", "3"}), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(Run({"gen", "cut", "--n", "6", "--k", "3", "--seed", "3"}), kExitOk);
  EXPECT_EQ(out_.str(), first);
  const std::string path = Write("g.json", first);
  EXPECT_EQ(Run({"check", "--instance", path}), kExitOk);
}

TEST_F(CliTest, GenCliqueFromGraphFile) {
  const std::string g = Write("k7.txt", "7\n1 2\n1 3\n2 3\n4 5\n");
  ASSERT_EQ(Run({"gen", "clique", "--graph", g, "--k", "7"}), kExitOk);
  const std::string inst = Write("c.json", out_.str());
  ASSERT_EQ(Run({"minimize", "--instance", inst, "--verify"}), kExitOk);
  EXPECT_EQ(Out()["min"], "-1");
  EXPECT_EQ(Out()["argmin"], Json::array({"a", "b", "c"}));
}

TEST_F(CliTest, NoTimingIsByteStable) {
  const std::string f = Write("f.json", kFullIndicator);
  ASSERT_EQ(Run({"--no-timing", "minimize", "--instance", f}), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(Run({"minimize", "--instance", f, "--no-timing"}), kExitOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_FALSE(Out().contains("wall_ms"));
}

TEST_F(CliTest, BudgetFromEnvironment) {
  const std::string f = Write("f.json", kUniformRank);
  ::setenv(kBudgetEnvVar, "0", 1);
  EXPECT_EQ(Run({"minimize", "--instance", f}), kExitFailure);
  ::setenv(kBudgetEnvVar, "50", 1);
  EXPECT_EQ(Run({"minimize", "--instance", f}), kExitOk);
  ::unsetenv(kBudgetEnvVar);
  EXPECT_EQ(Out()["min"], "0");
}

TEST_F(CliTest, Errors) {
  EXPECT_EQ(Run({"minimize", "--instance", Write("bad.json", R"({"n":1,"k":2,"values":["0","0"]})")}),
            kExitFailure);
  EXPECT_EQ(Out()["kind"], "invalid_argument");
  EXPECT_EQ(Run({"minimize", "--instance",
                 Write("rat.json", R"({"n":2,"k":2,"values":["0","1","1/0","1"]})")}),
            kExitFailure);
  EXPECT_EQ(Out()["kind"], "malformed_rational");
  EXPECT_NE(Out()["error"].get<std::string>().find("mask 2"), std::string::npos);
  EXPECT_EQ(Run({"minimize"}), kExitFailure);
  EXPECT_EQ(Run({"frobnicate"}), kExitFailure);
  EXPECT_EQ(Run({"minimize", "--instance", (dir_ / "missing.json").string()}), kExitFailure);
}

TEST_F(CliTest, BenchEmitsScalingTable) {
  ASSERT_EQ(Run({"--no-timing", "bench", "--min-n", "4", "--max-n", "5", "--max-k", "3", "--threads", "2"}),
            kExitOk);
  const Json j = Out();
  EXPECT_FALSE(j["rows"].empty());
  EXPECT_FALSE(j["scaling"].empty());
  EXPECT_FALSE(j.contains("errors"));
}

// The installed binary, driven through a shell pipeline.
TEST(CliBinary, GenPipesIntoMinimize) {
  const fs::path dir = fs::temp_directory_path() / "kdsm_cli_binary";
  fs::create_directories(dir);
  const std::string inst = (dir / "i.json").string();
  const std::string cmd = std::string(KDSM_CLI_PATH) + " gen minrank --n 8 --k 4 --seed 5 > " + inst +
                          " && " + KDSM_CLI_PATH + " minimize --verify --instance " + inst + " > " +
                          (dir / "o.json").string();
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(dir / "o.json");
  const Json j = Json::parse(in);
  EXPECT_TRUE(j["verified"].get<bool>());
  fs::remove_all(dir);
}

}  // namespace
}  // namespace kdsm
