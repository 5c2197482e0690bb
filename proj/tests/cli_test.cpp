// Copyright 2026 The cpw Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cpw::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(CPW_TEST_TMPDIR) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::create_directories(dir_);
  }

  std::string file(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kK5 = "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const char* kC5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
const char* kP3 = "3 2\n0 1\n1 2\n";

TEST_F(Cli, ComputeCompleteGraph) {
  const auto r = run({"compute", "--graph", file("k5.txt", kK5)});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["cpw"], 4);
  EXPECT_EQ(j["decomposition"]["bags"].back().size(), 5u);
  EXPECT_EQ(j["attempts"].size(), 4u);
}

TEST_F(Cli, Decide) {
  const auto c5 = file("c5.txt", kC5);
  auto r = run({"decide", "--graph", c5, "--k", "2"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_FALSE(json::parse(r.out)["decision"].get<bool>());
  r = run({"decide", "--graph", c5, "--k", "3", "--seed", "2"});
  ASSERT_EQ(r.code, kOk);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["decision"].get<bool>());
  EXPECT_EQ(j["seeds"], json::array({2}));
  EXPECT_EQ(j["decomposition"]["bags"][0], json::array({2}));
  EXPECT_EQ(j["witness"][0]["kind"], "init");
  EXPECT_EQ(run({"decide", "--graph", c5, "--k", "3", "--strict-step"}).code, kOk);
}

TEST_F(Cli, Verify) {
  const auto g = file("p3.txt", kP3);
  auto r = run({"verify", "--graph", g, "--dec", file("good.json", R"({"bags": [[0], [0, 1], [1, 2]]})")});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["connected"].get<bool>());
  EXPECT_EQ(j["width"], 1);

  r = run({"verify", "--graph", g, "--dec", file("broken.json", R"({"bags": [[0, 1], [2]]})")});
  EXPECT_EQ(r.code, kNegative);
  j = json::parse(r.out);
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_FALSE(j["covers_edges"].get<bool>());

  const auto gapped = file("gap.json", R"({"bags": [[0, 1], [1, 2], [0]]})");
  r = run({"verify", "--graph", g, "--dec", gapped});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_FALSE(json::parse(r.out)["contiguous"].get<bool>());

  r = run({"verify", "--graph", g, "--dec", file("far.json", R"({"bags": [[2], [1, 2], [0, 1]]})"), "--seeds", "0"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_FALSE(json::parse(r.out)["seed_connected"].get<bool>());

  EXPECT_EQ(run({"verify", "--graph", g, "--dec", file("junk.json", "{\"bags\": 3}")}).code, kUsage);
}

TEST_F(Cli, Transform) {
  std::string star = "6 5\n";
  for (int v = 1; v <= 5; ++v) star += "0 " + std::to_string(v) + "\n";
  const auto g = file("star.txt", star);
  const auto dec = file("star.json", R"({"bags": [[1], [0, 1], [0, 2], [0, 3], [0, 4], [0, 5]]})");
  auto r = run({"transform", "--graph", g, "--dec", dec, "--k", "2", "--set", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["report"]["valid"].get<bool>());
  EXPECT_TRUE(j["report"]["structured"][0]["structured"].get<bool>());
  EXPECT_EQ(j["report"]["length_before"], 6);
  EXPECT_EQ(j["report"]["length_after"].get<std::size_t>(), 6u + j["plan"]["d"].get<std::size_t>() + 1);
  r = run({"transform", "--graph", g, "--dec", dec, "--k", "2", "--all"});
  ASSERT_EQ(r.code, kOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["report"]["structured"].size(), 1u);

  EXPECT_EQ(run({"transform", "--graph", g, "--dec", dec, "--k", "2"}).code, kUsage);
  EXPECT_EQ(run({"transform", "--graph", g, "--dec", file("bad.json", R"({"bags": [[0]]})"), "--k", "2", "--set", "0"}).code,
            kNegative);
}

TEST_F(Cli, Oracle) {
  const auto c5 = file("c5.txt", kC5);
  auto r = run({"oracle", "--graph", c5});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(json::parse(r.out)["cpw"], 2);
  r = run({"oracle", "--graph", c5, "--pw"});
  EXPECT_EQ(json::parse(r.out)["pw"], 2);
  EXPECT_EQ(run({"oracle", "--graph", c5, "--k", "2"}).code, kNegative);
  r = run({"oracle", "--graph", c5, "--k", "3", "--seeds", "1"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(json::parse(r.out)["decomposition"]["bags"][0], json::array({1}));
  EXPECT_EQ(run({"oracle", "--graph", c5, "--cap", "4"}).code, kResourceCap);
}

TEST_F(Cli, GenRoundTrip) {
  const auto out = path("cat.txt");
  ASSERT_EQ(run({"gen", "--family", "caterpillar", "--params", "spine=3,legs=1", "--out", out}).code, kOk);
  const auto r = run({"compute", "--graph", out});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(json::parse(r.out)["cpw"], 1);
  const auto printed = run({"gen", "--family", "path", "--params", "n=3"});
  EXPECT_EQ(printed.out, kP3);
  EXPECT_EQ(run({"gen", "--family", "nope"}).code, kUsage);
}

TEST_F(Cli, Suite) {
  const auto report = path("report.json");
  auto r = run({"suite", "--max-n", "4", "--report", report, "--threads", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(json::parse(r.out)["ok"].get<bool>());
  std::ifstream in(report);
  const auto full = json::parse(in);
  EXPECT_GT(full["graphs"].size(), 10u);
  r = run({"suite", "--max-n", "4"});
  EXPECT_EQ(json::parse(r.out), full);
}

TEST_F(Cli, SuiteCatchesMutant) {
  EXPECT_EQ(run({"suite", "--max-n", "11", "--mutant-offset", "-1"}).code, kNegative);
}

TEST_F(Cli, Bench) {
  const auto r = run({"bench", "--family", "cycle", "--params", "n=5", "--k", "2,3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(run({"bench", "--family", "cycle", "--params", "n=5", "--k", ""}).code, kUsage);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"decide", "--graph", file("c5.txt", kC5)}).code, kUsage);
  EXPECT_EQ(run({"compute", "--graph", path("missing.txt")}).code, kUsage);
  EXPECT_EQ(run({"compute", "--graph", file("bad.txt", "3 1\n0 5\n")}).code, kUsage);
  EXPECT_EQ(run({"compute", "--graph", file("split.txt", "3 1\n0 1\n")}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST_F(Cli, StateCap) {
  const auto k5 = file("k5.txt", kK5);
  const auto r = run({"--max-states", "1", "compute", "--graph", k5});
  EXPECT_EQ(r.code, kResourceCap);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace cpw::cli
