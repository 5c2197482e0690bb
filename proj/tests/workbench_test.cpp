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

#include "cpw/workbench.hpp"

#include <gtest/gtest.h>

namespace cpw {
namespace {

Graph make(const GeneratorSpec& spec) { return Graph(generate(spec).edges); }

TEST(Workbench, DefaultCorpusPasses) {
  const auto corpus = default_corpus(6);
  const auto report = run_suite(corpus, 6);
  ASSERT_EQ(report.graphs.size(), corpus.size());
  for (auto& g : report.graphs) {
    EXPECT_TRUE(g.ok()) << g.spec.family << " " << format_params(g.spec.params) << ": " << g.error;
    for (auto& c : g.checks) EXPECT_TRUE(c.outcome.passed) << g.spec.family << " " << c.name << ": " << c.outcome.detail;
  }
  EXPECT_TRUE(report.ok());
  const json j = to_json_value(report, false);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["graphs_total"].get<std::size_t>(), corpus.size());
  EXPECT_EQ(j["summary"]["oracle_agreement"]["failed"].get<std::size_t>(), 0u);
}

TEST(Workbench, ThreadsGiveTheSameReport) {
  const auto corpus = default_corpus(5, 7);
  SuiteOptions many;
  many.threads = 4;
  EXPECT_EQ(to_json_value(run_suite(corpus, 5), false), to_json_value(run_suite(corpus, 5, many), false));
}

TEST(Workbench, MutantIsCaught) {
  SuiteOptions options;
  options.solver.jump_budget_offset = -1;
  const auto report = run_suite({{"spider", {{"legs", 10}, {"len", 1}}, 0}}, 11, options);
  ASSERT_EQ(report.graphs.size(), 1u);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.graphs[0].checks[0].outcome.passed);
  EXPECT_TRUE(run_suite({{"spider", {{"legs", 10}, {"len", 1}}, 0}}, 11).ok());
}

TEST(Workbench, EmptyCorpus) {
  const auto report = run_suite({}, 6);
  EXPECT_TRUE(report.graphs.empty());
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(to_json_value(report, true)["graphs_total"].get<std::size_t>(), 0u);
}

TEST(Workbench, OversizedAndBadSpecsAreReported) {
  const auto report = run_suite({{"path", {{"n", 9}}, 0}, {"path", {{"n", 0}}, 0}}, 8);
  ASSERT_EQ(report.graphs.size(), 2u);
  EXPECT_FALSE(report.graphs[0].error.empty());
  EXPECT_FALSE(report.graphs[1].error.empty());
  EXPECT_EQ(report.failed_graphs(), 2u);
}

TEST(Workbench, BagSubsets) {
  const Graph g = make({"path", {{"n", 3}}, 0});
  const PathDecomposition p{{{0, 1}, {1, 2}}};
  EXPECT_EQ(bag_subsets(g, p), (std::vector<VertexSet>{{0}, {1}, {2}, {0, 1}, {1, 2}}));
}

TEST(Workbench, WitnessProblems) {
  const Graph g = make({"path", {{"n", 3}}, 0});
  EXPECT_FALSE(witness_problem(g, PathDecomposition{{{0}, {0, 1}, {1, 2}}}, 0, 2));
  EXPECT_TRUE(witness_problem(g, PathDecomposition{{{0}, {0, 1}, {1, 2}}}, 1, 2));
  EXPECT_TRUE(witness_problem(g, PathDecomposition{{{0}, {0, 1}, {1, 2}}}, 0, 1));
  EXPECT_TRUE(witness_problem(g, PathDecomposition{{{0}, {2}, {0, 1}, {1, 2}}}, 0, 2));
  EXPECT_TRUE(witness_problem(g, PathDecomposition{{{0}, {0, 1}}}, 0, 2));
}

TEST(Workbench, DecompositionChecksOnAStar) {
  const auto dc = decomposition_checks(make({"star", {{"leaves", 7}}, 0}), 2);
  EXPECT_TRUE(dc.transform.passed) << dc.transform.detail;
  EXPECT_TRUE(dc.branch_bound.passed) << dc.branch_bound.detail;
  EXPECT_TRUE(dc.structure_all.passed) << dc.structure_all.detail;
  EXPECT_GT(dc.transform.cases, 0u);
  EXPECT_GT(dc.structure_all.cases, 0u);
}

TEST(Workbench, Bench) {
  const std::string csv = run_bench({{"path", {{"n", 4}}, 0}, {"cycle", {{"n", 5}}, 0}}, {2, 3});
  std::vector<std::string> lines;
  std::stringstream in(csv);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "family,params,seed,n,m,k,decision,states,sub_states,recursive_calls,millis");
  EXPECT_EQ(lines[1].rfind("path,\"n=4\",0,4,3,2,1,", 0), 0u) << lines[1];
  EXPECT_EQ(lines[3].rfind("cycle,\"n=5\",0,5,5,2,0,", 0), 0u) << lines[3];
  EXPECT_EQ(lines[4].rfind("cycle,\"n=5\",0,5,5,3,1,", 0), 0u) << lines[4];
}

}  // namespace
}  // namespace cpw
