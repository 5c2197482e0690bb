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

#include "cpw/generators.hpp"

#include <gtest/gtest.h>

#include "cpw/oracle.hpp"
#include "cpw/solver.hpp"

namespace cpw {
namespace {

Graph make(const GeneratorSpec& spec) { return Graph(generate(spec).edges); }

TEST(Generators, Sizes) {
  EXPECT_EQ(make({"path", {{"n", 5}}, 0}).size(), 4u);
  EXPECT_EQ(make({"cycle", {{"n", 5}}, 0}).size(), 5u);
  EXPECT_EQ(make({"complete", {{"n", 5}}, 0}).size(), 10u);
  EXPECT_EQ(make({"star", {{"leaves", 0}}, 0}).order(), 1u);
  EXPECT_EQ(make({"grid", {{"rows", 3}, {"cols", 4}}, 0}).size(), 17u);
  const Graph c = make({"caterpillar", {{"spine", 4}, {"legs", 1}}, 0});
  EXPECT_EQ(c.order(), 8u);
  EXPECT_EQ(c.size(), 7u);
  EXPECT_EQ(make({"spider", {{"legs", 3}, {"len", 4}}, 0}).order(), 13u);
}

TEST(Generators, EveryFamilyIsConnected) {
  const std::map<std::string, std::map<std::string, long>> params{
      {"path", {{"n", 7}}},
      {"cycle", {{"n", 7}}},
      {"complete", {{"n", 7}}},
      {"star", {{"leaves", 6}}},
      {"caterpillar", {{"spine", 3}, {"legs", 2}}},
      {"spider", {{"legs", 3}, {"len", 2}}},
      {"random_tree", {{"n", 9}}},
      {"random_connected", {{"n", 9}, {"p", 25}}},
      {"grid", {{"rows", 2}, {"cols", 5}}}};
  for (auto& family : generator_families()) {
    ASSERT_TRUE(params.contains(family)) << family;
    for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_TRUE(is_connected(make({family, params.at(family), seed})));
  }
}

TEST(Generators, KnownWidths) {
  EXPECT_EQ(compute_cpw(make({"caterpillar", {{"spine", 4}, {"legs", 1}}, 0})).cpw, 1u);
  EXPECT_EQ(compute_cpw(make({"complete", {{"n", 5}}, 0})).cpw, 4u);
  EXPECT_EQ(oracle_cpw(make({"grid", {{"rows", 2}, {"cols", 4}}, 0})), 2u);
}

TEST(Generators, SpiderCentreIsABottleneck) {
  const Graph g = make({"spider", {{"legs", 7}, {"len", 1}}, 0});
  EXPECT_TRUE(is_bottleneck(g, VertexSet{0}, 3));
  EXPECT_EQ(enumerate_bottlenecks(g, g.vertices(), 3), std::vector<VertexSet>{VertexSet{0}});
}

TEST(Generators, Deterministic) {
  for (auto& family : {"random_tree", "random_connected"}) {
    const GeneratorSpec spec{family, family == std::string("random_tree") ? std::map<std::string, long>{{"n", 12}}
                                                                          : std::map<std::string, long>{{"n", 12}, {"p", 30}},
                             42};
    const auto a = generate(spec);
    const auto b = generate(spec);
    EXPECT_EQ(a.edges.edges, b.edges.edges);
    EXPECT_EQ(a.retries, b.retries);
    GeneratorSpec other = spec;
    other.rng_seed = 43;
    EXPECT_NE(generate(other).edges.edges, a.edges.edges);
  }
}

TEST(Generators, RandomTreesAreTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = make({"random_tree", {{"n", 15}}, seed});
    EXPECT_EQ(g.size(), 14u);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(Generators, Retries) {
  EXPECT_EQ(generate({"random_connected", {{"n", 8}, {"p", 100}}, 0}).retries, 0u);
  std::size_t total = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) total += generate({"random_connected", {{"n", 10}, {"p", 15}}, seed}).retries;
  EXPECT_GT(total, 0u);
}

TEST(Generators, BadSpecs) {
  EXPECT_THROW(generate({"hypercube", {{"n", 3}}, 0}), BadSpec);
  EXPECT_THROW(generate({"path", {}, 0}), BadSpec);
  EXPECT_THROW(generate({"path", {{"n", 0}}, 0}), BadSpec);
  EXPECT_THROW(generate({"path", {{"n", 3}, {"m", 1}}, 0}), BadSpec);
  EXPECT_THROW(generate({"cycle", {{"n", 2}}, 0}), BadSpec);
  EXPECT_THROW(generate({"random_connected", {{"n", 5}, {"p", 101}}, 0}), BadSpec);
  EXPECT_THROW(generate({"random_connected", {{"n", 5}, {"p", 0}}, 0}), BadSpec);
  EXPECT_THROW(generate({"grid", {{"rows", 20}, {"cols", 20}}, 0}), BadSpec);
  EXPECT_THROW(generate({"path", {{"n", kMaxGeneratedVertices + 1}}, 0}), BadSpec);
}

TEST(Generators, Params) {
  EXPECT_EQ(parse_params("a=1,b=-2"), (std::map<std::string, long>{{"a", 1}, {"b", -2}}));
  EXPECT_TRUE(parse_params("").empty());
  EXPECT_EQ(format_params({{"n", 5}, {"p", 30}}), "n=5,p=30");
  EXPECT_EQ(parse_params(format_params({{"n", 5}, {"p", 30}})), (std::map<std::string, long>{{"n", 5}, {"p", 30}}));
  EXPECT_THROW(parse_params("a"), BadSpec);
  EXPECT_THROW(parse_params("=3"), BadSpec);
  EXPECT_THROW(parse_params("a=x"), BadSpec);
  EXPECT_THROW(parse_params("a=3x"), BadSpec);
}

}  // namespace
}  // namespace cpw
