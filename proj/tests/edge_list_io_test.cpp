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

#include "cpw/edge_list_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "cpw/generators.hpp"

namespace cpw {
namespace {

TEST(EdgeListIo, ParsesWithComments) {
  const auto list = parse_edge_list("# a path\n3 2\n0 1  # first\n1 2\n");
  EXPECT_EQ(list, (EdgeList{3, {{0, 1}, {1, 2}}}));
}

TEST(EdgeListIo, EmptyGraphs) {
  EXPECT_EQ(parse_edge_list("0 0\n"), (EdgeList{0, {}}));
  EXPECT_EQ(parse_edge_list("1 0"), (EdgeList{1, {}}));
}

TEST(EdgeListIo, RejectsBadInput) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 -1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1 2\n"), ParseError);
}

TEST(EdgeListIo, ErrorsNameTheLine) {
  try {
    parse_edge_list("3 2\n0 1\n2 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(EdgeListIo, WriterSortsAndNormalises) {
  EXPECT_EQ(format_edge_list(EdgeList{3, {{2, 1}, {0, 1}}}), "3 2\n0 1\n1 2\n");
}

TEST(EdgeListIo, GenerateSerializeParseRoundTrip) {
  for (const auto& family : generator_families()) {
    GeneratorSpec spec{family, {}, 42};
    if (family == "star") spec.params = {{"leaves", 6}};
    else if (family == "caterpillar") spec.params = {{"spine", 3}, {"legs", 2}};
    else if (family == "spider") spec.params = {{"legs", 3}, {"len", 2}};
    else if (family == "random_connected") spec.params = {{"n", 9}, {"p", 40}};
    else if (family == "grid") spec.params = {{"rows", 3}, {"cols", 4}};
    else spec.params = {{"n", 7}};
    const auto original = generate(spec).edges;
    const auto parsed = parse_edge_list(format_edge_list(original));
    EXPECT_EQ(Graph(parsed), Graph(original)) << family;
  }
}

}  // namespace
}  // namespace cpw
