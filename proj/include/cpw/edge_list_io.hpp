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

// Edge-list text format:
//
//   n m
//   u v      (m lines, 0 <= u < v < n)
//
// Tokens are whitespace separated; everything after '#' on a line is ignored.

#ifndef CPW_EDGE_LIST_IO_HPP
#define CPW_EDGE_LIST_IO_HPP

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cpw/errors.hpp"
#include "cpw/graph.hpp"

namespace cpw {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t line;
};

inline std::vector<Token> tokenize(const std::string& source) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < source.size()) {
    const char c = source[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < source.size() && source[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < source.size() && source[i] != '#' && source[i] != '\n' && source[i] != ' ' &&
             source[i] != '\t' && source[i] != '\r')
        ++i;
      out.push_back({std::string_view(source).substr(start, i - start), line});
    }
  }
  return out;
}

inline std::size_t to_count(const Token& t) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("line " + std::to_string(t.line) + ": expected a non-negative integer, got '" +
                     std::string(t.text) + "'");
  return value;
}

}  // namespace detail

inline EdgeList parse_edge_list(const std::string& text) {
  const auto tokens = detail::tokenize(text);
  if (tokens.size() < 2) throw ParseError("missing header 'n m'");
  EdgeList out;
  out.n = detail::to_count(tokens[0]);
  const std::size_t m = detail::to_count(tokens[1]);
  if (tokens.size() != 2 + 2 * m)
    throw ParseError("header announces " + std::to_string(m) + " edges but found " +
                     std::to_string((tokens.size() - 2) / 2) +
                     ((tokens.size() - 2) % 2 ? " and a dangling token" : ""));
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& tu = tokens[2 + 2 * e];
    const auto& tv = tokens[3 + 2 * e];
    const Vertex u = detail::to_count(tu);
    const Vertex v = detail::to_count(tv);
    if (!(u < v && v < out.n))
      throw ParseError("line " + std::to_string(tu.line) + ": edge must satisfy 0 <= u < v < n");
    if (!seen.emplace(u, v).second)
      throw ParseError("line " + std::to_string(tu.line) + ": repeated edge");
    out.edges.emplace_back(u, v);
  }
  return out;
}

inline EdgeList read_edge_list(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

inline EdgeList read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_edge_list(in);
}

/// Writes edges sorted, each as "u v" with u < v.
inline void write_edge_list(std::ostream& out, EdgeList list) {
  for (auto& [u, v] : list.edges)
    if (u > v) std::swap(u, v);
  std::sort(list.edges.begin(), list.edges.end());
  out << list.n << ' ' << list.edges.size() << '\n';
  for (auto [u, v] : list.edges) out << u << ' ' << v << '\n';
}

inline std::string format_edge_list(const EdgeList& list) {
  std::ostringstream out;
  write_edge_list(out, list);
  return out.str();
}

}  // namespace cpw

#endif  // CPW_EDGE_LIST_IO_HPP
