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

// Deterministic generators for connected test graphs.
//
//   family            parameters             vertices
//   path              n >= 1                 0-1-...-(n-1)
//   cycle             n >= 3
//   complete          n >= 1
//   star              leaves >= 0            centre 0
//   caterpillar       spine >= 1, legs >= 0  spine first, then legs per spine vertex
//   spider            legs >= 0, len >= 1    centre 0, legs of len vertices each
//   random_tree       n >= 1                 uniform labelled tree (Prüfer)
//   random_connected  n >= 1, p in [0,100]   G(n, p%) resampled until connected
//   grid              rows >= 1, cols >= 1   row-major

#ifndef CPW_GENERATORS_HPP
#define CPW_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpw/errors.hpp"
#include "cpw/graph.hpp"

namespace cpw {

struct GeneratorSpec {
  std::string family;
  std::map<std::string, long> params;
  std::uint64_t rng_seed = 0;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct GeneratedGraph {
  EdgeList edges;
  /// Disconnected samples thrown away; only random_connected retries.
  std::size_t retries = 0;
};

/// "a=1,b=2" -> {a: 1, b: 2}. Throws BadSpec.
inline std::map<std::string, long> parse_params(const std::string& text) {
  std::map<std::string, long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw BadSpec("parameter '" + item + "' is not key=value");
    try {
      std::size_t used = 0;
      const long value = std::stol(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw BadSpec("parameter '" + item + "' is not an integer");
      out[item.substr(0, eq)] = value;
    } catch (const std::logic_error&) {
      throw BadSpec("parameter '" + item + "' is not an integer");
    }
  }
  return out;
}

inline std::string format_params(const std::map<std::string, long>& params) {
  std::string out;
  for (auto& [key, value] : params) {
    if (!out.empty()) out += ',';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

namespace detail {

inline long param(const GeneratorSpec& spec, const std::string& key, long lo, long hi) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw BadSpec(spec.family + " needs parameter '" + key + "'");
  if (it->second < lo || it->second > hi)
    throw BadSpec(spec.family + ": " + key + "=" + std::to_string(it->second) + " outside [" +
                  std::to_string(lo) + "," + std::to_string(hi) + "]");
  return it->second;
}

inline void only_params(const GeneratorSpec& spec, std::initializer_list<const char*> allowed) {
  for (auto& [key, value] : spec.params) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw BadSpec(spec.family + " has no parameter '" + key + "'");
  }
}

inline void add_edge(EdgeList& list, std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  list.edges.emplace_back(u, v);
}

inline EdgeList prufer_tree(std::size_t n, std::mt19937_64& rng) {
  EdgeList out{n, {}};
  if (n <= 1) return out;
  if (n == 2) {
    add_edge(out, 0, 1);
    return out;
  }
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    add_edge(out, leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::size_t a = n, b = n;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) (a == n ? a : b) = v;
  add_edge(out, a, b);
  return out;
}

}  // namespace detail

/// Maximum vertex count any generator produces.
inline constexpr long kMaxGeneratedVertices = 256;

/// Same spec, same graph. Throws BadSpec on unknown families, missing or
/// unknown parameters and out-of-range values.
inline GeneratedGraph generate(const GeneratorSpec& spec) {
  using detail::add_edge;
  using detail::param;
  const long cap = kMaxGeneratedVertices;
  std::mt19937_64 rng(spec.rng_seed);
  GeneratedGraph out;
  EdgeList& g = out.edges;
  const std::string& f = spec.family;
  if (f == "path") {
    detail::only_params(spec, {"n"});
    g.n = static_cast<std::size_t>(param(spec, "n", 1, cap));
    for (std::size_t v = 1; v < g.n; ++v) add_edge(g, v - 1, v);
  } else if (f == "cycle") {
    detail::only_params(spec, {"n"});
    g.n = static_cast<std::size_t>(param(spec, "n", 3, cap));
    for (std::size_t v = 0; v < g.n; ++v) add_edge(g, v, (v + 1) % g.n);
  } else if (f == "complete") {
    detail::only_params(spec, {"n"});
    g.n = static_cast<std::size_t>(param(spec, "n", 1, cap));
    for (std::size_t u = 0; u < g.n; ++u)
      for (std::size_t v = u + 1; v < g.n; ++v) add_edge(g, u, v);
  } else if (f == "star") {
    detail::only_params(spec, {"leaves"});
    g.n = static_cast<std::size_t>(param(spec, "leaves", 0, cap - 1)) + 1;
    for (std::size_t v = 1; v < g.n; ++v) add_edge(g, 0, v);
  } else if (f == "caterpillar") {
    detail::only_params(spec, {"spine", "legs"});
    const auto spine = static_cast<std::size_t>(param(spec, "spine", 1, cap));
    const auto legs = static_cast<std::size_t>(param(spec, "legs", 0, cap));
    if (spine * (legs + 1) > static_cast<std::size_t>(cap)) throw BadSpec("caterpillar too large");
    g.n = spine * (legs + 1);
    for (std::size_t s = 1; s < spine; ++s) add_edge(g, s - 1, s);
    std::size_t next = spine;
    for (std::size_t s = 0; s < spine; ++s)
      for (std::size_t l = 0; l < legs; ++l) add_edge(g, s, next++);
  } else if (f == "spider") {
    detail::only_params(spec, {"legs", "len"});
    const auto legs = static_cast<std::size_t>(param(spec, "legs", 0, cap));
    const auto len = static_cast<std::size_t>(param(spec, "len", 1, cap));
    if (legs * len + 1 > static_cast<std::size_t>(cap)) throw BadSpec("spider too large");
    g.n = legs * len + 1;
    std::size_t next = 1;
    for (std::size_t l = 0; l < legs; ++l) {
      std::size_t prev = 0;
      for (std::size_t i = 0; i < len; ++i) {
        add_edge(g, prev, next);
        prev = next++;
      }
    }
  } else if (f == "random_tree") {
    detail::only_params(spec, {"n"});
    g = detail::prufer_tree(static_cast<std::size_t>(param(spec, "n", 1, cap)), rng);
  } else if (f == "random_connected") {
    detail::only_params(spec, {"n", "p"});
    const auto n = static_cast<std::size_t>(param(spec, "n", 1, cap));
    const long p = param(spec, "p", 0, 100);
    if (n > 1 && p == 0) throw BadSpec("random_connected with p=0 is never connected");
    constexpr std::size_t kMaxRetries = 100000;
    for (;; ++out.retries) {
      if (out.retries == kMaxRetries) throw BadSpec("random_connected: no connected sample");
      g = EdgeList{n, {}};
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (std::uniform_int_distribution<long>(0, 99)(rng) < p) add_edge(g, u, v);
      if (n <= BasicGraph<4>::kMaxVertices && is_connected(BasicGraph<4>(g))) break;
    }
  } else if (f == "grid") {
    detail::only_params(spec, {"rows", "cols"});
    const auto rows = static_cast<std::size_t>(param(spec, "rows", 1, cap));
    const auto cols = static_cast<std::size_t>(param(spec, "cols", 1, cap));
    if (rows * cols > static_cast<std::size_t>(cap)) throw BadSpec("grid too large");
    g.n = rows * cols;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        if (c + 1 < cols) add_edge(g, r * cols + c, r * cols + c + 1);
        if (r + 1 < rows) add_edge(g, r * cols + c, (r + 1) * cols + c);
      }
  } else {
    throw BadSpec("unknown family '" + f + "'");
  }
  return out;
}

inline std::vector<std::string> generator_families() {
  return {"path", "cycle", "complete", "star", "caterpillar", "spider", "random_tree", "random_connected", "grid"};
}

}  // namespace cpw

#endif  // CPW_GENERATORS_HPP
