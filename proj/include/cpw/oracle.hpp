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

// Brute-force reference deciders. Connected pathwidth is decided as a
// monotone node search: a configuration is the covered set C together with
// the guarded bag B, a move places a guard on a seed or on a neighbour of C,
// and a guard may leave once all its neighbours are covered. Ordinary
// pathwidth is computed as vertex separation by a DP over subsets.

#ifndef CPW_ORACLE_HPP
#define CPW_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpw/decomposition.hpp"
#include "cpw/errors.hpp"
#include "cpw/graph.hpp"

namespace cpw {

struct OracleOptions {
  /// Largest graph the oracle accepts.
  std::size_t max_vertices = 20;
};

namespace detail {

template <std::size_t Words>
struct SearchConfiguration {
  BasicVertexSet<Words> covered;
  BasicVertexSet<Words> bag;
  friend bool operator==(const SearchConfiguration&, const SearchConfiguration&) = default;
};

template <std::size_t Words>
struct SearchConfigurationHash {
  std::size_t operator()(const SearchConfiguration<Words>& c) const {
    return c.covered.hash() * 31 + c.bag.hash();
  }
};

inline void check_cap(std::size_t n, const OracleOptions& options) {
  if (n > options.max_vertices)
    throw CapExceeded("oracle refuses graphs with " + std::to_string(n) + " vertices (cap " +
                      std::to_string(options.max_vertices) + ")");
}

/// BFS over search configurations. The first guard goes on a vertex of
/// `start`; later guards go on `seeds` or on neighbours of the covered set.
/// Returns the bag sequence of a shortest winning search, if one exists.
template <std::size_t Words>
std::optional<BasicPathDecomposition<Words>> node_search(const BasicGraph<Words>& g,
                                                         const BasicVertexSet<Words>& start,
                                                         const BasicVertexSet<Words>& seeds,
                                                         std::size_t budget) {
  using Set = BasicVertexSet<Words>;
  using Config = SearchConfiguration<Words>;
  const Set all = g.vertices();
  if (budget == 0 || all.empty()) return std::nullopt;

  struct Parent {
    Config from;
    Set emitted;
  };
  std::unordered_map<Config, Parent, SearchConfigurationHash<Words>> parent;
  std::deque<Config> queue;
  const Config origin{};
  parent.emplace(origin, Parent{origin, {}});
  queue.push_back(origin);

  auto replay = [&](Config at) {
    BasicPathDecomposition<Words> out;
    while (!(at == origin)) {
      const auto& link = parent.at(at);
      out.bags.push_back(link.emitted);
      at = link.from;
    }
    std::reverse(out.bags.begin(), out.bags.end());
    return out;
  };

  while (!queue.empty()) {
    const Config c = queue.front();
    queue.pop_front();
    if (c.bag.size() + 1 > budget) continue;
    const Set candidates = c.covered.empty() ? start : ((seeds | neighborhood(g, c.covered)) - c.covered);
    for (Vertex v : candidates) {
      Config next{c.covered, c.bag};
      next.covered.insert(v);
      next.bag.insert(v);
      const Set emitted = next.bag;
      // A guard whose neighbours are all covered is never needed again.
      for (Vertex b : emitted)
        if (g.neighbors(b).is_subset_of(next.covered)) next.bag.erase(b);
      if (parent.contains(next)) continue;
      parent.emplace(next, Parent{c, emitted});
      if (next.covered == all) return replay(next);
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// True iff G has an I-connected path decomposition with bags of size at
/// most `bag_budget` whose first bag is a single seed.
template <std::size_t Words>
bool oracle_decide(const BasicGraph<Words>& g, const BasicVertexSet<Words>& seeds, std::size_t bag_budget,
                   const OracleOptions& options = {}) {
  detail::check_cap(g.order(), options);
  return detail::node_search(g, seeds, seeds, bag_budget).has_value();
}

/// The decomposition found by oracle_decide; one bag per guard placement.
template <std::size_t Words>
BasicPathDecomposition<Words> oracle_decomposition(const BasicGraph<Words>& g, const BasicVertexSet<Words>& seeds,
                                                   std::size_t bag_budget, const OracleOptions& options = {}) {
  detail::check_cap(g.order(), options);
  auto found = detail::node_search(g, seeds, seeds, bag_budget);
  if (!found) throw Infeasible();
  return std::move(*found);
}

/// Connected search from any single starting vertex.
template <std::size_t Words>
std::optional<BasicPathDecomposition<Words>> oracle_connected_decomposition(const BasicGraph<Words>& g,
                                                                            std::size_t bag_budget,
                                                                            const OracleOptions& options = {}) {
  detail::check_cap(g.order(), options);
  return detail::node_search(g, g.vertices(), BasicVertexSet<Words>{}, bag_budget);
}

template <std::size_t Words>
std::size_t oracle_cpw(const BasicGraph<Words>& g, const OracleOptions& options = {}) {
  detail::check_cap(g.order(), options);
  if (g.order() == 0 || !is_connected(g)) throw DisconnectedGraph();
  for (std::size_t k = 1;; ++k)
    if (detail::node_search(g, g.vertices(), BasicVertexSet<Words>{}, k)) return k - 1;
}

/// Exact pathwidth as vertex separation:
/// f(S) = max(|∂S|, min over v in S of f(S - v)), pathwidth = f(V).
template <std::size_t Words>
std::size_t oracle_pathwidth(const BasicGraph<Words>& g, const OracleOptions& options = {}) {
  detail::check_cap(g.order(), options);
  const std::size_t n = g.order();
  if (n > 30) throw CapExceeded("subset DP is limited to 30 vertices");
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) adj[u] |= std::uint32_t{1} << v;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint8_t boundary = 0;
    std::uint8_t best = 0xff;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (adj[v] & ~s & full) ++boundary;
      const std::uint8_t sub = f[s & ~(std::uint32_t{1} << v)];
      if (sub < best) best = sub;
    }
    f[s] = std::max(boundary, best);
    if (s == full) break;
  }
  return f[full];
}

}  // namespace cpw

#endif  // CPW_ORACLE_HPP
