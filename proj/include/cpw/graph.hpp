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

#ifndef CPW_GRAPH_HPP
#define CPW_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cpw/errors.hpp"
#include "cpw/vertex_set.hpp"

namespace cpw {

/// Plain edge list; the width-independent exchange form of a graph.
struct EdgeList {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
template <std::size_t Words>
class BasicGraph {
 public:
  using Set = BasicVertexSet<Words>;
  static constexpr std::size_t kMaxVertices = Set::kCapacity;

  BasicGraph() = default;

  /// Throws InvalidGraph on self-loops, repeated edges or out-of-range ids.
  explicit BasicGraph(const EdgeList& list) : n_(list.n) {
    if (list.n > kMaxVertices)
      throw InvalidGraph("graph has " + std::to_string(list.n) + " vertices; capacity is " +
                         std::to_string(kMaxVertices));
    adjacency_.resize(n_);
    for (auto [u, v] : list.edges) {
      if (u >= n_ || v >= n_)
        throw InvalidGraph("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
      if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
      if (adjacency_[u].contains(v))
        throw InvalidGraph("repeated edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      adjacency_[u].insert(v);
      adjacency_[v].insert(u);
      ++m_;
    }
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  Set vertices() const { return Set::range(n_); }
  const Set& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  /// Edges as (u, v) with u < v, sorted.
  EdgeList edge_list() const {
    EdgeList out{n_, {}};
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.edges.emplace_back(u, v);
    return out;
  }

  /// The subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing
  /// id order, together with the original id of each new vertex.
  std::pair<BasicGraph, std::vector<Vertex>> induced(const Set& keep) const {
    std::vector<Vertex> original = keep.members();
    std::vector<Vertex> local(n_, kMaxVertices);
    for (std::size_t i = 0; i < original.size(); ++i) local[original[i]] = i;
    EdgeList list{original.size(), {}};
    for (std::size_t i = 0; i < original.size(); ++i)
      for (Vertex v : adjacency_[original[i]] & keep)
        if (original[i] < v) list.edges.emplace_back(i, local[v]);
    return {BasicGraph(list), std::move(original)};
  }

  friend bool operator==(const BasicGraph& a, const BasicGraph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Set> adjacency_;
};

using Graph = BasicGraph<1>;

/// N_G(Y): vertices outside y with a neighbour in y.
template <std::size_t Words>
BasicVertexSet<Words> neighborhood(const BasicGraph<Words>& g, const BasicVertexSet<Words>& y) {
  BasicVertexSet<Words> out;
  for (Vertex u : y) out |= g.neighbors(u);
  return out - y;
}

/// Vertices of `from` reachable from `start` inside G[from].
template <std::size_t Words>
BasicVertexSet<Words> reach(const BasicGraph<Words>& g, const BasicVertexSet<Words>& start,
                            const BasicVertexSet<Words>& from) {
  auto seen = start & from;
  auto frontier = seen;
  while (!frontier.empty()) {
    BasicVertexSet<Words> next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    next &= from;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of G[within], ordered by smallest member.
template <std::size_t Words>
std::vector<BasicVertexSet<Words>> components(const BasicGraph<Words>& g,
                                              const BasicVertexSet<Words>& within) {
  std::vector<BasicVertexSet<Words>> out;
  auto rest = within;
  while (!rest.empty()) {
    BasicVertexSet<Words> seed;
    seed.insert(rest.front());
    auto comp = reach(g, seed, rest);
    rest -= comp;
    out.push_back(comp);
  }
  return out;
}

template <std::size_t Words>
bool is_connected(const BasicGraph<Words>& g, const BasicVertexSet<Words>& within) {
  if (within.empty()) return true;
  BasicVertexSet<Words> seed;
  seed.insert(within.front());
  return reach(g, seed, within) == within;
}

template <std::size_t Words>
bool is_connected(const BasicGraph<Words>& g) {
  return is_connected(g, g.vertices());
}

/// Vertices of `cover` with a neighbour outside `cover`.
template <std::size_t Words>
BasicVertexSet<Words> border(const BasicGraph<Words>& g, const BasicVertexSet<Words>& cover) {
  return neighborhood(g, g.vertices() - cover) & cover;
}

/// Components of G - S split into S-branches (neighbourhood exactly S) and
/// the remaining components.
template <std::size_t Words>
struct BasicBranchFamily {
  BasicVertexSet<Words> base;
  std::vector<BasicVertexSet<Words>> branches;
  std::vector<BasicVertexSet<Words>> non_branch_components;

  friend bool operator==(const BasicBranchFamily&, const BasicBranchFamily&) = default;
};

using BranchFamily = BasicBranchFamily<1>;

template <std::size_t Words>
BasicBranchFamily<Words> branch_family(const BasicGraph<Words>& g, const BasicVertexSet<Words>& s) {
  BasicBranchFamily<Words> family{s, {}, {}};
  for (auto& comp : components(g, g.vertices() - s)) {
    if (neighborhood(g, comp) == s)
      family.branches.push_back(comp);
    else
      family.non_branch_components.push_back(comp);
  }
  return family;
}

/// S is a bottleneck for bag budget k when it has at least 2k+1 S-branches.
template <std::size_t Words>
bool is_bottleneck(const BasicGraph<Words>& g, const BasicVertexSet<Words>& s, std::size_t k) {
  if (s.empty()) return false;
  return branch_family(g, s).branches.size() >= 2 * k + 1;
}

/// All bottlenecks contained in x, by increasing size then lexicographically.
template <std::size_t Words>
std::vector<BasicBranchFamily<Words>> bottleneck_families(const BasicGraph<Words>& g,
                                                          const BasicVertexSet<Words>& x,
                                                          std::size_t k) {
  std::vector<BasicBranchFamily<Words>> out;
  for_each_subset_by_size(x, [&](const BasicVertexSet<Words>& s) {
    auto family = branch_family(g, s);
    if (family.branches.size() >= 2 * k + 1) out.push_back(std::move(family));
  });
  return out;
}

template <std::size_t Words>
std::vector<BasicVertexSet<Words>> enumerate_bottlenecks(const BasicGraph<Words>& g,
                                                         const BasicVertexSet<Words>& x,
                                                         std::size_t k) {
  std::vector<BasicVertexSet<Words>> out;
  for (auto& family : bottleneck_families(g, x, k)) out.push_back(family.base);
  return out;
}

}  // namespace cpw

#endif  // CPW_GRAPH_HPP
