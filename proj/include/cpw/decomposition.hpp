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

#ifndef CPW_DECOMPOSITION_HPP
#define CPW_DECOMPOSITION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpw/errors.hpp"
#include "cpw/graph.hpp"

namespace cpw {

/// Ordered sequence of bags. Validity is checked by verify(), never enforced
/// on construction; consecutive duplicate bags are legal.
template <std::size_t Words>
struct BasicPathDecomposition {
  std::vector<BasicVertexSet<Words>> bags;

  std::size_t length() const { return bags.size(); }

  /// max |X_i| - 1; -1 for a decomposition without vertices.
  long width() const {
    std::size_t widest = 0;
    for (auto& bag : bags) widest = std::max(widest, bag.size());
    return static_cast<long>(widest) - 1;
  }

  BasicVertexSet<Words> vertices() const {
    BasicVertexSet<Words> all;
    for (auto& bag : bags) all |= bag;
    return all;
  }

  /// 1-based bag access.
  const BasicVertexSet<Words>& bag(std::size_t index) const { return bags.at(index - 1); }

  friend bool operator==(const BasicPathDecomposition&, const BasicPathDecomposition&) = default;
};

using PathDecomposition = BasicPathDecomposition<1>;

/// Closed bag-index range [start, end], 1-based.
struct Interval {
  std::size_t start = 1;
  std::size_t end = 1;

  bool contains(std::size_t i) const { return start <= i && i <= end; }
  bool contains(const Interval& o) const { return start <= o.start && o.end <= end; }
  bool overlaps(const Interval& o) const { return start <= o.end && o.start <= end; }
  std::size_t length() const { return end - start + 1; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Nested in either direction, or disjoint.
inline bool well_nested(const Interval& a, const Interval& b) {
  return a.contains(b) || b.contains(a) || !a.overlaps(b);
}

enum class Condition { NonEmptyBags, InRange, CoversVertices, CoversEdges, Contiguous };

inline const char* condition_name(Condition c) {
  switch (c) {
    case Condition::NonEmptyBags: return "nonempty_bags";
    case Condition::InRange: return "in_range";
    case Condition::CoversVertices: return "covers_vertices";
    case Condition::CoversEdges: return "covers_edges";
    case Condition::Contiguous: return "contiguous";
  }
  return "?";
}

/// First offending item of a failed condition. Bag indices are 1-based.
struct Violation {
  Condition condition;
  std::vector<Vertex> vertices;
  std::vector<std::size_t> bags;
  std::string message;
};

struct Verdict {
  bool nonempty_bags = true;
  bool in_range = true;
  bool covers_vertices = true;  // (i)
  bool covers_edges = true;     // (ii)
  bool contiguous = true;       // (iii)
  long width = -1;
  std::vector<Violation> violations;

  bool ok() const { return nonempty_bags && in_range && covers_vertices && covers_edges && contiguous; }
};

template <std::size_t Words>
Verdict verify(const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p) {
  using Set = BasicVertexSet<Words>;
  Verdict verdict;
  verdict.width = p.width();
  const std::size_t n = g.order();
  const Set all = g.vertices();

  if (p.bags.empty()) {
    verdict.nonempty_bags = false;
    verdict.violations.push_back({Condition::NonEmptyBags, {}, {}, "decomposition has no bags"});
  }
  // The only legal empty bag is the lone bag of the empty graph.
  const bool empty_graph_case = n == 0 && p.bags.size() == 1;
  for (std::size_t i = 0; i < p.bags.size() && !empty_graph_case; ++i) {
    if (p.bags[i].empty()) {
      verdict.nonempty_bags = false;
      verdict.violations.push_back({Condition::NonEmptyBags, {}, {i + 1}, "bag " + std::to_string(i + 1) + " is empty"});
      break;
    }
  }
  for (std::size_t i = 0; i < p.bags.size(); ++i) {
    const Set outside = p.bags[i] - all;
    if (!outside.empty()) {
      verdict.in_range = false;
      verdict.violations.push_back({Condition::InRange, {outside.front()}, {i + 1},
                                    "bag " + std::to_string(i + 1) + " holds unknown vertex " +
                                        std::to_string(outside.front())});
      break;
    }
  }

  const Set uncovered = all - p.vertices();
  if (!uncovered.empty()) {
    verdict.covers_vertices = false;
    verdict.violations.push_back({Condition::CoversVertices, {uncovered.front()}, {},
                                  "vertex " + std::to_string(uncovered.front()) + " is in no bag"});
  }

  for (Vertex u = 0; u < n && verdict.covers_edges; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      const bool found = std::any_of(p.bags.begin(), p.bags.end(), [&](const Set& bag) {
        return bag.contains(u) && bag.contains(v);
      });
      if (!found) {
        verdict.covers_edges = false;
        verdict.violations.push_back({Condition::CoversEdges, {u, v}, {},
                                      "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag"});
        break;
      }
    }
  }

  // (iii): scanning left to right, a vertex may not reappear after leaving.
  Set seen;
  Set previous;
  std::vector<std::size_t> last_seen(Set::kCapacity, 0);
  for (std::size_t i = 0; i < p.bags.size() && verdict.contiguous; ++i) {
    const Set returning = (p.bags[i] & seen) - previous;
    if (!returning.empty()) {
      const Vertex v = returning.front();
      verdict.contiguous = false;
      verdict.violations.push_back({Condition::Contiguous, {v}, {last_seen[v], i, i + 1},
                                    "vertex " + std::to_string(v) + " leaves after bag " +
                                        std::to_string(last_seen[v]) + " and returns in bag " +
                                        std::to_string(i + 1)});
    }
    for (Vertex v : p.bags[i]) last_seen[v] = i + 1;
    seen |= p.bags[i];
    previous = p.bags[i];
  }
  return verdict;
}

/// Prefix unions X_1 ∪ ... ∪ X_i for i = 1..l.
template <std::size_t Words>
std::vector<BasicVertexSet<Words>> prefix_unions(const BasicPathDecomposition<Words>& p) {
  std::vector<BasicVertexSet<Words>> out;
  BasicVertexSet<Words> acc;
  for (auto& bag : p.bags) {
    acc |= bag;
    out.push_back(acc);
  }
  return out;
}

template <std::size_t Words>
bool is_connected_decomposition(const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p) {
  for (auto& prefix : prefix_unions(p))
    if (!is_connected(g, prefix)) return false;
  return true;
}

/// Every component of every prefix-induced subgraph contains a seed.
template <std::size_t Words>
bool is_I_connected(const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p,
                    const BasicVertexSet<Words>& seeds) {
  for (auto& prefix : prefix_unions(p))
    if (reach(g, seeds & prefix, prefix) != prefix) return false;
  return true;
}

/// A connected decomposition of G[⋃ bags] whose outward boundary lies in the
/// last bag.
template <std::size_t Words>
bool is_partial_connected(const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p) {
  if (p.bags.empty()) return false;
  const auto covered = p.vertices();
  if (!(covered - g.vertices()).empty()) return false;
  for (auto& bag : p.bags)
    if (bag.empty()) return false;
  for (Vertex u : covered)
    for (Vertex v : g.neighbors(u) & covered) {
      if (v < u) continue;
      bool found = false;
      for (auto& bag : p.bags) found = found || (bag.contains(u) && bag.contains(v));
      if (!found) return false;
    }
  BasicVertexSet<Words> seen, previous;
  for (auto& bag : p.bags) {
    if (!((bag & seen) - previous).empty()) return false;
    seen |= bag;
    previous = bag;
  }
  if (!is_connected_decomposition(g, p)) return false;
  return border(g, covered).is_subset_of(p.bags.back());
}

/// [α(H), β(H)]: the bags meeting h. Throws InvalidInterval when h meets no
/// bag or the meeting bags are not consecutive.
template <std::size_t Words>
Interval subgraph_interval(const BasicPathDecomposition<Words>& p, const BasicVertexSet<Words>& h) {
  std::optional<std::size_t> first, last;
  for (std::size_t i = 0; i < p.bags.size(); ++i) {
    if (!p.bags[i].intersects(h)) continue;
    if (last && *last != i) throw InvalidInterval("subgraph occurrences are not contiguous");
    if (!first) first = i + 1;
    last = i + 1;
  }
  if (!first) throw InvalidInterval("subgraph meets no bag");
  return {*first, *last};
}

enum class BranchKind { In, Pre, Post, NonBranch, Other };

inline const char* branch_kind_name(BranchKind kind) {
  switch (kind) {
    case BranchKind::In: return "in";
    case BranchKind::Pre: return "pre";
    case BranchKind::Post: return "post";
    case BranchKind::NonBranch: return "non_branch";
    case BranchKind::Other: return "other";
  }
  return "?";
}

template <std::size_t Words>
struct BasicClassifiedComponent {
  BasicVertexSet<Words> vertices;
  BranchKind kind;
  Interval span;
};

/// Every component of G - S with its interval and classification.
///
/// `Other` marks S-branches that are not in-branches and fit neither the
/// pre- nor the post-branch rule; when S has no in-branch at all there is no
/// interval and every non-in branch is reported as `Other`.
template <std::size_t Words>
struct BasicBranchReport {
  BasicVertexSet<Words> base;
  std::optional<Interval> interval;
  std::vector<BasicClassifiedComponent<Words>> components;

  std::size_t count(BranchKind kind) const {
    return static_cast<std::size_t>(std::count_if(components.begin(), components.end(),
                                                  [kind](const auto& c) { return c.kind == kind; }));
  }
  /// S-branches that are not in-branches.
  std::size_t not_in_branches() const {
    return count(BranchKind::Pre) + count(BranchKind::Post) + count(BranchKind::Other);
  }
  BasicVertexSet<Words> vertices_of(BranchKind kind) const {
    BasicVertexSet<Words> out;
    for (auto& c : components)
      if (c.kind == kind) out |= c.vertices;
    return out;
  }
};

using BranchReport = BasicBranchReport<1>;

template <std::size_t Words>
BasicBranchReport<Words> classify_branches(const BasicGraph<Words>& g,
                                           const BasicPathDecomposition<Words>& p,
                                           const BasicVertexSet<Words>& s) {
  BasicBranchReport<Words> report{s, std::nullopt, {}};
  std::vector<bool> is_branch;
  for (auto& comp : components(g, g.vertices() - s)) {
    const Interval span = subgraph_interval(p, comp);
    const bool branch = neighborhood(g, comp) == s;
    BranchKind kind = BranchKind::NonBranch;
    if (branch) {
      const bool in = s.is_subset_of(p.bag(span.start)) && s.is_subset_of(p.bag(span.end));
      kind = in ? BranchKind::In : BranchKind::Other;
      if (in) {
        if (!report.interval)
          report.interval = span;
        else
          report.interval = Interval{std::min(report.interval->start, span.start),
                                     std::max(report.interval->end, span.end)};
      }
    }
    report.components.push_back({comp, kind, span});
  }
  if (report.interval) {
    const auto [t1, t2] = *report.interval;
    for (auto& c : report.components) {
      if (c.kind != BranchKind::Other) continue;
      if (c.span.start < t1)
        c.kind = BranchKind::Pre;
      else if (c.span.end > t2)
        c.kind = BranchKind::Post;
    }
  }
  return report;
}

/// h's trace is the same in every bag of iv.
template <std::size_t Words>
bool waits_in(const BasicPathDecomposition<Words>& p, const BasicVertexSet<Words>& h, const Interval& iv) {
  const auto trace = p.bag(iv.start) & h;
  for (std::size_t i = iv.start + 1; i <= iv.end; ++i)
    if ((p.bag(i) & h) != trace) return false;
  return true;
}

/// Every component of G - S other than the in-branches waits in I(S, P).
template <std::size_t Words>
bool is_structured(const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p,
                   const BasicVertexSet<Words>& s) {
  const auto report = classify_branches(g, p, s);
  if (!report.interval) throw NoInBranch();
  for (auto& c : report.components)
    if (c.kind != BranchKind::In && !waits_in(p, c.vertices, *report.interval)) return false;
  return true;
}

/// Drops bags contained in a neighbouring bag until none is left.
template <std::size_t Words>
BasicPathDecomposition<Words> compact(BasicPathDecomposition<Words> p) {
  bool changed = true;
  while (changed && p.bags.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < p.bags.size(); ++i) {
      const bool under_prev = i > 0 && p.bags[i].is_subset_of(p.bags[i - 1]);
      const bool under_next = i + 1 < p.bags.size() && p.bags[i].is_subset_of(p.bags[i + 1]);
      if (under_prev || under_next) {
        p.bags.erase(p.bags.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return p;
}

}  // namespace cpw

#endif  // CPW_DECOMPOSITION_HPP
