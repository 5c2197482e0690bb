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

// Bag surgery that makes a decomposition S-structured: every component of
// G - S other than the in-branches is frozen over the interval of S, and the
// in-branches are laid out one after another in a block of fresh bags.

#ifndef CPW_STRUCTURER_HPP
#define CPW_STRUCTURER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpw/decomposition.hpp"
#include "cpw/errors.hpp"
#include "cpw/graph.hpp"

namespace cpw {

template <std::size_t Words>
struct BasicTransformPlan {
  BasicVertexSet<Words> s;
  std::size_t t1 = 1;
  std::size_t t2 = 1;
  std::size_t c_min = 1;
  /// X_{c_min} restricted to vertices outside S and the in-branches.
  BasicVertexSet<Words> x_star;
  /// Total span of the in-branches, sum of (β - α + 1).
  std::size_t d = 0;
  /// In-branches ordered by α, ties by smallest vertex.
  std::vector<BasicVertexSet<Words>> in_order;
  /// Union of the in-branches.
  BasicVertexSet<Words> b_in;
  /// Concatenated traces of the in-branches; entry j is the (j+1)-th bag of the block.
  std::vector<BasicVertexSet<Words>> star_bags;
};

using TransformPlan = BasicTransformPlan<1>;

template <std::size_t Words>
BasicTransformPlan<Words> plan(const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p,
                               const BasicVertexSet<Words>& s) {
  const auto report = classify_branches(g, p, s);
  if (!report.interval) throw NoInBranch();
  BasicTransformPlan<Words> out;
  out.s = s;
  out.t1 = report.interval->start;
  out.t2 = report.interval->end;

  std::vector<std::pair<Interval, BasicVertexSet<Words>>> in;
  for (auto& c : report.components)
    if (c.kind == BranchKind::In) in.emplace_back(c.span, c.vertices);
  std::stable_sort(in.begin(), in.end(),
                   [](const auto& a, const auto& b) { return a.first.start < b.first.start; });
  for (auto& [span, h] : in) {
    out.in_order.push_back(h);
    out.b_in |= h;
    out.d += span.length();
    for (std::size_t i = span.start; i <= span.end; ++i) out.star_bags.push_back(p.bag(i) & h);
  }

  const auto outside = g.vertices() - s - out.b_in;
  std::size_t best = BasicVertexSet<Words>::kCapacity + 1;
  for (std::size_t i = out.t1; i <= out.t2; ++i) {
    const auto trace = p.bag(i) & outside;
    if (trace.size() < best) {
      best = trace.size();
      out.c_min = i;
      out.x_star = trace;
    }
  }
  return out;
}

/// Applies a computed plan. Output length is |p| + d + 1.
template <std::size_t Words>
BasicPathDecomposition<Words> apply_plan(const BasicPathDecomposition<Words>& p,
                                         const BasicTransformPlan<Words>& pl) {
  const std::size_t l = p.length();
  const std::size_t d = pl.d;
  BasicPathDecomposition<Words> out;
  out.bags.reserve(l + d + 1);
  const auto sentinel = p.bag(pl.c_min) - pl.b_in;
  for (std::size_t i = 1; i <= l + d + 1; ++i) {
    if (i < pl.t1)
      out.bags.push_back(p.bag(i));
    else if (i < pl.c_min)
      out.bags.push_back(p.bag(i) - pl.b_in);
    else if (i == pl.c_min || i == pl.c_min + d + 1)
      out.bags.push_back(sentinel);
    else if (i <= pl.c_min + d)
      out.bags.push_back(pl.x_star | pl.star_bags[i - pl.c_min - 1] | pl.s);
    else if (i <= pl.t2 + d + 1)
      out.bags.push_back(p.bag(i - d - 1) - pl.b_in);
    else
      out.bags.push_back(p.bag(i - d - 1));
  }
  return out;
}

/// Returns the S-structured rearrangement of p. Bag budget k means p has
/// width at most k - 1.
template <std::size_t Words>
BasicPathDecomposition<Words> transform(const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p,
                                        const BasicVertexSet<Words>& s, std::size_t k) {
  if (p.width() >= static_cast<long>(k))
    throw WidthBudget("decomposition width " + std::to_string(p.width()) + " exceeds bag budget " +
                      std::to_string(k));
  const auto pl = plan(g, p, s);
  if (!s.is_subset_of(p.bag(pl.t1)) || !s.is_subset_of(p.bag(pl.t2)))
    throw IntegrityError("set is not contained in the bags bounding its interval");
  return apply_plan(p, pl);
}

/// Bottlenecks for budget k contained in some bag of p, by (|S|, lex).
template <std::size_t Words>
std::vector<BasicVertexSet<Words>> bottlenecks_in_bags(const BasicGraph<Words>& g,
                                                       const BasicPathDecomposition<Words>& p,
                                                       std::size_t k) {
  std::vector<BasicVertexSet<Words>> candidates;
  for (auto& bag : p.bags) for_each_subset_by_size(bag, [&](const auto& s) { candidates.push_back(s); });
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return size_lex_less(a, b);
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<BasicVertexSet<Words>> out;
  for (auto& s : candidates)
    if (is_bottleneck(g, s, k)) out.push_back(s);
  return out;
}

/// Applies transform once per bottleneck, smallest first.
template <std::size_t Words>
BasicPathDecomposition<Words> structure_all(const BasicGraph<Words>& g, BasicPathDecomposition<Words> p,
                                            std::size_t k) {
  for (auto& s : bottlenecks_in_bags(g, p, k)) p = transform(g, p, s, k);
  return p;
}

/// First pair of sets whose intervals cross, if any. Sets without an
/// in-branch are skipped.
template <std::size_t Words>
std::optional<std::pair<BasicVertexSet<Words>, BasicVertexSet<Words>>> crossing_intervals(
    const BasicGraph<Words>& g, const BasicPathDecomposition<Words>& p,
    const std::vector<BasicVertexSet<Words>>& sets) {
  std::vector<std::pair<BasicVertexSet<Words>, Interval>> spans;
  for (auto& s : sets)
    if (auto iv = classify_branches(g, p, s).interval) spans.emplace_back(s, *iv);
  for (std::size_t a = 0; a < spans.size(); ++a)
    for (std::size_t b = a + 1; b < spans.size(); ++b)
      if (!well_nested(spans[a].second, spans[b].second)) return std::pair{spans[a].first, spans[b].first};
  return std::nullopt;
}

}  // namespace cpw

#endif  // CPW_STRUCTURER_HPP
