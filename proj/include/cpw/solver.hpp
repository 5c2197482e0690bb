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

// XP dynamic program deciding whether a graph has an I-connected path
// decomposition with bags of at most k vertices.
//
// A state is a bag X together with the covered set C, the vertices already
// introduced. States grow by two kinds of extension:
//
//   step  The next bag Y keeps the border of C, may drop other vertices of
//         X and may introduce new ones.
//   jump  For a bottleneck S inside X (a set with at least 2k+1 branches,
//         components of G - S whose neighbourhood is exactly S) a batch of
//         uncovered branches is decomposed recursively with the remaining
//         budget k - |X| and appended next to X.
//
// States are processed in order of increasing |C|, then decreasing |X|.

#ifndef CPW_SOLVER_HPP
#define CPW_SOLVER_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpw/decomposition.hpp"
#include "cpw/errors.hpp"
#include "cpw/graph.hpp"

namespace cpw {

template <std::size_t Words>
struct BasicSolverState {
  BasicVertexSet<Words> bag;
  BasicVertexSet<Words> cover;

  friend bool operator==(const BasicSolverState&, const BasicSolverState&) = default;
};

using SolverState = BasicSolverState<1>;

template <std::size_t Words>
struct SolverStateHash {
  std::size_t operator()(const BasicSolverState<Words>& s) const {
    return s.cover.hash() ^ (s.bag.hash() * 0x9e3779b97f4a7c15ull);
  }
};

struct SolverOptions {
  /// Abort with StateLimitExceeded after this many states in one run; 0 is unlimited.
  std::size_t max_states = 0;
  /// Added to the recursive budget k - |X|. Anything but 0 breaks the algorithm; tests only.
  long jump_budget_offset = 0;
  /// Require every component of a new step bag to meet the previous bag, even
  /// when it contains a seed.
  bool strict_step_rule = false;
  /// Replay and check the witness of every positive answer.
  bool verify_witness = true;
};

struct SolverStats {
  std::size_t states = 0;
  std::size_t step_extensions = 0;
  std::size_t jump_extensions = 0;
  std::size_t recursive_calls = 0;
  std::size_t memo_hits = 0;
  /// States generated inside recursive calls, at every depth.
  std::size_t sub_states = 0;

  SolverStats& operator+=(const SolverStats& o) {
    states += o.states;
    step_extensions += o.step_extensions;
    jump_extensions += o.jump_extensions;
    recursive_calls += o.recursive_calls;
    memo_hits += o.memo_hits;
    sub_states += o.sub_states;
    return *this;
  }
};

template <std::size_t Words>
struct BasicSolveRequest {
  BasicGraph<Words> graph;
  BasicVertexSet<Words> seeds;
  std::size_t bag_budget = 1;
  /// Treat every seed as a possible single starting vertex of a connected
  /// decomposition instead of as a member of I. With one seed both readings agree.
  bool any_single_seed = false;
};

using SolveRequest = BasicSolveRequest<1>;

enum class WitnessKind { Init, Step, Jump };

inline const char* witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Init: return "init";
    case WitnessKind::Step: return "step";
    case WitnessKind::Jump: return "jump";
  }
  return "?";
}

template <std::size_t Words>
struct BasicWitnessEntry {
  WitnessKind kind = WitnessKind::Init;
  BasicVertexSet<Words> bag;
  BasicVertexSet<Words> cover;
  /// Jump only: the bottleneck and the absorbed branches with their decompositions.
  BasicVertexSet<Words> jump_base;
  std::vector<std::pair<BasicVertexSet<Words>, BasicPathDecomposition<Words>>> branches;
};

/// Extension chain from an initial state to a final one.
template <std::size_t Words>
using BasicWitness = std::vector<BasicWitnessEntry<Words>>;

using WitnessEntry = BasicWitnessEntry<1>;
using Witness = BasicWitness<1>;

/// Turns a witness chain into the decomposition it describes.
template <std::size_t Words>
BasicPathDecomposition<Words> rebuild(const BasicWitness<Words>& witness) {
  BasicPathDecomposition<Words> out;
  if (witness.empty() || witness.front().kind != WitnessKind::Init)
    throw IntegrityError("witness does not start with an initial state");
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const auto& e = witness[i];
    switch (e.kind) {
      case WitnessKind::Init:
        if (i != 0) throw IntegrityError("initial entry inside a witness chain");
        out.bags.push_back(e.bag);
        break;
      case WitnessKind::Step:
        out.bags.push_back(e.bag);
        break;
      case WitnessKind::Jump:
        for (auto& [branch, sub] : e.branches)
          for (auto& bag : sub.bags) out.bags.push_back(e.bag | bag);
        out.bags.push_back(e.bag);
        break;
    }
  }
  return out;
}

template <std::size_t Words>
struct BasicDPResult {
  bool decision = false;
  std::optional<BasicWitness<Words>> witness;
  std::optional<BasicPathDecomposition<Words>> decomposition;
  SolverStats stats;
};

using DPResult = BasicDPResult<1>;

/// Outcomes of recursive branch subproblems, keyed in the vertex ids of the
/// outermost graph. Safe to share between concurrent runs on the same graph.
template <std::size_t Words>
class SubproblemCache {
 public:
  using Set = BasicVertexSet<Words>;
  using Value = std::shared_ptr<const BasicPathDecomposition<Words>>;

  std::optional<Value> find(const Set& vertices, const Set& seeds, std::size_t budget) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(Key{vertices, seeds, budget});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const Set& vertices, const Set& seeds, std::size_t budget, Value value) {
    std::lock_guard lock(mutex_);
    entries_.emplace(Key{vertices, seeds, budget}, std::move(value));
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

 private:
  using Key = std::tuple<Set, Set, std::size_t>;
  mutable std::mutex mutex_;
  std::map<Key, Value> entries_;
};

template <std::size_t Words>
class BasicSolver {
 public:
  using Set = BasicVertexSet<Words>;
  using State = BasicSolverState<Words>;
  using Decomposition = BasicPathDecomposition<Words>;

  /// Throws InvalidRequest for an empty graph, no seeds or a zero budget.
  explicit BasicSolver(BasicSolveRequest<Words> request, SolverOptions options = {},
                       std::shared_ptr<SubproblemCache<Words>> cache = nullptr)
      : BasicSolver(std::move(request), options, std::move(cache), {}) {}

  BasicSolver(const BasicSolver&) = delete;
  BasicSolver& operator=(const BasicSolver&) = delete;

  const BasicSolveRequest<Words>& request() const { return req_; }
  std::size_t budget() const { return k_; }

  std::vector<State> initial_states() const {
    std::vector<State> out;
    for (Vertex v : req_.seeds) out.push_back({Set{v}, Set{v}});
    return out;
  }

  /// Canonical validity of a (bag, cover) pair.
  bool is_valid_state(const State& s) const {
    if (s.bag.empty() || s.bag.size() > k_ || !s.bag.is_subset_of(s.cover)) return false;
    if (!border(g_, s.cover).is_subset_of(s.bag)) return false;
    for (auto& family : bottlenecks_of(s.bag)) {
      std::size_t inside = 0;
      for (auto& h : family.branches) inside += h.is_subset_of(s.cover);
      if (std::min(inside, family.branches.size() - inside) > 2 * k_) return false;
    }
    return seed_condition(s.cover);
  }

  std::vector<State> step_successors(const State& w) const {
    std::vector<State> out;
    const Set keep = border(g_, w.cover);
    if (keep.size() > k_) return out;
    const Set optional_old = w.bag - keep;
    const Set fresh = step_candidates(w);
    const Set anchors = options_.strict_step_rule ? w.bag : (w.bag | seed_anchor());
    const std::size_t room = k_ - keep.size();

    auto consider = [&](const Set& extra) {
      const Set y = keep | extra;
      if (y.empty()) return;
      for (auto& comp : components(g_, y))
        if (!comp.intersects(anchors)) return;
      State s{y, w.cover | y};
      if (s == w || !is_valid_state(s)) return;
      out.push_back(s);
    };
    consider(Set{});
    const Set pool = optional_old | fresh;
    if (room > 0) {
      const auto members = pool.members();
      std::vector<std::size_t> idx;
      for (std::size_t r = 1; r <= std::min(room, members.size()); ++r) {
        idx.resize(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        while (true) {
          Set extra;
          for (auto i : idx) extra.insert(members[i]);
          consider(extra);
          std::size_t pos = r;
          while (pos > 0 && idx[pos - 1] == members.size() - r + pos - 1) --pos;
          if (pos == 0) break;
          ++idx[pos - 1];
          for (std::size_t i = pos; i < r; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
    }
    return out;
  }

  struct JumpSuccessor {
    State state;
    Set base;
    std::vector<Set> branches;
  };

  /// Jump successors of w. Recursive calls go through the shared cache.
  std::vector<JumpSuccessor> jump_successors(const State& w) {
    std::vector<JumpSuccessor> out;
    const long sub_budget = static_cast<long>(k_) - static_cast<long>(w.bag.size()) + options_.jump_budget_offset;
    if (sub_budget <= 0) return out;
    for (auto& family : bottlenecks_of(w.bag)) {
      std::vector<Set> usable;
      for (auto& h : family.branches) {
        if (h.intersects(w.cover)) continue;
        if (branch_decomposition(h, neighborhood(g_, family.base) & h, static_cast<std::size_t>(sub_budget)))
          usable.push_back(h);
      }
      const std::size_t total = family.branches.size();
      const std::size_t need = std::max<std::size_t>(1, total > 2 * k_ ? total - 2 * k_ : 0);
      if (usable.size() < need) continue;
      const std::size_t m = usable.size();
      std::vector<std::size_t> idx;
      for (std::size_t r = need; r <= m; ++r) {
        idx.resize(r);
        for (std::size_t i = 0; i < r; ++i) idx[i] = i;
        while (true) {
          JumpSuccessor j{{w.bag, w.cover}, family.base, {}};
          for (auto i : idx) {
            j.state.cover |= usable[i];
            j.branches.push_back(usable[i]);
          }
          if (is_valid_state(j.state)) out.push_back(std::move(j));
          std::size_t pos = r;
          while (pos > 0 && idx[pos - 1] == m - r + pos - 1) --pos;
          if (pos == 0) break;
          ++idx[pos - 1];
          for (std::size_t i = pos; i < r; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
    }
    return out;
  }

  /// Runs the program to the first full-cover state or to exhaustion.
  BasicDPResult<Words> run() {
    reset();
    BasicDPResult<Words> result;
    std::optional<std::size_t> goal;
    for (auto& s : initial_states()) {
      if (!is_valid_state(s)) continue;
      const auto id = add_state(s, npos, Node::Origin::Init);
      if (id && s.cover == g_.vertices()) {
        goal = *id;
        break;
      }
    }
    while (!goal && !queue_.empty()) {
      const std::size_t w_id = queue_.top().id;
      queue_.pop();
      const State w = nodes_[w_id].state;
      for (auto& s : step_successors(w)) {
        const auto id = add_state(s, w_id, Node::Origin::Step);
        if (!id) continue;
        ++stats_.step_extensions;
        if (s.cover == g_.vertices()) {
          goal = *id;
          break;
        }
      }
      if (goal) break;
      for (auto& j : jump_successors(w)) {
        const auto id = add_state(j.state, w_id, Node::Origin::Jump);
        if (!id) continue;
        ++stats_.jump_extensions;
        nodes_[*id].jump_base = j.base;
        nodes_[*id].branches = std::move(j.branches);
        if (j.state.cover == g_.vertices()) {
          goal = *id;
          break;
        }
      }
    }
    result.stats = stats_;
    if (!goal) return result;
    result.decision = true;
    result.witness = witness_for(*goal);
    result.decomposition = rebuild(*result.witness);
    if (options_.verify_witness) check(*result.decomposition);
    return result;
  }

  const SolverStats& stats() const { return stats_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Node {
    enum class Origin { Init, Step, Jump };
    State state;
    std::size_t parent;
    Origin origin;
    Set jump_base;
    std::vector<Set> branches;
  };

  struct QueueItem {
    std::size_t cover_size;
    std::size_t bag_size;
    State state;
    std::size_t id;
  };
  struct QueueOrder {
    // priority_queue pops the largest; "larger" here means processed later.
    bool operator()(const QueueItem& a, const QueueItem& b) const {
      if (a.cover_size != b.cover_size) return a.cover_size > b.cover_size;
      if (a.bag_size != b.bag_size) return a.bag_size < b.bag_size;
      if (a.state.cover != b.state.cover) return b.state.cover < a.state.cover;
      return b.state.bag < a.state.bag;
    }
  };

  BasicSolver(BasicSolveRequest<Words> request, SolverOptions options,
              std::shared_ptr<SubproblemCache<Words>> cache, std::vector<Vertex> to_top)
      : req_(std::move(request)), g_(req_.graph), options_(options), cache_(std::move(cache)),
        to_top_(std::move(to_top)) {
    if (g_.order() == 0) throw InvalidRequest("graph is empty");
    if (req_.seeds.empty()) throw InvalidRequest("seed set is empty");
    if (!req_.seeds.is_subset_of(g_.vertices())) throw InvalidRequest("seed outside the graph");
    if (req_.bag_budget == 0) throw InvalidRequest("bag budget must be at least 1");
    k_ = std::min(req_.bag_budget, g_.order());
    if (!cache_) cache_ = std::make_shared<SubproblemCache<Words>>();
    if (to_top_.empty()) {
      to_top_.resize(g_.order());
      for (Vertex v = 0; v < g_.order(); ++v) to_top_[v] = v;
    }
  }

  Set seed_anchor() const { return req_.any_single_seed ? Set{} : req_.seeds; }

  bool seed_condition(const Set& cover) const {
    if (req_.any_single_seed) return is_connected(g_, cover);
    return reach(g_, req_.seeds & cover, cover) == cover;
  }

  /// Uncovered vertices that can belong to a component of a bag of at most k
  /// vertices touching the current bag or an uncovered seed.
  Set step_candidates(const State& w) const {
    const Set outside = g_.vertices() - w.cover;
    Set found = (neighborhood(g_, w.bag) | seed_anchor()) & outside;
    Set frontier = found;
    for (std::size_t layer = 1; layer + 1 < k_ && !frontier.empty(); ++layer) {
      Set next = neighborhood(g_, frontier) & outside;
      next -= found;
      found |= next;
      frontier = next;
    }
    return found;
  }

  const std::vector<BasicBranchFamily<Words>>& bottlenecks_of(const Set& bag) const {
    auto it = bottleneck_cache_.find(bag);
    if (it != bottleneck_cache_.end()) return it->second;
    return bottleneck_cache_.emplace(bag, bottleneck_families(g_, bag, k_)).first->second;
  }

  Set to_top(const Set& local) const {
    Set out;
    for (Vertex v : local) out.insert(to_top_[v]);
    return out;
  }

  /// Decomposition of G[h] seeded by `seeds` with bags of at most `budget`
  /// vertices, in this solver's ids; nullptr when none exists.
  std::shared_ptr<const Decomposition> branch_decomposition(const Set& h, const Set& seeds, std::size_t budget) {
    budget = std::min(budget, h.size());
    auto local = local_branch_cache_.find({h, budget});
    if (local != local_branch_cache_.end()) return local->second;

    const Set top_h = to_top(h);
    const Set top_seeds = to_top(seeds);
    std::shared_ptr<const Decomposition> top_result;
    if (auto hit = cache_->find(top_h, top_seeds, budget)) {
      ++stats_.memo_hits;
      top_result = *hit;
    } else {
      ++stats_.recursive_calls;
      auto [sub_graph, sub_ids] = g_.induced(h);
      Set sub_seeds;
      for (std::size_t i = 0; i < sub_ids.size(); ++i)
        if (seeds.contains(sub_ids[i])) sub_seeds.insert(i);
      std::vector<Vertex> sub_top(sub_ids.size());
      for (std::size_t i = 0; i < sub_ids.size(); ++i) sub_top[i] = to_top_[sub_ids[i]];
      BasicSolver sub({std::move(sub_graph), sub_seeds, budget, false}, options_, cache_, sub_top);
      auto sub_result = sub.run();
      stats_.sub_states += sub_result.stats.states + sub_result.stats.sub_states;
      stats_.recursive_calls += sub_result.stats.recursive_calls;
      stats_.memo_hits += sub_result.stats.memo_hits;
      if (sub_result.decision) {
        Decomposition mapped;
        for (auto& bag : sub_result.decomposition->bags) {
          Set top_bag;
          for (Vertex v : bag) top_bag.insert(sub_top[v]);
          mapped.bags.push_back(top_bag);
        }
        top_result = std::make_shared<const Decomposition>(std::move(mapped));
      }
      cache_->store(top_h, top_seeds, budget, top_result);
    }

    std::shared_ptr<const Decomposition> result;
    if (top_result) {
      std::unordered_map<Vertex, Vertex> back;
      for (Vertex v : h) back.emplace(to_top_[v], v);
      Decomposition mine;
      for (auto& bag : top_result->bags) {
        Set b;
        for (Vertex v : bag) b.insert(back.at(v));
        mine.bags.push_back(b);
      }
      result = std::make_shared<const Decomposition>(std::move(mine));
    }
    local_branch_cache_.emplace(std::pair{h, budget}, result);
    return result;
  }

  void reset() {
    nodes_.clear();
    index_.clear();
    queue_ = {};
    stats_ = {};
  }

  std::optional<std::size_t> add_state(const State& s, std::size_t parent, typename Node::Origin origin) {
    if (index_.contains(s)) return std::nullopt;
    if (options_.max_states && nodes_.size() >= options_.max_states)
      throw StateLimitExceeded(options_.max_states);
    const std::size_t id = nodes_.size();
    nodes_.push_back({s, parent, origin, {}, {}});
    index_.emplace(s, id);
    queue_.push({s.cover.size(), s.bag.size(), s, id});
    ++stats_.states;
    return id;
  }

  BasicWitness<Words> witness_for(std::size_t id) {
    BasicWitness<Words> chain;
    for (std::size_t at = id; at != npos; at = nodes_[at].parent) {
      const Node& node = nodes_[at];
      BasicWitnessEntry<Words> e;
      e.bag = node.state.bag;
      e.cover = node.state.cover;
      switch (node.origin) {
        case Node::Origin::Init: e.kind = WitnessKind::Init; break;
        case Node::Origin::Step: e.kind = WitnessKind::Step; break;
        case Node::Origin::Jump:
          e.kind = WitnessKind::Jump;
          e.jump_base = node.jump_base;
          for (auto& h : node.branches) {
            auto sub = branch_decomposition(h, neighborhood(g_, node.jump_base) & h,
                                            static_cast<std::size_t>(static_cast<long>(k_) -
                                                                     static_cast<long>(node.state.bag.size()) +
                                                                     options_.jump_budget_offset));
            if (!sub) throw IntegrityError("jump witness lost a branch decomposition");
            e.branches.emplace_back(h, *sub);
          }
          break;
      }
      chain.push_back(std::move(e));
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  void check(const Decomposition& p) const {
    const auto verdict = verify(g_, p);
    if (!verdict.ok())
      throw IntegrityError("witness is not a decomposition: " + verdict.violations.front().message);
    if (p.width() > static_cast<long>(k_) - 1) throw IntegrityError("witness exceeds the bag budget");
    if (p.bags.front().size() != 1 || !p.bags.front().is_subset_of(req_.seeds))
      throw IntegrityError("witness does not start with a single seed");
    const Set anchor = req_.any_single_seed ? p.bags.front() : req_.seeds;
    if (!is_I_connected(g_, p, anchor)) throw IntegrityError("witness is not seed-connected");
  }

  BasicSolveRequest<Words> req_;
  const BasicGraph<Words>& g_;
  SolverOptions options_;
  std::shared_ptr<SubproblemCache<Words>> cache_;
  std::vector<Vertex> to_top_;
  std::size_t k_ = 1;

  std::vector<Node> nodes_;
  std::unordered_map<State, std::size_t, SolverStateHash<Words>> index_;
  std::priority_queue<QueueItem, std::vector<QueueItem>, QueueOrder> queue_;
  SolverStats stats_;
  mutable std::unordered_map<Set, std::vector<BasicBranchFamily<Words>>, VertexSetHash<Words>> bottleneck_cache_;
  std::map<std::pair<Set, std::size_t>, std::shared_ptr<const Decomposition>> local_branch_cache_;
};

using Solver = BasicSolver<1>;

/// Decides whether g has a seed-connected decomposition with bags of at most
/// `bag_budget` vertices whose first bag is a single seed.
template <std::size_t Words>
BasicDPResult<Words> decide(const BasicGraph<Words>& g, const BasicVertexSet<Words>& seeds, std::size_t bag_budget,
                            const SolverOptions& options = {},
                            std::shared_ptr<SubproblemCache<Words>> cache = nullptr) {
  if (!is_connected(g)) throw DisconnectedGraph();
  BasicSolver<Words> solver({g, seeds, bag_budget, false}, options, std::move(cache));
  return solver.run();
}

/// A tree whose non-leaf vertices induce a path.
template <std::size_t Words>
bool is_caterpillar(const BasicGraph<Words>& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.size() + 1 != n || !is_connected(g)) return false;
  BasicVertexSet<Words> spine;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 2) spine.insert(v);
  for (Vertex v : spine)
    if ((g.neighbors(v) & spine).size() > 2) return false;
  return is_connected(g, spine);
}

template <std::size_t Words>
struct BasicCpwResult {
  std::size_t cpw = 0;
  BasicPathDecomposition<Words> decomposition;
  /// (bag budget, statistics) for every budget tried.
  std::vector<std::pair<std::size_t, SolverStats>> attempts;
};

using CpwResult = BasicCpwResult<1>;

/// Connected pathwidth of a connected graph, with an optimal decomposition.
template <std::size_t Words>
BasicCpwResult<Words> compute_cpw(const BasicGraph<Words>& g, const SolverOptions& options = {}) {
  if (g.order() == 0 || !is_connected(g)) throw DisconnectedGraph();
  BasicCpwResult<Words> out;
  if (g.order() == 1) {
    out.decomposition.bags.push_back(BasicVertexSet<Words>{0});
    return out;
  }
  auto cache = std::make_shared<SubproblemCache<Words>>();
  const std::size_t first = 2;
  const std::size_t last = is_caterpillar(g) ? 2 : g.order();
  for (std::size_t k = first; k <= last; ++k) {
    BasicSolver<Words> solver({g, g.vertices(), k, true}, options, cache);
    auto result = solver.run();
    out.attempts.emplace_back(k, result.stats);
    if (result.decision) {
      out.cpw = k - 1;
      out.decomposition = std::move(*result.decomposition);
      return out;
    }
  }
  throw IntegrityError("no budget up to n produced a decomposition");
}

}  // namespace cpw

#endif  // CPW_SOLVER_HPP
