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

// Cross-checks between the solver, the structurer and the oracles, and the
// corpus driver that runs them.

#ifndef CPW_WORKBENCH_HPP
#define CPW_WORKBENCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cpw/decomposition.hpp"
#include "cpw/generators.hpp"
#include "cpw/graph.hpp"
#include "cpw/json.hpp"
#include "cpw/oracle.hpp"
#include "cpw/solver.hpp"
#include "cpw/structurer.hpp"

namespace cpw {

struct CheckOutcome {
  bool passed = true;
  /// Individual cases examined.
  std::size_t cases = 0;
  /// First failure, empty when passed.
  std::string detail;
  json data = json::object();

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void merge(const CheckOutcome& o) {
    if (!o.passed) fail(o.detail);
    cases += o.cases;
  }
};

inline std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

/// Every non-empty proper subset of some bag, by (size, lex).
inline std::vector<VertexSet> bag_subsets(const Graph& g, const PathDecomposition& p) {
  std::vector<VertexSet> out;
  for (auto& bag : p.bags) for_each_subset_by_size(bag, [&](const VertexSet& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return size_lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase(out, g.vertices());
  return out;
}

/// Soundness of a positive answer: the decomposition is valid, seed-connected,
/// within budget and starts with {seed}.
inline std::optional<std::string> witness_problem(const Graph& g, const PathDecomposition& p, Vertex seed,
                                                  std::size_t k) {
  const auto verdict = verify(g, p);
  if (!verdict.ok()) return "invalid: " + verdict.violations.front().message;
  if (!is_connected_decomposition(g, p)) return "not connected";
  if (p.width() > static_cast<long>(k) - 1) return "width " + std::to_string(p.width());
  if (p.bags.front() != VertexSet{seed}) return "first bag " + describe(p.bags.front());
  return std::nullopt;
}

struct DecisionSweep {
  CheckOutcome agreement;
  CheckOutcome witnesses;
  /// Largest canonical state count seen per bag budget.
  std::vector<std::size_t> max_states;
};

/// decide against oracle_decide for every budget 1..n and every seed, with
/// every positive answer replayed and checked.
inline DecisionSweep sweep_decisions(const Graph& g, SolverOptions options = {}) {
  DecisionSweep out;
  options.verify_witness = false;
  const std::size_t n = g.order();
  out.max_states.assign(n + 1, 0);
  auto cache = std::make_shared<SubproblemCache<1>>();
  for (std::size_t k = 1; k <= n; ++k) {
    for (Vertex s = 0; s < n; ++s) {
      const bool expected = oracle_decide(g, VertexSet{s}, k);
      ++out.agreement.cases;
      BasicDPResult<1> got;
      try {
        got = decide(g, VertexSet{s}, k, options, cache);
      } catch (const Error& e) {
        out.agreement.fail("k=" + std::to_string(k) + " seed=" + std::to_string(s) + ": " + e.what());
        continue;
      }
      out.max_states[k] = std::max(out.max_states[k], got.stats.states);
      if (got.decision != expected)
        out.agreement.fail("k=" + std::to_string(k) + " seed=" + std::to_string(s) + ": solver says " +
                           (got.decision ? "yes" : "no") + ", oracle says " + (expected ? "yes" : "no"));
      if (!got.decision) continue;
      ++out.witnesses.cases;
      if (auto why = witness_problem(g, *got.decomposition, s, k))
        out.witnesses.fail("k=" + std::to_string(k) + " seed=" + std::to_string(s) + ": " + *why);
    }
  }
  return out;
}

/// The transform properties for every set in `sets` that has an in-branch in
/// p: valid, seed-connected, no wider, S-structured, |p| + d + 1 bags, same
/// first bag.
inline CheckOutcome transform_check(const Graph& g, const PathDecomposition& p, const VertexSet& seeds,
                                    std::size_t k, const std::vector<VertexSet>& sets) {
  CheckOutcome out;
  for (auto& s : sets) {
    if (!classify_branches(g, p, s).interval) continue;
    ++out.cases;
    const std::string at = "S=" + describe(s) + ": ";
    try {
      const auto pl = plan(g, p, s);
      const auto q = transform(g, p, s, k);
      if (!verify(g, q).ok()) out.fail(at + "output invalid");
      else if (!is_I_connected(g, q, seeds)) out.fail(at + "output not seed-connected");
      else if (q.width() > p.width()) out.fail(at + "width grew");
      else if (!is_structured(g, q, s)) out.fail(at + "output not structured");
      else if (q.length() != p.length() + pl.d + 1) out.fail(at + "length mismatch");
      else if (q.bags.front() != p.bags.front()) out.fail(at + "first bag changed");
    } catch (const Error& e) {
      out.fail(at + e.what());
    }
  }
  return out;
}

/// At most 2k branches of each set are not in-branches, k = width(p) + 1.
inline CheckOutcome branch_bound_check(const Graph& g, const PathDecomposition& p,
                                       const std::vector<VertexSet>& sets) {
  CheckOutcome out;
  const auto k = static_cast<std::size_t>(p.width() + 1);
  for (auto& s : sets) {
    ++out.cases;
    const auto report = classify_branches(g, p, s);
    if (report.not_in_branches() > 2 * k)
      out.fail("S=" + describe(s) + ": " + std::to_string(report.not_in_branches()) + " branches outside");
  }
  return out;
}

/// After structure_all every bottleneck is structured and no two intervals cross.
inline CheckOutcome structure_all_check(const Graph& g, const PathDecomposition& p, const VertexSet& seeds,
                                        std::size_t k) {
  CheckOutcome out;
  const auto bottlenecks = bottlenecks_in_bags(g, p, k);
  if (bottlenecks.empty()) return out;
  out.cases = 1;
  try {
    const auto q = structure_all(g, p, k);
    if (!verify(g, q).ok()) return out.fail("output invalid"), out;
    if (!is_I_connected(g, q, seeds)) return out.fail("output not seed-connected"), out;
    if (q.width() > p.width()) return out.fail("width grew"), out;
    for (auto& s : bottlenecks)
      if (!is_structured(g, q, s)) return out.fail("S=" + describe(s) + " not structured"), out;
    if (auto pair = crossing_intervals(g, q, bottlenecks))
      out.fail("intervals of " + describe(pair->first) + " and " + describe(pair->second) + " cross");
  } catch (const Error& e) {
    out.fail(e.what());
  }
  return out;
}

/// For every seed, the oracle decomposition at budget k and its bag subsets
/// run through the transform, branch-bound and structure_all checks.
struct DecompositionChecks {
  CheckOutcome transform;
  CheckOutcome branch_bound;
  CheckOutcome structure_all;
};

inline DecompositionChecks decomposition_checks(const Graph& g, std::size_t k) {
  DecompositionChecks out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!oracle_decide(g, VertexSet{s}, k)) continue;
    const auto p = oracle_decomposition(g, VertexSet{s}, k);
    const auto sets = bag_subsets(g, p);
    out.transform.merge(transform_check(g, p, VertexSet{s}, k, sets));
    out.branch_bound.merge(branch_bound_check(g, p, sets));
    out.structure_all.merge(structure_all_check(g, p, VertexSet{s}, k));
  }
  return out;
}

struct CheckResult {
  std::string name;
  CheckOutcome outcome;
  double millis = 0;
};

struct GraphReport {
  GeneratorSpec spec;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<CheckResult> checks;
  /// Set when the graph could not be generated or a check threw.
  std::string error;

  bool ok() const {
    return error.empty() && std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.outcome.passed; });
  }
};

struct SuiteOptions {
  std::size_t threads = 1;
  /// Solver options under test; a nonzero jump_budget_offset makes a mutant.
  SolverOptions solver;
};

struct SuiteReport {
  std::vector<GraphReport> graphs;

  std::size_t failed_graphs() const {
    return static_cast<std::size_t>(std::count_if(graphs.begin(), graphs.end(), [](auto& g) { return !g.ok(); }));
  }
  bool ok() const { return failed_graphs() == 0; }
};

namespace detail {

template <typename Fn>
CheckResult timed(const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{name, {}, 0};
  try {
    r.outcome = fn();
  } catch (const std::exception& e) {
    r.outcome.fail(e.what());
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Runs job(i) for i in [0, count) on `threads` workers.
inline void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& job) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline GraphReport check_graph(const GeneratorSpec& spec, const SuiteOptions& options) {
  GraphReport report{spec, 0, 0, {}, {}};
  Graph g;
  try {
    g = Graph(generate(spec).edges);
  } catch (const Error& e) {
    report.error = e.what();
    return report;
  }
  report.n = g.order();
  report.m = g.size();
  DecisionSweep sweep;
  report.checks.push_back(detail::timed("oracle_agreement", [&] {
    sweep = sweep_decisions(g, options.solver);
    return sweep.agreement;
  }));
  report.checks.push_back({"witness", sweep.witnesses, 0});
  std::size_t cpw = 0;
  report.checks.push_back(detail::timed("cpw", [&] {
    CheckOutcome out;
    out.cases = 1;
    cpw = compute_cpw(g, options.solver).cpw;
    const auto expected = oracle_cpw(g);
    out.data["cpw"] = cpw;
    if (cpw != expected) out.fail("solver " + std::to_string(cpw) + ", oracle " + std::to_string(expected));
    return out;
  }));
  report.checks.push_back(detail::timed("cpw_ge_pw", [&] {
    CheckOutcome out;
    out.cases = 1;
    const auto pw = oracle_pathwidth(g);
    out.data["pw"] = pw;
    out.data["ratio"] = pw == 0 ? json(nullptr) : json(static_cast<double>(cpw) / static_cast<double>(pw));
    if (cpw < pw) out.fail("cpw " + std::to_string(cpw) + " < pw " + std::to_string(pw));
    return out;
  }));
  DecompositionChecks dc;
  report.checks.push_back(detail::timed("transform", [&] {
    dc = decomposition_checks(g, cpw + 1);
    return dc.transform;
  }));
  report.checks.push_back({"branch_bound", dc.branch_bound, 0});
  report.checks.push_back({"structure_all", dc.structure_all, 0});
  return report;
}

inline SuiteReport run_suite(const std::vector<GeneratorSpec>& corpus, std::size_t max_n,
                             const SuiteOptions& options = {}) {
  SuiteReport report;
  report.graphs.resize(corpus.size());
  detail::parallel_for(corpus.size(), options.threads, [&](std::size_t i) {
    GraphReport r;
    try {
      const auto n = generate(corpus[i]).edges.n;
      if (n > max_n) {
        r.spec = corpus[i];
        r.n = n;
        r.error = "graph has " + std::to_string(n) + " vertices, limit " + std::to_string(max_n);
      } else {
        r = check_graph(corpus[i], options);
      }
    } catch (const std::exception& e) {
      r.spec = corpus[i];
      r.error = e.what();
    }
    report.graphs[i] = std::move(r);
  });
  return report;
}

/// Every family at every size up to max_n, a few seeds for the random ones.
inline std::vector<GeneratorSpec> default_corpus(std::size_t max_n, std::uint64_t seed = 1) {
  std::vector<GeneratorSpec> out;
  const long m = static_cast<long>(max_n);
  for (long n = 1; n <= m; ++n) out.push_back({"path", {{"n", n}}, 0});
  for (long n = 3; n <= m; ++n) out.push_back({"cycle", {{"n", n}}, 0});
  for (long n = 1; n <= m; ++n) out.push_back({"complete", {{"n", n}}, 0});
  for (long l = 0; l < m; ++l) out.push_back({"star", {{"leaves", l}}, 0});
  for (long s = 1; s <= m; ++s)
    for (long l = 0; s * (l + 1) <= m; ++l) out.push_back({"caterpillar", {{"spine", s}, {"legs", l}}, 0});
  for (long legs = 1; legs < m; ++legs)
    for (long len = 1; legs * len + 1 <= m; ++len) out.push_back({"spider", {{"legs", legs}, {"len", len}}, 0});
  for (long n = 1; n <= m; ++n)
    for (std::uint64_t r = 0; r < 3; ++r) out.push_back({"random_tree", {{"n", n}}, seed + r});
  for (long n = 2; n <= m; ++n)
    for (long p : {30, 50, 70})
      for (std::uint64_t r = 0; r < 2; ++r) out.push_back({"random_connected", {{"n", n}, {"p", p}}, seed + r});
  for (long r = 1; r <= m; ++r)
    for (long c = r; r * c <= m; ++c) out.push_back({"grid", {{"rows", r}, {"cols", c}}, 0});
  return out;
}

inline json to_json_value(const GeneratorSpec& spec) {
  return json{{"family", spec.family}, {"params", spec.params}, {"seed", spec.rng_seed}};
}

inline json to_json_value(const SuiteReport& report, bool timings) {
  json graphs = json::array();
  std::map<std::string, std::pair<std::size_t, std::size_t>> totals;
  for (auto& g : report.graphs) {
    json checks = json::object();
    for (auto& c : g.checks) {
      json entry{{"passed", c.outcome.passed}, {"cases", c.outcome.cases}};
      if (!c.outcome.passed) entry["detail"] = c.outcome.detail;
      if (!c.outcome.data.empty()) entry["data"] = c.outcome.data;
      if (timings) entry["millis"] = c.millis;
      checks[c.name] = entry;
      auto& t = totals[c.name];
      (c.outcome.passed ? t.first : t.second) += 1;
    }
    json entry{{"spec", to_json_value(g.spec)}, {"n", g.n}, {"m", g.m}, {"ok", g.ok()}, {"checks", checks}};
    if (!g.error.empty()) entry["error"] = g.error;
    graphs.push_back(entry);
  }
  json summary = json::object();
  for (auto& [name, t] : totals) summary[name] = {{"passed", t.first}, {"failed", t.second}};
  return json{{"ok", report.ok()},
              {"graphs_total", report.graphs.size()},
              {"graphs_failed", report.failed_graphs()},
              {"summary", summary},
              {"graphs", graphs}};
}

/// CSV with one row per (graph, budget): whether cpw <= k - 1 and what it cost.
inline std::string run_bench(const std::vector<GeneratorSpec>& corpus, const std::vector<std::size_t>& budgets,
                             const SolverOptions& options = {}) {
  std::ostringstream out;
  out << "family,params,seed,n,m,k,decision,states,sub_states,recursive_calls,millis\n";
  for (auto& spec : corpus) {
    const Graph g(generate(spec).edges);
    for (auto k : budgets) {
      const auto start = std::chrono::steady_clock::now();
      BasicSolver<1> solver({g, g.vertices(), k, true}, options);
      const auto r = solver.run();
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << spec.family << ",\"" << format_params(spec.params) << "\"," << spec.rng_seed << ',' << g.order() << ','
          << g.size() << ',' << k << ',' << (r.decision ? 1 : 0) << ',' << r.stats.states << ','
          << r.stats.sub_states << ',' << r.stats.recursive_calls << ',' << ms << '\n';
    }
  }
  return out.str();
}

}  // namespace cpw

#endif  // CPW_WORKBENCH_HPP
