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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cpw/cpw.hpp"

namespace cpw::cli {
namespace {

struct Common {
  std::size_t max_states = 0;
  std::size_t threads = 1;
};

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != item.size() || item[0] == '-') throw ParseError("'" + item + "' is not a vertex id");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

template <std::size_t Words>
BasicVertexSet<Words> to_set(const std::vector<Vertex>& ids, std::size_t n) {
  BasicVertexSet<Words> s;
  for (Vertex v : ids) {
    if (v >= n) throw ParseError("vertex " + std::to_string(v) + " is not in the graph");
    s.insert(v);
  }
  return s;
}

/// Calls fn.template operator()<Words>() with the narrowest set width that holds n vertices.
template <typename Fn>
int with_width(std::size_t n, Fn&& fn) {
  if (n <= 64) return fn.template operator()<1>();
  if (n <= 128) return fn.template operator()<2>();
  if (n <= 256) return fn.template operator()<4>();
  throw InvalidGraph("graphs above 256 vertices are not supported");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

SolverOptions solver_options(const Common& common) {
  SolverOptions options;
  options.max_states = common.max_states;
  return options;
}

int run_decide(const Common& common, const std::string& graph_path, std::size_t k,
               const std::optional<std::string>& seeds_text, bool strict, std::ostream& out) {
  const EdgeList list = read_edge_list_file(graph_path);
  return with_width(list.n, [&]<std::size_t W>() {
    const BasicGraph<W> g(list);
    if (g.order() == 0 || !is_connected(g)) throw DisconnectedGraph();
    SolverOptions options = solver_options(common);
    options.strict_step_rule = strict;
    BasicSolveRequest<W> req{g, g.vertices(), k, true};
    if (seeds_text) req = {g, to_set<W>(parse_ids(*seeds_text), g.order()), k, false};
    BasicSolver<W> solver(req, options);
    const auto r = solver.run();
    json j{{"decision", r.decision},
           {"k", k},
           {"seeds", seeds_text ? to_json_value(req.seeds) : json("any")},
           {"decomposition", r.decision ? to_json_value(*r.decomposition) : json(nullptr)},
           {"witness", r.decision ? to_json_value(*r.witness) : json(nullptr)},
           {"stats", to_json_value(r.stats)}};
    emit(out, j);
    return r.decision ? kOk : kNegative;
  });
}

int run_compute(const Common& common, const std::string& graph_path, std::ostream& out) {
  const EdgeList list = read_edge_list_file(graph_path);
  return with_width(list.n, [&]<std::size_t W>() {
    const BasicGraph<W> g(list);
    const auto r = compute_cpw(g, solver_options(common));
    json attempts = json::array();
    for (auto& [k, stats] : r.attempts) attempts.push_back({{"k", k}, {"stats", to_json_value(stats)}});
    emit(out, json{{"cpw", r.cpw}, {"decomposition", to_json_value(r.decomposition)}, {"attempts", attempts}});
    return kOk;
  });
}

int run_verify(const std::string& graph_path, const std::string& dec_path, const std::optional<std::string>& seeds_text,
               std::ostream& out) {
  const EdgeList list = read_edge_list_file(graph_path);
  return with_width(list.n, [&]<std::size_t W>() {
    const BasicGraph<W> g(list);
    const auto p = read_decomposition_file<W>(dec_path);
    const auto verdict = verify(g, p);
    json j = to_json_value(verdict);
    bool ok = verdict.ok();
    if (verdict.ok()) {
      j["connected"] = is_connected_decomposition(g, p);
      if (seeds_text) {
        const bool seeded = is_I_connected(g, p, to_set<W>(parse_ids(*seeds_text), g.order()));
        j["seed_connected"] = seeded;
        ok = ok && seeded;
      }
    }
    emit(out, j);
    return ok ? kOk : kNegative;
  });
}

int run_transform(const std::string& graph_path, const std::string& dec_path, const std::string& set_text,
                  std::size_t k, bool all, std::ostream& out, std::ostream& err) {
  const EdgeList list = read_edge_list_file(graph_path);
  return with_width(list.n, [&]<std::size_t W>() {
    const BasicGraph<W> g(list);
    const auto p = read_decomposition_file<W>(dec_path);
    const auto verdict = verify(g, p);
    if (!verdict.ok()) {
      err << "input is not a decomposition: " << verdict.violations.front().message << '\n';
      emit(out, to_json_value(verdict));
      return kNegative;
    }
    json j;
    BasicPathDecomposition<W> q;
    std::vector<BasicVertexSet<W>> sets;
    if (all) {
      sets = bottlenecks_in_bags(g, p, k);
      q = structure_all(g, p, k);
    } else {
      const auto s = to_set<W>(parse_ids(set_text), g.order());
      if (s.empty()) throw ParseError("--set is empty");
      sets.push_back(s);
      j["plan"] = to_json_value(plan(g, p, s));
      q = transform(g, p, s, k);
    }
    json structured = json::array();
    bool every = true;
    for (auto& s : sets) {
      const bool ok = is_structured(g, q, s);
      every = every && ok;
      structured.push_back({{"set", to_json_value(s)}, {"structured", ok}});
    }
    j["decomposition"] = to_json_value(q);
    j["report"] = {{"length_before", p.length()}, {"length_after", q.length()},    {"width_before", p.width()},
                   {"width_after", q.width()},    {"valid", verify(g, q).ok()},     {"structured", structured}};
    emit(out, j);
    return every ? kOk : kNegative;
  });
}

int run_oracle(const std::string& graph_path, std::optional<std::size_t> k, const std::optional<std::string>& seeds_text,
               bool pw, std::size_t cap, std::ostream& out) {
  const EdgeList list = read_edge_list_file(graph_path);
  OracleOptions options;
  options.max_vertices = cap;
  return with_width(list.n, [&]<std::size_t W>() {
    const BasicGraph<W> g(list);
    if (pw) {
      emit(out, json{{"pw", oracle_pathwidth(g, options)}});
      return kOk;
    }
    if (!k) {
      emit(out, json{{"cpw", oracle_cpw(g, options)}});
      return kOk;
    }
    std::optional<BasicPathDecomposition<W>> found;
    json seeds = "any";
    if (seeds_text) {
      const auto s = to_set<W>(parse_ids(*seeds_text), g.order());
      seeds = to_json_value(s);
      if (oracle_decide(g, s, *k, options)) found = oracle_decomposition(g, s, *k, options);
    } else {
      if (g.order() == 0 || !is_connected(g)) throw DisconnectedGraph();
      found = oracle_connected_decomposition(g, *k, options);
    }
    emit(out, json{{"decision", found.has_value()},
                   {"k", *k},
                   {"seeds", seeds},
                   {"decomposition", found ? to_json_value(*found) : json(nullptr)},
                   {"witness", nullptr},
                   {"stats", nullptr}});
    return found ? kOk : kNegative;
  });
}

int run_gen(const std::string& family, const std::string& params, std::uint64_t seed,
            const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  const auto generated = generate({family, parse_params(params), seed});
  if (generated.retries) err << "discarded " << generated.retries << " disconnected samples\n";
  if (!out_path) {
    write_edge_list(out, generated.edges);
    return kOk;
  }
  std::ofstream file(*out_path);
  if (!file) throw ParseError("cannot write '" + *out_path + "'");
  write_edge_list(file, generated.edges);
  return kOk;
}

int run_suite_cmd(const Common& common, std::size_t max_n, std::uint64_t seed, bool timings, long mutant,
                  const std::optional<std::string>& report_path, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.threads = common.threads;
  options.solver = solver_options(common);
  options.solver.jump_budget_offset = mutant;
  const auto report = run_suite(default_corpus(max_n, seed), max_n, options);
  const json j = to_json_value(report, timings);
  if (report_path) {
    std::ofstream file(*report_path);
    if (!file) throw ParseError("cannot write '" + *report_path + "'");
    file << j.dump(2) << '\n';
    out << json{{"ok", j["ok"]}, {"graphs_total", j["graphs_total"]}, {"graphs_failed", j["graphs_failed"]},
                {"summary", j["summary"]}}
               .dump(2)
        << '\n';
  } else {
    emit(out, j);
  }
  if (!report.ok()) err << report.failed_graphs() << " graph(s) failed\n";
  return report.ok() ? kOk : kNegative;
}

int run_bench_cmd(const Common& common, const std::optional<std::string>& family, const std::string& params,
                  std::uint64_t seed, std::size_t max_n, const std::string& budgets_text,
                  const std::optional<std::string>& out_path, std::ostream& out) {
  std::vector<GeneratorSpec> corpus;
  if (family)
    corpus.push_back({*family, parse_params(params), seed});
  else
    corpus = default_corpus(max_n, seed);
  std::vector<std::size_t> budgets;
  for (auto k : parse_ids(budgets_text)) budgets.push_back(k);
  if (budgets.empty()) throw ParseError("--k needs at least one budget");
  const std::string csv = run_bench(corpus, budgets, solver_options(common));
  if (out_path) {
    std::ofstream file(*out_path);
    if (!file) throw ParseError("cannot write '" + *out_path + "'");
    file << csv;
  } else {
    out << csv;
  }
  return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected pathwidth toolkit"};
  app.require_subcommand(1);
  Common common;
  if (const char* env = std::getenv("CPW_MAX_STATES")) {
    try {
      common.max_states = std::stoull(env);
    } catch (const std::logic_error&) {
      err << "CPW_MAX_STATES is not a number\n";
      return kUsage;
    }
  }
  app.add_option("--max-states", common.max_states, "abort a run after this many states (0: no limit)");

  std::string graph, dec, set, params, family_name, budgets = "2,3";
  std::optional<std::string> seeds, out_path, family, report;
  std::size_t k = 0, max_n = 8, cap = 20;
  std::optional<std::size_t> oracle_k;
  std::uint64_t seed = 0;
  bool strict = false, pw = false, all = false, timings = false;
  long mutant = 0;

  auto* decide_cmd = app.add_subcommand("decide", "is there a connected decomposition with bags of at most k vertices");
  decide_cmd->add_option("--graph", graph, "edge-list file")->required();
  decide_cmd->add_option("--k", k, "bag budget")->required()->check(CLI::PositiveNumber);
  decide_cmd->add_option("--seed,--seeds", seeds, "seed vertices a,b,...; default: any single vertex");
  decide_cmd->add_flag("--strict-step", strict, "new step bags must touch the previous bag");

  auto* compute_cmd = app.add_subcommand("compute", "connected pathwidth with an optimal decomposition");
  compute_cmd->add_option("--graph", graph, "edge-list file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition");
  verify_cmd->add_option("--graph", graph, "edge-list file")->required();
  verify_cmd->add_option("--dec", dec, "decomposition JSON")->required();
  verify_cmd->add_option("--seeds", seeds, "also require seed-connectivity for a,b,...");

  auto* transform_cmd = app.add_subcommand("transform", "make a decomposition structured around a set");
  transform_cmd->add_option("--graph", graph, "edge-list file")->required();
  transform_cmd->add_option("--dec", dec, "decomposition JSON")->required();
  transform_cmd->add_option("--k", k, "bag budget")->required()->check(CLI::PositiveNumber);
  auto* set_opt = transform_cmd->add_option("--set", set, "vertex set a,b,...");
  auto* all_opt = transform_cmd->add_flag("--all", all, "structure every bottleneck");
  set_opt->excludes(all_opt);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference answers");
  oracle_cmd->add_option("--graph", graph, "edge-list file")->required();
  oracle_cmd->add_option("--k", oracle_k, "bag budget; without it report the connected pathwidth");
  oracle_cmd->add_option("--seeds", seeds, "seed vertices a,b,...");
  oracle_cmd->add_flag("--pw", pw, "report the ordinary pathwidth");
  oracle_cmd->add_option("--cap", cap, "largest graph accepted");

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->add_option("--family", family_name, "family name")->required();
  gen_cmd->add_option("--params", params, "k=v,...");
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--out", out_path, "output file; default stdout");

  auto* suite_cmd = app.add_subcommand("suite", "cross-check everything on the default corpus");
  suite_cmd->add_option("--max-n", max_n, "largest graph in the corpus");
  suite_cmd->add_option("--report", report, "write the full JSON report here");
  suite_cmd->add_option("--threads", common.threads, "worker threads");
  suite_cmd->add_option("--seed", seed, "seed for the random families");
  suite_cmd->add_flag("--timings", timings, "include per-check milliseconds");
  suite_cmd->add_option("--mutant-offset", mutant, "perturb the recursive budget (should fail)");

  auto* bench_cmd = app.add_subcommand("bench", "state counts and times as CSV");
  bench_cmd->add_option("--family", family, "single family; default: the whole corpus");
  bench_cmd->add_option("--params", params, "k=v,...");
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--max-n", max_n, "corpus size limit");
  bench_cmd->add_option("--k", budgets, "budgets a,b,...");
  bench_cmd->add_option("--out", out_path, "output file; default stdout");

  std::vector<const char*> argv{"cpw"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (decide_cmd->parsed()) return run_decide(common, graph, k, seeds, strict, out);
    if (compute_cmd->parsed()) return run_compute(common, graph, out);
    if (verify_cmd->parsed()) return run_verify(graph, dec, seeds, out);
    if (transform_cmd->parsed()) {
      if (!all && set.empty()) throw ParseError("transform needs --set or --all");
      return run_transform(graph, dec, set, k, all, out, err);
    }
    if (oracle_cmd->parsed()) return run_oracle(graph, oracle_k, seeds, pw, cap, out);
    if (gen_cmd->parsed()) return run_gen(family_name, params, seed, out_path, out, err);
    if (suite_cmd->parsed()) return run_suite_cmd(common, max_n, seed, timings, mutant, report, out, err);
    if (bench_cmd->parsed()) return run_bench_cmd(common, family, params, seed, max_n, budgets, out_path, out);
  } catch (const StateLimitExceeded& e) {
    err << e.what() << '\n';
    return kResourceCap;
  } catch (const CapExceeded& e) {
    err << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cpw::cli
