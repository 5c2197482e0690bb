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

// JSON forms of the library types. Decompositions use {"bags": [[0, 1], [1, 2]]}.

#ifndef CPW_JSON_HPP
#define CPW_JSON_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "cpw/decomposition.hpp"
#include "cpw/errors.hpp"
#include "cpw/solver.hpp"
#include "cpw/structurer.hpp"

namespace cpw {

using json = nlohmann::json;

template <std::size_t Words>
json to_json_value(const BasicVertexSet<Words>& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

template <std::size_t Words>
json to_json_value(const BasicPathDecomposition<Words>& p) {
  json bags = json::array();
  for (auto& bag : p.bags) bags.push_back(to_json_value(bag));
  return json{{"bags", bags}};
}

/// Throws ParseError on anything but an object with a "bags" list of lists
/// of in-range vertex ids.
template <std::size_t Words>
BasicPathDecomposition<Words> decomposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bags") || !j.at("bags").is_array())
    throw ParseError("decomposition must be an object with a \"bags\" array");
  BasicPathDecomposition<Words> out;
  for (auto& bag : j.at("bags")) {
    if (!bag.is_array()) throw ParseError("every bag must be an array of vertex ids");
    BasicVertexSet<Words> s;
    for (auto& v : bag) {
      if (!v.is_number_unsigned()) throw ParseError("vertex ids must be non-negative integers");
      const auto id = v.get<std::uint64_t>();
      if (id >= BasicVertexSet<Words>::kCapacity) throw ParseError("vertex id " + std::to_string(id) + " too large");
      s.insert(static_cast<Vertex>(id));
    }
    out.bags.push_back(s);
  }
  return out;
}

template <std::size_t Words>
BasicPathDecomposition<Words> read_decomposition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return decomposition_from_json<Words>(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline json to_json_value(const Interval& iv) { return json::array({iv.start, iv.end}); }

inline json to_json_value(const Verdict& v) {
  json violations = json::array();
  for (auto& x : v.violations)
    violations.push_back({{"condition", condition_name(x.condition)},
                          {"vertices", x.vertices},
                          {"bags", x.bags},
                          {"message", x.message}});
  return json{{"ok", v.ok()},
              {"nonempty_bags", v.nonempty_bags},
              {"in_range", v.in_range},
              {"covers_vertices", v.covers_vertices},
              {"covers_edges", v.covers_edges},
              {"contiguous", v.contiguous},
              {"width", v.width},
              {"violations", violations}};
}

inline json to_json_value(const SolverStats& s) {
  return json{{"states", s.states},
              {"step_extensions", s.step_extensions},
              {"jump_extensions", s.jump_extensions},
              {"recursive_calls", s.recursive_calls},
              {"memo_hits", s.memo_hits},
              {"sub_states", s.sub_states}};
}

template <std::size_t Words>
json to_json_value(const BasicWitness<Words>& w) {
  json out = json::array();
  for (auto& e : w) {
    json entry{{"kind", witness_kind_name(e.kind)}, {"bag", to_json_value(e.bag)}, {"cover", to_json_value(e.cover)}};
    if (e.kind == WitnessKind::Jump) {
      entry["jump_base"] = to_json_value(e.jump_base);
      json branches = json::array();
      for (auto& [h, sub] : e.branches)
        branches.push_back({{"branch", to_json_value(h)}, {"decomposition", to_json_value(sub)}});
      entry["branches"] = branches;
    }
    out.push_back(entry);
  }
  return out;
}

template <std::size_t Words>
json to_json_value(const BasicBranchReport<Words>& r) {
  json comps = json::array();
  for (auto& c : r.components)
    comps.push_back({{"vertices", to_json_value(c.vertices)},
                     {"kind", branch_kind_name(c.kind)},
                     {"interval", to_json_value(c.span)}});
  return json{{"base", to_json_value(r.base)},
              {"interval", r.interval ? to_json_value(*r.interval) : json(nullptr)},
              {"components", comps}};
}

template <std::size_t Words>
json to_json_value(const BasicTransformPlan<Words>& p) {
  json in = json::array();
  for (auto& h : p.in_order) in.push_back(to_json_value(h));
  return json{{"s", to_json_value(p.s)},     {"t1", p.t1}, {"t2", p.t2}, {"c_min", p.c_min},
              {"x_star", to_json_value(p.x_star)}, {"d", p.d},   {"in_order", in}};
}

}  // namespace cpw

#endif  // CPW_JSON_HPP
