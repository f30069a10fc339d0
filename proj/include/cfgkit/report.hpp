// Copyright 2026 The cfgkit Authors
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

#ifndef CFGKIT_REPORT_HPP
#define CFGKIT_REPORT_HPP

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cfgkit/game.hpp"
#include "cfgkit/recognizers.hpp"
#include "cfgkit/uld.hpp"
#include "cfgkit/verifier.hpp"

// Machine-readable reports. Keys keep insertion order, so identical inputs
// serialize byte-identically.

namespace cfgkit {

using Json = nlohmann::ordered_json;

inline Json to_json(const IntegerSolution& sol, const IneqSystem& sys) {
  Json out = Json::object();
  for (const auto& v : sys.variables()) out[v.str()] = sol.at(v).str();
  return out;
}

inline Json to_json(const IrreducibleContext& ctx) {
  Json out = Json::object();
  out["bottom"] = ctx.bottom;
  out["meet_irreducibles"] = ctx.meet_irreducibles;
  Json entries = Json::array();
  for (const auto& e : ctx.entries) {
    Json j = Json::object();
    j["m"] = e.m;
    j["U"] = e.upper;
    j["L"] = e.lower;
    Json missing = Json::object();
    for (const auto& [a, xs] : e.missing) missing[a] = xs;
    j["missing"] = missing;
    entries.push_back(j);
  }
  out["entries"] = entries;
  return out;
}

inline Json to_json(const Recognition& r) {
  Json out = Json::object();
  if (const auto* rej = std::get_if<Rejection>(&r)) {
    out["decision"] = "rejected";
    out["model"] = to_string(rej->model);
    Json cert = Json::object();
    cert["subsystem"] = rej->subsystem;
    if (!rej->cycle.empty()) cert["cycle"] = rej->cycle;
    cert["message"] = rej->str();
    out["certificate"] = cert;
    return out;
  }
  const auto& w = std::get<GameWitness>(r);
  out["decision"] = "accepted";
  out["model"] = to_string(w.model);
  out["graph"] = to_text(w.graph);
  out["initial"] = to_text(w.initial, w.graph);
  Json sols = Json::object();
  for (const auto& [key, sol] : w.solutions) sols[key] = to_json(sol, w.systems.at(key));
  out["solutions"] = sols;
  return out;
}

inline Json to_json(const VerificationReport& rep) {
  Json out = Json::object();
  out["passed"] = rep.passed();
  Json stages = Json::object();
  stages["structure"] = rep.structure;
  stages["terminates"] = rep.terminates;
  stages["simple"] = rep.simple;
  stages["isomorphic"] = rep.isomorphic;
  out["stages"] = stages;
  if (rep.failed) {
    out["failed_stage"] = static_cast<int>(*rep.failed);
    out["detail"] = rep.detail;
  }
  out["configurations"] = rep.configurations;
  Json bij = Json::array();
  for (const auto& [a, b] : rep.bijection) bij.push_back(Json::array({a, b}));
  out["bijection"] = bij;
  return out;
}

/// Prose rendering of a recognition result.
inline std::string describe(const Recognition& r) {
  std::ostringstream out;
  if (const auto* rej = std::get_if<Rejection>(&r)) {
    out << "NO: not in L(" << to_string(rej->model) << ") -- " << rej->str() << "\n";
    return out.str();
  }
  const auto& w = std::get<GameWitness>(r);
  out << "YES: in L(" << to_string(w.model) << ")\n";
  out << "# support graph (U V multiplicity)\n" << to_text(w.graph);
  out << "# initial configuration (V chips)\n" << to_text(w.initial, w.graph);
  return out.str();
}

inline std::string describe(const VerificationReport& rep) {
  std::ostringstream out;
  auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
  out << "structure:  " << mark(rep.structure) << "\n";
  out << "terminates: " << mark(rep.terminates) << "\n";
  out << "simple:     " << mark(rep.simple) << "\n";
  out << "isomorphic: " << mark(rep.isomorphic) << "\n";
  if (rep.failed) out << "stage " << static_cast<int>(*rep.failed) << ": " << rep.detail << "\n";
  return out.str();
}

/// Graphviz rendering of a multigraph, multiplicities as edge labels.
inline std::string to_dot(const MultiGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& [u, v, k] : g.edges())
    out << "  \"" << g.name(u) << "\" -> \"" << g.name(v) << "\" [label=\"" << k << "\"];\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const LabeledSpace& space) {
  const auto names = space_element_names(space);
  std::ostringstream out;
  out << "digraph L {\n  rankdir=BT;\n";
  for (const auto& n : names) out << "  \"" << n << "\";\n";
  for (const auto& cv : space.covers)
    out << "  \"" << names[cv.from] << "\" -> \"" << names[cv.to] << "\" [label=\"" << space.vertices[cv.vertex]
        << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cfgkit

#endif  // CFGKIT_REPORT_HPP
