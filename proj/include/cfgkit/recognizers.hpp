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

#ifndef CFGKIT_RECOGNIZERS_HPP
#define CFGKIT_RECOGNIZERS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cfgkit/errors.hpp"
#include "cfgkit/game.hpp"
#include "cfgkit/lattice.hpp"
#include "cfgkit/multigraph.hpp"
#include "cfgkit/simplex.hpp"
#include "cfgkit/systems.hpp"
#include "cfgkit/uld.hpp"

namespace cfgkit {

enum class Model { CFG, ASM, ACFG };

inline std::string to_string(Model m) {
  switch (m) {
    case Model::CFG: return "cfg";
    case Model::ASM: return "asm";
    case Model::ACFG: return "acfg";
  }
  return "?";
}

/// A game claimed to generate the input lattice. Non-sink vertices carry the
/// names of the meet-irreducibles they correspond to.
struct GameWitness {
  Model model = Model::CFG;
  MultiGraph graph;
  Configuration initial;
  /// Integer solutions used in the construction, keyed by m (or "Omega").
  std::map<std::string, IntegerSolution> solutions;
  std::map<std::string, IneqSystem> systems;
};

/// Why a lattice is not in the class: the infeasible subsystem (a
/// meet-irreducible's name or "Omega") or a cycle of the dependency graph.
struct Rejection {
  Model model = Model::CFG;
  std::string subsystem;
  std::vector<ElementId> cycle;

  std::string str() const {
    if (!cycle.empty()) {
      std::string s = "script-G cycle:";
      for (const auto& m : cycle) s += " " + m;
      return s;
    }
    return subsystem == "Omega" ? "Omega infeasible" : "E(" + subsystem + ") infeasible";
  }
};

using Recognition = std::variant<GameWitness, Rejection>;

inline bool accepted(const Recognition& r) { return std::holds_alternative<GameWitness>(r); }

namespace detail {

inline Count to_count(const Integer& v) {
  if (v < 0 || v > Integer(std::numeric_limits<Count>::max() / 4))
    throw InternalError("edge multiplicity out of range: " + v.str());
  return static_cast<Count>(v);
}

inline MultiGraph witness_vertices(const IrreducibleContext& ctx) {
  std::vector<VertexId> names(ctx.meet_irreducibles.begin(), ctx.meet_irreducibles.end());
  names.emplace_back(kSinkId);
  return MultiGraph(std::move(names));
}

// Directed construction from per-m integer solutions: E(x, m) = f_m(e_x),
// E(m, sink) = f_m(w) + Σ f_m(e_x); O(v) = deg⁺(v) for sources,
// deg⁺(v) - f_v(w) otherwise, 0 at the sink.
inline void build_directed_game(GameWitness& wit, const IrreducibleContext& ctx) {
  MultiGraph g = witness_vertices(ctx);
  const std::size_t sink = g.index_of(kSinkId);
  for (const auto& m : ctx.meet_irreducibles) {
    const IntegerSolution& f = wit.solutions.at(m);
    const std::size_t mv = g.index_of(m);
    Integer to_sink = f.at(VarId::w(m));
    for (const auto& [var, value] : f.values) {
      if (var.is_w()) continue;
      g.add_edges(g.index_of(var.source), mv, to_count(value));
      to_sink += value;
    }
    g.add_edges(mv, sink, to_count(to_sink));
  }
  Configuration o{std::vector<Count>(g.size(), 0)};
  for (const auto& m : ctx.meet_irreducibles) {
    const std::size_t v = g.index_of(m);
    const Count deg = g.out_degree(v);
    if (g.in_degree(v) == 0) {
      o.chips[v] = deg;
    } else {
      const Count w = to_count(wit.solutions.at(m).at(VarId::w(m)));
      CFGKIT_ENSURE(w <= deg, "negative initial chips at " + m);
      o.chips[v] = deg - w;
    }
  }
  wit.graph = std::move(g);
  wit.initial = std::move(o);
}

}  // namespace detail

/// Decides membership in the class generated by general chip-firing games:
/// every threshold system must be feasible. On success the witness is a
/// simple, loop-free game on M plus a sink.
inline Recognition recognize_cfg(const IrreducibleContext& ctx) {
  GameWitness wit;
  wit.model = Model::CFG;
  for (const auto& m : ctx.meet_irreducibles) {
    IneqSystem strict = build_threshold_system(ctx, m);
    auto rational = solve_nonneg(make_nonstrict(strict));
    if (!rational) return Rejection{Model::CFG, m, {}};
    wit.solutions.emplace(m, integerize(*rational, strict, ctx, m));
    wit.systems.emplace(m, std::move(strict));
  }
  detail::build_directed_game(wit, ctx);
  return wit;
}

/// Sandpile construction from an integer solution f of the joint system:
/// E(m1, m2) = E(m2, m1) = f(e[m1->m2]), E(m, sink) = f(w[m]) + deg⁻(m), and
/// O(m) = deg⁺(m) when m's own system is {w >= 1} (no e-variables target m),
/// deg⁺(m) - f(w[m]) otherwise. Needs only the system, not the lattice.
inline GameWitness sandpile_from_solution(const IneqSystem& omega, IntegerSolution f) {
  std::set<ElementId> ms, thresholded;
  for (const auto& var : omega.variables()) {
    ms.insert(var.target);
    if (!var.is_w()) {
      ms.insert(var.source);
      thresholded.insert(var.target);
    }
  }
  std::vector<VertexId> names(ms.begin(), ms.end());
  names.emplace_back(kSinkId);
  MultiGraph g(std::move(names));
  const std::size_t sink = g.index_of(kSinkId);
  for (const auto& var : omega.variables()) {
    if (var.is_w()) continue;
    const Count k = detail::to_count(f.at(var));
    const std::size_t a = g.index_of(var.source), b = g.index_of(var.target);
    CFGKIT_ENSURE(!omega.has_variable(VarId::e(var.target, var.source)) ||
                      f.at(VarId::e(var.target, var.source)) == f.at(var),
                  "mirror variables disagree");
    g.set_multiplicity(a, b, k);
    g.set_multiplicity(b, a, k);
  }
  for (const auto& m : ms) {
    const std::size_t v = g.index_of(m);
    g.add_edges(v, sink, detail::to_count(f.at(VarId::w(m))) + g.in_degree(v));
  }
  Configuration o{std::vector<Count>(g.size(), 0)};
  for (const auto& m : ms) {
    const std::size_t v = g.index_of(m);
    const Count deg = g.out_degree(v);
    o.chips[v] = thresholded.count(m) ? deg - detail::to_count(f.at(VarId::w(m))) : deg;
  }
  GameWitness wit;
  wit.model = Model::ASM;
  wit.graph = std::move(g);
  wit.initial = std::move(o);
  wit.solutions.emplace("Omega", std::move(f));
  wit.systems.emplace("Omega", omega);
  return wit;
}

/// Decides membership in the class generated by abelian sandpiles
/// (symmetric edge multiplicities between non-sink vertices) through the
/// joint system with mirror equalities.
inline Recognition recognize_asm(const IrreducibleContext& ctx) {
  IneqSystem omega = build_joint_system(ctx);
  auto rational = solve_nonneg(make_nonstrict(omega));
  if (!rational) return Rejection{Model::ASM, "Omega", {}};
  IntegerSolution f = integerize_joint(*rational, omega, ctx);
  if (ctx.meet_irreducibles.empty()) {
    GameWitness wit;
    wit.model = Model::ASM;
    wit.graph = detail::witness_vertices(ctx);
    wit.initial = Configuration{std::vector<Count>(1, 0)};
    return wit;
  }
  return sandpile_from_solution(omega, std::move(f));
}

/// Dependency digraph on M: m1 -> m2 iff m1 ∈ M \ M_a for some a ∈ U_{m2}.
struct DependencyGraph {
  std::vector<ElementId> vertices;
  std::vector<std::pair<ElementId, ElementId>> edges;  // sorted

  /// A directed cycle (first vertex not repeated), or empty when acyclic.
  std::vector<ElementId> find_cycle() const {
    std::map<ElementId, std::vector<ElementId>> adj;
    for (const auto& [a, b] : edges) adj[a].push_back(b);
    std::map<ElementId, int> state;
    std::vector<ElementId> path;
    std::vector<ElementId> cycle;
    std::function<bool(const ElementId&)> dfs = [&](const ElementId& u) {
      state[u] = 1;
      path.push_back(u);
      for (const auto& v : adj[u]) {
        if (state[v] == 1) {
          cycle.assign(std::find(path.begin(), path.end(), v), path.end());
          return true;
        }
        if (state[v] == 0 && dfs(v)) return true;
      }
      state[u] = 2;
      path.pop_back();
      return false;
    };
    for (const auto& v : vertices)
      if (state[v] == 0 && dfs(v)) return cycle;
    return {};
  }
  bool is_acyclic() const { return find_cycle().empty(); }
};

inline DependencyGraph build_dependency_graph(const IrreducibleContext& ctx) {
  DependencyGraph g;
  g.vertices = ctx.meet_irreducibles;
  for (const auto& m2 : ctx.meet_irreducibles) {
    std::set<ElementId> sources;
    const IrreducibleEntry& entry = ctx.at(m2);
    for (const auto& a : entry.upper)
      for (const auto& x : entry.missing.at(a)) sources.insert(x);
    for (const auto& m1 : sources) {
      CFGKIT_ENSURE(m1 != m2, "self-edge in the dependency graph");
      g.edges.emplace_back(m1, m2);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// Decides membership in the class generated by games on acyclic graphs:
/// the lattice must be CFG-generated and the dependency graph acyclic. The
/// witness keeps only the U-derived edge weights of the CFG solutions.
inline Recognition recognize_acfg(const IrreducibleContext& ctx) {
  Recognition base = recognize_cfg(ctx);
  if (!accepted(base)) {
    Rejection r = std::get<Rejection>(base);
    r.model = Model::ACFG;
    return r;
  }
  DependencyGraph dep = build_dependency_graph(ctx);
  if (auto cycle = dep.find_cycle(); !cycle.empty()) return Rejection{Model::ACFG, "script-G", cycle};

  GameWitness wit = std::get<GameWitness>(std::move(base));
  wit.model = Model::ACFG;
  for (const auto& m : ctx.meet_irreducibles) {
    const IrreducibleEntry& entry = ctx.at(m);
    std::set<ElementId> keep;
    for (const auto& a : entry.upper)
      for (const auto& x : entry.missing.at(a)) keep.insert(x);
    IntegerSolution& f = wit.solutions.at(m);
    for (auto& [var, value] : f.values)
      if (!var.is_w() && !keep.count(var.source)) value = 0;
    detail::assign_thresholds(f, ctx, {m});
    ++check_counters().integerizations;
    CFGKIT_ENSURE(f.satisfies(wit.systems.at(m)), "zeroed solution violates E(" + m + ")");
  }
  detail::build_directed_game(wit, ctx);
  CFGKIT_ENSURE(wit.graph.is_acyclic(), "acyclic witness construction produced a cycle");
  return wit;
}

inline Recognition recognize(Model model, const IrreducibleContext& ctx) {
  switch (model) {
    case Model::CFG: return recognize_cfg(ctx);
    case Model::ASM: return recognize_asm(ctx);
    case Model::ACFG: return recognize_acfg(ctx);
  }
  throw PreconditionError("unknown model");
}

/// Sufficient condition for every generating game to be simple: the graph
/// on M joining two labels that leave a common element is complete.
inline bool simple_only_sufficient(const Lattice& lat, const UldCertificate& cert) {
  const auto& M = lat.meet_irreducibles();
  std::vector<Bitset> adj(M.size(), Bitset(M.size()));
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::vector<std::size_t> labels;
    for (std::size_t y : lat.dag().upper_covers(x)) labels.push_back(lat.m_position(cert.label(lat, x, y)));
    for (std::size_t a : labels)
      for (std::size_t b : labels)
        if (a != b) adj[a].set(b);
  }
  for (std::size_t p = 0; p < M.size(); ++p)
    if (adj[p].count() != M.size() - 1) return false;
  return true;
}

}  // namespace cfgkit

#endif  // CFGKIT_RECOGNIZERS_HPP
