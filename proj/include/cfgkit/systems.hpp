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

#ifndef CFGKIT_SYSTEMS_HPP
#define CFGKIT_SYSTEMS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cfgkit/errors.hpp"
#include "cfgkit/linear_system.hpp"
#include "cfgkit/stats.hpp"
#include "cfgkit/uld.hpp"

namespace cfgkit {

namespace detail {

// Variables e[x->m] over ⋃ (M \ M_a) for a in U_m ∪ L_m, in name order.
inline std::set<ElementId> e_sources(const IrreducibleEntry& entry) {
  std::set<ElementId> out;
  for (const auto& [a, names] : entry.missing) out.insert(names.begin(), names.end());
  return out;
}

inline std::vector<std::pair<VarId, Integer>> sum_terms(const std::vector<ElementId>& xs,
                                                        const ElementId& m, int sign) {
  std::vector<std::pair<VarId, Integer>> terms;
  for (const auto& x : xs) terms.emplace_back(VarId::e(x, m), sign);
  return terms;
}

}  // namespace detail

/// The threshold system of meet-irreducible m:
///   w >= 1                          when U_m = {0},
///   w <= Σ_{x ∈ M\M_a} e_x  (a ∈ U_m) and Σ_{x ∈ M\M_a} e_x < w  (a ∈ L_m) otherwise.
/// Variables: w[m] first, then e[x->m] by x.
inline IneqSystem build_threshold_system(const IrreducibleContext& ctx, const ElementId& m) {
  const IrreducibleEntry& entry = ctx.at(m);
  IneqSystem sys;
  const VarId w = VarId::w(m);
  sys.add_variable(w);
  if (entry.starts_at_bottom(ctx.bottom)) {
    sys.add_constraint(LinearConstraint({{w, 1}}, Relation::GreaterEq, 1));
    return sys;
  }
  for (const auto& x : detail::e_sources(entry)) sys.add_variable(VarId::e(x, m));
  for (const auto& a : entry.upper) {
    auto terms = detail::sum_terms(entry.missing.at(a), m, -1);
    terms.emplace_back(w, 1);
    sys.add_constraint(LinearConstraint(std::move(terms), Relation::LessEq, 0));
  }
  for (const auto& a : entry.lower) {
    auto terms = detail::sum_terms(entry.missing.at(a), m, 1);
    terms.emplace_back(w, -1);
    sys.add_constraint(LinearConstraint(std::move(terms), Relation::Less, 0));
  }
  return sys;
}

/// Replaces every strict `lhs < rhs` by `lhs + 1 <= rhs`. For the threshold
/// systems this preserves nonnegative feasibility because all strict rows
/// are homogeneous and solutions may be scaled.
inline IneqSystem make_nonstrict(const IneqSystem& sys) {
  IneqSystem out;
  for (const auto& v : sys.variables()) out.add_variable(v);
  for (auto c : sys.constraints()) {
    if (c.is_strict()) {
      c.relation = Relation::LessEq;
      c.rhs -= 1;
    }
    out.add_constraint(std::move(c));
  }
  return out;
}

namespace detail {

inline Integer floor_of(const Rational& q) {
  Integer n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

// Sets each w[m] to the smallest U-constraint sum (or 1 when U_m = {0}).
inline void assign_thresholds(IntegerSolution& sol, const IrreducibleContext& ctx,
                              const std::vector<ElementId>& ms) {
  for (const auto& m : ms) {
    const IrreducibleEntry& entry = ctx.at(m);
    if (entry.starts_at_bottom(ctx.bottom)) {
      sol.values[VarId::w(m)] = 1;
      continue;
    }
    std::optional<Integer> best;
    for (const auto& a : entry.upper) {
      Integer sum = 0;
      for (const auto& x : entry.missing.at(a)) sum += sol.get(VarId::e(x, m));
      if (!best || sum < *best) best = sum;
    }
    sol.values[VarId::w(m)] = *best;
  }
}

}  // namespace detail

/// Turns a rational solution of make_nonstrict(E(m)) into a nonnegative
/// integer solution of E(m): e_x := floor(2N·e_x) with N the number of
/// e-variables, w := min over a ∈ U_m of Σ_{x ∈ M\M_a} e_x. The result is
/// checked against `strict`; a failure throws InternalError.
inline IntegerSolution integerize(const Solution& rational, const IneqSystem& strict,
                                  const IrreducibleContext& ctx, const ElementId& m) {
  const Integer scale = 2 * Integer(strict.e_variable_count());
  IntegerSolution out;
  for (const auto& v : strict.variables())
    if (!v.is_w()) out.values[v] = detail::floor_of(Rational(scale) * rational.at(v));
  detail::assign_thresholds(out, ctx, {m});
  ++check_counters().integerizations;
  if (auto bad = out.first_violation(strict))
    throw InternalError("integerized solution violates " +
                        (*bad < strict.constraints().size() ? strict.constraints()[*bad].str()
                                                            : std::string("nonnegativity")));
  return out;
}

/// Union of the renamed per-m systems plus e[m1->m2] = e[m2->m1] for every
/// pair whose two orientations both occur.
inline IneqSystem build_joint_system(const IrreducibleContext& ctx) {
  IneqSystem omega;
  for (const auto& m : ctx.meet_irreducibles) {
    IneqSystem part = build_threshold_system(ctx, m);
    for (const auto& v : part.variables()) omega.add_variable(v);
    for (const auto& c : part.constraints()) omega.add_constraint(c);
  }
  const auto vars = omega.variables();
  for (const auto& v : vars) {
    if (v.is_w() || !(v.source < v.target)) continue;
    VarId mirror = VarId::e(v.target, v.source);
    if (omega.has_variable(mirror))
      omega.add_constraint(LinearConstraint({{v, 1}, {mirror, -1}}, Relation::Equal, 0));
  }
  return omega;
}

/// Joint integerization of a rational solution of make_nonstrict(Ω): every
/// e-variable is scaled by 2·N_total and floored (mirror pairs share a value,
/// so equalities survive), then thresholds are recomputed. If the check
/// against the strict system fails, falls back to exact scaling by the least
/// common denominator.
inline IntegerSolution integerize_joint(const Solution& rational, const IneqSystem& strict,
                                        const IrreducibleContext& ctx) {
  const Integer scale = 2 * Integer(strict.e_variable_count());
  IntegerSolution out;
  for (const auto& v : strict.variables())
    if (!v.is_w()) out.values[v] = detail::floor_of(Rational(scale) * rational.at(v));
  detail::assign_thresholds(out, ctx, ctx.meet_irreducibles);
  ++check_counters().integerizations;
  if (out.satisfies(strict)) return out;

  Integer lcd = 1;
  for (const auto& [v, q] : rational.values) lcd = boost::multiprecision::lcm(lcd, boost::multiprecision::denominator(q));
  IntegerSolution exact;
  for (const auto& v : strict.variables())
    exact.values[v] = boost::multiprecision::numerator(rational.at(v) * Rational(lcd));
  if (!exact.satisfies(strict)) throw InternalError("joint integerization failed");
  return exact;
}

}  // namespace cfgkit

#endif  // CFGKIT_SYSTEMS_HPP
