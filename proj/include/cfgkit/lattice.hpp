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

#ifndef CFGKIT_LATTICE_HPP
#define CFGKIT_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "cfgkit/errors.hpp"
#include "cfgkit/poset.hpp"

namespace cfgkit {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// Raised by validate_lattice. `x`/`y` have no unique join (`upper`) or meet;
/// `bounds` lists their minimal upper (maximal lower) bounds, possibly empty.
class NotALattice : public InvalidInput {
 public:
  NotALattice(ElementId x, ElementId y, bool upper, std::vector<ElementId> bounds)
      : InvalidInput(describe(x, y, upper, bounds)),
        x(std::move(x)), y(std::move(y)), upper(upper), bounds(std::move(bounds)) {}

  ElementId x, y;
  bool upper;
  std::vector<ElementId> bounds;

 private:
  static std::string describe(const ElementId& x, const ElementId& y, bool upper,
                              const std::vector<ElementId>& bounds) {
    std::string s = "not a lattice: " + x + " and " + y + " have ";
    if (bounds.empty()) return s + "no common " + (upper ? "upper" : "lower") + " bound";
    s += upper ? "minimal upper bounds" : "maximal lower bounds";
    for (const auto& b : bounds) s += " " + b;
    return s;
  }
};

/// A validated finite lattice over a CoverDag. Immutable once built.
///
/// Meets and joins are tabulated; meet-irreducibles M and join-irreducibles J
/// are kept in element (lexicographic) order, and the per-element sets
/// M_x = {m in M : x <= m} and J_x = {j in J : j <= x} are bitsets indexed by
/// position in M and J respectively.
class Lattice {
 public:
  const CoverDag& dag() const { return dag_; }
  std::size_t size() const { return dag_.size(); }
  const ElementId& name(std::size_t x) const { return dag_.name(x); }
  std::size_t index_of(std::string_view id) const { return dag_.index_of(id); }

  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  const Bitset& up_set(std::size_t x) const { return up_[x]; }
  const Bitset& down_set(std::size_t x) const { return down_[x]; }

  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * size() + y]; }

  const std::vector<std::size_t>& meet_irreducibles() const { return M_; }
  const std::vector<std::size_t>& join_irreducibles() const { return J_; }
  /// Position of x in meet_irreducibles(), or npos.
  std::size_t m_position(std::size_t x) const { return m_pos_[x]; }
  std::size_t j_position(std::size_t x) const { return j_pos_[x]; }
  const Bitset& M_above(std::size_t x) const { return M_above_[x]; }
  const Bitset& J_below(std::size_t x) const { return J_below_[x]; }

  /// Element indices of M \ M_x in element order.
  std::vector<std::size_t> missing_meet_irreducibles(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < M_.size(); ++p)
      if (!M_above_[x].test(p)) out.push_back(M_[p]);
    return out;
  }

  /// Number of covers on a longest chain from bottom to top.
  std::size_t height() const { return height_; }

  friend Lattice validate_lattice(CoverDag dag);

 private:
  CoverDag dag_;
  std::size_t bottom_ = 0, top_ = 0, height_ = 0;
  std::vector<Bitset> up_, down_;
  std::vector<std::uint32_t> meet_, join_;
  std::vector<std::size_t> M_, J_, m_pos_, j_pos_;
  std::vector<Bitset> M_above_, J_below_;
};

namespace detail {

// Least element of `bounds` w.r.t. `cone` (up-sets for joins, down-sets for
// meets), or npos when the set has no least element.
inline std::size_t least_in(const Bitset& bounds, const std::vector<Bitset>& cone) {
  const std::size_t want = bounds.count();
  for (auto z = bounds.find_first(); z != Bitset::npos; z = bounds.find_next(z))
    if (cone[z].count() == want && cone[z].is_subset_of(bounds)) return z;
  return npos;
}

inline std::vector<ElementId> extremal_names(const CoverDag& dag, const Bitset& set,
                                             const std::vector<Bitset>& opposite_cone) {
  std::vector<ElementId> out;
  for (auto z = set.find_first(); z != Bitset::npos; z = set.find_next(z))
    if ((opposite_cone[z] & set).count() == 1) out.push_back(dag.name(z));
  return out;
}

}  // namespace detail

/// Checks that every pair of elements has a unique meet and join and derives
/// the irreducible machinery. Throws NotALattice or InvalidInput (empty).
inline Lattice validate_lattice(CoverDag dag) {
  const std::size_t n = dag.size();
  if (n == 0) throw InvalidInput("empty poset");
  if (n > std::numeric_limits<std::uint32_t>::max()) throw InvalidInput("poset too large");

  Lattice lat;
  lat.up_.assign(n, Bitset(n));
  lat.down_.assign(n, Bitset(n));
  const auto& topo = dag.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    lat.up_[*it].set(*it);
    for (std::size_t y : dag.upper_covers(*it)) lat.up_[*it] |= lat.up_[y];
  }
  for (std::size_t x : topo) {
    lat.down_[x].set(x);
    for (std::size_t y : dag.lower_covers(x)) lat.down_[x] |= lat.down_[y];
  }

  lat.meet_.assign(n * n, 0);
  lat.join_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      Bitset ub = lat.up_[x] & lat.up_[y];
      std::size_t j = detail::least_in(ub, lat.up_);
      if (j == npos)
        throw NotALattice(dag.name(x), dag.name(y), true, detail::extremal_names(dag, ub, lat.down_));
      Bitset lb = lat.down_[x] & lat.down_[y];
      std::size_t m = detail::least_in(lb, lat.down_);
      if (m == npos)
        throw NotALattice(dag.name(x), dag.name(y), false, detail::extremal_names(dag, lb, lat.up_));
      lat.join_[x * n + y] = lat.join_[y * n + x] = static_cast<std::uint32_t>(j);
      lat.meet_[x * n + y] = lat.meet_[y * n + x] = static_cast<std::uint32_t>(m);
    }
  }
  lat.bottom_ = lat.meet_[0];
  lat.top_ = lat.join_[0];
  for (std::size_t x = 1; x < n; ++x) {
    lat.bottom_ = lat.meet_[lat.bottom_ * n + x];
    lat.top_ = lat.join_[lat.top_ * n + x];
  }

  lat.m_pos_.assign(n, npos);
  lat.j_pos_.assign(n, npos);
  for (std::size_t x = 0; x < n; ++x) {
    if (dag.upper_covers(x).size() == 1) {
      lat.m_pos_[x] = lat.M_.size();
      lat.M_.push_back(x);
    }
    if (dag.lower_covers(x).size() == 1) {
      lat.j_pos_[x] = lat.J_.size();
      lat.J_.push_back(x);
    }
  }
  lat.M_above_.assign(n, Bitset(lat.M_.size()));
  lat.J_below_.assign(n, Bitset(lat.J_.size()));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t p = 0; p < lat.M_.size(); ++p)
      if (lat.up_[x].test(lat.M_[p])) lat.M_above_[x].set(p);
    for (std::size_t p = 0; p < lat.J_.size(); ++p)
      if (lat.down_[x].test(lat.J_[p])) lat.J_below_[x].set(p);
  }

  std::vector<std::size_t> depth(n, 0);
  for (std::size_t x : topo)
    for (std::size_t y : dag.upper_covers(x)) depth[y] = std::max(depth[y], depth[x] + 1);
  lat.height_ = depth[lat.top_];
  lat.dag_ = std::move(dag);
  return lat;
}

/// Checks x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) over all ordered triples.
inline bool is_distributive(const Lattice& lat) {
  const std::size_t n = lat.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z)
        if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) return false;
  return true;
}

}  // namespace cfgkit

#endif  // CFGKIT_LATTICE_HPP
