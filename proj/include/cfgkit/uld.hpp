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

#ifndef CFGKIT_ULD_HPP
#define CFGKIT_ULD_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cfgkit/errors.hpp"
#include "cfgkit/lattice.hpp"
#include "cfgkit/stats.hpp"

namespace cfgkit {

/// Raised by check_uld with the first offending cover in deterministic order.
class NotUld : public InvalidInput {
 public:
  NotUld(ElementId x, ElementId y, std::vector<ElementId> mx, std::vector<ElementId> my)
      : InvalidInput(describe(x, y, mx, my)),
        x(std::move(x)), y(std::move(y)), M_x(std::move(mx)), M_y(std::move(my)) {}

  ElementId x, y;
  std::vector<ElementId> M_x, M_y;

 private:
  static std::string join_names(const std::vector<ElementId>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s + "}";
  }
  static std::string describe(const ElementId& x, const ElementId& y,
                              const std::vector<ElementId>& mx, const std::vector<ElementId>& my) {
    return "not upper locally distributive: cover " + x + " < " + y + " has M_x = " +
           join_names(mx) + ", M_y = " + join_names(my);
  }
};

/// Labels every cover x < y by the unique meet-irreducible in M_x \ M_y.
class UldCertificate {
 public:
  /// Element index of the label of cover (x, y). Throws if (x, y) is no cover.
  std::size_t label(const Lattice& lat, std::size_t x, std::size_t y) const {
    const auto& covers = lat.dag().covers();
    auto it = std::lower_bound(covers.begin(), covers.end(), std::pair{x, y});
    if (it == covers.end() || *it != std::pair{x, y})
      throw PreconditionError(lat.name(x) + " < " + lat.name(y) + " is not a cover");
    return labels_[static_cast<std::size_t>(it - covers.begin())];
  }
  /// Labels aligned with lat.dag().covers().
  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t height() const { return height_; }

  friend UldCertificate check_uld(const Lattice& lat);

 private:
  std::vector<std::size_t> labels_;
  std::size_t height_ = 0;
};

/// ULD test via the meet-irreducible criterion: for every cover x < y,
/// M_y is a proper subset of M_x with exactly one element missing.
inline UldCertificate check_uld(const Lattice& lat) {
  auto names = [&](const Bitset& set) {
    std::vector<ElementId> out;
    for (auto p = set.find_first(); p != Bitset::npos; p = set.find_next(p))
      out.push_back(lat.name(lat.meet_irreducibles()[p]));
    return out;
  };
  UldCertificate cert;
  for (const auto& [x, y] : lat.dag().covers()) {
    const Bitset& mx = lat.M_above(x);
    const Bitset& my = lat.M_above(y);
    Bitset diff = mx - my;
    if (!my.is_subset_of(mx) || diff.count() != 1) throw NotUld(lat.name(x), lat.name(y), names(mx), names(my));
    cert.labels_.push_back(lat.meet_irreducibles()[diff.find_first()]);
  }
  cert.height_ = lat.meet_irreducibles().size();
  ++check_counters().heights;
  CFGKIT_ENSURE(lat.height() == cert.height_, "ULD lattice height differs from |M|");
  return cert;
}

/// Per-meet-irreducible data feeding the inequality systems.
struct IrreducibleEntry {
  ElementId m;
  /// Minimal elements at which an m-labelled cover starts.
  std::vector<ElementId> upper;
  /// Maximal elements outside the up-sets of `upper`.
  std::vector<ElementId> lower;
  /// a -> M \ M_a for every a in upper ∪ lower, names in element order.
  std::map<ElementId, std::vector<ElementId>> missing;

  bool starts_at_bottom(const ElementId& bottom) const {
    return upper.size() == 1 && upper.front() == bottom;
  }
};

struct IrreducibleContext {
  ElementId bottom;
  std::vector<ElementId> meet_irreducibles;
  std::vector<IrreducibleEntry> entries;  // aligned with meet_irreducibles

  const IrreducibleEntry& at(const ElementId& m) const {
    auto it = std::lower_bound(meet_irreducibles.begin(), meet_irreducibles.end(), m);
    if (it == meet_irreducibles.end() || *it != m)
      throw PreconditionError("'" + m + "' is not meet-irreducible");
    return entries[static_cast<std::size_t>(it - meet_irreducibles.begin())];
  }
  bool contains(const ElementId& m) const {
    return std::binary_search(meet_irreducibles.begin(), meet_irreducibles.end(), m);
  }
};

/// Computes U_m and L_m for every meet-irreducible m. U_m is derived twice,
/// by minimal-element search and as {j⁻ : j ∈ J, j ↓ m}; disagreement throws
/// InternalError.
inline IrreducibleContext compute_context(const Lattice& lat, const UldCertificate& cert) {
  const std::size_t n = lat.size();
  const auto& M = lat.meet_irreducibles();
  const auto& covers = lat.dag().covers();

  IrreducibleContext ctx;
  ctx.bottom = lat.name(lat.bottom());
  for (std::size_t m : M) ctx.meet_irreducibles.push_back(lat.name(m));

  std::vector<Bitset> starts(M.size(), Bitset(n));
  for (std::size_t k = 0; k < covers.size(); ++k)
    starts[lat.m_position(cert.labels()[k])].set(covers[k].first);

  for (std::size_t p = 0; p < M.size(); ++p) {
    const std::size_t m = M[p];
    IrreducibleEntry entry;
    entry.m = lat.name(m);

    Bitset upper(n), covered(n);
    for (auto x = starts[p].find_first(); x != Bitset::npos; x = starts[p].find_next(x)) {
      if ((lat.down_set(x) & starts[p]).count() == 1) {
        upper.set(x);
        covered |= lat.up_set(x);
      }
    }
    Bitset rest = ~covered;
    Bitset lower(n);
    for (auto x = rest.find_first(); x != Bitset::npos; x = rest.find_next(x))
      if ((lat.up_set(x) & rest).count() == 1) lower.set(x);

    // j ↓ m: j minimal outside the down-set of m; its lower cover is j⁻.
    Bitset via_join(n);
    Bitset outside = ~lat.down_set(m);
    for (std::size_t j : lat.join_irreducibles())
      if (outside.test(j) && (lat.down_set(j) & outside).count() == 1)
        via_join.set(lat.dag().lower_covers(j).front());
    if (via_join != upper)
      throw InternalError("U_" + entry.m + " disagrees with the join-irreducible characterization");

    for (auto x = upper.find_first(); x != Bitset::npos; x = upper.find_next(x))
      entry.upper.push_back(lat.name(x));
    for (auto x = lower.find_first(); x != Bitset::npos; x = lower.find_next(x))
      entry.lower.push_back(lat.name(x));
    for (const auto* side : {&entry.upper, &entry.lower}) {
      for (const auto& a : *side) {
        std::vector<ElementId> names;
        for (std::size_t x : lat.missing_meet_irreducibles(lat.index_of(a))) names.push_back(lat.name(x));
        CFGKIT_ENSURE(std::find(names.begin(), names.end(), entry.m) == names.end(),
                      "meet-irreducible occurs among its own variables");
        entry.missing.emplace(a, std::move(names));
      }
    }
    ctx.entries.push_back(std::move(entry));
  }
  return ctx;
}

}  // namespace cfgkit

#endif  // CFGKIT_ULD_HPP
