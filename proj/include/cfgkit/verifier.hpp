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

#ifndef CFGKIT_VERIFIER_HPP
#define CFGKIT_VERIFIER_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cfgkit/errors.hpp"
#include "cfgkit/game.hpp"
#include "cfgkit/lattice.hpp"
#include "cfgkit/recognizers.hpp"
#include "cfgkit/uld.hpp"

namespace cfgkit {

/// x ↦ M \ M_x. For a ULD lattice this is an order embedding into the
/// subsets of M (bottom ↦ ∅, top ↦ M).
struct CanonicalEncoding {
  std::vector<ElementId> labels;                              // M, element order
  std::map<ElementId, std::vector<ElementId>> sets;           // element -> sorted subset of labels

  std::set<std::vector<ElementId>> set_system() const {
    std::set<std::vector<ElementId>> out;
    for (const auto& [x, s] : sets) out.insert(s);
    return out;
  }
};

inline CanonicalEncoding canonical_encoding(const Lattice& lat, const UldCertificate&) {
  CanonicalEncoding enc;
  for (std::size_t m : lat.meet_irreducibles()) enc.labels.push_back(lat.name(m));
  std::set<std::vector<ElementId>> seen;
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::vector<ElementId> s;
    for (std::size_t m : lat.missing_meet_irreducibles(x)) s.push_back(lat.name(m));
    CFGKIT_ENSURE(seen.insert(s).second, "canonical encoding is not injective");
    enc.sets.emplace(lat.name(x), std::move(s));
  }
  return enc;
}

enum class IsoStatus { Isomorphic, NotIsomorphic, Indeterminate };

inline std::string to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Isomorphic: return "isomorphic";
    case IsoStatus::NotIsomorphic: return "not-isomorphic";
    case IsoStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

struct IsoResult {
  IsoStatus status = IsoStatus::NotIsomorphic;
  std::string reason;
  /// (space element name, lattice element name), sorted.
  std::vector<std::pair<ElementId, ElementId>> bijection;

  bool isomorphic() const { return status == IsoStatus::Isomorphic; }
};

namespace detail {

inline IsoResult iso_fail(std::string why) { return {IsoStatus::NotIsomorphic, std::move(why), {}}; }

// Looks for a bijection of label sets carrying one canonical set system onto
// the other. Labels are grouped by how many sets of each size contain them;
// ambiguous groups are searched exhaustively only when |M| <= 8.
inline IsoResult match_encodings(const CanonicalEncoding& a, const CanonicalEncoding& b) {
  if (a.sets.size() != b.sets.size()) return iso_fail("different number of elements");
  if (a.labels.size() != b.labels.size()) return iso_fail("different number of meet-irreducibles");
  const std::size_t k = a.labels.size();

  auto signatures = [k](const CanonicalEncoding& e) {
    std::map<ElementId, std::vector<std::size_t>> sig;
    for (const auto& l : e.labels) sig[l].assign(k + 1, 0);
    for (const auto& [x, s] : e.sets)
      for (const auto& l : s) ++sig[l][s.size()];
    return sig;
  };
  auto sa = signatures(a), sb = signatures(b);
  std::map<std::vector<std::size_t>, std::vector<ElementId>> ga, gb;
  for (const auto& l : a.labels) ga[sa[l]].push_back(l);
  for (const auto& l : b.labels) gb[sb[l]].push_back(l);
  if (ga.size() != gb.size()) return iso_fail("label signatures differ");
  bool unique = true;
  for (const auto& [sig, ls] : ga) {
    auto it = gb.find(sig);
    if (it == gb.end() || it->second.size() != ls.size()) return iso_fail("label signatures differ");
    unique = unique && ls.size() == 1;
  }
  if (!unique && k > 8) return {IsoStatus::Indeterminate, "ambiguous label signatures with |M| > 8", {}};

  const auto target = b.set_system();
  std::map<std::vector<ElementId>, ElementId> b_element;
  for (const auto& [x, s] : b.sets) b_element.emplace(s, x);

  std::vector<std::vector<ElementId>> groups_a, groups_b;
  for (const auto& [sig, ls] : ga) {
    groups_a.push_back(ls);
    groups_b.push_back(gb[sig]);
  }
  std::map<ElementId, ElementId> pi;
  std::function<std::optional<IsoResult>(std::size_t)> search = [&](std::size_t g) -> std::optional<IsoResult> {
    if (g == groups_a.size()) {
      IsoResult r{IsoStatus::Isomorphic, {}, {}};
      for (const auto& [x, s] : a.sets) {
        std::vector<ElementId> image;
        for (const auto& l : s) image.push_back(pi.at(l));
        std::sort(image.begin(), image.end());
        auto it = b_element.find(image);
        if (it == b_element.end()) return std::nullopt;
        r.bijection.emplace_back(x, it->second);
      }
      return r;
    }
    std::vector<ElementId> perm = groups_b[g];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) pi[groups_a[g][i]] = perm[i];
      if (auto r = search(g + 1)) return r;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  };
  if (auto r = search(0)) {
    std::sort(r->bijection.begin(), r->bijection.end());
    return *r;
  }
  return iso_fail("no label bijection maps one set system onto the other");
}

}  // namespace detail

/// Compares a generated space with a ULD lattice. When the game is simple and
/// its firing vertices are named by meet-irreducibles, the fired-vertex set of
/// each configuration must equal the canonical encoding of one element and
/// firings must match labelled covers. Otherwise both sides are reduced to
/// canonical set systems and matched up to a relabelling.
inline IsoResult spaces_isomorphic(const LabeledSpace& space, const Lattice& lat, const UldCertificate& cert) {
  const CanonicalEncoding enc = canonical_encoding(lat, cert);
  const auto names = space_element_names(space);
  const auto& top_fires = space.shots[space.top].fires;

  bool named = is_simple(space);
  for (std::size_t v = 0; v < space.vertices.size() && named; ++v)
    if (top_fires[v] > 0)
      named = std::binary_search(enc.labels.begin(), enc.labels.end(), space.vertices[v]);

  if (named) {
    if (space.size() != lat.size()) return detail::iso_fail("different number of elements");
    std::map<std::vector<ElementId>, ElementId> by_set;
    for (const auto& [x, s] : enc.sets) by_set.emplace(s, x);
    IsoResult r{IsoStatus::Isomorphic, {}, {}};
    std::vector<std::size_t> image(space.size());
    std::set<ElementId> used;
    for (std::size_t i = 0; i < space.size(); ++i) {
      std::vector<ElementId> fired;
      for (std::size_t v = 0; v < space.vertices.size(); ++v)
        if (space.shots[i].fires[v]) fired.push_back(space.vertices[v]);
      std::sort(fired.begin(), fired.end());
      auto it = by_set.find(fired);
      if (it == by_set.end()) return detail::iso_fail("configuration " + names[i] + " has no matching element");
      if (!used.insert(it->second).second) return detail::iso_fail("two configurations map to " + it->second);
      image[i] = lat.index_of(it->second);
      r.bijection.emplace_back(names[i], it->second);
    }
    if (space.covers.size() != lat.dag().covers().size()) return detail::iso_fail("different number of covers");
    for (const auto& cv : space.covers) {
      const std::size_t x = image[cv.from], y = image[cv.to];
      if (!lat.dag().is_cover(x, y) || lat.name(cert.label(lat, x, y)) != space.vertices[cv.vertex])
        return detail::iso_fail("firing " + space.vertices[cv.vertex] + " at " + names[cv.from] +
                                " is not a matching cover");
    }
    std::sort(r.bijection.begin(), r.bijection.end());
    return r;
  }

  Lattice generated = space_to_lattice(space);
  UldCertificate gcert;
  try {
    gcert = check_uld(generated);
  } catch (const NotUld& e) {
    return detail::iso_fail(std::string("generated space is not ULD: ") + e.what());
  }
  return detail::match_encodings(canonical_encoding(generated, gcert), enc);
}

enum class Stage { Structure = 1, Terminates = 2, Simple = 3, Isomorphic = 4 };

struct VerificationReport {
  bool structure = false;
  bool terminates = false;
  bool simple = false;
  bool isomorphic = false;
  std::optional<Stage> failed;
  std::string detail;
  std::size_t configurations = 0;
  std::vector<std::pair<ElementId, ElementId>> bijection;

  bool passed() const { return !failed.has_value(); }
};

/// Structural invariants a witness of the given model must satisfy. Returns
/// an explanation of the first violation, or empty.
inline std::string witness_structure_error(const GameWitness& w) {
  const MultiGraph& g = w.graph;
  if (w.initial.chips.size() != g.size()) return "initial configuration does not match the graph";
  std::vector<bool> sink(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) sink[v] = g.is_sink(v);
  if (std::find(sink.begin(), sink.end(), true) == sink.end()) return "no sink vertex";
  switch (w.model) {
    case Model::CFG:
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.loops(v)) return "loop at " + g.name(v);
        if (sink[v]) continue;
        bool to_sink = false;
        for (std::size_t u = 0; u < g.size(); ++u) to_sink = to_sink || (sink[u] && g.multiplicity(v, u) > 0);
        if (!to_sink) return g.name(v) + " has no edge to a sink";
      }
      break;
    case Model::ASM:
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
          if (!sink[a] && !sink[b] && g.multiplicity(a, b) != g.multiplicity(b, a))
            return "asymmetric edges between " + g.name(a) + " and " + g.name(b);
      break;
    case Model::ACFG:
      if (!g.is_acyclic()) return "support graph has a cycle";
      break;
  }
  return {};
}

/// Runs the four certification stages in order and stops at the first failure.
inline VerificationReport verify_witness(const GameWitness& w, const Lattice& lat, const UldCertificate& cert,
                                         std::size_t cap = kDefaultCap) {
  VerificationReport rep;
  if (auto err = witness_structure_error(w); !err.empty()) {
    rep.failed = Stage::Structure;
    rep.detail = err;
    return rep;
  }
  rep.structure = true;

  LabeledSpace space;
  try {
    space = generate_space(w.graph, w.initial, cap);
  } catch (const CapExceeded& e) {
    rep.failed = Stage::Terminates;
    rep.detail = e.what();
    return rep;
  } catch (const InvalidInput& e) {
    rep.failed = Stage::Terminates;
    rep.detail = e.what();
    return rep;
  }
  rep.terminates = true;
  rep.configurations = space.size();

  if (!is_simple(space)) {
    rep.failed = Stage::Simple;
    rep.detail = "some vertex fires more than once";
    return rep;
  }
  rep.simple = true;

  IsoResult iso = spaces_isomorphic(space, lat, cert);
  if (!iso.isomorphic()) {
    rep.failed = Stage::Isomorphic;
    rep.detail = to_string(iso.status) + ": " + iso.reason;
    return rep;
  }
  rep.isomorphic = true;
  rep.bijection = std::move(iso.bijection);
  return rep;
}

}  // namespace cfgkit

#endif  // CFGKIT_VERIFIER_HPP
