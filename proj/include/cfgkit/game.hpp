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

#ifndef CFGKIT_GAME_HPP
#define CFGKIT_GAME_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "cfgkit/errors.hpp"
#include "cfgkit/lattice.hpp"
#include "cfgkit/multigraph.hpp"
#include "cfgkit/poset.hpp"
#include "cfgkit/stats.hpp"

namespace cfgkit {

inline constexpr std::size_t kDefaultCap = 1'000'000;

/// v may fire in c: it has an outgoing non-loop edge and c(v) >= deg⁺(v),
/// loops included in the degree.
inline bool firable(const MultiGraph& g, const Configuration& c, std::size_t v) {
  if (v >= g.size()) throw InvalidInput("unknown vertex index " + std::to_string(v));
  return !g.is_sink(v) && c.chips[v] >= g.out_degree(v);
}

/// Sends one chip along every outgoing edge of v (loops return theirs).
inline Configuration fire(const MultiGraph& g, const Configuration& c, std::size_t v) {
  if (!firable(g, c, v)) throw PreconditionError("vertex '" + g.name(v) + "' is not firable");
  Configuration next = c;
  next.chips[v] -= g.out_degree(v);
  for (std::size_t u = 0; u < g.size(); ++u) next.chips[u] += g.multiplicity(v, u);
  ++check_counters().fires;
  CFGKIT_ENSURE(std::accumulate(next.chips.begin(), next.chips.end(), Count{0}) ==
                    std::accumulate(c.chips.begin(), c.chips.end(), Count{0}),
                "firing changed the number of chips");
  return next;
}

/// Strongly connected components of size >= 2 with no edge leaving them.
inline std::vector<std::vector<std::size_t>> closed_components(const MultiGraph& g) {
  const std::size_t n = g.size();
  std::vector<Bitset> reach(n, Bitset(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    reach[s].set(s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (g.multiplicity(u, v) && !reach[s].test(v)) {
          reach[s].set(v);
          stack.push_back(v);
        }
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> done(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t v = 0; v < n; ++v)
      if (reach[s].test(v) && reach[v].test(s)) {
        comp.push_back(v);
        done[v] = true;
      }
    if (comp.size() < 2) continue;
    // Closed iff everything reachable from the component is inside it.
    if (reach[s].count() == comp.size()) out.push_back(std::move(comp));
  }
  return out;
}

struct SpaceCover {
  std::size_t from = 0, to = 0;
  std::size_t vertex = 0;  // fired vertex
  bool operator==(const SpaceCover&) const = default;
};

/// Configuration space of a terminating game. Index 0 is the initial
/// configuration; covers are firings.
struct LabeledSpace {
  std::vector<VertexId> vertices;
  std::vector<Configuration> configurations;
  std::vector<ShotVector> shots;
  std::vector<SpaceCover> covers;  // sorted by (from, vertex)
  std::size_t bottom = 0;
  std::size_t top = 0;

  std::size_t size() const { return configurations.size(); }
  std::size_t find(const Configuration& c) const {
    auto it = std::find(configurations.begin(), configurations.end(), c);
    if (it == configurations.end()) throw InvalidInput("configuration not in space");
    return static_cast<std::size_t>(it - configurations.begin());
  }
};

enum class ExploreOrder { Ascending, Descending };

namespace detail {
struct ChipsHash {
  std::size_t operator()(const Configuration& c) const { return boost::hash_range(c.chips.begin(), c.chips.end()); }
};
}  // namespace detail

/// Breadth-first closure of the configurations reachable from `initial`,
/// deduplicated by chip vector. Refuses graphs with a closed component and
/// throws CapExceeded past `cap` configurations. Checks as it goes: chip
/// conservation, the diamond property for every pair of firable vertices,
/// consistency of rediscovered shot-vectors, and uniqueness of the fixed point.
inline LabeledSpace generate_space(const MultiGraph& g, const Configuration& initial,
                                   std::size_t cap = kDefaultCap,
                                   ExploreOrder order = ExploreOrder::Ascending) {
  if (cap == 0) throw PreconditionError("cap must be positive");
  if (initial.chips.size() != g.size()) throw PreconditionError("configuration does not match graph");
  if (auto closed = closed_components(g); !closed.empty()) {
    std::string names;
    for (std::size_t v : closed.front()) names += " " + g.name(v);
    throw InvalidInput("graph has a closed component:" + names);
  }
  const std::size_t n = g.size();
  std::vector<std::size_t> vorder(n);
  std::iota(vorder.begin(), vorder.end(), 0);
  if (order == ExploreOrder::Descending) std::reverse(vorder.begin(), vorder.end());

  LabeledSpace space;
  space.vertices = g.vertices();
  std::unordered_map<Configuration, std::size_t, detail::ChipsHash> index;
  space.configurations.push_back(initial);
  space.shots.push_back(ShotVector{std::vector<Count>(n, 0)});
  index.emplace(initial, 0);

  std::vector<std::size_t> fixed_points;
  for (std::size_t head = 0; head < space.configurations.size(); ++head) {
    const Configuration c = space.configurations[head];
    std::vector<std::size_t> live;
    for (std::size_t v : vorder)
      if (firable(g, c, v)) live.push_back(v);
    if (live.empty()) fixed_points.push_back(head);

    std::vector<Configuration> succ;
    for (std::size_t v : live) {
      Configuration next = fire(g, c, v);
      ShotVector shot = space.shots[head];
      ++shot.fires[v];
      auto [it, fresh] = index.emplace(next, space.configurations.size());
      if (fresh) {
        if (space.configurations.size() >= cap)
          throw CapExceeded("configuration space exceeds cap of " + std::to_string(cap));
        space.configurations.push_back(next);
        space.shots.push_back(std::move(shot));
      } else {
        ++check_counters().rediscoveries;
        CFGKIT_ENSURE(space.shots[it->second] == shot, "configuration reached with two shot-vectors");
      }
      space.covers.push_back({head, it->second, v});
      succ.push_back(std::move(next));
    }
    for (std::size_t a = 0; a < live.size(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b) {
        ++check_counters().commutations;
        CFGKIT_ENSURE(fire(g, succ[a], live[b]) == fire(g, succ[b], live[a]),
                      "firings of " + g.name(live[a]) + " and " + g.name(live[b]) + " do not commute");
      }
  }
  CFGKIT_ENSURE(fixed_points.size() == 1, "game without a unique fixed point");
  space.top = fixed_points.front();
  std::sort(space.covers.begin(), space.covers.end(), [](const SpaceCover& a, const SpaceCover& b) {
    return std::tie(a.from, a.vertex) < std::tie(b.from, b.vertex);
  });
  return space;
}

/// Every vertex fires at most once on the way to the fixed point.
inline bool is_simple(const LabeledSpace& space) {
  const auto& f = space.shots[space.top].fires;
  return std::all_of(f.begin(), f.end(), [](Count k) { return k <= 1; });
}

/// c1 can be transformed into c2 by firings. Decided by the shot-vector
/// order and by search in the cover dag; the two must agree.
inline bool reachable(const LabeledSpace& space, std::size_t c1, std::size_t c2) {
  if (c1 >= space.size() || c2 >= space.size()) throw InvalidInput("configuration not in space");
  const bool by_shots = space.shots[c1].leq(space.shots[c2]);
  std::vector<bool> seen(space.size(), false);
  std::vector<std::size_t> stack{c1};
  seen[c1] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    auto lo = std::lower_bound(space.covers.begin(), space.covers.end(), u,
                               [](const SpaceCover& c, std::size_t x) { return c.from < x; });
    for (; lo != space.covers.end() && lo->from == u; ++lo)
      if (!seen[lo->to]) {
        seen[lo->to] = true;
        stack.push_back(lo->to);
      }
  }
  ++check_counters().reachability;
  CFGKIT_ENSURE(by_shots == seen[c2], "shot-vector order disagrees with reachability");
  return by_shots;
}

/// Element names for a space. A configuration with a single outgoing firing
/// (a meet-irreducible of the lattice) is named after the vertex it fires,
/// suffixed "@k" when that is the vertex's k-th firing of a repeatedly firing
/// vertex. Every other configuration is named by its fired multiset, e.g.
/// "<a+b*2>". Falls back to "q<i>" if names would collide.
inline std::vector<ElementId> space_element_names(const LabeledSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::vector<std::size_t>> out_vertices(n);
  for (const auto& cv : space.covers) out_vertices[cv.from].push_back(cv.vertex);
  const auto& top_shots = space.shots[space.top].fires;
  std::vector<ElementId> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (out_vertices[i].size() == 1) {
      std::size_t v = out_vertices[i].front();
      names[i] = space.vertices[v];
      if (top_shots[v] > 1) names[i] += "@" + std::to_string(space.shots[i].fires[v] + 1);
      continue;
    }
    std::string s = "<";
    bool first = true;
    for (std::size_t v = 0; v < space.vertices.size(); ++v) {
      Count k = space.shots[i].fires[v];
      if (!k) continue;
      s += (first ? "" : "+") + space.vertices[v] + (k > 1 ? "*" + std::to_string(k) : "");
      first = false;
    }
    names[i] = s + ">";
  }
  std::set<ElementId> distinct(names.begin(), names.end());
  bool ok = distinct.size() == n && std::all_of(names.begin(), names.end(), [](const ElementId& e) { return is_valid_id(e); });
  if (!ok)
    for (std::size_t i = 0; i < n; ++i) names[i] = "q" + std::to_string(i);
  return names;
}

/// Cover dag of the space under space_element_names.
inline CoverDag space_to_cover_dag(const LabeledSpace& space) {
  const auto names = space_element_names(space);
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& cv : space.covers) pairs.emplace_back(names[cv.from], names[cv.to]);
  return CoverDag::from_pairs(names, pairs);
}

/// Space as a lattice. Every pair of configurations is also run through
/// reachable() (both routes compared) when the space has at most
/// `pairwise_limit` configurations.
inline Lattice space_to_lattice(const LabeledSpace& space, std::size_t pairwise_limit = 64) {
  Lattice lat = validate_lattice(space_to_cover_dag(space));
  if (space.size() <= pairwise_limit) {
    const auto names = space_element_names(space);
    for (std::size_t a = 0; a < space.size(); ++a)
      for (std::size_t b = 0; b < space.size(); ++b)
        CFGKIT_ENSURE(reachable(space, a, b) == lat.leq(lat.index_of(names[a]), lat.index_of(names[b])),
                      "lattice order disagrees with the game");
  }
  return lat;
}

/// Space rendered in the cover-list format with the fired vertex as a
/// trailing comment on each cover.
inline std::string to_labeled_cover_list(const LabeledSpace& space) {
  const auto names = space_element_names(space);
  std::string out;
  if (space.covers.empty()) out += names[0] + "\n";
  for (const auto& cv : space.covers)
    out += names[cv.from] + " " + names[cv.to] + "  # " + space.vertices[cv.vertex] + "\n";
  return out;
}

}  // namespace cfgkit

#endif  // CFGKIT_GAME_HPP
