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

#ifndef CFGKIT_POSET_HPP
#define CFGKIT_POSET_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cfgkit/errors.hpp"

namespace cfgkit {

/// Identifier of a poset element. Nonempty, whitespace-free, never the sink id.
using ElementId = std::string;

/// Vertex name reserved for the sink of synthesized games.
inline constexpr std::string_view kSinkId = "__sink";

using Bitset = boost::dynamic_bitset<>;

inline bool is_valid_id(std::string_view id) {
  if (id.empty() || id == kSinkId) return false;
  return std::none_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isspace(c) || c == '#';
  });
}

/// Hasse diagram of a finite poset. Elements are stored in lexicographic
/// order and addressed by index; covers are transitively reduced and acyclic.
class CoverDag {
 public:
  CoverDag() = default;

  /// Builds a dag from arbitrary order-generating pairs. Throws InvalidInput
  /// on a cycle. Pairs implied by longer paths are dropped and reported in
  /// `warnings` when non-null.
  static CoverDag from_pairs(std::vector<ElementId> elements,
                             const std::vector<std::pair<ElementId, ElementId>>& pairs,
                             std::vector<std::string>* warnings = nullptr);

  std::size_t size() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const ElementId& name(std::size_t i) const { return elements_[i]; }

  /// Index of `id`, or size() when absent.
  std::size_t find(std::string_view id) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), id);
    if (it == elements_.end() || *it != id) return size();
    return static_cast<std::size_t>(it - elements_.begin());
  }
  std::size_t index_of(std::string_view id) const {
    std::size_t i = find(id);
    if (i == size()) throw InvalidInput("unknown element '" + std::string(id) + "'");
    return i;
  }

  /// Cover pairs (lower, upper), sorted by (name(lower), name(upper)).
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }
  /// Linear extension: every element precedes its upper covers.
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  bool is_cover(std::size_t x, std::size_t y) const {
    return std::binary_search(upper_[x].begin(), upper_[x].end(), y);
  }

 private:
  std::vector<ElementId> elements_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::size_t> topo_;
};

inline CoverDag CoverDag::from_pairs(std::vector<ElementId> elements,
                                     const std::vector<std::pair<ElementId, ElementId>>& pairs,
                                     std::vector<std::string>* warnings) {
  for (const auto& [x, y] : pairs) {
    elements.push_back(x);
    elements.push_back(y);
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& e : elements)
    if (!is_valid_id(e)) throw InvalidInput("invalid element id '" + e + "'");

  CoverDag dag;
  dag.elements_ = std::move(elements);
  const std::size_t n = dag.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [x, y] : pairs) {
    std::size_t a = dag.find(x), b = dag.find(y);
    if (a == b) throw InvalidInput("cycle detected: self-loop on '" + x + "'");
    succ[a].push_back(b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Kahn's algorithm; smallest index first keeps the order deterministic.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& s : succ)
    for (std::size_t y : s) ++indeg[y];
  std::vector<std::size_t> ready;
  for (std::size_t i = n; i-- > 0;)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::size_t x = ready.back();
    ready.pop_back();
    dag.topo_.push_back(x);
    for (auto it = succ[x].rbegin(); it != succ[x].rend(); ++it)
      if (--indeg[*it] == 0) ready.push_back(*it);
  }
  if (dag.topo_.size() != n) {
    for (std::size_t i = 0; i < n; ++i)
      if (indeg[i] != 0) throw InvalidInput("cycle detected through '" + dag.name(i) + "'");
  }

  // Strict descendants, computed in reverse topological order.
  std::vector<Bitset> below(n, Bitset(n));
  for (auto it = dag.topo_.rbegin(); it != dag.topo_.rend(); ++it) {
    for (std::size_t z : succ[*it]) {
      below[*it].set(z);
      below[*it] |= below[z];
    }
  }
  dag.upper_.assign(n, {});
  dag.lower_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : succ[x]) {
      bool implied = std::any_of(succ[x].begin(), succ[x].end(),
                                 [&](std::size_t z) { return z != y && below[z].test(y); });
      if (implied) {
        if (warnings)
          warnings->push_back("removed transitive edge " + dag.name(x) + " " + dag.name(y));
        continue;
      }
      dag.upper_[x].push_back(y);
      dag.lower_[y].push_back(x);
      dag.covers_.emplace_back(x, y);
    }
  }
  for (auto& l : dag.lower_) std::sort(l.begin(), l.end());
  return dag;
}

/// Parses the cover-list format: one "X Y" pair per line (X covered by Y),
/// '#' comments, blank lines ignored. A line holding a single id declares an
/// isolated element, which is how a one-element lattice is written.
inline CoverDag parse_poset(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::vector<ElementId> singles;
  std::vector<std::pair<ElementId, ElementId>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;
    if (tok.size() > 2) throw ParseError(lineno, "expected 'X Y', got " + std::to_string(tok.size()) + " fields");
    for (const auto& t : tok)
      if (!is_valid_id(t)) throw ParseError(lineno, "invalid element id '" + t + "'");
    if (tok.size() == 1)
      singles.push_back(tok[0]);
    else
      pairs.emplace_back(tok[0], tok[1]);
  }
  return CoverDag::from_pairs(std::move(singles), pairs, warnings);
}

/// Inverse of parse_poset. Isolated elements are written as single-id lines.
inline std::string to_cover_list(const CoverDag& dag) {
  std::ostringstream out;
  for (std::size_t i = 0; i < dag.size(); ++i)
    if (dag.upper_covers(i).empty() && dag.lower_covers(i).empty()) out << dag.name(i) << '\n';
  for (const auto& [x, y] : dag.covers()) out << dag.name(x) << ' ' << dag.name(y) << '\n';
  return out.str();
}

}  // namespace cfgkit

#endif  // CFGKIT_POSET_HPP
