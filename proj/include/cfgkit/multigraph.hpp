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

#ifndef CFGKIT_MULTIGRAPH_HPP
#define CFGKIT_MULTIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cfgkit/errors.hpp"
#include "cfgkit/poset.hpp"

namespace cfgkit {

using VertexId = std::string;
using Count = std::uint64_t;

/// Directed multigraph with edge multiplicities E(u, v); loops allowed.
/// Vertices are kept in lexicographic order and addressed by index.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (const auto& v : vertices)
      if (v.empty() || std::any_of(v.begin(), v.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; }))
        throw InvalidInput("invalid vertex id '" + v + "'");
    vertices_ = std::move(vertices);
    mult_.assign(vertices_.size() * vertices_.size(), 0);
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& name(std::size_t v) const { return vertices_[v]; }
  std::size_t find(std::string_view id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end() || *it != id) return size();
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::size_t index_of(std::string_view id) const {
    std::size_t i = find(id);
    if (i == size()) throw InvalidInput("unknown vertex '" + std::string(id) + "'");
    return i;
  }

  Count multiplicity(std::size_t u, std::size_t v) const { return mult_[u * size() + v]; }
  void set_multiplicity(std::size_t u, std::size_t v, Count k) { mult_[u * size() + v] = k; }
  void add_edges(std::size_t u, std::size_t v, Count k) { mult_[u * size() + v] += k; }

  Count out_degree(std::size_t v) const {
    Count d = 0;
    for (std::size_t u = 0; u < size(); ++u) d += multiplicity(v, u);
    return d;
  }
  Count in_degree(std::size_t v) const {
    Count d = 0;
    for (std::size_t u = 0; u < size(); ++u) d += multiplicity(u, v);
    return d;
  }
  Count loops(std::size_t v) const { return multiplicity(v, v); }
  /// No outgoing non-loop edge.
  bool is_sink(std::size_t v) const { return out_degree(v) == loops(v); }

  /// Nonzero entries (u, v, k) in index order.
  std::vector<std::tuple<std::size_t, std::size_t, Count>> edges() const {
    std::vector<std::tuple<std::size_t, std::size_t, Count>> out;
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = 0; v < size(); ++v)
        if (multiplicity(u, v)) out.emplace_back(u, v, multiplicity(u, v));
    return out;
  }

  bool is_acyclic() const {
    std::vector<int> state(size(), 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
      state[u] = 1;
      for (std::size_t v = 0; v < size(); ++v) {
        if (!multiplicity(u, v)) continue;
        if (state[v] == 1) return false;
        if (state[v] == 0 && !dfs(v)) return false;
      }
      state[u] = 2;
      return true;
    };
    for (std::size_t u = 0; u < size(); ++u)
      if (state[u] == 0 && !dfs(u)) return false;
    return true;
  }

  bool operator==(const MultiGraph&) const = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Count> mult_;
};

/// Chips per vertex, aligned with the owning graph's vertex order.
struct Configuration {
  std::vector<Count> chips;
  bool operator==(const Configuration&) const = default;
  auto operator<=>(const Configuration&) const = default;
};

/// Firings per vertex from the initial configuration.
struct ShotVector {
  std::vector<Count> fires;
  bool operator==(const ShotVector&) const = default;
  /// Componentwise order.
  bool leq(const ShotVector& o) const {
    for (std::size_t i = 0; i < fires.size(); ++i)
      if (fires[i] > o.fires[i]) return false;
    return true;
  }
};

namespace detail {
inline Count parse_count(const std::string& tok, std::size_t lineno) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(lineno, "expected a natural number, got '" + tok + "'");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw ParseError(lineno, "number out of range '" + tok + "'");
  }
}

template <class OnFields>
void for_each_record(std::string_view text, OnFields&& on_fields) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(std::move(t));
    if (!tok.empty()) on_fields(tok, lineno);
  }
}
}  // namespace detail

/// Graph format: lines "U V K" adding K >= 1 edges from U to V; a line with a
/// single id declares an isolated vertex. Repeated pairs accumulate.
inline MultiGraph parse_multigraph(std::string_view text) {
  std::vector<VertexId> names;
  std::vector<std::tuple<VertexId, VertexId, Count>> edges;
  detail::for_each_record(text, [&](const std::vector<std::string>& tok, std::size_t lineno) {
    if (tok.size() == 1) {
      names.push_back(tok[0]);
      return;
    }
    if (tok.size() != 3) throw ParseError(lineno, "expected 'U V K'");
    Count k = detail::parse_count(tok[2], lineno);
    if (k == 0) throw ParseError(lineno, "multiplicity must be at least 1");
    names.push_back(tok[0]);
    names.push_back(tok[1]);
    edges.emplace_back(tok[0], tok[1], k);
  });
  MultiGraph g(std::move(names));
  for (const auto& [u, v, k] : edges) g.add_edges(g.index_of(u), g.index_of(v), k);
  return g;
}

inline std::string to_text(const MultiGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) out << g.name(v) << '\n';
  for (const auto& [u, v, k] : g.edges()) out << g.name(u) << ' ' << g.name(v) << ' ' << k << '\n';
  return out.str();
}

/// Configuration format: lines "V N". Unlisted vertices hold 0 chips.
inline Configuration parse_configuration(std::string_view text, const MultiGraph& g) {
  Configuration c{std::vector<Count>(g.size(), 0)};
  std::vector<bool> seen(g.size(), false);
  detail::for_each_record(text, [&](const std::vector<std::string>& tok, std::size_t lineno) {
    if (tok.size() != 2) throw ParseError(lineno, "expected 'V N'");
    std::size_t v = g.find(tok[0]);
    if (v == g.size()) throw ParseError(lineno, "unknown vertex '" + tok[0] + "'");
    if (seen[v]) throw ParseError(lineno, "vertex '" + tok[0] + "' listed twice");
    seen[v] = true;
    c.chips[v] = detail::parse_count(tok[1], lineno);
  });
  return c;
}

inline std::string to_text(const Configuration& c, const MultiGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.size(); ++v) out << g.name(v) << ' ' << c.chips[v] << '\n';
  return out.str();
}

}  // namespace cfgkit

#endif  // CFGKIT_MULTIGRAPH_HPP
