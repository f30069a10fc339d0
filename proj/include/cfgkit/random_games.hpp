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

#ifndef CFGKIT_RANDOM_GAMES_HPP
#define CFGKIT_RANDOM_GAMES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfgkit/game.hpp"
#include "cfgkit/multigraph.hpp"

namespace cfgkit {

struct RandomGameParams {
  std::size_t max_vertices = 5;       // non-sink vertices
  Count max_multiplicity = 3;
  Count chips_per_degree = 2;         // initial chips <= chips_per_degree * deg⁺
  bool require_simple = true;
  std::size_t max_attempts = 10'000;
  std::size_t cap = 100'000;
};

struct RandomGame {
  MultiGraph graph;
  Configuration initial;
  LabeledSpace space;
};

/// Draws games until one terminates (and is simple, if requested). Vertices
/// are v1..vk plus a sink "s"; every vertex keeps at least one edge to the
/// sink so no closed component can form.
inline RandomGame random_game(std::mt19937_64& rng, const RandomGameParams& p = {}) {
  for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, p.max_vertices)(rng);
    std::vector<VertexId> names{"s"};
    for (std::size_t i = 1; i <= k; ++i) names.push_back("v" + std::to_string(i));
    MultiGraph g(names);
    const std::size_t sink = g.index_of("s");
    std::uniform_int_distribution<Count> mult(0, p.max_multiplicity);
    std::uniform_int_distribution<Count> sink_mult(1, p.max_multiplicity);
    std::bernoulli_distribution edge(0.5);
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (u == sink) continue;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (v != sink && v != u && edge(rng)) g.set_multiplicity(u, v, mult(rng));
      g.set_multiplicity(u, sink, sink_mult(rng));
    }
    Configuration o{std::vector<Count>(g.size(), 0)};
    for (std::size_t v = 0; v < g.size(); ++v)
      if (v != sink) o.chips[v] = std::uniform_int_distribution<Count>(0, p.chips_per_degree * g.out_degree(v))(rng);
    LabeledSpace space;
    try {
      space = generate_space(g, o, p.cap);
    } catch (const CapExceeded&) {
      continue;
    }
    if (p.require_simple && !is_simple(space)) continue;
    return {std::move(g), std::move(o), std::move(space)};
  }
  throw InternalError("random_game: no acceptable game found");
}

}  // namespace cfgkit

#endif  // CFGKIT_RANDOM_GAMES_HPP
