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

#ifndef CFGKIT_CFGKIT_HPP
#define CFGKIT_CFGKIT_HPP

#include "cfgkit/errors.hpp"
#include "cfgkit/game.hpp"
#include "cfgkit/lattice.hpp"
#include "cfgkit/linear_system.hpp"
#include "cfgkit/multigraph.hpp"
#include "cfgkit/poset.hpp"
#include "cfgkit/random_games.hpp"
#include "cfgkit/recognizers.hpp"
#include "cfgkit/simplex.hpp"
#include "cfgkit/stats.hpp"
#include "cfgkit/systems.hpp"
#include "cfgkit/uld.hpp"
#include "cfgkit/verifier.hpp"

namespace cfgkit {

/// Everything the recognizers need about a ULD lattice.
struct UldAnalysis {
  Lattice lattice;
  UldCertificate certificate;
  IrreducibleContext context;
};

/// validate_lattice -> check_uld -> compute_context.
inline UldAnalysis analyze(CoverDag dag) {
  Lattice lat = validate_lattice(std::move(dag));
  UldCertificate cert = check_uld(lat);
  IrreducibleContext ctx = compute_context(lat, cert);
  return {std::move(lat), std::move(cert), std::move(ctx)};
}

}  // namespace cfgkit

#endif  // CFGKIT_CFGKIT_HPP
