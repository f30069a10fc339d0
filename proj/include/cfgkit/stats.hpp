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

#ifndef CFGKIT_STATS_HPP
#define CFGKIT_STATS_HPP

#include <atomic>
#include <cstdint>

namespace cfgkit {

/// Process-wide counters of always-on invariant checks. Read by the
/// acceptance suite to show the checks actually ran.
struct CheckCounters {
  std::atomic<std::uint64_t> fires{0};            // chip conservation
  std::atomic<std::uint64_t> commutations{0};     // diamond property
  std::atomic<std::uint64_t> rediscoveries{0};    // shot-vector consistency
  std::atomic<std::uint64_t> reachability{0};     // shot order vs. dag reachability
  std::atomic<std::uint64_t> heights{0};          // height = |M|
  std::atomic<std::uint64_t> integerizations{0};  // integer solution re-checked
};

inline CheckCounters& check_counters() {
  static CheckCounters counters;
  return counters;
}

}  // namespace cfgkit

#endif  // CFGKIT_STATS_HPP
