// Copyright 2026 The stablefix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABLEFIX_STABILITY_H_
#define STABLEFIX_STABILITY_H_

#include <optional>
#include <vector>

#include "stablefix/instance.h"

namespace stablefix {

// Under real values, v strictly prefers a to b iff p_v(a) > p_v(b) + this.
inline constexpr double kStrictTolerance = 1e-9;

// Edges uv outside m such that each endpoint is unsaturated or strictly
// prefers the other endpoint to at least one of its current partners.
// Sorted ascending. Throws Error if m is not a q-matching.
std::vector<EdgeId> blocking_edges(const Graph& g, const Values& values,
                                   const QMatching& m);
std::vector<EdgeId> blocking_edges(const Graph& g, const StrictOrders& orders,
                                   const QMatching& m);

// Uses the instance's values, else its orders, else its (complete) ranks.
std::vector<EdgeId> blocking_edges(const Instance& inst, const QMatching& m);

struct StabilityReport {
  bool stable = true;
  std::optional<EdgeId> witness;  // lowest blocking edge when unstable
};

StabilityReport is_stable(const Graph& g, const Values& values,
                          const QMatching& m);
StabilityReport is_stable(const Graph& g, const StrictOrders& orders,
                          const QMatching& m);
StabilityReport is_stable(const Instance& inst, const QMatching& m);

// No edge outside m has two unsaturated endpoints.
bool is_maximal(const Graph& g, const QMatching& m);

// Edge f outside the matching is dominated at v (non-strictly, per the
// tolerance rule): v is saturated and no partner edge e has
// p_v(f) > p_v(e) + kStrictTolerance.
bool dominated_at(const Graph& g, const Values& values,
                  const MatchingView& view, AgentId v, EdgeId f);

}  // namespace stablefix

#endif  // STABLEFIX_STABILITY_H_
