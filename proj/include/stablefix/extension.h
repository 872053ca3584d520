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


// Completing partially fixed rank lists so that a given q-matching is
// stable, the greedy strategy for fixed lists on an independent set, and an
// exact search for red-blue edge covers.

#ifndef STABLEFIX_EXTENSION_H_
#define STABLEFIX_EXTENSION_H_

#include <functional>
#include <optional>
#include <vector>

#include "stablefix/instance.h"

namespace stablefix {

struct ExtensionProblem {
  Graph graph;
  Ranks ranks;  // partial, positions from the worst edge
  QMatching matching;
  std::optional<EndpointMap<int>> lower;  // rank lower bounds, default 1

  int lower_at(AgentId v, EdgeId e) const {
    return lower ? (*lower)[e][graph.side(e, v)] : 1;
  }
};

// Throws Error on out-of-range or duplicate ranks, a matching that is not a
// maximal q-matching, an unranked matching edge at a saturated agent, bad
// lower bounds, or a fixed rank below its lower bound.
void validate_extension(const ExtensionProblem& ep);

// Ignores lower bounds. Empty when no completion makes the matching stable.
std::optional<Ranks> extend_ranks(const ExtensionProblem& ep);

// Receives the covered flags of the low slots (free positions below an
// agent's worst matching rank) before and after every augmentation.
using CoverageObserver = std::function<void(const std::vector<char>&)>;

// Honors lower bounds.
std::optional<Ranks> extend_ranks_lb(const ExtensionProblem& ep,
                                     const CoverageObserver& observer = {});

struct StrategyResult {
  StrictOrders orders;
  QMatching matching;
};

// `fixed` gives lists for an independent set of agents (other entries
// empty). Requires unit capacities.
StrategyResult sr_strat_independent(const Graph& g, const StrictOrders& fixed);

inline constexpr int kDefaultRedCap = 40;

// A matching of red edges touching at least one endpoint of every
// blue edge. Requires a bipartite graph; throws CapExceeded when there are
// more than `cap` red edges.
std::optional<QMatching> red_blue_cover(const Graph& g,
                                        const std::vector<EdgeColor>& colors,
                                        int cap = kDefaultRedCap);

}  // namespace stablefix

#endif  // STABLEFIX_EXTENSION_H_
