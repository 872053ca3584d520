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


// Minimum l1 changes to preference values that make a maximal q-matching
// weakly stable, with optional value intervals and per-agent weights.

#ifndef STABLEFIX_BRIBERY_H_
#define STABLEFIX_BRIBERY_H_

#include <optional>
#include <span>
#include <vector>

#include "stablefix/instance.h"

namespace stablefix {

struct BriberyProblem {
  Graph graph;
  Values values;
  QMatching matching;
  std::optional<EndpointMap<ValueBound>> bounds;
  std::optional<std::vector<double>> weights;  // lambda_v > 0, default 1

  double weight(AgentId v) const { return weights ? (*weights)[v] : 1.0; }
  ValueBound bound(AgentId v, EdgeId e) const {
    return bounds ? (*bounds)[e][graph.side(e, v)] : ValueBound{};
  }
};

struct ValueChange {
  AgentId v;
  EdgeId e;
  double old_value;
  double new_value;

  friend bool operator==(const ValueChange&, const ValueChange&) = default;
};

struct Preprocessed {
  BriberyProblem problem;             // values clamped into their bounds
  std::vector<ValueChange> clamps;    // sorted by (edge, agent)
  std::vector<EdgeId> dominated;      // non-matching edges already dominated
  std::vector<EdgeId> blocking;       // the remaining non-matching edges
};

// Throws Infeasible if the matching is not maximal, Error on malformed
// bounds or weights.
Preprocessed preprocess(const BriberyProblem& prob);

struct DominationCost {
  double cost = 0.0;  // +inf when no threshold works
  double threshold = 0.0;
  std::vector<ValueChange> changes;
};

// Cheapest way to make v dominate every target edge: raise v's matching
// values to a threshold t and lower the targets to t.
DominationCost domination_cost(const BriberyProblem& prob, AgentId v,
                               std::span<const EdgeId> targets);

// Endpoints of blocking edge f that can dominate it: saturated agents whose
// lower bound on f does not exceed the upper bound of every matching edge.
std::vector<AgentId> candidate_endpoints(const BriberyProblem& prob,
                                         const MatchingView& view, EdgeId f);

struct BriberySolution {
  Values new_values;
  double cost = 0.0;
  std::vector<ValueChange> changed;  // merged per (edge, agent), sorted
  // Endpoint chosen to dominate each blocking edge, sorted by edge.
  std::vector<std::pair<EdgeId, AgentId>> dominators;
  // solve_2approx only: optimum >= lower_bound, cost <= 2 * lower_bound.
  std::optional<double> lower_bound;
};

// Exact; requires a bipartite graph.
BriberySolution solve_bipartite(const BriberyProblem& prob);

// Any graph; cost at most twice the optimum, with a per-instance certificate.
BriberySolution solve_2approx(const BriberyProblem& prob);

// Matching-edge values stay fixed; each blocking edge is lowered at its
// cheaper eligible endpoint.
BriberySolution solve_frozen(const BriberyProblem& prob);

// Builds a solution from a per-agent target assignment. Shared by the
// solvers and the brute-force oracle.
BriberySolution realize_assignment(
    const Preprocessed& pre,
    const std::vector<std::pair<EdgeId, AgentId>>& dominators);

}  // namespace stablefix

#endif  // STABLEFIX_BRIBERY_H_
