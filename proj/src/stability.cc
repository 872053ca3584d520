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

#include "stablefix/stability.h"

#include <limits>

#include "stablefix/error.h"

namespace stablefix {
namespace {

// Endpoint scores where larger is better, with the strictness tolerance.
std::vector<EdgeId> blocking_from_scores(const Graph& g,
                                         const EndpointMap<double>& score,
                                         double tolerance, const QMatching& m) {
  validate_q_matching(g, m);
  MatchingView view(g, m);
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Worst partner score per agent (+inf when unmatched).
  std::vector<double> worst(g.num_agents(), kInf);
  for (EdgeId e : m.edges) {
    const Edge& ed = g.edge(e);
    worst[ed.u] = std::min(worst[ed.u], score[e][0]);
    worst[ed.v] = std::min(worst[ed.v], score[e][1]);
  }
  auto wants = [&](AgentId a, EdgeId f) {
    if (!view.saturated(g, a)) return true;
    return score[f][g.side(f, a)] > worst[a] + tolerance;
  };

  std::vector<EdgeId> out;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (view.in_matching[f]) continue;
    if (wants(g.edge(f).u, f) && wants(g.edge(f).v, f)) out.push_back(f);
  }
  return out;
}

EndpointMap<double> scores_from_orders(const Graph& g,
                                       const StrictOrders& orders) {
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    if (g.degree(v) > 0 && !orders.order[v]) {
      throw Error("no preference order for agent " + g.name(v));
    }
  }
  Ranks ranks = ranks_from_orders(g, orders);
  EndpointMap<double> score = make_endpoint_map(g, 0.0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    score[e][0] = *ranks.r[e][0];
    score[e][1] = *ranks.r[e][1];
  }
  return score;
}

StabilityReport report(const std::vector<EdgeId>& blocking) {
  if (blocking.empty()) return {};
  return {false, blocking.front()};
}

}  // namespace

std::vector<EdgeId> blocking_edges(const Graph& g, const Values& values,
                                   const QMatching& m) {
  return blocking_from_scores(g, values.p, kStrictTolerance, m);
}

std::vector<EdgeId> blocking_edges(const Graph& g, const StrictOrders& orders,
                                   const QMatching& m) {
  return blocking_from_scores(g, scores_from_orders(g, orders), 0.0, m);
}

std::vector<EdgeId> blocking_edges(const Instance& inst, const QMatching& m) {
  if (inst.values) return blocking_edges(inst.graph, *inst.values, m);
  if (inst.orders) return blocking_edges(inst.graph, *inst.orders, m);
  if (inst.ranks) {
    if (!inst.ranks->complete()) throw Error("ranks are not complete");
    return blocking_edges(inst.graph, orders_from_ranks(inst.graph, *inst.ranks),
                          m);
  }
  throw Error("instance has no preferences");
}

StabilityReport is_stable(const Graph& g, const Values& values,
                          const QMatching& m) {
  return report(blocking_edges(g, values, m));
}

StabilityReport is_stable(const Graph& g, const StrictOrders& orders,
                          const QMatching& m) {
  return report(blocking_edges(g, orders, m));
}

StabilityReport is_stable(const Instance& inst, const QMatching& m) {
  return report(blocking_edges(inst, m));
}

bool is_maximal(const Graph& g, const QMatching& m) {
  validate_q_matching(g, m);
  MatchingView view(g, m);
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (view.in_matching[f]) continue;
    if (!view.saturated(g, g.edge(f).u) && !view.saturated(g, g.edge(f).v)) {
      return false;
    }
  }
  return true;
}

bool dominated_at(const Graph& g, const Values& values,
                  const MatchingView& view, AgentId v, EdgeId f) {
  if (!view.saturated(g, v)) return false;
  const double pf = values.at(g, v, f);
  for (EdgeId e : g.incident(v)) {
    if (view.in_matching[e] && pf > values.at(g, v, e) + kStrictTolerance) {
      return false;
    }
  }
  return true;
}

}  // namespace stablefix
