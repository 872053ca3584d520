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

#include "stablefix/instance.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "stablefix/error.h"

namespace stablefix {

Graph::Graph(std::vector<std::string> names, std::vector<int> capacities,
             std::vector<std::pair<AgentId, AgentId>> edges)
    : names_(std::move(names)), capacities_(std::move(capacities)) {
  const int n = num_agents();
  if (static_cast<int>(capacities_.size()) != n) {
    throw Error("capacity list does not match agent list");
  }
  for (AgentId a = 0; a < n; ++a) {
    if (capacities_[a] < 1) {
      throw Error("capacity < 1 for agent " + names_[a]);
    }
    if (!by_name_.emplace(names_[a], a).second) {
      throw Error("duplicate agent " + names_[a]);
    }
  }
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error("edge endpoint is not an agent");
    }
    if (a == b) throw Error("self-loop at agent " + names_[a]);
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error("duplicate edge " + names_[dup->u] + " " + names_[dup->v]);
  }
  incident_.assign(n, {});
  for (EdgeId e = 0; e < num_edges(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
}

Graph Graph::with_unit_capacities(
    int num_agents, std::vector<std::pair<AgentId, AgentId>> edges) {
  std::vector<std::string> names(num_agents);
  for (int a = 0; a < num_agents; ++a) names[a] = std::to_string(a);
  return Graph(std::move(names), std::vector<int>(num_agents, 1),
               std::move(edges));
}

std::optional<AgentId> Graph::find_agent(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(AgentId a, AgentId b) const {
  if (a == b) return std::nullopt;
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

bool Graph::all_unit_capacities() const {
  return std::all_of(capacities_.begin(), capacities_.end(),
                     [](int q) { return q == 1; });
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> color(num_agents(), -1);
  for (AgentId s = 0; s < num_agents(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<AgentId> queue{s};
    while (!queue.empty()) {
      AgentId a = queue.front();
      queue.pop_front();
      for (EdgeId e : incident_[a]) {
        AgentId b = other(e, a);
        if (color[b] == -1) {
          color[b] = 1 - color[a];
          queue.push_back(b);
        } else if (color[b] == color[a]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool StrictOrders::complete() const {
  return std::all_of(order.begin(), order.end(),
                     [](const auto& o) { return o.has_value(); });
}

bool Ranks::complete() const {
  return std::all_of(r.begin(), r.end(), [](const auto& pair) {
    return pair[0].has_value() && pair[1].has_value();
  });
}

MatchingView::MatchingView(const Graph& g, const QMatching& m)
    : in_matching(g.num_edges(), 0), load(g.num_agents(), 0) {
  for (EdgeId e : m.edges) {
    in_matching[e] = 1;
    ++load[g.edge(e).u];
    ++load[g.edge(e).v];
  }
}

void validate_q_matching(const Graph& g, const QMatching& m) {
  std::vector<int> load(g.num_agents(), 0);
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    EdgeId e = m.edges[i];
    if (e < 0 || e >= g.num_edges()) throw Error("matching edge out of range");
    if (i > 0 && m.edges[i - 1] >= e) {
      throw Error("matching edges must be sorted and distinct");
    }
    for (AgentId a : {g.edge(e).u, g.edge(e).v}) {
      if (++load[a] > g.capacity(a)) {
        throw Error("not a q-matching: agent " + g.name(a) +
                    " exceeds its capacity");
      }
    }
  }
}

QMatching make_matching(std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return QMatching{std::move(edges)};
}

std::vector<EdgeId> matched_at(const Graph& g, const MatchingView& view,
                               AgentId v) {
  std::vector<EdgeId> out;
  for (EdgeId e : g.incident(v)) {
    if (view.in_matching[e]) out.push_back(e);
  }
  return out;
}

Ranks ranks_from_orders(const Graph& g, const StrictOrders& orders) {
  Ranks ranks{make_endpoint_map<std::optional<int>>(g, std::nullopt)};
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    const auto& list = orders.order[v];
    if (!list) continue;
    const int d = static_cast<int>(list->size());
    for (int i = 0; i < d; ++i) {
      auto e = g.find_edge(v, (*list)[i]);
      if (!e) throw Error("order of " + g.name(v) + " lists a non-neighbor");
      ranks.at(g, v, *e) = d - i;
    }
  }
  return ranks;
}

StrictOrders orders_from_ranks(const Graph& g, const Ranks& ranks) {
  StrictOrders orders;
  orders.order.resize(g.num_agents());
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    const int d = g.degree(v);
    std::vector<AgentId> by_position(d + 1, -1);
    std::vector<EdgeId> unranked;
    for (EdgeId e : g.incident(v)) {
      if (const auto& r = ranks.at(g, v, e)) {
        by_position[*r] = g.other(e, v);
      } else {
        unranked.push_back(e);
      }
    }
    auto next = unranked.begin();
    for (int pos = 1; pos <= d; ++pos) {
      if (by_position[pos] == -1) by_position[pos] = g.other(*next++, v);
    }
    std::vector<AgentId> best_first(by_position.rbegin(),
                                    by_position.rend() - 1);
    orders.order[v] = std::move(best_first);
  }
  return orders;
}

Reduced remove_agents(const Instance& inst, std::span<const AgentId> removed) {
  const Graph& g = inst.graph;
  std::vector<char> gone(g.num_agents(), 0);
  for (AgentId a : removed) gone[a] = 1;

  Reduced out;
  out.old_to_new.assign(g.num_agents(), -1);
  std::vector<std::string> names;
  std::vector<int> caps;
  for (AgentId a = 0; a < g.num_agents(); ++a) {
    if (gone[a]) continue;
    out.old_to_new[a] = static_cast<AgentId>(names.size());
    names.push_back(g.name(a));
    caps.push_back(g.capacity(a));
  }
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (const Edge& e : g.edges()) {
    if (gone[e.u] || gone[e.v]) continue;
    edges.emplace_back(out.old_to_new[e.u], out.old_to_new[e.v]);
  }
  Graph reduced(std::move(names), std::move(caps), std::move(edges));

  // Order-preserving relabeling keeps the surviving edges in the same
  // relative order, so new ids can be assigned by a single scan.
  out.edge_old_to_new.assign(g.num_edges(), -1);
  EdgeId next = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!gone[g.edge(e).u] && !gone[g.edge(e).v]) out.edge_old_to_new[e] = next++;
  }

  Instance& r = out.instance;
  if (inst.values) {
    Values v{make_endpoint_map(reduced, 0.0)};
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (out.edge_old_to_new[e] >= 0) v.p[out.edge_old_to_new[e]] = inst.values->p[e];
    }
    r.values = std::move(v);
  }
  if (inst.ranks) {
    Ranks rk{make_endpoint_map<std::optional<int>>(reduced, std::nullopt)};
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (out.edge_old_to_new[e] >= 0) rk.r[out.edge_old_to_new[e]] = inst.ranks->r[e];
    }
    r.ranks = std::move(rk);
  }
  if (inst.orders) {
    StrictOrders o;
    o.order.resize(reduced.num_agents());
    for (AgentId a = 0; a < g.num_agents(); ++a) {
      if (gone[a] || !inst.orders->order[a]) continue;
      std::vector<AgentId> list;
      for (AgentId b : *inst.orders->order[a]) {
        if (!gone[b]) list.push_back(out.old_to_new[b]);
      }
      o.order[out.old_to_new[a]] = std::move(list);
    }
    r.orders = std::move(o);
  }
  r.graph = std::move(reduced);
  return out;
}

}  // namespace stablefix
