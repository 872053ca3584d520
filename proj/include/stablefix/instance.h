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

// Instance model: a simple capacitated graph plus one of three preference
// encodings (real values, strict orders, or partial ranks counted from the
// worst edge).
//
// Agents are identified by their index in declaration order; that order is
// also the "id order" used for every canonical sort and tie-break. Edges are
// stored as (lower id, higher id) pairs sorted lexicographically, so an
// EdgeId comparison is a lexicographic comparison of the endpoint pairs.

#ifndef STABLEFIX_INSTANCE_H_
#define STABLEFIX_INSTANCE_H_

#include <array>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stablefix {

using AgentId = int;
using EdgeId = int;

struct Edge {
  AgentId u;  // u < v
  AgentId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Storage indexed by (edge, endpoint side). Side 0 belongs to Edge::u and
// side 1 to Edge::v; Graph::side() maps an agent to its side.
template <typename T>
using EndpointMap = std::vector<std::array<T, 2>>;

class Graph {
 public:
  Graph() = default;

  // Throws Error on self-loops, duplicate edges, unknown endpoints, duplicate
  // names, or capacities below one.
  Graph(std::vector<std::string> names, std::vector<int> capacities,
        std::vector<std::pair<AgentId, AgentId>> edges);

  // Unit capacities, agents named "0", "1", ...
  static Graph with_unit_capacities(
      int num_agents, std::vector<std::pair<AgentId, AgentId>> edges);

  int num_agents() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& name(AgentId a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<AgentId> find_agent(const std::string& name) const;

  int capacity(AgentId a) const { return capacities_[a]; }
  const std::vector<int>& capacities() const { return capacities_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Incident edges of `a`, ascending by edge id (equivalently by neighbor id).
  std::span<const EdgeId> incident(AgentId a) const { return incident_[a]; }
  int degree(AgentId a) const { return static_cast<int>(incident_[a].size()); }

  std::optional<EdgeId> find_edge(AgentId a, AgentId b) const;
  AgentId other(EdgeId e, AgentId a) const {
    return edges_[e].u == a ? edges_[e].v : edges_[e].u;
  }
  int side(EdgeId e, AgentId a) const { return edges_[e].u == a ? 0 : 1; }

  bool all_unit_capacities() const;

  // 2-coloring by BFS from the lowest uncolored id (that agent gets side 0).
  // Empty when the graph has an odd cycle.
  std::optional<std::vector<int>> bipartition() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> capacities_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::string, AgentId> by_name_;
};

template <typename T>
EndpointMap<T> make_endpoint_map(const Graph& g, const T& init) {
  return EndpointMap<T>(g.num_edges(), {init, init});
}

// Cardinal preference values p_v(e) >= 0; ties allowed.
struct Values {
  EndpointMap<double> p;

  double at(const Graph& g, AgentId v, EdgeId e) const {
    return p[e][g.side(e, v)];
  }
  double& at(const Graph& g, AgentId v, EdgeId e) { return p[e][g.side(e, v)]; }
};

// Strict preference lists, best first. An absent entry means the agent's
// list is not given (only meaningful for partially fixed preferences).
struct StrictOrders {
  std::vector<std::optional<std::vector<AgentId>>> order;

  bool complete() const;
};

// Partial rank assignment, positions counted from the worst edge (1 = worst,
// deg(v) = best).
struct Ranks {
  EndpointMap<std::optional<int>> r;

  const std::optional<int>& at(const Graph& g, AgentId v, EdgeId e) const {
    return r[e][g.side(e, v)];
  }
  std::optional<int>& at(const Graph& g, AgentId v, EdgeId e) {
    return r[e][g.side(e, v)];
  }
  bool complete() const;
};

// Closed interval a value must lie in after modification.
struct ValueBound {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

enum class EdgeColor { kRed, kBlue };

// Edge set with |M(v)| <= q(v). Edge ids are kept sorted.
struct QMatching {
  std::vector<EdgeId> edges;

  friend bool operator==(const QMatching&, const QMatching&) = default;
  friend auto operator<=>(const QMatching&, const QMatching&) = default;
};

struct Instance {
  Graph graph;
  std::optional<Values> values;
  std::optional<StrictOrders> orders;
  std::optional<Ranks> ranks;
};

// Membership flags and per-agent degree of a matching.
struct MatchingView {
  std::vector<char> in_matching;  // per edge
  std::vector<int> load;          // per agent

  MatchingView(const Graph& g, const QMatching& m);
  bool saturated(const Graph& g, AgentId v) const {
    return load[v] >= g.capacity(v);
  }
};

// Throws Error unless `m` is a sorted, duplicate-free q-matching of `g`.
void validate_q_matching(const Graph& g, const QMatching& m);

QMatching make_matching(std::vector<EdgeId> edges);

// Matched edges at `v`, ascending.
std::vector<EdgeId> matched_at(const Graph& g, const MatchingView& view,
                               AgentId v);

// Position-from-worst of every incident edge under complete strict orders.
Ranks ranks_from_orders(const Graph& g, const StrictOrders& orders);

// Converts ranks to strict orders. Unranked incident edges take the free
// positions in ascending order of edge id, lowest free position first.
StrictOrders orders_from_ranks(const Graph& g, const Ranks& ranks);

// Instance with the listed agents deleted. `old_to_new` maps each original
// agent to its new id or -1.
struct Reduced {
  Instance instance;
  std::vector<AgentId> old_to_new;
  std::vector<EdgeId> edge_old_to_new;
};
Reduced remove_agents(const Instance& inst, std::span<const AgentId> removed);

}  // namespace stablefix

#endif  // STABLEFIX_INSTANCE_H_
