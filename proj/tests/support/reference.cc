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


#include "reference.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "dense_lp.h"

namespace stablefix::testing {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Variables come in pairs (raise, lower) per value; x = p + raise - lower.
struct LpBuilder {
  LinearProgram lp;

  int add_value(double weight) {
    lp.c.push_back(weight);
    lp.c.push_back(weight);
    for (auto& row : lp.a) row.resize(lp.c.size(), 0.0);
    return static_cast<int>(lp.c.size()) - 2;
  }
  // sum coef_k * x_k <= rhs, with x_k = p_k + raise - lower.
  void add_row(const std::vector<std::pair<int, double>>& coefs,
               const std::vector<double>& p, double rhs) {
    std::vector<double> row(lp.c.size(), 0.0);
    for (auto [var, coef] : coefs) {
      row[var] += coef;
      row[var + 1] -= coef;
      rhs -= coef * p[var / 2];
    }
    lp.a.push_back(std::move(row));
    lp.b.push_back(rhs);
  }
};

}  // namespace

std::vector<EdgeId> classical_blocking(const Graph& g, const StrictOrders& orders,
                                       const QMatching& m) {
  std::vector<AgentId> partner(g.num_agents(), -1);
  for (EdgeId e : m.edges) {
    partner[g.edge(e).u] = g.edge(e).v;
    partner[g.edge(e).v] = g.edge(e).u;
  }
  auto prefers = [&](AgentId a, AgentId x, AgentId y) {
    const auto& list = *orders.order[a];
    return std::find(list.begin(), list.end(), x) < std::find(list.begin(), list.end(), y);
  };
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const AgentId u = g.edge(e).u, v = g.edge(e).v;
    if (partner[u] == v) continue;
    const bool u_wants = partner[u] == -1 || prefers(u, v, partner[u]);
    const bool v_wants = partner[v] == -1 || prefers(v, u, partner[v]);
    if (u_wants && v_wants) out.push_back(e);
  }
  return out;
}

double lp_domination_cost(const BriberyProblem& prob, AgentId v,
                          std::span<const EdgeId> targets) {
  if (targets.empty()) return 0.0;
  const Graph& g = prob.graph;
  std::vector<EdgeId> matched;
  for (EdgeId e : g.incident(v)) {
    if (std::binary_search(prob.matching.edges.begin(), prob.matching.edges.end(), e)) {
      matched.push_back(e);
    }
  }
  if (static_cast<int>(matched.size()) < g.capacity(v)) return kInf;

  LpBuilder b;
  std::vector<double> p;
  std::vector<int> var_m, var_t;
  for (EdgeId e : matched) {
    var_m.push_back(b.add_value(prob.weight(v)));
    p.push_back(prob.values.at(g, v, e));
  }
  for (EdgeId t : targets) {
    var_t.push_back(b.add_value(prob.weight(v)));
    p.push_back(prob.values.at(g, v, t));
  }
  auto bound_rows = [&](int var, ValueBound vb) {
    b.add_row({{var, -1.0}}, p, -vb.lower);
    if (std::isfinite(vb.upper)) b.add_row({{var, 1.0}}, p, vb.upper);
  };
  for (std::size_t i = 0; i < matched.size(); ++i) bound_rows(var_m[i], prob.bound(v, matched[i]));
  for (std::size_t i = 0; i < targets.size(); ++i) bound_rows(var_t[i], prob.bound(v, targets[i]));
  for (int t : var_t) {
    for (int e : var_m) b.add_row({{t, 1.0}, {e, -1.0}}, p, 0.0);
  }
  auto r = solve_lp(b.lp);
  return r ? *r : kInf;
}

double joint_lp_bribery(const BriberyProblem& prob) {
  const Graph& g = prob.graph;
  std::vector<char> in_m(g.num_edges(), 0);
  std::vector<int> load(g.num_agents(), 0);
  for (EdgeId e : prob.matching.edges) {
    in_m[e] = 1;
    ++load[g.edge(e).u];
    ++load[g.edge(e).v];
  }
  std::vector<EdgeId> outside;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in_m[e]) outside.push_back(e);
  }
  const int k = static_cast<int>(outside.size());
  double best = kInf;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    LpBuilder b;
    std::vector<double> p;
    EndpointMap<int> var = make_endpoint_map(g, -1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (int s = 0; s < 2; ++s) {
        const AgentId a = s == 0 ? g.edge(e).u : g.edge(e).v;
        var[e][s] = b.add_value(prob.weight(a));
        p.push_back(prob.values.p[e][s]);
      }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (int s = 0; s < 2; ++s) {
        const AgentId a = s == 0 ? g.edge(e).u : g.edge(e).v;
        const ValueBound vb = prob.bound(a, e);
        b.add_row({{var[e][s], -1.0}}, p, -vb.lower);
        if (std::isfinite(vb.upper)) b.add_row({{var[e][s], 1.0}}, p, vb.upper);
      }
    }
    bool possible = true;
    for (int i = 0; i < k && possible; ++i) {
      const EdgeId f = outside[i];
      const AgentId a = (mask >> i) & 1 ? g.edge(f).v : g.edge(f).u;
      if (load[a] < g.capacity(a)) {
        possible = false;
        break;
      }
      for (EdgeId e : g.incident(a)) {
        if (in_m[e]) {
          b.add_row({{var[f][g.side(f, a)], 1.0}, {var[e][g.side(e, a)], -1.0}}, p, 0.0);
        }
      }
    }
    if (!possible) continue;
    if (auto r = solve_lp(b.lp)) best = std::min(best, *r);
  }
  return best;
}

}  // namespace stablefix::testing
