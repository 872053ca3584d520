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


#include "stablefix/bribery.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stablefix/error.h"
#include "stablefix/stability.h"
#include "stablefix/submodular.h"

namespace stablefix {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_problem(const BriberyProblem& prob) {
  const Graph& g = prob.graph;
  if (static_cast<int>(prob.values.p.size()) != g.num_edges()) {
    throw Error("values do not match the edge list");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (double p : prob.values.p[e]) {
      if (!std::isfinite(p) || p < 0) throw Error("values must be finite and >= 0");
    }
  }
  if (prob.weights) {
    if (static_cast<int>(prob.weights->size()) != g.num_agents()) {
      throw Error("weights do not match the agent list");
    }
    for (double w : *prob.weights) {
      if (!std::isfinite(w) || w <= 0) throw Error("weights must be positive");
    }
  }
  if (prob.bounds) {
    if (static_cast<int>(prob.bounds->size()) != g.num_edges()) {
      throw Error("bounds do not match the edge list");
    }
    for (const auto& pair : *prob.bounds) {
      for (const ValueBound& b : pair) {
        if (!(b.lower >= 0) || !std::isfinite(b.lower) || b.upper < b.lower) {
          throw Error("bounds must satisfy 0 <= l <= u");
        }
      }
    }
  }
  validate_q_matching(g, prob.matching);
}

// Per-agent cost evaluation with the matched edges precomputed.
class CostModel {
 public:
  explicit CostModel(const BriberyProblem& prob)
      : prob_(prob), view_(prob.graph, prob.matching) {
    matched_.resize(prob.graph.num_agents());
    for (AgentId v = 0; v < prob.graph.num_agents(); ++v) {
      matched_[v] = matched_at(prob.graph, view_, v);
    }
  }

  const MatchingView& view() const { return view_; }

  DominationCost evaluate(AgentId v, std::span<const EdgeId> targets,
                          bool want_changes) const {
    DominationCost out;
    if (targets.empty()) return out;
    const Graph& g = prob_.graph;
    const auto& mv = matched_[v];
    if (!view_.saturated(g, v)) {
      out.cost = kInf;
      return out;
    }
    double lo = 0.0, hi = kInf;
    for (EdgeId f : targets) lo = std::max(lo, prob_.bound(v, f).lower);
    for (EdgeId e : mv) hi = std::min(hi, prob_.bound(v, e).upper);
    if (lo > hi) {
      out.cost = kInf;
      return out;
    }
    std::vector<double> cand{lo, 0.0};
    if (std::isfinite(hi)) cand.push_back(hi);
    for (EdgeId e : mv) cand.push_back(prob_.values.at(g, v, e));
    for (EdgeId f : targets) cand.push_back(prob_.values.at(g, v, f));
    std::sort(cand.begin(), cand.end());
    auto phi = [&](double t) {
      double s = 0;
      for (EdgeId e : mv) s += std::max(0.0, t - prob_.values.at(g, v, e));
      for (EdgeId f : targets) s += std::max(0.0, prob_.values.at(g, v, f) - t);
      return s;
    };
    out.cost = kInf;
    for (double t : cand) {
      if (t < lo || t > hi) continue;
      double c = phi(t);
      if (c < out.cost - 1e-12) {
        out.cost = c;
        out.threshold = t;
      }
    }
    out.cost *= prob_.weight(v);
    if (want_changes) {
      const double t = out.threshold;
      for (EdgeId e : mv) {
        double p = prob_.values.at(g, v, e);
        if (p < t) out.changes.push_back({v, e, p, t});
      }
      for (EdgeId f : targets) {
        double p = prob_.values.at(g, v, f);
        if (p > t) out.changes.push_back({v, f, p, t});
      }
      std::sort(out.changes.begin(), out.changes.end(),
                [](const ValueChange& a, const ValueChange& b) { return a.e < b.e; });
    }
    return out;
  }

  double min_matched_upper(AgentId v) const {
    double hi = kInf;
    for (EdgeId e : matched_[v]) hi = std::min(hi, prob_.bound(v, e).upper);
    return hi;
  }
  double min_matched_value(AgentId v) const {
    double lo = kInf;
    for (EdgeId e : matched_[v]) lo = std::min(lo, prob_.values.at(prob_.graph, v, e));
    return lo;
  }

 private:
  const BriberyProblem& prob_;
  MatchingView view_;
  std::vector<std::vector<EdgeId>> matched_;
};

struct CoverSetup {
  std::vector<EdgeId> free;
  std::vector<std::pair<EdgeId, AgentId>> forced;
  std::vector<std::vector<EdgeId>> forced_at;  // per agent
};

CoverSetup classify(const Preprocessed& pre, const CostModel& model) {
  CoverSetup s;
  s.forced_at.resize(pre.problem.graph.num_agents());
  for (EdgeId f : pre.blocking) {
    auto cand = candidate_endpoints(pre.problem, model.view(), f);
    if (cand.empty()) {
      throw Infeasible("edge " + std::to_string(f) +
                       " cannot be dominated at either endpoint");
    }
    if (cand.size() == 1) {
      s.forced.emplace_back(f, cand[0]);
      s.forced_at[cand[0]].push_back(f);
    } else {
      s.free.push_back(f);
    }
  }
  return s;
}

// Sum of per-agent costs for targets = forced + assigned free edges.
// `first` and `second` give, per free edge, the agent it goes to when the
// edge is in / out of the set. `use_forced` decides whether forced edges are
// included (the decoupled bound counts them on both halves).
class CoverObjective {
 public:
  CoverObjective(const CostModel& model, const CoverSetup& setup, int n_agents)
      : model_(model), setup_(setup), targets_(n_agents) {}

  double operator()(const std::vector<char>& in, const std::vector<AgentId>& when_in,
                    const std::vector<AgentId>& when_out, bool use_forced) const {
    for (auto& t : targets_) t.clear();
    touched_.clear();
    auto add = [&](AgentId v, EdgeId f) {
      if (targets_[v].empty()) touched_.push_back(v);
      targets_[v].push_back(f);
    };
    if (use_forced) {
      for (auto [f, v] : setup_.forced) add(v, f);
    }
    for (std::size_t i = 0; i < setup_.free.size(); ++i) {
      AgentId v = in[i] ? when_in[i] : when_out[i];
      if (v >= 0) add(v, setup_.free[i]);
    }
    double total = 0;
    for (AgentId v : touched_) {
      std::sort(targets_[v].begin(), targets_[v].end());
      total += model_.evaluate(v, targets_[v], false).cost;
    }
    return total;
  }

 private:
  const CostModel& model_;
  const CoverSetup& setup_;
  mutable std::vector<std::vector<EdgeId>> targets_;
  mutable std::vector<AgentId> touched_;
};

BriberySolution finalize(const Preprocessed& pre, Values new_values,
                         std::vector<std::pair<EdgeId, AgentId>> dominators) {
  const BriberyProblem& prob = pre.problem;
  const Graph& g = prob.graph;
  Values original = prob.values;
  for (const ValueChange& c : pre.clamps) original.at(g, c.v, c.e) = c.old_value;

  BriberySolution sol;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (int side = 0; side < 2; ++side) {
      const double before = original.p[e][side];
      const double after = new_values.p[e][side];
      if (before == after) continue;
      AgentId v = side == 0 ? g.edge(e).u : g.edge(e).v;
      sol.changed.push_back({v, e, before, after});
      sol.cost += prob.weight(v) * std::abs(before - after);
    }
  }
  if (!is_stable(g, new_values, prob.matching).stable) {
    throw Error("internal: bribery result leaves a blocking edge");
  }
  std::sort(dominators.begin(), dominators.end());
  sol.dominators = std::move(dominators);
  sol.new_values = std::move(new_values);
  return sol;
}

}  // namespace

Preprocessed preprocess(const BriberyProblem& prob) {
  validate_problem(prob);
  const Graph& g = prob.graph;
  if (!is_maximal(g, prob.matching)) {
    throw Infeasible("matching is not maximal; the problem is infeasible");
  }
  Preprocessed out{prob, {}, {}, {}};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (int side = 0; side < 2; ++side) {
      AgentId v = side == 0 ? g.edge(e).u : g.edge(e).v;
      const ValueBound b = prob.bound(v, e);
      double& p = out.problem.values.p[e][side];
      const double clamped = std::clamp(p, b.lower, b.upper);
      if (clamped != p) {
        out.clamps.push_back({v, e, p, clamped});
        p = clamped;
      }
    }
  }
  MatchingView view(g, prob.matching);
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (view.in_matching[f]) continue;
    const Edge& ed = g.edge(f);
    if (dominated_at(g, out.problem.values, view, ed.u, f) ||
        dominated_at(g, out.problem.values, view, ed.v, f)) {
      out.dominated.push_back(f);
    } else {
      if (!view.saturated(g, ed.u) && !view.saturated(g, ed.v)) {
        throw Error("internal: blocking edge with two unsaturated endpoints");
      }
      out.blocking.push_back(f);
    }
  }
  return out;
}

DominationCost domination_cost(const BriberyProblem& prob, AgentId v,
                               std::span<const EdgeId> targets) {
  CostModel model(prob);
  return model.evaluate(v, targets, true);
}

std::vector<AgentId> candidate_endpoints(const BriberyProblem& prob,
                                         const MatchingView& view, EdgeId f) {
  const Graph& g = prob.graph;
  std::vector<AgentId> out;
  for (AgentId v : {g.edge(f).u, g.edge(f).v}) {
    if (!view.saturated(g, v)) continue;
    double hi = kInf;
    for (EdgeId e : g.incident(v)) {
      if (view.in_matching[e]) hi = std::min(hi, prob.bound(v, e).upper);
    }
    if (prob.bound(v, f).lower <= hi) out.push_back(v);
  }
  return out;
}

BriberySolution realize_assignment(
    const Preprocessed& pre,
    const std::vector<std::pair<EdgeId, AgentId>>& dominators) {
  const Graph& g = pre.problem.graph;
  CostModel model(pre.problem);
  std::vector<std::vector<EdgeId>> targets(g.num_agents());
  for (auto [f, v] : dominators) targets[v].push_back(f);
  Values values = pre.problem.values;
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    if (targets[v].empty()) continue;
    std::sort(targets[v].begin(), targets[v].end());
    DominationCost d = model.evaluate(v, targets[v], true);
    if (!std::isfinite(d.cost)) {
      throw Infeasible("agent " + g.name(v) + " cannot dominate its edges");
    }
    for (const ValueChange& c : d.changes) values.at(g, c.v, c.e) = c.new_value;
  }
  return finalize(pre, std::move(values), dominators);
}

BriberySolution solve_bipartite(const BriberyProblem& prob) {
  auto color = prob.graph.bipartition();
  if (!color) throw Error("graph is not bipartite");
  Preprocessed pre = preprocess(prob);
  const Graph& g = pre.problem.graph;
  CostModel model(pre.problem);
  CoverSetup setup = classify(pre, model);

  const int n = static_cast<int>(setup.free.size());
  std::vector<AgentId> side0(n), side1(n);
  for (int i = 0; i < n; ++i) {
    const Edge& ed = g.edge(setup.free[i]);
    const bool u_first = (*color)[ed.u] == 0;
    side0[i] = u_first ? ed.u : ed.v;
    side1[i] = u_first ? ed.v : ed.u;
  }
  CoverObjective objective(model, setup, g.num_agents());
  SubmodularMinimum best = minimize_submodular(
      [&](const std::vector<char>& in) {
        return objective(in, side0, side1, true);
      },
      n);

  auto dominators = setup.forced;
  std::vector<char> in(n, 0);
  for (int i : best.set) in[i] = 1;
  for (int i = 0; i < n; ++i) {
    dominators.emplace_back(setup.free[i], in[i] ? side0[i] : side1[i]);
  }
  return realize_assignment(pre, dominators);
}

BriberySolution solve_2approx(const BriberyProblem& prob) {
  Preprocessed pre = preprocess(prob);
  const Graph& g = pre.problem.graph;
  CostModel model(pre.problem);
  CoverSetup setup = classify(pre, model);

  const int n = static_cast<int>(setup.free.size());
  std::vector<AgentId> low(n), high(n), none(n, -1);
  for (int i = 0; i < n; ++i) {
    low[i] = g.edge(setup.free[i]).u;
    high[i] = g.edge(setup.free[i]).v;
  }
  // Decoupled bound: low endpoints' costs on the chosen set plus high
  // endpoints' costs on the complement, each with the forced edges.
  CoverObjective objective(model, setup, g.num_agents());
  auto bound = [&](const std::vector<char>& in) {
    return objective(in, low, none, true) + objective(in, none, high, true);
  };
  SubmodularMinimum best = minimize_submodular(bound, n);

  auto dominators = setup.forced;
  std::vector<char> in(n, 0);
  for (int i : best.set) in[i] = 1;
  for (int i = 0; i < n; ++i) {
    dominators.emplace_back(setup.free[i], in[i] ? low[i] : high[i]);
  }
  BriberySolution sol = realize_assignment(pre, dominators);
  double clamp_cost = 0;
  for (const ValueChange& c : pre.clamps) {
    clamp_cost += prob.weight(c.v) * std::abs(c.old_value - c.new_value);
  }
  sol.lower_bound = clamp_cost + bound(in) / 2;
  return sol;
}

BriberySolution solve_frozen(const BriberyProblem& prob) {
  Preprocessed pre = preprocess(prob);
  const BriberyProblem& p = pre.problem;
  const Graph& g = p.graph;
  CostModel model(p);
  Values values = p.values;
  std::vector<std::pair<EdgeId, AgentId>> dominators;
  for (EdgeId f : pre.blocking) {
    AgentId best = -1;
    double best_cost = kInf;
    for (AgentId v : {g.edge(f).u, g.edge(f).v}) {
      if (!model.view().saturated(g, v)) continue;
      const double floor = model.min_matched_value(v);
      if (p.bound(v, f).lower > floor) continue;
      const double c = p.weight(v) * std::max(0.0, p.values.at(g, v, f) - floor);
      if (c < best_cost - 1e-12) {
        best_cost = c;
        best = v;
      }
    }
    if (best == -1) {
      throw Infeasible("edge " + std::to_string(f) +
                       " cannot be dominated with fixed matching values");
    }
    values.at(g, best, f) =
        std::min(values.at(g, best, f), model.min_matched_value(best));
    dominators.emplace_back(f, best);
  }
  return finalize(pre, std::move(values), std::move(dominators));
}

}  // namespace stablefix
