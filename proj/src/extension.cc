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


#include "stablefix/extension.h"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "stablefix/error.h"
#include "stablefix/matching.h"

namespace stablefix {
namespace {

// Per-agent facts shared by both extension procedures.
struct Layout {
  MatchingView view;
  std::vector<int> worst;                 // worst matching rank, 0 if unsaturated
  std::vector<std::vector<int>> free_pos; // ascending
};

Layout make_layout(const ExtensionProblem& ep) {
  const Graph& g = ep.graph;
  Layout lay{MatchingView(g, ep.matching), {}, {}};
  lay.worst.assign(g.num_agents(), 0);
  lay.free_pos.resize(g.num_agents());
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    std::vector<char> used(g.degree(v) + 1, 0);
    for (EdgeId e : g.incident(v)) {
      if (auto r = ep.ranks.at(g, v, e)) used[*r] = 1;
      if (lay.view.saturated(g, v) && lay.view.in_matching[e]) {
        int r = *ep.ranks.at(g, v, e);
        lay.worst[v] = lay.worst[v] == 0 ? r : std::min(lay.worst[v], r);
      }
    }
    for (int j = 1; j <= g.degree(v); ++j) {
      if (!used[j]) lay.free_pos[v].push_back(j);
    }
  }
  return lay;
}

enum class EdgeStatus { kDominated, kOpen, kBlocks };

// Non-matching edge f under the fixed ranks alone.
EdgeStatus classify(const ExtensionProblem& ep, const Layout& lay, EdgeId f) {
  const Graph& g = ep.graph;
  bool can_fix = false;
  for (AgentId v : {g.edge(f).u, g.edge(f).v}) {
    if (!lay.view.saturated(g, v)) continue;
    const auto& r = ep.ranks.at(g, v, f);
    if (r && *r < lay.worst[v]) return EdgeStatus::kDominated;
    if (!r) can_fix = true;
  }
  return can_fix ? EdgeStatus::kOpen : EdgeStatus::kBlocks;
}

// Unranked edges take the lowest free positions, ascending by edge id.
void fill_ascending(const Graph& g, Ranks& ranks) {
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    std::vector<char> used(g.degree(v) + 1, 0);
    for (EdgeId e : g.incident(v)) {
      if (auto r = ranks.at(g, v, e)) used[*r] = 1;
    }
    int j = 1;
    for (EdgeId e : g.incident(v)) {
      if (ranks.at(g, v, e)) continue;
      while (used[j]) ++j;
      ranks.at(g, v, e) = j;
      used[j] = 1;
    }
  }
}

}  // namespace

void validate_extension(const ExtensionProblem& ep) {
  const Graph& g = ep.graph;
  if (static_cast<int>(ep.ranks.r.size()) != g.num_edges()) {
    throw Error("ranks do not match the edge list");
  }
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    std::vector<char> used(g.degree(v) + 1, 0);
    for (EdgeId e : g.incident(v)) {
      const auto& r = ep.ranks.at(g, v, e);
      if (!r) continue;
      if (*r < 1 || *r > g.degree(v)) throw Error("rank out of range");
      if (used[*r]) throw Error("duplicate rank at agent " + g.name(v));
      used[*r] = 1;
    }
  }
  validate_q_matching(g, ep.matching);
  MatchingView view(g, ep.matching);
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (!view.in_matching[f] && !view.saturated(g, g.edge(f).u) &&
        !view.saturated(g, g.edge(f).v)) {
      throw Error("matching is not maximal");
    }
  }
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    if (!view.saturated(g, v)) continue;
    for (EdgeId e : g.incident(v)) {
      if (view.in_matching[e] && !ep.ranks.at(g, v, e)) {
        throw Error("matching edge without a fixed rank at saturated agent " +
                    g.name(v));
      }
    }
  }
  if (ep.lower) {
    if (static_cast<int>(ep.lower->size()) != g.num_edges()) {
      throw Error("lower bounds do not match the edge list");
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (AgentId v : {g.edge(e).u, g.edge(e).v}) {
        const int l = ep.lower_at(v, e);
        if (l < 1 || l > g.degree(v)) throw Error("lower bound out of range");
        const auto& r = ep.ranks.at(g, v, e);
        if (r && *r < l) throw Error("fixed rank below its lower bound");
      }
    }
  }
}

std::optional<Ranks> extend_ranks(const ExtensionProblem& ep) {
  validate_extension(ep);
  const Graph& g = ep.graph;
  const Layout lay = make_layout(ep);

  std::vector<EdgeId> open;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (lay.view.in_matching[f]) continue;
    switch (classify(ep, lay, f)) {
      case EdgeStatus::kBlocks: return std::nullopt;
      case EdgeStatus::kOpen: open.push_back(f); break;
      case EdgeStatus::kDominated: break;
    }
  }

  // Copies: free positions below the worst matching rank.
  std::vector<std::pair<AgentId, int>> copies;
  std::vector<int> first_copy(g.num_agents() + 1, 0);
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    first_copy[v] = static_cast<int>(copies.size());
    for (int j : lay.free_pos[v]) {
      if (j < lay.worst[v]) copies.emplace_back(v, j);
    }
  }
  first_copy[g.num_agents()] = static_cast<int>(copies.size());

  BipartiteMatcher h(static_cast<int>(open.size()), static_cast<int>(copies.size()));
  for (std::size_t i = 0; i < open.size(); ++i) {
    EdgeId f = open[i];
    for (AgentId v : {g.edge(f).u, g.edge(f).v}) {
      if (!lay.view.saturated(g, v) || ep.ranks.at(g, v, f)) continue;
      for (int c = first_copy[v]; c < first_copy[v + 1]; ++c) h.add_edge(i, c);
    }
  }
  if (h.maximize() < static_cast<int>(open.size())) return std::nullopt;

  Ranks out = ep.ranks;
  for (std::size_t i = 0; i < open.size(); ++i) {
    auto [v, j] = copies[h.mate_of_left(i)];
    out.at(g, v, open[i]) = j;
  }
  fill_ascending(g, out);
  return out;
}

std::optional<Ranks> extend_ranks_lb(const ExtensionProblem& ep,
                                     const CoverageObserver& observer) {
  validate_extension(ep);
  const Graph& g = ep.graph;
  const Layout lay = make_layout(ep);

  std::vector<EdgeId> open;
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (lay.view.in_matching[f]) continue;
    switch (classify(ep, lay, f)) {
      case EdgeStatus::kBlocks: return std::nullopt;
      case EdgeStatus::kOpen: open.push_back(f); break;
      case EdgeStatus::kDominated: break;
    }
  }

  struct Slot {
    AgentId v;
    int j;
  };
  struct Side {
    AgentId v;
    EdgeId e;
  };
  std::vector<Slot> low;
  std::vector<std::vector<int>> low_at(g.num_agents());
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    for (int j : lay.free_pos[v]) {
      if (j < lay.worst[v]) {
        low_at[v].push_back(static_cast<int>(low.size()));
        low.push_back({v, j});
      }
    }
  }
  std::vector<Side> sides;
  std::vector<std::vector<int>> sides_at(g.num_agents());
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    for (EdgeId e : g.incident(v)) {
      if (ep.ranks.at(g, v, e)) continue;
      sides_at[v].push_back(static_cast<int>(sides.size()));
      sides.push_back({v, e});
    }
  }

  // Phase 1: every open edge takes a low slot at a saturated endpoint.
  BipartiteMatcher p1(static_cast<int>(open.size()), static_cast<int>(low.size()));
  for (std::size_t i = 0; i < open.size(); ++i) {
    EdgeId f = open[i];
    for (AgentId v : {g.edge(f).u, g.edge(f).v}) {
      if (!lay.view.saturated(g, v) || ep.ranks.at(g, v, f)) continue;
      for (int s : low_at[v]) {
        if (low[s].j >= ep.lower_at(v, f)) p1.add_edge(i, s);
      }
    }
  }
  if (p1.maximize() < static_cast<int>(open.size())) return std::nullopt;

  // Phase 2: the same assignment between low slots and edge sides.
  BipartiteMatcher p2(static_cast<int>(low.size()), static_cast<int>(sides.size()));
  for (std::size_t s = 0; s < low.size(); ++s) {
    const AgentId v = low[s].v;
    for (int k : sides_at[v]) {
      if (low[s].j >= ep.lower_at(v, sides[k].e)) p2.add_edge(s, k);
    }
  }
  for (std::size_t i = 0; i < open.size(); ++i) {
    const int s = p1.mate_of_left(i);
    const AgentId v = low[s].v;
    for (int k : sides_at[v]) {
      if (sides[k].e == open[i]) p2.match(s, k);
    }
  }

  // Phase 3: cover every low slot without uncovering anything.
  std::vector<char> covered(low.size());
  auto report = [&] {
    if (!observer) return;
    for (std::size_t s = 0; s < low.size(); ++s) {
      covered[s] = p2.mate_of_left(s) != -1;
    }
    observer(covered);
  };
  report();
  for (std::size_t s = 0; s < low.size(); ++s) {
    if (p2.mate_of_left(s) != -1) continue;
    if (!p2.augment_from(s)) return std::nullopt;
    report();
  }

  Ranks out = ep.ranks;
  std::vector<char> placed(sides.size(), 0);
  for (std::size_t s = 0; s < low.size(); ++s) {
    const int k = p2.mate_of_left(s);
    out.at(g, sides[k].v, sides[k].e) = low[s].j;
    placed[k] = 1;
  }

  // Phase 4: remaining positions ascending; any eligible side fits since
  // eligibility sets are nested.
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    for (int j : lay.free_pos[v]) {
      if (j < lay.worst[v]) continue;
      int pick = -1;
      for (int k : sides_at[v]) {
        if (!placed[k] && ep.lower_at(v, sides[k].e) <= j) {
          pick = k;
          break;
        }
      }
      if (pick == -1) return std::nullopt;
      placed[pick] = 1;
      out.at(g, v, sides[pick].e) = j;
    }
  }
  return out;
}

StrategyResult sr_strat_independent(const Graph& g, const StrictOrders& fixed) {
  if (!g.all_unit_capacities()) throw Error("strategy extension requires unit capacities");
  if (static_cast<int>(fixed.order.size()) != g.num_agents()) {
    throw Error("orders do not match the agent list");
  }
  const int n = g.num_agents();
  for (const Edge& e : g.edges()) {
    if (fixed.order[e.u] && fixed.order[e.v]) {
      throw Error("fixed agents " + g.name(e.u) + " and " + g.name(e.v) +
                  " are adjacent");
    }
  }
  std::vector<AgentId> mate(n, -1);
  std::vector<EdgeId> chosen;
  auto pair_up = [&](AgentId a, AgentId b) {
    mate[a] = b;
    mate[b] = a;
    chosen.push_back(*g.find_edge(a, b));
  };
  for (AgentId a = 0; a < n; ++a) {
    if (!fixed.order[a]) continue;
    for (AgentId b : *fixed.order[a]) {
      if (mate[b] == -1) {
        pair_up(a, b);
        break;
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (fixed.order[e.u] || fixed.order[e.v]) continue;
    if (mate[e.u] == -1 && mate[e.v] == -1) pair_up(e.u, e.v);
  }

  StrategyResult out;
  out.orders.order.resize(n);
  for (AgentId a = 0; a < n; ++a) {
    if (fixed.order[a]) {
      out.orders.order[a] = fixed.order[a];
      continue;
    }
    std::vector<AgentId> list;
    if (mate[a] != -1) list.push_back(mate[a]);
    for (EdgeId e : g.incident(a)) {
      if (g.other(e, a) != mate[a]) list.push_back(g.other(e, a));
    }
    out.orders.order[a] = std::move(list);
  }
  out.matching = make_matching(std::move(chosen));
  return out;
}

namespace {

class RedBlueSearch {
 public:
  RedBlueSearch(const Graph& g, const std::vector<EdgeColor>& colors)
      : g_(g), used_(g.num_agents(), 0), twin_(g.num_agents(), -1) {
    const int n = g.num_agents();
    std::vector<std::pair<std::vector<EdgeId>, std::vector<AgentId>>> sig(n);
    red_at_.resize(n);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (colors[e] == EdgeColor::kBlue) {
        blue_.push_back(e);
      } else {
        red_at_[g.edge(e).u].push_back(e);
        red_at_[g.edge(e).v].push_back(e);
      }
    }
    // Twins: identical red and blue neighborhoods. twin_[a] is the previous
    // member of a's class in id order.
    std::map<std::pair<std::vector<AgentId>, std::vector<AgentId>>, AgentId> last;
    for (AgentId a = 0; a < n; ++a) {
      std::vector<AgentId> red, blue;
      for (EdgeId e : g.incident(a)) {
        (colors[e] == EdgeColor::kRed ? red : blue).push_back(g.other(e, a));
      }
      if (red.empty() && blue.empty()) continue;
      auto key = std::make_pair(std::move(red), std::move(blue));
      auto it = last.find(key);
      if (it != last.end()) twin_[a] = it->second;
      last[std::move(key)] = a;
    }
  }

  bool run() {
    std::string key((used_.size() + 7) / 8, '\0');
    for (std::size_t a = 0; a < used_.size(); ++a) {
      if (used_[a]) key[a / 8] = static_cast<char>(key[a / 8] | (1 << (a % 8)));
    }
    if (failed_.count(key)) return false;

    EdgeId target = -1;
    std::vector<EdgeId> best_options;
    for (EdgeId b : blue_) {
      const Edge& eb = g_.edge(b);
      if (used_[eb.u] || used_[eb.v]) continue;
      std::vector<EdgeId> options = options_for(eb);
      if (target == -1 || options.size() < best_options.size()) {
        target = b;
        best_options = std::move(options);
      }
      if (best_options.empty()) break;
    }
    if (target == -1) return true;

    for (EdgeId r : best_options) {
      const Edge& er = g_.edge(r);
      used_[er.u] = used_[er.v] = 1;
      chosen_.push_back(r);
      if (run()) return true;
      chosen_.pop_back();
      used_[er.u] = used_[er.v] = 0;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<EdgeId>& chosen() const { return chosen_; }

 private:
  // Swapping a with an unused lower twin maps this state to itself, so only
  // the lowest unused member of a class is tried (unless it is pinned by the
  // target blue edge).
  bool redundant(AgentId a, const Edge& target) const {
    if (a == target.u || a == target.v) return false;
    for (AgentId t = twin_[a]; t != -1; t = twin_[t]) {
      if (!used_[t] && t != target.u && t != target.v) return true;
    }
    return false;
  }

  // Free red edges touching the blue edge, ascending.
  std::vector<EdgeId> options_for(const Edge& eb) const {
    std::vector<EdgeId> out;
    for (AgentId end : {eb.u, eb.v}) {
      for (EdgeId r : red_at_[end]) {
        const Edge& er = g_.edge(r);
        if (used_[er.u] || used_[er.v]) continue;
        if (redundant(er.u, eb) || redundant(er.v, eb)) continue;
        out.push_back(r);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  const Graph& g_;
  std::vector<EdgeId> blue_, chosen_;
  std::vector<std::vector<EdgeId>> red_at_;
  std::vector<char> used_;
  std::vector<AgentId> twin_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<QMatching> red_blue_cover(const Graph& g,
                                        const std::vector<EdgeColor>& colors,
                                        int cap) {
  if (static_cast<int>(colors.size()) != g.num_edges()) {
    throw Error("colors do not match the edge list");
  }
  if (!g.bipartition()) throw Error("red-blue instances must be bipartite");
  const auto reds = std::count(colors.begin(), colors.end(), EdgeColor::kRed);
  if (reds > cap) {
    throw CapExceeded(std::to_string(reds) + " red edges, cap is " +
                      std::to_string(cap));
  }
  RedBlueSearch search(g, colors);
  if (!search.run()) return std::nullopt;
  return make_matching(search.chosen());
}

}  // namespace stablefix
