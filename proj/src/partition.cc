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

#include "stablefix/partition.h"

#include <algorithm>

#include "stablefix/error.h"

namespace stablefix {
namespace {

void require_roommates_input(const Graph& g, const StrictOrders& orders) {
  if (!g.all_unit_capacities()) {
    throw Error("stable partitions require unit capacities");
  }
  if (static_cast<int>(orders.order.size()) != g.num_agents()) {
    throw Error("orders do not match the agent list");
  }
  for (AgentId a = 0; a < g.num_agents(); ++a) {
    if (g.degree(a) > 0 && !orders.order[a]) {
      throw Error("no preference order for agent " + g.name(a));
    }
  }
}

// Irving-style reduced preference table. Lists are kept symmetric: b is
// present in a's list iff a is present in b's.
class Table {
 public:
  Table(const Graph& g, const StrictOrders& orders) : g_(g) {
    const int n = g.num_agents();
    list_.resize(n);
    present_.resize(n);
    position_.resize(n);
    size_.assign(n, 0);
    head_.assign(n, 0);
    tail_.assign(n, -1);
    for (AgentId a = 0; a < n; ++a) {
      if (!orders.order[a]) continue;
      list_[a] = *orders.order[a];
      const int d = static_cast<int>(list_[a].size());
      present_[a].assign(d, 1);
      size_[a] = d;
      tail_[a] = d - 1;
      position_[a].assign(d, 0);
      for (int i = 0; i < d; ++i) position_[a][slot(a, list_[a][i])] = i;
    }
  }

  int size(AgentId a) const { return size_[a]; }

  AgentId first(AgentId a) {
    while (!present_[a][head_[a]]) ++head_[a];
    return list_[a][head_[a]];
  }

  AgentId second(AgentId a) {
    int i = (first(a), head_[a] + 1);
    while (!present_[a][i]) ++i;
    return list_[a][i];
  }

  AgentId last(AgentId a) {
    while (!present_[a][tail_[a]]) --tail_[a];
    return list_[a][tail_[a]];
  }

  // b drops everyone it ranks below a.
  void truncate_after(AgentId b, AgentId a) {
    const int from = pos(b, a) + 1;
    for (int i = from; i <= tail_[b]; ++i) {
      if (present_[b][i]) remove(b, list_[b][i]);
    }
  }

 private:
  // Index of neighbor b within the incidence list of a.
  int slot(AgentId a, AgentId b) const {
    auto inc = g_.incident(a);
    auto it = std::lower_bound(inc.begin(), inc.end(), b,
                               [&](EdgeId e, AgentId x) { return g_.other(e, a) < x; });
    return static_cast<int>(it - inc.begin());
  }
  int pos(AgentId a, AgentId b) const { return position_[a][slot(a, b)]; }

  void remove(AgentId a, AgentId b) {
    present_[a][pos(a, b)] = 0;
    present_[b][pos(b, a)] = 0;
    --size_[a];
    --size_[b];
  }

  const Graph& g_;
  std::vector<std::vector<AgentId>> list_;
  std::vector<std::vector<char>> present_;
  std::vector<std::vector<int>> position_;  // by incidence slot
  std::vector<int> size_;
  std::vector<int> head_;
  std::vector<int> tail_;
};

void proposal_phase(const Graph& g, Table& t) {
  std::vector<AgentId> holds(g.num_agents(), -1);
  for (AgentId start = 0; start < g.num_agents(); ++start) {
    AgentId x = start;
    while (x != -1 && t.size(x) > 0) {
      AgentId y = t.first(x);
      AgentId displaced = holds[y];
      t.truncate_after(y, x);
      holds[y] = x;
      x = displaced != x ? displaced : -1;
    }
  }
}

// Exposed rotations are the cycles of p -> last(second(p)) over agents whose
// list has at least two entries. Returns the non-odd-party rotation with the
// lowest contained agent, or an empty vector if there is none.
std::vector<AgentId> pick_rotation(const Graph& g, Table& t) {
  const int n = g.num_agents();
  std::vector<AgentId> next(n, -1);
  for (AgentId p = 0; p < n; ++p) {
    if (t.size(p) >= 2) next[p] = t.last(t.second(p));
  }
  std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<AgentId> best;
  AgentId best_min = n;
  for (AgentId s = 0; s < n; ++s) {
    if (next[s] == -1 || state[s] != 0) continue;
    std::vector<AgentId> walk;
    AgentId p = s;
    while (state[p] == 0) {
      state[p] = 1;
      walk.push_back(p);
      p = next[p];
    }
    if (state[p] == 1) {
      auto it = std::find(walk.begin(), walk.end(), p);
      std::vector<AgentId> cycle(it, walk.end());
      std::vector<AgentId> xs = cycle, ys;
      for (AgentId x : cycle) ys.push_back(t.first(x));
      std::sort(xs.begin(), xs.end());
      std::sort(ys.begin(), ys.end());
      const bool odd_party = xs == ys && cycle.size() % 2 == 1;
      if (!odd_party && xs.front() < best_min) {
        best_min = xs.front();
        best = std::move(cycle);
      }
    }
    for (AgentId w : walk) state[w] = 2;
  }
  return best;
}

void eliminate(Table& t, const std::vector<AgentId>& rotation) {
  std::vector<std::pair<AgentId, AgentId>> moves;
  for (AgentId x : rotation) moves.emplace_back(x, t.second(x));
  for (auto [x, y] : moves) t.truncate_after(y, x);
}

}  // namespace

StablePartition decompose_permutation(std::vector<AgentId> pi) {
  const int n = static_cast<int>(pi.size());
  std::vector<char> hit(n, 0);
  for (AgentId a : pi) {
    if (a < 0 || a >= n || hit[a]) throw Error("pi is not a permutation");
    hit[a] = 1;
  }
  StablePartition out;
  std::vector<char> seen(n, 0);
  for (AgentId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    if (pi[s] == s) {
      seen[s] = 1;
      out.singletons.push_back(s);
      continue;
    }
    std::vector<AgentId> cycle;
    for (AgentId a = s; !seen[a]; a = pi[a]) {
      seen[a] = 1;
      cycle.push_back(a);
    }
    if (cycle.size() % 2 == 1) out.odd_cycles.push_back(cycle);
    out.cycles.push_back(std::move(cycle));
  }
  out.pi = std::move(pi);
  return out;
}

StablePartition stable_partition(const Graph& g, const StrictOrders& orders) {
  require_roommates_input(g, orders);
  Table t(g, orders);
  proposal_phase(g, t);
  for (;;) {
    bool long_list = false;
    for (AgentId a = 0; a < g.num_agents() && !long_list; ++a) {
      long_list = t.size(a) > 2;
    }
    if (!long_list) break;
    std::vector<AgentId> rotation = pick_rotation(g, t);
    if (rotation.empty()) {
      throw Error("internal: no eliminable rotation in a table with a long list");
    }
    eliminate(t, rotation);
  }
  std::vector<AgentId> pi(g.num_agents());
  for (AgentId a = 0; a < g.num_agents(); ++a) {
    pi[a] = t.size(a) > 0 ? t.first(a) : a;
  }
  return decompose_permutation(std::move(pi));
}

std::optional<PartitionViolation> verify_partition(const Graph& g,
                                                   const StrictOrders& orders,
                                                   std::span<const AgentId> pi) {
  require_roommates_input(g, orders);
  const int n = g.num_agents();
  if (static_cast<int>(pi.size()) != n) throw Error("pi is not a permutation");
  std::vector<AgentId> inv(n, -1);
  for (AgentId a = 0; a < n; ++a) {
    if (pi[a] < 0 || pi[a] >= n || inv[pi[a]] != -1) {
      throw Error("pi is not a permutation");
    }
    inv[pi[a]] = a;
  }
  const Ranks ranks = ranks_from_orders(g, orders);
  // Rank of b in a's list counted from the worst (self = 0, non-neighbor -1).
  auto pref = [&](AgentId a, AgentId b) -> int {
    if (a == b) return 0;
    auto e = g.find_edge(a, b);
    return e ? *ranks.at(g, a, *e) : -1;
  };

  for (AgentId u = 0; u < n; ++u) {
    if (pi[u] == u) continue;
    if (pref(u, pi[u]) < 0) return PartitionViolation{1, u, pi[u]};
    if (pref(u, inv[u]) < 0) return PartitionViolation{1, u, inv[u]};
    if (pi[u] != inv[u] && pref(u, pi[u]) <= pref(u, inv[u])) {
      return PartitionViolation{1, u, pi[u]};
    }
  }
  for (AgentId u = 0; u < n; ++u) {
    for (EdgeId e : g.incident(u)) {
      AgentId v = g.other(e, u);
      if (pref(u, v) > pref(u, inv[u]) && pref(v, inv[v]) < pref(v, u)) {
        return PartitionViolation{2, u, v};
      }
    }
  }
  return std::nullopt;
}

DeletionResult min_removable_set(const Graph& g, const StrictOrders& orders) {
  const StablePartition sp = stable_partition(g, orders);
  DeletionResult out;
  std::vector<EdgeId> matched;
  auto pair_up = [&](AgentId a, AgentId b) {
    auto e = g.find_edge(a, b);
    if (!e) throw Error("internal: cycle neighbors are not adjacent");
    matched.push_back(*e);
  };
  for (const auto& c : sp.cycles) {
    const std::size_t len = c.size();
    if (len % 2 == 1) {
      out.removed.push_back(c[0]);
      for (std::size_t k = 1; k + 1 < len; k += 2) pair_up(c[k], c[k + 1]);
    } else {
      for (std::size_t k = 0; k + 1 < len; k += 2) pair_up(c[k], c[k + 1]);
    }
  }
  std::sort(out.removed.begin(), out.removed.end());
  out.matching = make_matching(std::move(matched));
  return out;
}

std::optional<std::vector<AgentId>> subset_removable(
    const Graph& g, const StrictOrders& orders,
    std::span<const AgentId> allowed, int cap) {
  require_roommates_input(g, orders);
  std::vector<AgentId> pool(allowed.begin(), allowed.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (static_cast<int>(pool.size()) > cap) {
    throw CapExceeded("subset has " + std::to_string(pool.size()) +
                      " agents, cap is " + std::to_string(cap));
  }
  Instance base{g, std::nullopt, orders, std::nullopt};
  const int k = static_cast<int>(pool.size());
  for (int size = 0; size <= k; ++size) {
    // Lexicographic combinations of `size` indices.
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      std::vector<AgentId> candidate;
      for (int i : idx) candidate.push_back(pool[i]);
      Reduced r = remove_agents(base, candidate);
      if (stable_partition(r.instance.graph, *r.instance.orders)
              .odd_cycles.empty()) {
        return candidate;
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == k - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace stablefix
