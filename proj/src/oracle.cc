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


#include "stablefix/oracle.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "stablefix/error.h"
#include "stablefix/stability.h"

namespace stablefix {
namespace {

void check_cap(const char* what, long long size, int cap) {
  if (size > cap) {
    throw CapExceeded(std::string(what) + " " + std::to_string(size) +
                      " exceeds cap " + std::to_string(cap));
  }
}

// Depth-first walk over all q-matchings; `visit` returns true to stop.
template <typename Visit>
bool walk_q_matchings(const Graph& g, EdgeId e, std::vector<int>& load,
                      std::vector<EdgeId>& chosen, const Visit& visit) {
  if (e == g.num_edges()) return visit(chosen);
  const Edge& ed = g.edge(e);
  if (load[ed.u] < g.capacity(ed.u) && load[ed.v] < g.capacity(ed.v)) {
    ++load[ed.u];
    ++load[ed.v];
    chosen.push_back(e);
    bool stop = walk_q_matchings(g, e + 1, load, chosen, visit);
    chosen.pop_back();
    --load[ed.u];
    --load[ed.v];
    if (stop) return true;
  }
  return walk_q_matchings(g, e + 1, load, chosen, visit);
}

template <typename Visit>
void for_each_combination(int n, int k, const Visit& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (visit(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<QMatching> enumerate_stable_q_matchings(const Instance& inst,
                                                    int cap) {
  check_cap("agent count", inst.graph.num_agents(), cap);
  std::vector<int> load(inst.graph.num_agents(), 0);
  std::vector<EdgeId> chosen;
  std::vector<QMatching> out;
  walk_q_matchings(inst.graph, 0, load, chosen, [&](const std::vector<EdgeId>& m) {
    QMatching qm{m};
    if (is_stable(inst, qm).stable) out.push_back(std::move(qm));
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool has_stable_q_matching(const Instance& inst) {
  std::vector<int> load(inst.graph.num_agents(), 0);
  std::vector<EdgeId> chosen;
  return walk_q_matchings(inst.graph, 0, load, chosen,
                          [&](const std::vector<EdgeId>& m) {
                            return is_stable(inst, QMatching{m}).stable;
                          });
}

std::vector<AgentId> min_removable_bruteforce(const Instance& inst, int cap) {
  const int n = inst.graph.num_agents();
  check_cap("agent count", n, cap);
  for (int k = 0; k <= n; ++k) {
    std::vector<AgentId> found;
    bool ok = false;
    for_each_combination(n, k, [&](const std::vector<int>& idx) {
      Reduced r = remove_agents(inst, idx);
      if (has_stable_q_matching(r.instance)) {
        found = idx;
        ok = true;
      }
      return ok;
    });
    if (ok) return found;
  }
  throw Error("internal: deleting every agent leaves no stable matching");
}

BriberySolution bribery_bruteforce(const BriberyProblem& prob, int cap) {
  Preprocessed pre = preprocess(prob);
  const Graph& g = pre.problem.graph;
  const int k = static_cast<int>(pre.blocking.size());
  check_cap("blocking edge count", k, cap);

  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  std::vector<std::vector<EdgeId>> targets(g.num_agents());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    for (auto& t : targets) t.clear();
    for (int i = 0; i < k; ++i) {
      const Edge& ed = g.edge(pre.blocking[i]);
      targets[(mask >> i) & 1 ? ed.v : ed.u].push_back(pre.blocking[i]);
    }
    double total = 0;
    for (AgentId v = 0; v < g.num_agents() && std::isfinite(total); ++v) {
      if (!targets[v].empty()) {
        total += domination_cost(pre.problem, v, targets[v]).cost;
      }
    }
    if (total < best - 1e-12) {
      best = total;
      best_mask = mask;
    }
  }
  if (!std::isfinite(best)) throw Infeasible("no endpoint choice dominates every edge");
  std::vector<std::pair<EdgeId, AgentId>> dominators;
  for (int i = 0; i < k; ++i) {
    const Edge& ed = g.edge(pre.blocking[i]);
    dominators.emplace_back(pre.blocking[i], (best_mask >> i) & 1 ? ed.v : ed.u);
  }
  return realize_assignment(pre, dominators);
}

std::optional<Ranks> extension_bruteforce(const ExtensionProblem& ep, int cap) {
  const Graph& g = ep.graph;
  struct Side {
    AgentId v;
    EdgeId e;
    int lower;
  };
  std::vector<Side> sides;
  std::vector<std::vector<char>> used(g.num_agents());
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    used[v].assign(g.degree(v) + 1, 0);
    for (EdgeId e : g.incident(v)) {
      const int lower = ep.lower_at(v, e);
      if (auto r = ep.ranks.at(g, v, e)) {
        if (*r < 1 || *r > g.degree(v)) throw Error("rank out of range");
        if (used[v][*r]) throw Error("duplicate rank at agent " + g.name(v));
        if (*r < lower) throw Error("fixed rank below its lower bound");
        used[v][*r] = 1;
      } else {
        sides.push_back({v, e, lower});
      }
    }
  }
  check_cap("free position count", static_cast<long long>(sides.size()), cap);

  Ranks ranks = ep.ranks;
  std::optional<Ranks> found;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == sides.size()) {
      if (blocking_edges(g, orders_from_ranks(g, ranks), ep.matching).empty()) {
        found = ranks;
        return true;
      }
      return false;
    }
    const Side& s = sides[k];
    for (int j = std::max(1, s.lower); j <= g.degree(s.v); ++j) {
      if (used[s.v][j]) continue;
      used[s.v][j] = 1;
      ranks.at(g, s.v, s.e) = j;
      bool done = self(self, k + 1);
      used[s.v][j] = 0;
      if (done) return true;
    }
    ranks.at(g, s.v, s.e).reset();
    return false;
  };
  search(search, 0);
  return found;
}

int min_vertex_cover_bruteforce(const Graph& g, int cap) {
  const int n = g.num_agents();
  check_cap("vertex count", n, cap);
  int best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    bool covers = true;
    for (const Edge& e : g.edges()) {
      if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

BriberyProblem gen_bribery_from_vertex_cover(const Graph& g) {
  const int n = g.num_agents();
  std::vector<std::string> names;
  for (AgentId v = 0; v < n; ++v) names.push_back(g.name(v) + "'");
  for (AgentId v = 0; v < n; ++v) names.push_back(g.name(v) + "''");
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (AgentId v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  BriberyProblem prob;
  prob.graph = Graph(std::move(names), std::vector<int>(2 * n, 1), std::move(edges));
  const Graph& h = prob.graph;
  prob.values.p = make_endpoint_map(h, 1.0);
  std::vector<EdgeId> m;
  for (AgentId v = 0; v < n; ++v) {
    EdgeId e = *h.find_edge(v, v + n);
    prob.values.p[e] = {0.0, 0.0};
    m.push_back(e);
  }
  prob.matching = make_matching(std::move(m));
  return prob;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  long long declared_clauses = 0;
  std::vector<int> clause;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string_view::npos || line[i] == 'c' || line[i] == '%') continue;
    if (line[i] == 'p') {
      if (header) throw ParseError(line_no, static_cast<int>(i) + 1, "second header");
      char fmt[8] = {};
      long long vars = -1;
      std::string copy(line.substr(i));
      if (std::sscanf(copy.c_str(), "p %7s %lld %lld", fmt, &vars,
                      &declared_clauses) != 3 ||
          std::string(fmt) != "cnf" || vars < 0 || declared_clauses < 0) {
        throw ParseError(line_no, static_cast<int>(i) + 1, "malformed header");
      }
      f.num_vars = static_cast<int>(vars);
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, static_cast<int>(i) + 1, "clause before header");
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      int lit = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), lit);
      const int column = static_cast<int>(i) + 1;
      if (ec != std::errc()) throw ParseError(line_no, column, "expected a literal");
      i = static_cast<std::size_t>(ptr - line.data());
      if (lit == 0) {
        if (clause.empty()) throw ParseError(line_no, column, "empty clause");
        f.clauses.push_back(std::move(clause));
        clause.clear();
        continue;
      }
      if (std::abs(lit) > f.num_vars) throw ParseError(line_no, column, "unknown variable");
      if (clause.size() == 3) throw ParseError(line_no, column, "clause longer than three");
      clause.push_back(lit);
    }
  }
  if (!header) throw ParseError(line_no, 0, "missing header");
  if (!clause.empty()) throw ParseError(line_no, 0, "unterminated clause");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
    throw ParseError(line_no, 0, "clause count does not match header");
  }
  return f;
}

std::string format_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int lit : c) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

RedBlueInstance gen_red_blue_from_3sat(const CnfFormula& f) {
  std::vector<std::string> names;
  std::vector<std::pair<AgentId, AgentId>> edges;
  std::vector<EdgeColor> color_of_pair;
  auto add_agent = [&](std::string name) {
    names.push_back(std::move(name));
    return static_cast<AgentId>(names.size() - 1);
  };
  auto add_edge = [&](AgentId a, AgentId b, EdgeColor c) {
    edges.emplace_back(a, b);
    color_of_pair.push_back(c);
  };
  // Literal occurrence vertices per variable, positive and negative.
  std::vector<std::vector<AgentId>> pos_occ(f.num_vars + 1), neg_occ(f.num_vars + 1);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    std::vector<int> lits = f.clauses[j];
    if (lits.empty() || lits.size() > 3) throw Error("clauses need one to three literals");
    while (lits.size() < 3) lits.push_back(lits.back());
    const std::string js = std::to_string(j + 1);
    AgentId c1 = add_agent("c'_" + js);
    AgentId c2 = add_agent("c''_" + js);
    for (std::size_t k = 0; k < 3; ++k) {
      const int lit = lits[k];
      const int var = std::abs(lit);
      if (var == 0 || var > f.num_vars) throw Error("literal references an unknown variable");
      int repeat = 1;
      for (std::size_t k2 = 0; k2 < k; ++k2) repeat += lits[k2] == lit;
      std::string name = std::string(lit > 0 ? "y^" : "z^") + std::to_string(var) + "_" + js;
      if (repeat > 1) name += "~" + std::to_string(repeat);
      AgentId x = add_agent(std::move(name));
      (lit > 0 ? pos_occ : neg_occ)[var].push_back(x);
      add_edge(c1, x, EdgeColor::kRed);
      add_edge(c2, x, EdgeColor::kRed);
    }
  }
  for (int i = 1; i <= f.num_vars; ++i) {
    const std::string is = std::to_string(i);
    AgentId y = add_agent("y_" + is);
    AgentId z = add_agent("z_" + is);
    AgentId s = add_agent("s_" + is);
    add_edge(y, s, EdgeColor::kRed);
    add_edge(z, s, EdgeColor::kRed);
    for (AgentId x : pos_occ[i]) add_edge(y, x, EdgeColor::kBlue);
    for (AgentId x : neg_occ[i]) add_edge(z, x, EdgeColor::kBlue);
  }
  const int n = static_cast<int>(names.size());
  RedBlueInstance out{Graph(std::move(names), std::vector<int>(n, 1), edges), {}};
  out.colors.resize(out.graph.num_edges());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out.colors[*out.graph.find_edge(edges[k].first, edges[k].second)] = color_of_pair[k];
  }
  return out;
}

bool sat_bruteforce(const CnfFormula& f, int cap) {
  check_cap("variable count", f.num_vars, cap);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.num_vars); ++mask) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int lit : c) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        if (value == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace stablefix
