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


#include "stablefix/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "stablefix/bribery.h"
#include "stablefix/error.h"
#include "stablefix/extension.h"
#include "stablefix/io.h"
#include "stablefix/oracle.h"
#include "stablefix/partition.h"
#include "stablefix/stability.h"

namespace stablefix::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string verb;
  std::string input;
  std::string mode = "exact-bipartite";
  std::string kind;
  bool json = false;
  bool lower_bounds = false;
  std::optional<int> cap;
  std::uint64_t seed = 1;
  int count = 50;
};

// Accumulates one report in both renderings.
class Report {
 public:
  void put(const std::string& key, Json value, const std::string& shown) {
    json_[key] = std::move(value);
    text_ += key + ": " + shown + "\n";
  }
  void put(const std::string& key, const std::string& value) { put(key, value, value); }
  void put_number(const std::string& key, double x) { put(key, x, format_number(x)); }
  void put_int(const std::string& key, long long x) { put(key, x, std::to_string(x)); }

  // One text line per item; "none" when empty.
  void put_lines(const std::string& key, Json items, const std::vector<std::string>& shown) {
    json_[key] = std::move(items);
    if (shown.empty()) text_ += key + ": none\n";
    for (const auto& s : shown) text_ += key + ": " + s + "\n";
  }

  void set_sections(std::string s) { sections_ = std::move(s); }

  void emit(std::ostream& out, bool json) const {
    if (json) {
      Json j = json_;
      if (!sections_.empty()) j["instance"] = sections_;
      out << j.dump(2) << "\n";
    } else {
      out << text_ << sections_;
    }
  }

 private:
  Json json_ = Json::object();
  std::string text_;
  std::string sections_;
};

std::vector<std::string> names_of(const Graph& g, const std::vector<AgentId>& agents) {
  std::vector<std::string> out;
  for (AgentId a : agents) out.push_back(g.name(a));
  return out;
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "none";
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
  return out;
}

void put_agents(Report& r, const std::string& key, const Graph& g,
                const std::vector<AgentId>& agents) {
  auto names = names_of(g, agents);
  r.put(key, Json(names), join(names));
}

void put_edges(Report& r, const std::string& key, const Graph& g,
               const std::vector<EdgeId>& edges) {
  Json items = Json::array();
  std::vector<std::string> shown;
  for (EdgeId e : edges) {
    items.push_back(Json::array({g.name(g.edge(e).u), g.name(g.edge(e).v)}));
    shown.push_back(format_edge(g, e));
  }
  r.put_lines(key, std::move(items), shown);
}

const Values& need_values(const InstanceFile& f) {
  if (!f.instance.values) throw Error("input has no [values] section");
  return *f.instance.values;
}
const StrictOrders& need_orders(const InstanceFile& f) {
  if (!f.instance.orders) throw Error("input has no [orders] section");
  return *f.instance.orders;
}
const Ranks& need_ranks(const InstanceFile& f) {
  if (!f.instance.ranks) throw Error("input has no [ranks] section");
  return *f.instance.ranks;
}
const QMatching& need_matching(const InstanceFile& f) {
  if (!f.matching) throw Error("input has no [matching] section");
  return *f.matching;
}

std::string section_text(const Instance& inst, std::optional<QMatching> m) {
  InstanceFile f;
  f.instance = inst;
  f.matching = std::move(m);
  return format_instance(f);
}

// ---- verbs ----------------------------------------------------------------

int do_check(const InstanceFile& f, Report& r) {
  const Graph& g = f.instance.graph;
  const QMatching& m = need_matching(f);
  if (!f.instance.values && !f.instance.orders && !f.instance.ranks) {
    throw Error("input has no preference section");
  }
  const auto blocking = blocking_edges(f.instance, m);
  r.put("stable", blocking.empty() ? "yes" : "no");
  r.put("maximal", is_maximal(g, m) ? "yes" : "no");
  put_edges(r, "blocking", g, blocking);
  return blocking.empty() ? kExitOk : kExitNo;
}

int do_partition(const InstanceFile& f, Report& r) {
  const Graph& g = f.instance.graph;
  const StablePartition sp = stable_partition(g, need_orders(f));
  Json pi = Json::object();
  std::vector<std::string> shown;
  for (AgentId a = 0; a < g.num_agents(); ++a) {
    pi[g.name(a)] = g.name(sp.pi[a]);
    shown.push_back(g.name(a) + "->" + g.name(sp.pi[a]));
  }
  r.put("pi", std::move(pi), join(shown));
  auto cycle_lines = [&](const std::string& key, const std::vector<std::vector<AgentId>>& cs) {
    Json items = Json::array();
    std::vector<std::string> lines;
    for (const auto& c : cs) {
      items.push_back(names_of(g, c));
      lines.push_back("(" + join(names_of(g, c)) + ")");
    }
    r.put_lines(key, std::move(items), lines);
  };
  cycle_lines("cycle", sp.cycles);
  cycle_lines("odd_cycle", sp.odd_cycles);
  put_agents(r, "singletons", g, sp.singletons);
  r.put("stable_matching_exists", sp.odd_cycles.empty() ? "yes" : "no");
  return kExitOk;
}

// Emits the instance without `removed`, together with a matching given in
// original edge ids.
void put_reduced(Report& r, const InstanceFile& f, const std::vector<AgentId>& removed,
                 const QMatching& m_original) {
  const Graph& g = f.instance.graph;
  put_agents(r, "removed", g, removed);
  Instance base = f.instance;
  base.values.reset();
  base.ranks.reset();
  const Reduced red = remove_agents(base, removed);
  std::vector<EdgeId> edges;
  for (EdgeId e : m_original.edges) edges.push_back(red.edge_old_to_new[e]);
  const QMatching m = make_matching(std::move(edges));
  put_edges(r, "matching", red.instance.graph, m.edges);
  r.set_sections(section_text(red.instance, m));
}

int do_delete_min(const InstanceFile& f, Report& r) {
  const DeletionResult res = min_removable_set(f.instance.graph, need_orders(f));
  r.put_int("size", static_cast<long long>(res.removed.size()));
  put_reduced(r, f, res.removed, res.matching);
  return kExitOk;
}

int do_delete_subset(const InstanceFile& f, const Options& opt, Report& r) {
  const Graph& g = f.instance.graph;
  if (!f.subset) throw Error("input has no [subset] section");
  const auto s = subset_removable(g, need_orders(f), *f.subset,
                                  opt.cap.value_or(kDefaultSubsetCap));
  if (!s) {
    r.put("status", "none");
    return kExitNo;
  }
  r.put("status", "found");
  // A stable matching of G - S, expressed in original edge ids.
  Instance base = f.instance;
  base.values.reset();
  base.ranks.reset();
  const Reduced red = remove_agents(base, *s);
  const DeletionResult inner = min_removable_set(red.instance.graph, *red.instance.orders);
  std::vector<EdgeId> new_to_old(red.instance.graph.num_edges(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (red.edge_old_to_new[e] >= 0) new_to_old[red.edge_old_to_new[e]] = e;
  }
  std::vector<EdgeId> original;
  for (EdgeId e : inner.matching.edges) original.push_back(new_to_old[e]);
  put_reduced(r, f, *s, make_matching(std::move(original)));
  return kExitOk;
}

BriberyProblem bribery_problem(const InstanceFile& f) {
  BriberyProblem p;
  p.graph = f.instance.graph;
  p.values = need_values(f);
  p.matching = need_matching(f);
  p.bounds = f.bounds;
  p.weights = f.weights;
  return p;
}

int report_bribery(const BriberyProblem& prob, const std::string& mode,
                   const std::function<BriberySolution()>& solve, Report& r) {
  const Graph& g = prob.graph;
  r.put("mode", mode);
  BriberySolution s;
  try {
    s = solve();
  } catch (const Infeasible& e) {
    r.put("status", "infeasible");
    r.put("reason", e.what());
    return kExitNo;
  }
  r.put("status", "solved");
  r.put_number("cost", s.cost);
  if (s.lower_bound) {
    r.put_number("lower_bound", *s.lower_bound);
    const double ratio = *s.lower_bound > 0 ? s.cost / *s.lower_bound : 1.0;
    r.put_number("certified_ratio", ratio);
  }
  Json changes = Json::array();
  std::vector<std::string> shown;
  for (const ValueChange& c : s.changed) {
    const AgentId w = g.other(c.e, c.v);
    changes.push_back(Json{{"agent", g.name(c.v)}, {"neighbor", g.name(w)},
                           {"old", c.old_value}, {"new", c.new_value}});
    shown.push_back(g.name(c.v) + " " + g.name(w) + " " + format_number(c.old_value) +
                    " " + format_number(c.new_value));
  }
  r.put_lines("change", std::move(changes), shown);
  Json doms = Json::array();
  shown.clear();
  for (auto [e, v] : s.dominators) {
    doms.push_back(Json{{"edge", Json::array({g.name(g.edge(e).u), g.name(g.edge(e).v)})},
                        {"agent", g.name(v)}});
    shown.push_back(format_edge(g, e) + " at " + g.name(v));
  }
  r.put_lines("dominated", std::move(doms), shown);
  InstanceFile out;
  out.instance.graph = g;
  out.instance.values = s.new_values;
  out.matching = prob.matching;
  out.bounds = prob.bounds;
  out.weights = prob.weights;
  r.set_sections(format_instance(out));
  return kExitOk;
}

int do_bribe(const InstanceFile& f, const Options& opt, Report& r) {
  const BriberyProblem prob = bribery_problem(f);
  std::function<BriberySolution()> solve;
  if (opt.mode == "exact-bipartite") {
    if (!prob.graph.bipartition()) throw Error("exact-bipartite mode needs a bipartite graph");
    solve = [&] { return solve_bipartite(prob); };
  } else if (opt.mode == "approx") {
    solve = [&] { return solve_2approx(prob); };
  } else if (opt.mode == "frozen") {
    solve = [&] { return solve_frozen(prob); };
  } else {
    const int cap = opt.cap.value_or(kDefaultCaps.blocking_edges);
    solve = [&prob, cap] { return bribery_bruteforce(prob, cap); };
  }
  return report_bribery(prob, opt.mode, solve, r);
}

ExtensionProblem extension_problem(const InstanceFile& f, bool with_bounds) {
  ExtensionProblem ep;
  ep.graph = f.instance.graph;
  ep.ranks = need_ranks(f);
  ep.matching = need_matching(f);
  if (with_bounds && f.bounds) {
    const Graph& g = ep.graph;
    EndpointMap<int> lower = make_endpoint_map(g, 1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (int side = 0; side < 2; ++side) {
        const ValueBound& b = (*f.bounds)[e][side];
        if (!std::isinf(b.upper)) throw Error("rank bounds take l= only");
        if (b.lower != std::floor(b.lower)) throw Error("rank lower bounds must be integers");
        lower[e][side] = std::max(1, static_cast<int>(b.lower));
      }
    }
    ep.lower = std::move(lower);
  }
  return ep;
}

int report_extension(const ExtensionProblem& ep, const std::optional<Ranks>& ranks,
                     Report& r) {
  if (!ranks) {
    r.put("status", "no extension");
    return kExitNo;
  }
  r.put("status", "extended");
  Instance inst;
  inst.graph = ep.graph;
  inst.ranks = *ranks;
  r.set_sections(section_text(inst, ep.matching));
  return kExitOk;
}

int do_extend(const InstanceFile& f, const Options& opt, Report& r) {
  const ExtensionProblem ep = extension_problem(f, opt.lower_bounds);
  r.put("lower_bounds", opt.lower_bounds ? "yes" : "no");
  return report_extension(ep, opt.lower_bounds ? extend_ranks_lb(ep) : extend_ranks(ep), r);
}

int do_strat_extend(const InstanceFile& f, Report& r) {
  const Graph& g = f.instance.graph;
  StrictOrders fixed = need_orders(f);
  if (f.subset) {
    std::vector<char> keep(g.num_agents(), 0);
    for (AgentId a : *f.subset) keep[a] = 1;
    for (AgentId a = 0; a < g.num_agents(); ++a) {
      if (!keep[a]) fixed.order[a].reset();
    }
  }
  std::vector<AgentId> fixed_agents;
  for (AgentId a = 0; a < g.num_agents(); ++a) {
    if (fixed.order[a]) fixed_agents.push_back(a);
  }
  const StrategyResult res = sr_strat_independent(g, fixed);
  put_agents(r, "fixed", g, fixed_agents);
  put_edges(r, "matching", g, res.matching.edges);
  Instance inst;
  inst.graph = g;
  inst.orders = res.orders;
  r.set_sections(section_text(inst, res.matching));
  return kExitOk;
}

int do_redblue(const InstanceFile& f, const Options& opt, Report& r) {
  const Graph& g = f.instance.graph;
  if (!f.colors) throw Error("input has no [colors] section");
  const auto m = red_blue_cover(g, *f.colors, opt.cap.value_or(kDefaultRedCap));
  if (!m) {
    r.put("status", "no cover");
    return kExitNo;
  }
  r.put("status", "covered");
  put_edges(r, "matching", g, m->edges);
  InstanceFile out;
  out.instance.graph = g;
  out.colors = f.colors;
  out.matching = *m;
  r.set_sections(format_instance(out));
  return kExitOk;
}

// ---- oracle ---------------------------------------------------------------

using Rng = std::mt19937_64;

int draw(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool flip(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Graph sweep_graph(Rng& rng, int n, double density, bool bipartite) {
  std::vector<int> side(n);
  for (int& s : side) s = draw(rng, 0, 1);
  std::vector<std::pair<AgentId, AgentId>> edges;
  for (AgentId a = 0; a < n; ++a) {
    for (AgentId b = a + 1; b < n; ++b) {
      if ((!bipartite || side[a] != side[b]) && flip(rng, density)) edges.emplace_back(a, b);
    }
  }
  return Graph::with_unit_capacities(n, std::move(edges));
}

StrictOrders sweep_orders(Rng& rng, const Graph& g) {
  StrictOrders o;
  for (AgentId a = 0; a < g.num_agents(); ++a) {
    std::vector<AgentId> list;
    for (EdgeId e : g.incident(a)) list.push_back(g.other(e, a));
    std::shuffle(list.begin(), list.end(), rng);
    o.order.push_back(std::move(list));
  }
  return o;
}

QMatching sweep_maximal_matching(Rng& rng, const Graph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> load(g.num_agents(), 0);
  std::vector<EdgeId> m;
  for (EdgeId e : order) {
    const Edge& ed = g.edge(e);
    if (load[ed.u] < g.capacity(ed.u) && load[ed.v] < g.capacity(ed.v)) {
      ++load[ed.u];
      ++load[ed.v];
      m.push_back(e);
    }
  }
  return make_matching(std::move(m));
}

int do_sweep(const Options& opt, Report& r) {
  Rng rng(opt.seed);
  int mismatches = 0;
  long long partition = 0, bribery = 0, extension = 0, redblue = 0;
  for (int i = 0; i < opt.count; ++i) {
    {
      Instance inst;
      inst.graph = sweep_graph(rng, draw(rng, 1, 7), 0.6, false);
      inst.orders = sweep_orders(rng, inst.graph);
      const auto sp = stable_partition(inst.graph, *inst.orders);
      const bool exists = has_stable_q_matching(inst);
      const auto del = min_removable_set(inst.graph, *inst.orders);
      mismatches += exists != sp.odd_cycles.empty();
      mismatches += del.removed.size() != min_removable_bruteforce(inst).size();
      ++partition;
    }
    {
      BriberyProblem prob;
      prob.graph = sweep_graph(rng, draw(rng, 2, 8), 0.5, true);
      prob.values.p = make_endpoint_map(prob.graph, 0.0);
      for (auto& pair : prob.values.p) {
        for (double& x : pair) x = draw(rng, 0, 5);
      }
      prob.matching = sweep_maximal_matching(rng, prob.graph);
      if (static_cast<int>(preprocess(prob).blocking.size()) <= kDefaultCaps.blocking_edges) {
        mismatches += std::abs(solve_bipartite(prob).cost - bribery_bruteforce(prob).cost) > 1e-6;
        ++bribery;
      }
    }
    {
      ExtensionProblem ep;
      ep.graph = sweep_graph(rng, draw(rng, 2, 6), 0.6, false);
      const Graph& g = ep.graph;
      ep.matching = sweep_maximal_matching(rng, g);
      MatchingView view(g, ep.matching);
      ep.ranks.r = make_endpoint_map<std::optional<int>>(g, std::nullopt);
      int free = 0;
      for (AgentId v = 0; v < g.num_agents(); ++v) {
        std::vector<int> pos(g.degree(v));
        std::iota(pos.begin(), pos.end(), 1);
        std::shuffle(pos.begin(), pos.end(), rng);
        int k = 0;
        for (EdgeId e : g.incident(v)) {
          const bool must = view.in_matching[e] && view.saturated(g, v);
          if (must || free >= kDefaultCaps.free_positions || flip(rng, 0.6)) {
            ep.ranks.at(g, v, e) = pos[k];
          } else {
            ++free;
          }
          ++k;
        }
      }
      mismatches += extend_ranks(ep).has_value() != extension_bruteforce(ep).has_value();
      ++extension;
    }
    {
      CnfFormula f;
      f.num_vars = draw(rng, 1, 5);
      const int clauses = draw(rng, 1, 4 * f.num_vars);
      for (int j = 0; j < clauses; ++j) {
        std::vector<int> c;
        for (int k = 0; k < 3; ++k) {
          const int var = draw(rng, 1, f.num_vars);
          c.push_back(flip(rng, 0.5) ? var : -var);
        }
        f.clauses.push_back(std::move(c));
      }
      const RedBlueInstance rb = gen_red_blue_from_3sat(f);
      mismatches += red_blue_cover(rb.graph, rb.colors, 1 << 20).has_value() != sat_bruteforce(f);
      ++redblue;
    }
  }
  r.put_int("seed", static_cast<long long>(opt.seed));
  r.put_int("partition_checked", partition);
  r.put_int("bribery_checked", bribery);
  r.put_int("extension_checked", extension);
  r.put_int("redblue_checked", redblue);
  r.put_int("mismatches", mismatches);
  return mismatches == 0 ? kExitOk : kExitNo;
}

int do_oracle(const Options& opt, Report& r) {
  r.put("kind", opt.kind);
  if (opt.kind == "sweep") return do_sweep(opt, r);
  if (opt.input.empty()) throw Error("oracle " + opt.kind + " needs an input file");
  if (opt.kind == "sat" || opt.kind == "gen-redblue") {
    const CnfFormula f = parse_dimacs(read_text_file(opt.input));
    if (opt.kind == "sat") {
      const bool sat = sat_bruteforce(f, opt.cap.value_or(kDefaultCaps.sat_variables));
      r.put("satisfiable", sat ? "yes" : "no");
      return sat ? kExitOk : kExitNo;
    }
    const RedBlueInstance rb = gen_red_blue_from_3sat(f);
    InstanceFile out;
    out.instance.graph = rb.graph;
    out.colors = rb.colors;
    r.put_int("agents", rb.graph.num_agents());
    r.put_int("edges", rb.graph.num_edges());
    r.set_sections(format_instance(out));
    return kExitOk;
  }
  const InstanceFile f = read_instance_file(opt.input);
  const Graph& g = f.instance.graph;
  if (opt.kind == "enumerate") {
    if (!f.instance.values && !f.instance.orders) throw Error("input has no preference section");
    const auto all =
        enumerate_stable_q_matchings(f.instance, opt.cap.value_or(kDefaultCaps.agents));
    r.put_int("count", static_cast<long long>(all.size()));
    Json items = Json::array();
    std::vector<std::string> shown;
    for (const QMatching& m : all) {
      Json one = Json::array();
      std::vector<std::string> parts;
      for (EdgeId e : m.edges) {
        one.push_back(Json::array({g.name(g.edge(e).u), g.name(g.edge(e).v)}));
        parts.push_back("(" + format_edge(g, e) + ")");
      }
      items.push_back(std::move(one));
      shown.push_back(parts.empty() ? "{}" : join(parts));
    }
    r.put_lines("stable_matching", std::move(items), shown);
    return all.empty() ? kExitNo : kExitOk;
  }
  if (opt.kind == "min-removable") {
    need_orders(f);
    const auto s = min_removable_bruteforce(f.instance, opt.cap.value_or(kDefaultCaps.agents));
    r.put_int("size", static_cast<long long>(s.size()));
    put_agents(r, "removed", g, s);
    return kExitOk;
  }
  if (opt.kind == "bribery") {
    const BriberyProblem prob = bribery_problem(f);
    const int cap = opt.cap.value_or(kDefaultCaps.blocking_edges);
    return report_bribery(prob, "brute", [&] { return bribery_bruteforce(prob, cap); }, r);
  }
  if (opt.kind == "extension") {
    const ExtensionProblem ep = extension_problem(f, true);
    return report_extension(
        ep, extension_bruteforce(ep, opt.cap.value_or(kDefaultCaps.free_positions)), r);
  }
  if (opt.kind == "vertex-cover") {
    r.put_int("size", min_vertex_cover_bruteforce(g, opt.cap.value_or(kDefaultCaps.vertex_cover)));
    return kExitOk;
  }
  // gen-vc
  const BriberyProblem prob = gen_bribery_from_vertex_cover(g);
  InstanceFile out;
  out.instance.graph = prob.graph;
  out.instance.values = prob.values;
  out.matching = prob.matching;
  r.put_int("agents", prob.graph.num_agents());
  r.set_sections(format_instance(out));
  return kExitOk;
}

int dispatch(const Options& opt, Report& r) {
  if (opt.verb == "oracle") return do_oracle(opt, r);
  const InstanceFile f = read_instance_file(opt.input);
  if (opt.verb == "check") return do_check(f, r);
  if (opt.verb == "partition") return do_partition(f, r);
  if (opt.verb == "delete-min") return do_delete_min(f, r);
  if (opt.verb == "delete-subset") return do_delete_subset(f, opt, r);
  if (opt.verb == "bribe") return do_bribe(f, opt, r);
  if (opt.verb == "extend") return do_extend(f, opt, r);
  if (opt.verb == "strat-extend") return do_strat_extend(f, r);
  return do_redblue(f, opt, r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Repairs stable matching instances.", "stablefix"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Emit one JSON object instead of text");
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Instance file")->required();
    return sub;
  };
  auto add_cap = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--cap", opt.cap, "Size cap for " + what)->check(CLI::PositiveNumber);
  };
  with_input(app.add_subcommand("check", "Report blocking edges of the given matching"));
  with_input(app.add_subcommand("partition", "Compute a stable partition"));
  with_input(app.add_subcommand("delete-min", "Delete fewest agents so a stable matching exists"));
  add_cap(with_input(app.add_subcommand("delete-subset",
                                        "Search a removable set inside [subset]")),
          "the subset");
  auto* bribe = with_input(app.add_subcommand("bribe", "Cheapest value changes that make "
                                                       "the matching weakly stable"));
  bribe->add_option("--mode", opt.mode, "exact-bipartite, approx, frozen or brute")
      ->check(CLI::IsMember({"exact-bipartite", "approx", "frozen", "brute"}));
  add_cap(bribe, "blocking edges in brute mode");
  auto* extend = with_input(app.add_subcommand("extend", "Complete partial ranks"));
  extend->add_flag("--lower-bounds", opt.lower_bounds, "Honor rank lower bounds from [bounds]");
  with_input(app.add_subcommand("strat-extend", "Complete lists fixed on an independent set"));
  add_cap(with_input(app.add_subcommand("redblue", "Red matching touching every blue edge")),
          "red edges");
  auto* oracle = app.add_subcommand("oracle", "Brute-force deciders and generators");
  oracle
      ->add_option("kind", opt.kind,
                   "enumerate, min-removable, bribery, extension, vertex-cover, sat, "
                   "gen-vc, gen-redblue or sweep")
      ->required()
      ->check(CLI::IsMember({"enumerate", "min-removable", "bribery", "extension",
                             "vertex-cover", "sat", "gen-vc", "gen-redblue", "sweep"}));
  oracle->add_option("input", opt.input, "Instance or DIMACS file");
  add_cap(oracle, "the enumeration");
  oracle->add_option("--seed", opt.seed, "Sweep seed");
  oracle->add_option("--count", opt.count, "Sweep rounds")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  for (const CLI::App* sub : app.get_subcommands()) opt.verb = sub->get_name();

  Report report;
  report.put("verb", opt.verb);
  int code;
  try {
    code = dispatch(opt, report);
  } catch (const Infeasible& e) {
    report.put("status", "infeasible");
    report.put("reason", e.what());
    code = kExitNo;
  } catch (const Error& e) {
    err << "stablefix: " << (opt.input.empty() ? "" : opt.input + ": ") << e.what() << "\n";
    return kExitUsage;
  }
  report.emit(out, opt.json);
  return code;
}

}  // namespace stablefix::cli
