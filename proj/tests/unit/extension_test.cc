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


#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>

#include "random_instances.h"
#include "stablefix/error.h"
#include "stablefix/extension.h"
#include "stablefix/io.h"
#include "stablefix/oracle.h"
#include "stablefix/stability.h"

namespace stablefix {
namespace {

using testing::Rng;

ExtensionProblem problem_from(std::string_view text) {
  InstanceFile f = parse_instance(text);
  ExtensionProblem ep;
  ep.graph = f.instance.graph;
  ep.ranks = *f.instance.ranks;
  ep.matching = f.matching.value_or(QMatching{});
  if (f.bounds) {
    EndpointMap<int> lower = make_endpoint_map(ep.graph, 1);
    for (EdgeId e = 0; e < ep.graph.num_edges(); ++e) {
      for (int s = 0; s < 2; ++s) lower[e][s] = std::max(1, static_cast<int>((*f.bounds)[e][s].lower));
    }
    ep.lower = std::move(lower);
  }
  return ep;
}

std::string path_file(int rv, const char* extra = "") {
  return std::string(R"(
[agents]
u
v
w
x
[edges]
u v
v w
w x
[ranks]
v w )") + std::to_string(rv) + R"(
w v 2
[matching]
v w
)" + extra;
}

// Complete, consistent with the fixed part and the bounds, and stabilizing.
void expect_valid_completion(const ExtensionProblem& ep, const Ranks& r) {
  const Graph& g = ep.graph;
  for (AgentId v = 0; v < g.num_agents(); ++v) {
    std::vector<int> seen;
    for (EdgeId e : g.incident(v)) {
      ASSERT_TRUE(r.at(g, v, e));
      const int x = *r.at(g, v, e);
      if (ep.ranks.at(g, v, e)) EXPECT_EQ(x, *ep.ranks.at(g, v, e));
      EXPECT_GE(x, ep.lower_at(v, e));
      seen.push_back(x);
    }
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < static_cast<int>(seen.size()); ++i) EXPECT_EQ(seen[i], i + 1);
  }
  EXPECT_TRUE(is_stable(g, orders_from_ranks(g, r), ep.matching).stable);
}

TEST(ExtendRanks, PathExamples) {
  auto yes = problem_from(path_file(2));
  auto r = extend_ranks(yes);
  ASSERT_TRUE(r);
  const Graph& g = yes.graph;
  EXPECT_EQ(*r->at(g, 1, *g.find_edge(0, 1)), 1);
  EXPECT_EQ(*r->at(g, 2, *g.find_edge(2, 3)), 1);
  expect_valid_completion(yes, *r);
  EXPECT_TRUE(extension_bruteforce(yes));

  auto no = problem_from(path_file(1));
  EXPECT_FALSE(extend_ranks(no));
  EXPECT_FALSE(extend_ranks_lb(no));
  EXPECT_FALSE(extension_bruteforce(no));
}

TEST(ExtendRanks, NoStrayEdges) {
  auto ep = problem_from("[agents]\na\nb\n[edges]\na b\n[ranks]\na b 1\nb a 1\n[matching]\na b\n");
  auto r = extend_ranks(ep);
  ASSERT_TRUE(r);
  expect_valid_completion(ep, *r);
}

TEST(ExtendRanks, NecessarilyBlocking) {
  // Both ends rank the stray edge above their matching edge.
  auto ep = problem_from(R"(
[agents]
a
b
c
d
[edges]
a b
c d
a c
[ranks]
a b 1
a c 2
b a 1
c d 1
c a 2
d c 1
[matching]
a b
c d
)");
  EXPECT_FALSE(extend_ranks(ep));
  EXPECT_FALSE(extension_bruteforce(ep));
}

TEST(ExtendRanks, Validation) {
  auto dup = problem_from(path_file(2));
  dup.ranks.at(dup.graph, 1, *dup.graph.find_edge(0, 1)) = 2;
  EXPECT_THROW(extend_ranks(dup), Error);
  EXPECT_THROW(extension_bruteforce(dup), Error);

  auto nonmax = problem_from(path_file(2));
  nonmax.matching = QMatching{};
  EXPECT_THROW(extend_ranks(nonmax), Error);
}

TEST(ExtendRanksLb, PathBoundBlocksOnlySlot) {
  auto ep = problem_from(path_file(2, "[bounds]\nv u l=2\n"));
  EXPECT_FALSE(extend_ranks_lb(ep));
  EXPECT_FALSE(extension_bruteforce(ep));
  EXPECT_TRUE(extend_ranks(ep));  // ignores the bound
}

TEST(ExtendRanksLb, StarFitsBelowMatching) {
  auto ep = problem_from(R"(
[agents]
v
a
b
c
[edges]
v a
v b
v c
[ranks]
v a 3
a v 1
[matching]
v a
[bounds]
v b l=1
v c l=1
)");
  auto r = extend_ranks_lb(ep);
  ASSERT_TRUE(r);
  expect_valid_completion(ep, *r);
  EXPECT_TRUE(extension_bruteforce(ep));
}

TEST(ExtendRanksLb, UnitBoundsMatchPlainVersion) {
  auto ep = problem_from(path_file(2));
  ep.lower = make_endpoint_map(ep.graph, 1);
  EXPECT_EQ(extend_ranks_lb(ep)->r, extend_ranks(ep)->r);
}

TEST(SrStrat, Examples) {
  Graph path = Graph::with_unit_capacities(3, {{0, 1}, {1, 2}});
  StrictOrders fixed;
  fixed.order.assign(3, std::nullopt);
  fixed.order[0] = std::vector<AgentId>{1};
  fixed.order[2] = std::vector<AgentId>{1};
  auto res = sr_strat_independent(path, fixed);
  EXPECT_EQ(res.matching.edges, std::vector<EdgeId>{*path.find_edge(0, 1)});
  EXPECT_TRUE(is_stable(path, res.orders, res.matching).stable);
  EXPECT_EQ(*res.orders.order[1], (std::vector<AgentId>{0, 2}));

  StrictOrders none;
  none.order.assign(3, std::nullopt);
  res = sr_strat_independent(path, none);
  EXPECT_TRUE(is_maximal(path, res.matching));
  EXPECT_TRUE(is_stable(path, res.orders, res.matching).stable);

  Graph tri = Graph::with_unit_capacities(3, {{0, 1}, {1, 2}, {0, 2}});
  StrictOrders one;
  one.order.assign(3, std::nullopt);
  one.order[1] = std::vector<AgentId>{2, 0};
  res = sr_strat_independent(tri, one);
  EXPECT_EQ(res.matching.edges, std::vector<EdgeId>{*tri.find_edge(1, 2)});
  EXPECT_TRUE(is_stable(tri, res.orders, res.matching).stable);
}

TEST(SrStrat, RejectsAdjacentFixedAgents) {
  Graph g = Graph::with_unit_capacities(2, {{0, 1}});
  StrictOrders fixed;
  fixed.order = {std::vector<AgentId>{1}, std::vector<AgentId>{0}};
  EXPECT_THROW(sr_strat_independent(g, fixed), Error);
}

TEST(RedBlue, Examples) {
  Graph g = Graph::with_unit_capacities(2, {{0, 1}});
  EXPECT_FALSE(red_blue_cover(g, {EdgeColor::kBlue}));

  Graph h = Graph::with_unit_capacities(3, {{0, 1}, {0, 2}});
  auto m = red_blue_cover(h, {EdgeColor::kBlue, EdgeColor::kRed});
  ASSERT_TRUE(m);
  EXPECT_EQ(m->edges, std::vector<EdgeId>{*h.find_edge(0, 2)});

  Graph tri = Graph::with_unit_capacities(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(red_blue_cover(tri, std::vector<EdgeColor>(3, EdgeColor::kRed)), Error);
  EXPECT_THROW(red_blue_cover(h, {EdgeColor::kRed, EdgeColor::kRed}, 1), CapExceeded);
}

TEST(RedBlue, SatGadgetExamples) {
  CnfFormula taut{1, {{1, -1}}};
  auto rb = gen_red_blue_from_3sat(taut);
  EXPECT_TRUE(red_blue_cover(rb.graph, rb.colors, 1000));
  CnfFormula contra{1, {{1}, {-1}}};
  rb = gen_red_blue_from_3sat(contra);
  EXPECT_FALSE(sat_bruteforce(contra));
  EXPECT_FALSE(red_blue_cover(rb.graph, rb.colors, 1000));
}

// ---- properties ----------------------------------------------------------

TEST(ExtensionProperty, AgreesWithBruteForce) {
  Rng rng(61);
  int yes = 0, no = 0;
  for (int t = 0; t < 400; ++t) {
    testing::ExtensionOptions opt;
    opt.lower_bounds = t % 2 == 1;
    auto ep = testing::random_extension(rng, opt);
    auto brute = extension_bruteforce(ep);
    auto fast = opt.lower_bounds ? extend_ranks_lb(ep) : extend_ranks(ep);
    ASSERT_EQ(fast.has_value(), brute.has_value()) << "instance " << t;
    if (fast) {
      expect_valid_completion(ep, *fast);
      expect_valid_completion(ep, *brute);
      ++yes;
    } else {
      ++no;
    }
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}

TEST(ExtensionProperty, UnitBoundsAgree) {
  Rng rng(62);
  for (int t = 0; t < 500; ++t) {
    auto ep = testing::random_extension(rng, {});
    auto plain = extend_ranks(ep);
    ep.lower = make_endpoint_map(ep.graph, 1);
    auto lb = extend_ranks_lb(ep);
    ASSERT_EQ(plain.has_value(), lb.has_value());
    if (lb) expect_valid_completion(ep, *lb);
  }
}

TEST(ExtensionProperty, CoverageIsMonotone) {
  Rng rng(63);
  int calls = 0;
  for (int t = 0; t < 300; ++t) {
    testing::ExtensionOptions opt;
    opt.lower_bounds = true;
    opt.max_free = 12;
    auto ep = testing::random_extension(rng, opt);
    std::vector<char> prev;
    extend_ranks_lb(ep, [&](const std::vector<char>& cov) {
      ++calls;
      if (!prev.empty()) {
        ASSERT_EQ(prev.size(), cov.size());
        for (std::size_t i = 0; i < cov.size(); ++i) {
          if (prev[i]) EXPECT_TRUE(cov[i]);
        }
      }
      prev = cov;
    });
  }
  EXPECT_GT(calls, 50);
}

std::vector<char> random_independent_set(Rng& rng, const Graph& g) {
  std::vector<char> in(g.num_agents(), 0);
  for (AgentId v : testing::random_permutation(rng, g.num_agents())) {
    if (!testing::coin(rng, 0.5)) continue;
    bool ok = true;
    for (EdgeId e : g.incident(v)) ok = ok && !in[g.other(e, v)];
    in[v] = ok;
  }
  return in;
}

TEST(SrStratProperty, AlwaysStableAndExtendsFixedLists) {
  Rng rng(64);
  for (int t = 0; t < 300; ++t) {
    Instance inst = testing::random_roommates(rng, testing::uniform_int(rng, 1, 12),
                                              testing::uniform_real(rng, 0.1, 1.0));
    const Graph& g = inst.graph;
    auto in = random_independent_set(rng, g);
    StrictOrders fixed;
    fixed.order.assign(g.num_agents(), std::nullopt);
    for (AgentId v = 0; v < g.num_agents(); ++v) {
      if (in[v]) fixed.order[v] = inst.orders->order[v];
    }
    auto res = sr_strat_independent(g, fixed);
    EXPECT_TRUE(res.orders.complete());
    EXPECT_TRUE(is_stable(g, res.orders, res.matching).stable);
    for (AgentId v = 0; v < g.num_agents(); ++v) {
      if (in[v]) EXPECT_EQ(res.orders.order[v], fixed.order[v]);
    }
  }
}

bool red_blue_brute(const Graph& g, const std::vector<EdgeColor>& colors) {
  std::vector<EdgeId> red;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (colors[e] == EdgeColor::kRed) red.push_back(e);
  }
  for (std::uint32_t mask = 0; mask < (1u << red.size()); ++mask) {
    std::vector<char> used(g.num_agents(), 0);
    bool ok = true;
    for (std::size_t i = 0; i < red.size() && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (AgentId a : {g.edge(red[i]).u, g.edge(red[i]).v}) {
        ok = ok && !used[a];
        used[a] = 1;
      }
    }
    for (EdgeId e = 0; e < g.num_edges() && ok; ++e) {
      if (colors[e] == EdgeColor::kBlue) ok = used[g.edge(e).u] || used[g.edge(e).v];
    }
    if (ok) return true;
  }
  return false;
}

TEST(RedBlueProperty, MatchesSubsetEnumeration) {
  Rng rng(65);
  for (int t = 0; t < 300; ++t) {
    Graph g = testing::random_bipartite_graph(rng, testing::uniform_int(rng, 1, 5),
                                              testing::uniform_int(rng, 1, 5), 0.5);
    std::vector<EdgeColor> colors;
    for (int e = 0; e < g.num_edges(); ++e) {
      colors.push_back(testing::coin(rng, 0.6) ? EdgeColor::kRed : EdgeColor::kBlue);
    }
    auto m = red_blue_cover(g, colors);
    ASSERT_EQ(m.has_value(), red_blue_brute(g, colors));
    if (!m) continue;
    validate_q_matching(g, *m);
    MatchingView view(g, *m);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (view.in_matching[e]) EXPECT_EQ(colors[e], EdgeColor::kRed);
      if (colors[e] == EdgeColor::kBlue) {
        EXPECT_TRUE(view.load[g.edge(e).u] || view.load[g.edge(e).v]);
      }
    }
  }
}

TEST(RedBlueProperty, SatGadgetSmall) {
  Rng rng(66);
  for (int t = 0; t < 40; ++t) {
    const int vars = testing::uniform_int(rng, 1, 5);
    auto f = testing::random_3cnf(rng, vars, testing::uniform_int(rng, 1, 4 * vars + 2));
    auto rb = gen_red_blue_from_3sat(f);
    EXPECT_EQ(red_blue_cover(rb.graph, rb.colors, 1000).has_value(), sat_bruteforce(f));
  }
}

}  // namespace
}  // namespace stablefix
