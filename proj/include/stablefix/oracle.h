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


// Brute-force deciders and hardness gadgets for checking the solvers on
// small instances. The searches here share no solver code beyond the
// stability predicates (bribery_bruteforce also reuses the per-agent
// domination cost and the preprocessing step).

#ifndef STABLEFIX_ORACLE_H_
#define STABLEFIX_ORACLE_H_

#include <optional>
#include <string_view>
#include <vector>

#include "stablefix/bribery.h"
#include "stablefix/extension.h"
#include "stablefix/instance.h"

namespace stablefix {

struct OracleCaps {
  int agents = 10;            // enumerate_stable_q_matchings, min_removable
  int blocking_edges = 12;    // bribery_bruteforce
  int free_positions = 8;     // extension_bruteforce
  int sat_variables = 20;     // sat_bruteforce
  int vertex_cover = 24;      // min_vertex_cover_bruteforce
};

inline constexpr OracleCaps kDefaultCaps{};

// Every stable q-matching, sorted lexicographically by edge ids.
std::vector<QMatching> enumerate_stable_q_matchings(
    const Instance& inst, int cap = kDefaultCaps.agents);

bool has_stable_q_matching(const Instance& inst);

// Minimum-size removable set; among those the lexicographically first.
std::vector<AgentId> min_removable_bruteforce(const Instance& inst,
                                              int cap = kDefaultCaps.agents);

// Optimum over every choice of dominating endpoint per blocking edge.
BriberySolution bribery_bruteforce(const BriberyProblem& prob,
                                   int cap = kDefaultCaps.blocking_edges);

// Any completion respecting lower bounds that makes the matching stable.
std::optional<Ranks> extension_bruteforce(
    const ExtensionProblem& ep, int cap = kDefaultCaps.free_positions);

int min_vertex_cover_bruteforce(const Graph& g,
                                int cap = kDefaultCaps.vertex_cover);

// Agents v' (ids 0..n-1) and v'' (ids n..2n-1); matching v'v'' valued 0 at
// both ends, every other value 1. The optimum equals the minimum vertex
// cover size of g.
BriberyProblem gen_bribery_from_vertex_cover(const Graph& g);

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;  // nonzero literals, at most three
};

// DIMACS: "c" comments, "p cnf <vars> <clauses>", 0-terminated clauses.
CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& f);

struct RedBlueInstance {
  Graph graph;
  std::vector<EdgeColor> colors;
};

// Clause j (1-based) gets c'_j, c''_j and one vertex per literal occurrence,
// y^i_j for x_i and z^i_j for its negation; clauses shorter than three
// repeat their last literal and repeats are suffixed ~2, ~3. Variable i gets
// y_i, z_i and the selector s_i.
RedBlueInstance gen_red_blue_from_3sat(const CnfFormula& f);

bool sat_bruteforce(const CnfFormula& f, int cap = kDefaultCaps.sat_variables);

}  // namespace stablefix

#endif  // STABLEFIX_ORACLE_H_
