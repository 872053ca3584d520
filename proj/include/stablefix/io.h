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

// Line-oriented instance files.
//
//   [agents]    <id> [cap=<int>]
//   [edges]     <id> <id>
//   [values]    <id>: <neighbor>=<real> ...
//   [orders]    <id>: <n1> > <n2> > ...
//   [ranks]     <id> <neighbor> <int>
//   [matching]  <id> <id>
//   [bounds]    <id> <neighbor> [l=<real>] [u=<real>]
//   [weights]   <id> <real>
//   [subset]    <id> ...
//   [colors]    <id> <id> r|b
//
// '#' starts a comment. Sections may appear in any order.

#ifndef STABLEFIX_IO_H_
#define STABLEFIX_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stablefix/instance.h"

namespace stablefix {

struct InstanceFile {
  Instance instance;
  std::optional<QMatching> matching;
  std::optional<EndpointMap<ValueBound>> bounds;
  std::optional<std::vector<double>> weights;
  std::optional<std::vector<AgentId>> subset;  // sorted, distinct
  std::optional<std::vector<EdgeColor>> colors;
};

// Throws ParseError with the offending line and column.
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance_file(const std::string& path);
std::string read_text_file(const std::string& path);

// Shortest decimal form that parses back to the same double.
std::string format_number(double x);

std::string format_edge(const Graph& g, EdgeId e);
std::string format_agents_section(const Graph& g);
std::string format_edges_section(const Graph& g);
std::string format_values_section(const Graph& g, const Values& values);
std::string format_orders_section(const Graph& g, const StrictOrders& orders);
std::string format_ranks_section(const Graph& g, const Ranks& ranks);
std::string format_matching_section(const Graph& g, const QMatching& m);
std::string format_colors_section(const Graph& g,
                                  const std::vector<EdgeColor>& colors);

// Every present section, in the canonical order above.
std::string format_instance(const InstanceFile& file);

}  // namespace stablefix

#endif  // STABLEFIX_IO_H_
