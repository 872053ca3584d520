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

// Stable partitions of roommates instances with strict, possibly incomplete
// preference lists, and minimum agent deletion built on them.
//
// A stable partition is a permutation pi of the agents such that for every u
//   (i)  if pi(u) != pi^-1(u): u pi(u), u pi^-1(u) are edges and
//        pi(u) >_u pi^-1(u);
//   (ii) for every neighbor v: if pi(u) = u or v >_u pi^-1(u), then
//        pi^-1(v) >=_v u,
// where an agent ranks itself below every neighbor. Every instance has one,
// and all of them share their singletons and odd cycles.

#ifndef STABLEFIX_PARTITION_H_
#define STABLEFIX_PARTITION_H_

#include <optional>
#include <span>
#include <vector>

#include "stablefix/instance.h"

namespace stablefix {

struct StablePartition {
  std::vector<AgentId> pi;
  // Cycles of length >= 2, each rotated to start at its lowest id, sorted by
  // that id. Cycle order follows pi: c[k + 1] = pi(c[k]).
  std::vector<std::vector<AgentId>> cycles;
  std::vector<std::vector<AgentId>> odd_cycles;  // odd length >= 3
  std::vector<AgentId> singletons;
};

// Decomposes a permutation. Throws Error unless pi is a bijection.
StablePartition decompose_permutation(std::vector<AgentId> pi);

// Requires unit capacities and complete strict orders.
StablePartition stable_partition(const Graph& g, const StrictOrders& orders);

struct PartitionViolation {
  int condition;  // 1 or 2
  AgentId u;
  AgentId v;  // for condition 1, the offending pi(u) or pi^-1(u)
};

// Empty when pi is a stable partition. Throws Error if pi is not a bijection.
std::optional<PartitionViolation> verify_partition(const Graph& g,
                                                   const StrictOrders& orders,
                                                   std::span<const AgentId> pi);

struct DeletionResult {
  std::vector<AgentId> removed;  // ascending
  QMatching matching;            // edge ids of the original graph
};

// Deletes the lowest agent of every odd cycle of a stable partition and
// matches the remaining cycle agents consecutively. The removed set has
// minimum size.
DeletionResult min_removable_set(const Graph& g, const StrictOrders& orders);

inline constexpr int kDefaultSubsetCap = 20;

// Some S within `allowed` whose deletion leaves an instance with a stable
// matching, searching subsets by increasing size (then lexicographically).
// Throws CapExceeded if |allowed| > cap.
std::optional<std::vector<AgentId>> subset_removable(
    const Graph& g, const StrictOrders& orders,
    std::span<const AgentId> allowed, int cap = kDefaultSubsetCap);

}  // namespace stablefix

#endif  // STABLEFIX_PARTITION_H_
