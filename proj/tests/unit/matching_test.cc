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

#include <cstdint>

#include "random_instances.h"
#include "stablefix/matching.h"

namespace stablefix {
namespace {

using testing::Rng;

int brute_max_matching(int nl, int nr, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  const int m = static_cast<int>(edges.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> ul(nl, 0), ur(nr, 0);
    int size = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      auto [l, r] = edges[i];
      if (ul[l] || ur[r]) ok = false;
      ul[l] = ur[r] = 1;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

TEST(BipartiteMatcher, MatchesBruteForce) {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const int nl = testing::uniform_int(rng, 1, 5), nr = testing::uniform_int(rng, 1, 5);
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < nl; ++l) {
      for (int r = 0; r < nr; ++r) {
        if (testing::coin(rng, 0.4)) edges.emplace_back(l, r);
      }
    }
    BipartiteMatcher m(nl, nr);
    for (auto [l, r] : edges) m.add_edge(l, r);
    EXPECT_EQ(m.maximize(), brute_max_matching(nl, nr, edges));
    for (int l = 0; l < nl; ++l) {
      if (m.mate_of_left(l) != -1) EXPECT_EQ(m.mate_of_right(m.mate_of_left(l)), l);
    }
  }
}

TEST(BipartiteMatcher, SingleAugmentationsReachMaximumAndKeepCoverage) {
  Rng rng(32);
  for (int t = 0; t < 300; ++t) {
    const int nl = testing::uniform_int(rng, 1, 7), nr = testing::uniform_int(rng, 1, 7);
    BipartiteMatcher a(nl, nr), b(nl, nr);
    for (int l = 0; l < nl; ++l) {
      for (int r = 0; r < nr; ++r) {
        if (testing::coin(rng, 0.35)) {
          a.add_edge(l, r);
          b.add_edge(l, r);
        }
      }
    }
    std::vector<char> left_cov(nl, 0), right_cov(nr, 0);
    for (int l = 0; l < nl; ++l) {
      a.augment_from(l);
      for (int x = 0; x < nl; ++x) {
        if (left_cov[x]) EXPECT_NE(a.mate_of_left(x), -1);
        left_cov[x] = a.mate_of_left(x) != -1;
      }
      for (int y = 0; y < nr; ++y) {
        if (right_cov[y]) EXPECT_NE(a.mate_of_right(y), -1);
        right_cov[y] = a.mate_of_right(y) != -1;
      }
    }
    EXPECT_EQ(a.size(), b.maximize());
  }
}

}  // namespace
}  // namespace stablefix
