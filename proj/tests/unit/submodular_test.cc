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

#include <cmath>

#include "random_instances.h"
#include "stablefix/error.h"
#include "stablefix/submodular.h"

namespace stablefix {
namespace {

using testing::Rng;

TEST(Submodular, ModularFunction) {
  const std::vector<double> w{-1, 2, -3};
  SetFunction f = [&](const std::vector<char>& in) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += in[i] ? w[i] : 0;
    return s;
  };
  for (auto r : {minimize_exhaustive(f, 3), minimize_min_norm_point(f, 3)}) {
    EXPECT_EQ(r.set, (std::vector<int>{0, 2}));
    EXPECT_DOUBLE_EQ(r.value, -4);
  }
}

TEST(Submodular, ConstantZero) {
  SetFunction f = [](const std::vector<char>&) { return 0.0; };
  EXPECT_DOUBLE_EQ(minimize_submodular(f, 5).value, 0.0);
  EXPECT_DOUBLE_EQ(minimize_min_norm_point(f, 5).value, 0.0);
}

TEST(Submodular, RejectsNonFinite) {
  SetFunction f = [](const std::vector<char>&) { return NAN; };
  EXPECT_THROW(minimize_submodular(f, 2), Error);
}

// Random cut function plus modular term plus a concave function of size.
struct RandomSubmodular {
  int n;
  std::vector<std::vector<double>> w;
  std::vector<double> unary;
  double concave;

  double operator()(const std::vector<char>& in) const {
    double s = 0;
    int size = 0;
    for (int i = 0; i < n; ++i) {
      size += in[i];
      if (in[i]) s += unary[i];
      for (int j = 0; j < n; ++j) {
        if (in[i] && !in[j]) s += w[i][j];
      }
    }
    return s + concave * std::sqrt(static_cast<double>(size));
  }
};

TEST(Submodular, MinNormPointMatchesExhaustive) {
  Rng rng(41);
  for (int t = 0; t < 150; ++t) {
    RandomSubmodular g;
    g.n = testing::uniform_int(rng, 1, 12);
    g.w.assign(g.n, std::vector<double>(g.n, 0.0));
    for (auto& row : g.w) {
      for (double& x : row) x = testing::coin(rng, 0.4) ? testing::uniform_real(rng, 0, 3) : 0;
    }
    for (int i = 0; i < g.n; ++i) g.unary.push_back(testing::uniform_real(rng, -6, 4));
    g.concave = testing::uniform_real(rng, 0, 4);
    SetFunction f = g;
    auto a = minimize_exhaustive(f, g.n);
    auto b = minimize_min_norm_point(f, g.n);
    EXPECT_NEAR(a.value, b.value, 1e-6) << "n=" << g.n;
    std::vector<char> in(g.n, 0);
    for (int i : b.set) in[i] = 1;
    EXPECT_NEAR(f(in), b.value, 1e-9);
  }
}

TEST(Submodular, DispatchesOnSize) {
  Rng rng(42);
  RandomSubmodular g;
  g.n = 24;
  g.w.assign(g.n, std::vector<double>(g.n, 0.0));
  for (auto& row : g.w) {
    for (double& x : row) x = testing::coin(rng, 0.2) ? testing::uniform_real(rng, 0, 2) : 0;
  }
  for (int i = 0; i < g.n; ++i) g.unary.push_back(testing::uniform_real(rng, -3, 3));
  g.concave = 1.0;
  auto r = minimize_submodular(g, g.n);
  // Optimality check on single-element moves.
  std::vector<char> in(g.n, 0);
  for (int i : r.set) in[i] = 1;
  for (int i = 0; i < g.n; ++i) {
    in[i] ^= 1;
    EXPECT_GE(g(in), r.value - 1e-6);
    in[i] ^= 1;
  }
}

}  // namespace
}  // namespace stablefix
