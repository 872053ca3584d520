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


// Submodular function minimization over a ground set {0, ..., n-1}.

#ifndef STABLEFIX_SUBMODULAR_H_
#define STABLEFIX_SUBMODULAR_H_

#include <functional>
#include <vector>

namespace stablefix {

// Receives membership flags of length n.
using SetFunction = std::function<double(const std::vector<char>&)>;

struct SubmodularMinimum {
  std::vector<int> set;  // ascending
  double value = 0.0;
};

inline constexpr int kExhaustiveLimit = 20;

// Exhaustive search when n <= exhaustive_limit, otherwise the minimum-norm
// base point method. f must be finite and submodular; it need not be
// normalized. Throws Error if f returns NaN or an infinite value.
SubmodularMinimum minimize_submodular(const SetFunction& f, int n,
                                      int exhaustive_limit = kExhaustiveLimit);

// The two engines, exposed for testing.
SubmodularMinimum minimize_exhaustive(const SetFunction& f, int n);
SubmodularMinimum minimize_min_norm_point(const SetFunction& f, int n);

}  // namespace stablefix

#endif  // STABLEFIX_SUBMODULAR_H_
