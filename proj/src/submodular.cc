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


#include "stablefix/submodular.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "stablefix/error.h"

namespace stablefix {
namespace {

constexpr double kEps = 1e-10;

double checked(const SetFunction& f, const std::vector<char>& in) {
  double v = f(in);
  if (!std::isfinite(v)) throw Error("set function returned a non-finite value");
  return v;
}

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Greedy vertex of the base polytope for the order sorting w ascending.
Vec greedy_vertex(const SetFunction& f, int n, const Vec& w, double f_empty) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] < w[b]; });
  Vec q(n);
  std::vector<char> in(n, 0);
  double prev = f_empty;
  for (int i : order) {
    in[i] = 1;
    double cur = checked(f, in);
    q[i] = cur - prev;
    prev = cur;
  }
  return q;
}

// Coefficients of the minimum-norm point in the affine hull of `pts`:
// solves [G 1; 1^T 0] [a; mu] = [0; 1].
Vec affine_minimizer(const std::vector<Vec>& pts) {
  const int k = static_cast<int>(pts.size());
  const int m = k + 1;
  std::vector<Vec> a(m, Vec(m + 1, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = dot(pts[i], pts[j]);
    a[i][i] += 1e-12;
    a[i][k] = 1.0;
    a[k][i] = 1.0;
  }
  a[k][m] = 1.0;
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    if (std::abs(a[c][c]) < 1e-300) continue;
    for (int r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0.0) continue;
      double factor = a[r][c] / a[c][c];
      for (int j = c; j <= m; ++j) a[r][j] -= factor * a[c][j];
    }
  }
  Vec alpha(k);
  for (int i = 0; i < k; ++i) {
    alpha[i] = std::abs(a[i][i]) < 1e-300 ? 0.0 : a[i][m] / a[i][i];
  }
  return alpha;
}

}  // namespace

SubmodularMinimum minimize_exhaustive(const SetFunction& f, int n) {
  if (n > 30) throw Error("exhaustive minimization limited to 30 elements");
  std::vector<char> in(n, 0);
  SubmodularMinimum best{{}, checked(f, in)};
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) in[i] = (mask >> i) & 1;
    double v = checked(f, in);
    if (v < best.value - 1e-12) {
      best.value = v;
      best_mask = mask;
    }
  }
  for (int i = 0; i < n; ++i) {
    if ((best_mask >> i) & 1) best.set.push_back(i);
  }
  return best;
}

SubmodularMinimum minimize_min_norm_point(const SetFunction& f, int n) {
  std::vector<char> in(n, 0);
  const double f_empty = checked(f, in);
  SubmodularMinimum best{{}, f_empty};
  if (n == 0) return best;

  std::vector<Vec> pts{greedy_vertex(f, n, Vec(n, 0.0), f_empty)};
  Vec lambda{1.0};
  Vec x = pts[0];
  double scale = 1.0;
  for (const double v : x) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * scale * scale * n;

  for (int major = 0; major < 100 * n + 1000; ++major) {
    Vec q = greedy_vertex(f, n, x, f_empty);
    if (dot(x, x) - dot(x, q) <= tol) break;
    if (std::find(pts.begin(), pts.end(), q) != pts.end()) break;
    pts.push_back(std::move(q));
    lambda.push_back(0.0);

    for (int minor = 0; minor < 10 * n + 100; ++minor) {
      Vec alpha = affine_minimizer(pts);
      Vec y(n, 0.0);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int j = 0; j < n; ++j) y[j] += alpha[i] * pts[i][j];
      }
      bool interior = std::all_of(alpha.begin(), alpha.end(),
                                  [](double a) { return a > kEps; });
      if (interior) {
        x = std::move(y);
        lambda = std::move(alpha);
        break;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (alpha[i] <= kEps && lambda[i] - alpha[i] > 0) {
          theta = std::min(theta, lambda[i] / (lambda[i] - alpha[i]));
        }
      }
      for (int j = 0; j < n; ++j) x[j] = theta * y[j] + (1 - theta) * x[j];
      for (std::size_t i = 0; i < pts.size(); ++i) {
        lambda[i] = theta * alpha[i] + (1 - theta) * lambda[i];
      }
      std::vector<Vec> kept_pts;
      Vec kept_lambda;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (lambda[i] > kEps) {
          kept_pts.push_back(std::move(pts[i]));
          kept_lambda.push_back(lambda[i]);
        }
      }
      pts = std::move(kept_pts);
      lambda = std::move(kept_lambda);
      double total = std::accumulate(lambda.begin(), lambda.end(), 0.0);
      for (double& l : lambda) l /= total;
    }
  }

  // Best prefix of the ascending order of x.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  int best_len = 0;
  for (int len = 1; len <= n; ++len) {
    in[order[len - 1]] = 1;
    double v = checked(f, in);
    if (v < best.value - 1e-12) {
      best.value = v;
      best_len = len;
    }
  }
  best.set.assign(order.begin(), order.begin() + best_len);
  std::sort(best.set.begin(), best.set.end());
  return best;
}

SubmodularMinimum minimize_submodular(const SetFunction& f, int n,
                                      int exhaustive_limit) {
  if (n <= exhaustive_limit) return minimize_exhaustive(f, n);
  return minimize_min_norm_point(f, n);
}

}  // namespace stablefix
