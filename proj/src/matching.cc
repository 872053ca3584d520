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


#include "stablefix/matching.h"

#include <deque>
#include <limits>

#include "stablefix/error.h"

namespace stablefix {
namespace {
constexpr int kUnreached = std::numeric_limits<int>::max();
}  // namespace

BipartiteMatcher::BipartiteMatcher(int num_left, int num_right)
    : adj_(num_left), mate_left_(num_left, -1), mate_right_(num_right, -1) {}

void BipartiteMatcher::add_edge(int left, int right) {
  adj_[left].push_back(right);
}

void BipartiteMatcher::match(int left, int right) {
  if (mate_left_[left] != -1 || mate_right_[right] != -1) {
    throw Error("internal: matching an already covered vertex");
  }
  mate_left_[left] = right;
  mate_right_[right] = left;
  ++size_;
}

bool BipartiteMatcher::bfs() {
  dist_.assign(adj_.size(), kUnreached);
  std::deque<int> queue;
  for (int l = 0; l < num_left(); ++l) {
    if (mate_left_[l] == -1) {
      dist_[l] = 0;
      queue.push_back(l);
    }
  }
  bool found = false;
  while (!queue.empty()) {
    int l = queue.front();
    queue.pop_front();
    for (int r : adj_[l]) {
      int next = mate_right_[r];
      if (next == -1) {
        found = true;
      } else if (dist_[next] == kUnreached) {
        dist_[next] = dist_[l] + 1;
        queue.push_back(next);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(int left) {
  for (std::size_t& i = cursor_[left]; i < adj_[left].size(); ++i) {
    int r = adj_[left][i];
    int next = mate_right_[r];
    if (next == -1 || (dist_[next] == dist_[left] + 1 && dfs(next))) {
      mate_left_[left] = r;
      mate_right_[r] = left;
      return true;
    }
  }
  dist_[left] = kUnreached;
  return false;
}

int BipartiteMatcher::maximize() {
  while (bfs()) {
    cursor_.assign(adj_.size(), 0);
    for (int l = 0; l < num_left(); ++l) {
      if (mate_left_[l] == -1 && dfs(l)) ++size_;
    }
  }
  return size_;
}

bool BipartiteMatcher::augment_from(int left) {
  if (mate_left_[left] != -1) return false;
  // Plain BFS over alternating paths rooted at `left`.
  std::vector<int> parent_right(num_right(), -2);
  std::deque<int> queue{left};
  std::vector<char> seen_left(num_left(), 0);
  seen_left[left] = 1;
  while (!queue.empty()) {
    int l = queue.front();
    queue.pop_front();
    for (int r : adj_[l]) {
      if (parent_right[r] != -2) continue;
      parent_right[r] = l;
      if (mate_right_[r] == -1) {
        for (int cur = r; cur != -1;) {
          int pl = parent_right[cur];
          int prev = mate_left_[pl];
          mate_left_[pl] = cur;
          mate_right_[cur] = pl;
          cur = pl == left ? -1 : prev;
        }
        ++size_;
        return true;
      }
      int nl = mate_right_[r];
      if (!seen_left[nl]) {
        seen_left[nl] = 1;
        queue.push_back(nl);
      }
    }
  }
  return false;
}

}  // namespace stablefix
