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


// Maximum bipartite matching with Hopcroft-Karp phases. Augmenting paths
// never unmatch a vertex, so the set of covered vertices only grows.

#ifndef STABLEFIX_MATCHING_H_
#define STABLEFIX_MATCHING_H_

#include <vector>

namespace stablefix {

class BipartiteMatcher {
 public:
  BipartiteMatcher(int num_left, int num_right);

  // Adjacency is scanned in insertion order.
  void add_edge(int left, int right);

  // Extends the current matching to a maximum one. Returns its size.
  int maximize();

  // One augmenting path from an unmatched left vertex, if any exists.
  bool augment_from(int left);

  int size() const { return size_; }
  int num_left() const { return static_cast<int>(adj_.size()); }
  int num_right() const { return static_cast<int>(mate_right_.size()); }
  int mate_of_left(int left) const { return mate_left_[left]; }   // -1 if free
  int mate_of_right(int right) const { return mate_right_[right]; }
  void match(int left, int right);  // both must be free

 private:
  bool bfs();
  bool dfs(int left);

  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> dist_;
  std::vector<std::size_t> cursor_;
  int size_ = 0;
};

}  // namespace stablefix

#endif  // STABLEFIX_MATCHING_H_
