// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "netsel/errors.hpp"

namespace netsel {

struct BipartiteGraph {
  int n_left = 0;
  int n_right = 0;
  std::vector<std::vector<int>> adj;  // adj[l] = right neighbors of left node l

  BipartiteGraph() = default;
  BipartiteGraph(int nl, int nr) : n_left(nl), n_right(nr), adj(nl) {}
};

struct Matching {
  std::vector<int> left_to_right;  // -1 when unmatched
  std::vector<int> right_to_left;
  int size = 0;
};

/// Maximum bipartite matching (Hopcroft-Karp).
inline Matching maximum_matching(const BipartiteGraph& g) {
  constexpr int kInf = std::numeric_limits<int>::max();
  Matching m;
  m.left_to_right.assign(g.n_left, -1);
  m.right_to_left.assign(g.n_right, -1);

  std::vector<int> dist(g.n_left, kInf);

  auto bfs = [&]() -> bool {
    std::queue<int> q;
    for (int l = 0; l < g.n_left; ++l) {
      if (m.left_to_right[l] == -1) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    bool found_free_right = false;
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : g.adj[l]) {
        int l2 = m.right_to_left[r];
        if (l2 == -1) {
          found_free_right = true;
        } else if (dist[l2] == kInf) {
          dist[l2] = dist[l] + 1;
          q.push(l2);
        }
      }
    }
    return found_free_right;
  };

  std::function<bool(int)> dfs = [&](int l) -> bool {
    for (int r : g.adj[l]) {
      int l2 = m.right_to_left[r];
      if (l2 == -1 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
        m.left_to_right[l] = r;
        m.right_to_left[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs()) {
    for (int l = 0; l < g.n_left; ++l) {
      if (m.left_to_right[l] == -1 && dfs(l)) ++m.size;
    }
  }
  return m;
}

/// For a maximum matching that leaves some left nodes unmatched, returns a
/// left set A with |N(A)| = |A| - deficiency < |A| (Hall violator), built
/// from alternating-path reachability out of the unmatched left nodes.
/// Empty when the left side is saturated.
inline std::vector<int> hall_violator(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> left_seen(g.n_left, 0), right_seen(g.n_right, 0);
  std::queue<int> q;
  for (int l = 0; l < g.n_left; ++l) {
    if (m.left_to_right[l] == -1) {
      left_seen[l] = 1;
      q.push(l);
    }
  }
  if (q.empty()) return {};
  while (!q.empty()) {
    int l = q.front();
    q.pop();
    for (int r : g.adj[l]) {
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      int l2 = m.right_to_left[r];
      if (l2 != -1 && !left_seen[l2]) {
        left_seen[l2] = 1;
        q.push(l2);
      }
    }
  }
  std::vector<int> a;
  for (int l = 0; l < g.n_left; ++l) {
    if (left_seen[l]) a.push_back(l);
  }
  return a;
}

}  // namespace netsel
