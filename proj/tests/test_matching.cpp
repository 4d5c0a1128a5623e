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

#include <functional>

#include <catch2/catch_amalgamated.hpp>
#include <netsel/matching.hpp>
#include <netsel/rng.hpp>

using namespace netsel;

namespace {

// Simple augmenting-path matcher, the independent oracle for Hopcroft-Karp.
int kuhn_matching_size(const BipartiteGraph& g) {
  std::vector<int> match_right(static_cast<std::size_t>(g.n_right), -1);
  int size = 0;
  for (int l = 0; l < g.n_left; ++l) {
    std::vector<char> used(static_cast<std::size_t>(g.n_right), 0);
    std::function<bool(int)> augment = [&](int left) -> bool {
      for (int r : g.adj[static_cast<std::size_t>(left)]) {
        if (used[static_cast<std::size_t>(r)]) continue;
        used[static_cast<std::size_t>(r)] = 1;
        if (match_right[static_cast<std::size_t>(r)] == -1 ||
            augment(match_right[static_cast<std::size_t>(r)])) {
          match_right[static_cast<std::size_t>(r)] = left;
          return true;
        }
      }
      return false;
    };
    if (augment(l)) ++size;
  }
  return size;
}

}  // namespace

TEST_CASE("hopcroft-karp on hand instances") {
  BipartiteGraph g(3, 3);
  g.adj[0] = {0, 1};
  g.adj[1] = {0};
  g.adj[2] = {1, 2};
  const Matching m = maximum_matching(g);
  CHECK(m.size == 3);

  BipartiteGraph tight(3, 2);
  tight.adj[0] = {0};
  tight.adj[1] = {0};
  tight.adj[2] = {1};
  const Matching m2 = maximum_matching(tight);
  CHECK(m2.size == 2);
  const std::vector<int> violator = hall_violator(tight, m2);
  REQUIRE(violator.size() == 2);  // the two lefts sharing right 0
  CHECK(violator[0] == 0);
  CHECK(violator[1] == 1);
}

TEST_CASE("hopcroft-karp matches the augmenting-path oracle") {
  Rng rng(404);
  for (int t = 0; t < 60; ++t) {
    const int nl = 1 + rng.index(8);
    const int nr = 1 + rng.index(8);
    BipartiteGraph g(nl, nr);
    for (int l = 0; l < nl; ++l) {
      for (int r = 0; r < nr; ++r) {
        if (rng.bernoulli(0.35)) g.adj[static_cast<std::size_t>(l)].push_back(r);
      }
    }
    const Matching m = maximum_matching(g);
    CHECK(m.size == kuhn_matching_size(g));

    // Consistency of the two matching maps.
    int count = 0;
    for (int l = 0; l < nl; ++l) {
      if (m.left_to_right[static_cast<std::size_t>(l)] != -1) {
        ++count;
        CHECK(m.right_to_left[static_cast<std::size_t>(m.left_to_right[static_cast<std::size_t>(l)])] == l);
      }
    }
    CHECK(count == m.size);
  }
}

TEST_CASE("hall violator certifies deficiency") {
  Rng rng(505);
  for (int t = 0; t < 40; ++t) {
    const int nl = 2 + rng.index(7);
    const int nr = 1 + rng.index(6);
    BipartiteGraph g(nl, nr);
    for (int l = 0; l < nl; ++l) {
      for (int r = 0; r < nr; ++r) {
        if (rng.bernoulli(0.3)) g.adj[static_cast<std::size_t>(l)].push_back(r);
      }
    }
    const Matching m = maximum_matching(g);
    const std::vector<int> a = hall_violator(g, m);
    if (m.size == nl) {
      CHECK(a.empty());
      continue;
    }
    REQUIRE(!a.empty());
    // |N(A)| = |A| - deficiency.
    std::vector<char> nbr(static_cast<std::size_t>(nr), 0);
    for (int l : a) {
      for (int r : g.adj[static_cast<std::size_t>(l)]) nbr[static_cast<std::size_t>(r)] = 1;
    }
    int n_a = 0;
    for (char c : nbr) n_a += c;
    CHECK(n_a == static_cast<int>(a.size()) - (nl - m.size));
    CHECK(n_a < static_cast<int>(a.size()));
  }
}
