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

#include <catch2/catch_amalgamated.hpp>
#include <netsel/graph.hpp>
#include <netsel/graph_io.hpp>

using namespace netsel;

namespace {

// The six-node digraph used for the accessibility discussion: input 5 feeds
// 1 and 2, the pair {3, 4} is a detached 2-cycle (ids are zero-based).
Graph accessibility_digraph() {
  Graph g(6, /*directed=*/true);
  g.add_edge(5, 1);
  g.add_edge(5, 2);
  g.add_edge(1, 0);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  g.add_edge(4, 3);
  g.add_edge(3, 4);
  return g;
}

}  // namespace

TEST_CASE("graph invariants") {
  Graph g(4, false);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), InvalidArgumentError);
  CHECK_THROWS_AS(g.add_edge(0, 1), InvalidArgumentError);
  CHECK_THROWS_AS(g.add_edge(1, 0), InvalidArgumentError);  // same undirected edge
  CHECK_THROWS_AS(g.add_edge(1, 2, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(g.add_edge(1, 9), InvalidArgumentError);
  CHECK(g.has_edge(1, 0));
  CHECK(g.degree(0) == 1);
}

TEST_CASE("grounded laplacian on tiny graphs") {
  const Graph path = named_graph(NamedTopology::path, 2);
  const GroundedLaplacian gl = grounded_laplacian(path, {1});
  REQUIRE(gl.l_ff.rows() == 1);
  CHECK(gl.l_ff(0, 0) == 1.0);
  CHECK(gl.l_fl(0, 0) == -1.0);

  const GroundedLaplacian all = grounded_laplacian(path, {0, 1});
  CHECK(all.l_ff.rows() == 0);
  CHECK(all.l_fl.rows() == 0);

  CHECK_THROWS_AS(grounded_laplacian(path, {7}), InvalidArgumentError);
}

TEST_CASE("grounded laplacian rows sum to zero with degree diagonal") {
  const Graph g = named_graph(NamedTopology::ring, 6);
  const GroundedLaplacian gl = grounded_laplacian(g, {0, 3});
  for (int r = 0; r < gl.l_ff.rows(); ++r) {
    CHECK(gl.l_ff(r, r) == static_cast<double>(g.degree(gl.followers[r])));
    CHECK(gl.l_ff.row(r).sum() + gl.l_fl.row(r).sum() == Catch::Approx(0.0).margin(1e-12));
  }
}

TEST_CASE("follower block sparsity matches the actuated pattern") {
  const Graph g = accessibility_digraph();
  const GroundedLaplacian gl = grounded_laplacian(g, {5});
  REQUIRE(gl.followers == std::vector<int>{0, 1, 2, 3, 4});
  // Off-diagonal nonzeros of L_ff mirror the A pattern of the realized
  // system: (0,1), (0,2), (1,0), (3,4), (4,3).
  const std::vector<std::pair<int, int>> expected{{0, 1}, {0, 2}, {1, 0}, {3, 4}, {4, 3}};
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      if (r == c) continue;
      const bool want =
          std::find(expected.begin(), expected.end(), std::make_pair(r, c)) != expected.end();
      CHECK((gl.l_ff(r, c) != 0.0) == want);
    }
  }
  // B pattern: only followers 1 and 2 hear the input.
  for (int r = 0; r < 5; ++r) {
    CHECK((gl.l_fl(r, 0) != 0.0) == (r == 1 || r == 2));
  }
}

TEST_CASE("grounding one more node deletes its row and column") {
  const Graph g = geometric_graph(12, 100.0, 45.0, 99);
  const GroundedLaplacian small = grounded_laplacian(g, {2});
  const GroundedLaplacian larger = grounded_laplacian(g, {2, 7});
  const int drop = small.follower_index(7);
  REQUIRE(drop >= 0);
  int rr = 0;
  for (int r = 0; r < small.l_ff.rows(); ++r) {
    if (r == drop) continue;
    int cc = 0;
    for (int c = 0; c < small.l_ff.cols(); ++c) {
      if (c == drop) continue;
      CHECK(small.l_ff(r, c) == larger.l_ff(rr, cc));
      ++cc;
    }
    ++rr;
  }
}

TEST_CASE("generators: named topologies") {
  const Graph ring = named_graph(NamedTopology::ring, 4);
  CHECK(ring.edge_count() == 4);
  for (int i = 0; i < 4; ++i) CHECK(ring.degree(i) == 2);

  const Graph star = named_graph(NamedTopology::star, 5);
  CHECK(star.degree(0) == 4);
  for (int i = 1; i < 5; ++i) CHECK(star.degree(i) == 1);

  CHECK(named_graph(NamedTopology::path, 2).edge_count() == 1);
  CHECK(named_graph(NamedTopology::ring, 1).edge_count() == 0);
}

TEST_CASE("generators: geometric") {
  CHECK(geometric_graph(1, 10.0, 5.0, 1).edge_count() == 0);
  const int n = 9;
  const Graph complete = geometric_graph(n, 10.0, 14.2, 5);  // radius > sqrt(2) * width
  CHECK(complete.edge_count() == n * (n - 1) / 2);

  // Identical seeds reproduce the edge list bit-exactly.
  const Graph a = geometric_graph(40, 500.0, 120.0, 77);
  const Graph b = geometric_graph(40, 500.0, 120.0, 77);
  REQUIRE(a.edge_count() == b.edge_count());
  for (int i = 0; i < a.edge_count(); ++i) {
    CHECK(a.edges()[i].src == b.edges()[i].src);
    CHECK(a.edges()[i].dst == b.edges()[i].dst);
  }
}

TEST_CASE("geometric mean degree tracks the Monte-Carlo pair estimate") {
  // Monte-Carlo estimate of P(dist <= r) for uniform points in the square.
  Rng rng(4242);
  const double width = 1000.0, radius = 300.0;
  long hits = 0;
  const long pairs = 200000;
  for (long i = 0; i < pairs; ++i) {
    const double dx = rng.uniform(0.0, width) - rng.uniform(0.0, width);
    const double dy = rng.uniform(0.0, width) - rng.uniform(0.0, width);
    if (dx * dx + dy * dy <= radius * radius) ++hits;
  }
  const int n = 100;
  const double expected_degree = static_cast<double>(hits) / pairs * (n - 1);

  double mean_degree = 0.0;
  const int seeds = 50;
  for (int s = 0; s < seeds; ++s) {
    const Graph g = geometric_graph(n, width, radius, 1000 + s);
    mean_degree += 2.0 * g.edge_count() / n;
  }
  mean_degree /= seeds;
  CHECK(mean_degree == Catch::Approx(expected_degree).epsilon(0.2));
}

TEST_CASE("generators: erdos-renyi") {
  CHECK(erdos_renyi(10, 0.0, 3).edge_count() == 0);
  CHECK(erdos_renyi(10, 1.0, 3).edge_count() == 45);
  CHECK(erdos_renyi(6, 1.0, 3, true).edge_count() == 30);

  // Edge count over 50 seeds vs the binomial mean within 3 sigma.
  const int n = 70;
  const double q = 0.07;
  const double pairs = n * (n - 1) / 2.0;
  double mean = 0.0;
  const int seeds = 50;
  for (int s = 0; s < seeds; ++s) mean += erdos_renyi(n, q, 500 + s).edge_count();
  mean /= seeds;
  const double sigma = std::sqrt(pairs * q * (1 - q) / seeds);
  CHECK(std::abs(mean - pairs * q) <= 3.0 * sigma);
}

TEST_CASE("graph io round trips") {
  Graph g(5, true);
  g.add_edge(0, 1, 2.0);
  g.add_edge(1, 2);
  g.add_edge(4, 0, -1.5);

  const Graph from_json = graph_from_json(graph_to_json(g));
  CHECK(graph_to_json(from_json) == graph_to_json(g));

  const Graph from_text = graph_from_edge_list(graph_to_edge_list(g));
  CHECK(graph_to_json(from_text) == graph_to_json(g));
  CHECK(from_text.node_count() == 5);
  CHECK(from_text.directed());

  // Round trip through random graphs, both formats.
  for (int s = 0; s < 10; ++s) {
    const Graph r = erdos_renyi(12, 0.3, 9000 + s, s % 2 == 0);
    CHECK(graph_to_json(graph_from_edge_list(graph_to_edge_list(r))) == graph_to_json(r));
    CHECK(graph_to_json(graph_from_json(graph_to_json(r))) == graph_to_json(r));
  }
}

TEST_CASE("topology set validation") {
  TopologySet ts;
  ts.topologies.push_back(named_graph(NamedTopology::ring, 5));
  ts.topologies.push_back(named_graph(NamedTopology::path, 5));
  ts.validate();

  ts.topologies.push_back(named_graph(NamedTopology::path, 4));
  CHECK_THROWS_AS(ts.validate(), InvalidArgumentError);
  ts.topologies.pop_back();

  ts.mode = TopologyMode::sampled;
  ts.weights = {0.5, 0.6};
  CHECK_THROWS_AS(ts.validate(), InvalidArgumentError);
  ts.weights = {0.25, 0.75};
  ts.validate();
}
