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
#include <netsel/perf_metrics.hpp>
#include <netsel/verify.hpp>

#include "oracles.hpp"

using namespace netsel;

TEST_CASE("noise variance closed forms") {
  const Graph path2 = named_graph(NamedTopology::path, 2);
  CHECK(noise_variance(path2, {1}) == Catch::Approx(1.0));

  const Graph star = named_graph(NamedTopology::star, 5);
  CHECK(noise_variance(star, {0}) == Catch::Approx(4.0));

  CHECK_THROWS_AS(noise_variance(path2, {}), InvalidArgumentError);

  Graph disconnected(3, false);
  disconnected.add_edge(0, 1);
  CHECK_THROWS_AS(noise_variance(disconnected, {0}), SingularLaplacianError);
}

TEST_CASE("ring-10 greedy second pick is the antipodal node") {
  const Graph ring = named_graph(NamedTopology::ring, 10);
  int best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int v = 1; v < 10; ++v) {
    const double r = noise_variance(ring, {0, v});
    if (r < best_value) {
      best_value = r;
      best = v;
    }
  }
  CHECK(best == 5);
}

TEST_CASE("node noise variance") {
  const Graph path2 = named_graph(NamedTopology::path, 2);
  CHECK(node_noise_variance(path2, {1}, 0) == Catch::Approx(1.0));
  CHECK_THROWS_AS(node_noise_variance(path2, {1}, 1), InvalidArgumentError);

  const Graph path3 = named_graph(NamedTopology::path, 3);
  CHECK(node_noise_variance(path3, {2}, 0) == Catch::Approx(2.0));

  // Two parallel 2-edge paths between u and the input: effective resistance 1.
  const Graph ring4 = named_graph(NamedTopology::ring, 4);
  CHECK(node_noise_variance(ring4, {0}, 2) == Catch::Approx(1.0));
}

TEST_CASE("kalman log det") {
  // No observations: the posterior is the stacked prior.
  const KalmanSetup id3 =
      KalmanSetup::with_identity_prior(Matrix::Identity(3, 3) * 0.5, /*horizon=*/2);
  CHECK(kalman_log_det(id3, {}) == Catch::Approx(0.0).margin(1e-12));

  // n=1, a=1, prior 1, sigma^2=1, k=1, s={0}: compare to the information-form
  // Bayesian oracle on the 2x2 posterior.
  Matrix a1(1, 1);
  a1 << 1.0;
  const KalmanSetup setup = KalmanSetup::with_identity_prior(a1, /*horizon=*/1);
  Matrix c(1, 1);
  c << 1.0;
  const Matrix o = kalman_observation_matrix(setup, c);
  REQUIRE(o.rows() == 2);
  REQUIRE(o.cols() == 2);
  const Matrix posterior = oracles::bayes_posterior_cov(Matrix::Identity(2, 2), o, 1.0);
  CHECK(kalman_log_det(setup, {0}) ==
        Catch::Approx(std::log(posterior.determinant())).margin(1e-9));

  // Observing strictly reduces the log-volume on random 3-state systems.
  Rng rng(99);
  for (int t = 0; t < 10; ++t) {
    Matrix a(3, 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    }
    const KalmanSetup s3 = KalmanSetup::with_identity_prior(a, /*horizon=*/2);
    CHECK(kalman_log_det(s3, {0}) <= kalman_log_det(s3, {}) + 1e-12);
  }
}

TEST_CASE("convergence bound closed forms") {
  const Graph ring = named_graph(NamedTopology::ring, 6);
  ConvergenceParams all_inputs = ConvergenceParams::for_graph(ring, 1.0, 2.0);
  CHECK(convergence_bound(ring, {0, 1, 2, 3, 4, 5}, all_inputs) == Catch::Approx(0.0));

  // tau = 0: P^0 = I, every follower contributes 1 + 1.
  ConvergenceParams tau0;
  tau0.delta = 0.25;
  tau0.p = 3.0;
  tau0.horizon_steps = 0;
  CHECK(convergence_bound(ring, {0}, tau0) == Catch::Approx(2.0 * 5));

  // path 0-1, s={1}, delta=ln 2, tau=1, p=1: g_00 + h_0 = 1.
  const Graph path2 = named_graph(NamedTopology::path, 2);
  ConvergenceParams cp;
  cp.delta = std::log(2.0);
  cp.p = 1.0;
  cp.horizon_steps = 1;
  CHECK(convergence_bound(path2, {1}, cp) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("total convergence bound") {
  const Graph path2 = named_graph(NamedTopology::path, 2);
  ConvergenceParams cp;
  cp.delta = std::log(2.0);
  cp.p = 1.0;
  cp.horizon_steps = 1;

  // Geometric series oracle: term at step k is 2 * 2^{-k}.
  double oracle = 0.0;
  for (int k = 0; k < 80; ++k) oracle += 2.0 * std::pow(0.5, k);
  oracle *= cp.delta;
  const TotalBoundResult total = total_convergence_bound(path2, {1}, cp);
  CHECK_FALSE(total.capped);
  CHECK(total.value == Catch::Approx(oracle).epsilon(1e-5));

  // Partial sums are nondecreasing in the step cap.
  double prev = 0.0;
  for (int cap : {1, 2, 4, 8, 16}) {
    const TotalBoundResult r = total_convergence_bound(path2, {1}, cp, cap);
    CHECK(r.value >= prev - 1e-12);
    prev = r.value;
  }

  // The cap is reported.
  const TotalBoundResult capped = total_convergence_bound(path2, {1}, cp, 3, 1e-300);
  CHECK(capped.capped);
}

TEST_CASE("commute time monte carlo") {
  const Graph path2 = named_graph(NamedTopology::path, 2);
  const CommuteEstimate exact = commute_time_mc(path2, {1}, 0, 200, 42);
  CHECK(exact.mean == Catch::Approx(2.0));
  CHECK(exact.std_error == Catch::Approx(0.0));

  const Graph ring4 = named_graph(NamedTopology::ring, 4);
  const CommuteEstimate est = commute_time_mc(ring4, {0}, 2, 40000, 43);
  const double oracle = oracles::commute_time(ring4, {0}, 2);
  CHECK(std::abs(est.mean - oracle) <= 3.0 * est.std_error);

  // Unreachable target trips the step cap.
  Graph split(3, false);
  split.add_edge(0, 1);
  Graph lonely(4, false);
  lonely.add_edge(0, 1);
  lonely.add_edge(2, 3);
  CHECK_THROWS_AS(commute_time_mc(lonely, {2}, 0, 5, 44, 2000), WalkCapExceededError);
}

TEST_CASE("commute time is proportional to the node noise variance") {
  const Graph g = random_connected_graph(7, 777);
  const std::vector<int> s{1, 4};
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = 0.0;
  for (int u = 0; u < 7; ++u) {
    if (u == 1 || u == 4) continue;
    const double kappa = oracles::commute_time(g, s, u);
    const double ratio = kappa / node_noise_variance(g, s, u);
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
  }
  // Exact oracle ratios agree to solver precision.
  CHECK((ratio_max - ratio_min) / ratio_max < 1e-9);
}
