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
#include <netsel/numerics.hpp>
#include <netsel/rng.hpp>

#include "oracles.hpp"

using namespace netsel;

namespace {

Matrix random_spd(int n, Rng& rng) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  }
  return m * m.transpose() + 0.1 * Matrix::Identity(n, n);
}

}  // namespace

TEST_CASE("solve_spd basics") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(solve_spd(i2, i2).isApprox(i2));

  Matrix d(2, 2);
  d << 2, 0, 0, 4;
  const Matrix inv = solve_spd(d, i2);
  CHECK(inv(0, 0) == Catch::Approx(0.5));
  CHECK(inv(1, 1) == Catch::Approx(0.25));

  Rng rng(7);
  const Matrix m = random_spd(6, rng);
  const Matrix rhs = random_spd(6, rng);
  const Matrix x = solve_spd(m, rhs);
  CHECK((m * x - rhs).norm() <= 1e-10 * rhs.norm());

  Matrix sing(2, 2);
  sing << 1, 1, 1, 1;
  CHECK_THROWS_AS(solve_spd(sing, i2), NotPositiveDefiniteError);
}

TEST_CASE("log_det_spd") {
  CHECK(log_det_spd(Matrix::Identity(3, 3)) == Catch::Approx(0.0));
  Matrix e2 = Matrix::Identity(2, 2) * std::exp(1.0);
  CHECK(log_det_spd(e2) == Catch::Approx(2.0));

  Rng rng(11);
  const Matrix m = random_spd(5, rng);
  CHECK(log_det_spd(m) == Catch::Approx(oracles::log_det_eigen(m)).margin(1e-9));
}

TEST_CASE("numerical_rank") {
  CHECK(numerical_rank(Matrix::Zero(3, 3)) == 0);
  CHECK(numerical_rank(Matrix::Identity(4, 4)) == 4);
  Matrix prop(2, 2);
  prop << 1, 2, 2, 4;
  CHECK(numerical_rank(prop) == 1);
}

TEST_CASE("expm") {
  CHECK(expm(Matrix::Zero(3, 3)).isApprox(Matrix::Identity(3, 3)));
  Matrix one(1, 1);
  one << -1.0;
  CHECK(expm(one)(0, 0) == Catch::Approx(0.36787944117144233).margin(1e-12));

  // Grounded path 0-1 with input 1 at t = ln 2: first row is [1/2, 1/2].
  const Graph path = named_graph(NamedTopology::path, 2);
  const Matrix p = expm(-absorbing_laplacian(path, {1}) * std::log(2.0));
  CHECK(p(0, 0) == Catch::Approx(0.5).margin(1e-12));
  CHECK(p(0, 1) == Catch::Approx(0.5).margin(1e-12));

  // expm(m) * expm(-m) = I for random matrices of norm <= 2.
  Rng rng(13);
  for (int t = 0; t < 8; ++t) {
    Matrix m(5, 5);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) m(i, j) = rng.uniform(-0.4, 0.4);
    }
    CHECK((expm(m) * expm(-m) - Matrix::Identity(5, 5)).norm() < 1e-8);
  }
}

TEST_CASE("lyapunov gramian") {
  const Matrix a = -Matrix::Identity(2, 2);
  const Matrix w = lyapunov_gramian(a, Matrix::Identity(2, 2));
  CHECK(w.isApprox(0.5 * Matrix::Identity(2, 2), 1e-10));

  Matrix a1(1, 1), b1(1, 1);
  a1 << -1.0;
  b1 << 1.0;
  CHECK(lyapunov_gramian(a1, b1)(0, 0) == Catch::Approx(0.5));

  Rng rng(17);
  for (int t = 0; t < 6; ++t) {
    Matrix m(4, 4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    }
    Eigen::EigenSolver<Matrix> es(m, false);
    m.diagonal().array() -= es.eigenvalues().real().maxCoeff() + 0.4;
    Matrix b(4, 2);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 2; ++j) b(i, j) = rng.uniform(-1.0, 1.0);
    }
    const Matrix bbt = b * b.transpose();
    const Matrix ws = lyapunov_gramian(m, b);
    CHECK((m * ws + ws * m.transpose() + bbt).norm() <= 1e-8 * bbt.norm());
  }

  CHECK_THROWS_AS(lyapunov_gramian(Matrix::Identity(2, 2), Matrix::Identity(2, 2)),
                  NotHurwitzError);
}

TEST_CASE("finite horizon gramian") {
  Matrix a(1, 1), b(1, 1);
  a << -1.0;
  b << 1.0;
  CHECK(finite_horizon_gramian(a, b, 0.0, 30.0)(0, 0) == Catch::Approx(0.5).margin(1e-9));

  CHECK(finite_horizon_gramian(a, Matrix::Zero(1, 1), 0.0, 2.0)(0, 0) == Catch::Approx(0.0));

  a << 0.0;
  CHECK(finite_horizon_gramian(a, b, 0.0, 2.0)(0, 0) == Catch::Approx(2.0).margin(1e-10));

  // Converges to the Lyapunov solution for Hurwitz drift.
  Rng rng(23);
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  }
  Eigen::EigenSolver<Matrix> es(m, false);
  const double max_re = es.eigenvalues().real().maxCoeff();
  m.diagonal().array() -= max_re + 0.5;
  Matrix b3(3, 1);
  b3 << 1.0, -0.5, 0.25;
  const Matrix w_inf = lyapunov_gramian(m, b3);
  Eigen::EigenSolver<Matrix> es2(m, false);
  const double horizon = 40.0 / std::abs(es2.eigenvalues().real().maxCoeff());
  const Matrix w_t = finite_horizon_gramian(m, b3, 0.0, horizon);
  CHECK((w_t - w_inf).norm() <= 1e-6 * w_inf.norm());

  // Against the quadrature oracle.
  const Matrix w_quad = oracles::gramian_quadrature(m, b3, 0.0, 2.0);
  CHECK((finite_horizon_gramian(m, b3, 0.0, 2.0) - w_quad).norm() <= 1e-8);
}

TEST_CASE("absorbing propagator is stochastic with absorbing inputs") {
  const Graph g = geometric_graph(9, 50.0, 30.0, 31);
  const std::vector<int> s{1, 4};
  const Matrix p = expm(-absorbing_laplacian(g, s) * 0.3);
  for (int i = 0; i < p.rows(); ++i) {
    CHECK(p.row(i).sum() == Catch::Approx(1.0).margin(1e-10));
    for (int j = 0; j < p.cols(); ++j) CHECK(p(i, j) >= -1e-12);
  }
  CHECK(p(1, 1) == Catch::Approx(1.0));
  CHECK(p(4, 4) == Catch::Approx(1.0));
}
