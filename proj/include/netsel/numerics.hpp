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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>
#include <unsupported/Eigen/MatrixFunctions>

#include "netsel/errors.hpp"

namespace netsel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

namespace detail {

inline Eigen::LLT<Matrix> checked_llt(const Matrix& m) {
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefiniteError("Cholesky factorization failed: matrix is not positive definite");
  }
  // Eigen can complete a factorization of a numerically singular matrix with a
  // tiny pivot; treat that as a failure too.
  const Vector diag = llt.matrixLLT().diagonal();
  const double max_d = diag.maxCoeff();
  const double min_d = diag.minCoeff();
  const double eps = std::numeric_limits<double>::epsilon();
  if (!(min_d > 0.0) || min_d < std::sqrt(static_cast<double>(m.rows())) * eps * max_d) {
    throw NotPositiveDefiniteError("matrix is numerically singular");
  }
  return llt;
}

}  // namespace detail

/// Solves m * X = rhs for symmetric positive definite m (Cholesky with one
/// step of iterative refinement). Throws NotPositiveDefiniteError.
inline Matrix solve_spd(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != m.cols() || m.rows() != rhs.rows()) {
    throw InvalidArgumentError("solve_spd: dimension mismatch");
  }
  if (m.rows() == 0) return Matrix(0, rhs.cols());
  auto llt = detail::checked_llt(m);
  Matrix x = llt.solve(rhs);
  x += llt.solve(rhs - m * x);
  return x;
}

/// log(det(m)) for symmetric positive definite m, via the Cholesky diagonal.
inline double log_det_spd(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgumentError("log_det_spd: matrix must be square");
  if (m.rows() == 0) return 0.0;
  auto llt = detail::checked_llt(m);
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

/// Number of singular values above tol. Default tol is the usual spectral-gap
/// convention max(rows, cols) * eps * sigma_max.
inline int numerical_rank(const Matrix& m, double tol = -1.0) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::BDCSVD<Matrix> svd(m);
  const Vector& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  if (tol < 0.0) {
    tol = static_cast<double>(std::max(m.rows(), m.cols())) *
          std::numeric_limits<double>::epsilon() * sv(0);
  }
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  return rank;
}

/// Matrix exponential (scaling-and-squaring with Pade approximation).
inline Matrix expm(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgumentError("expm: matrix must be square");
  return m.exp();
}

/// Integer matrix power by repeated squaring.
inline Matrix matrix_power(const Matrix& m, long exponent) {
  if (m.rows() != m.cols()) throw InvalidArgumentError("matrix_power: matrix must be square");
  if (exponent < 0) throw InvalidArgumentError("matrix_power: exponent must be nonnegative");
  Matrix result = Matrix::Identity(m.rows(), m.cols());
  Matrix base = m;
  long e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

inline bool is_hurwitz(const Matrix& a, double margin = 1e-12) {
  if (a.rows() == 0) return true;
  Eigen::EigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
  return (es.eigenvalues().real().array() < -margin).all();
}

/// Solves A W + W A^T + B B^T = 0 (Bartels-Stewart on the complex Schur form).
/// Requires A Hurwitz; throws NotHurwitzError otherwise, in which case the
/// caller should use finite_horizon_gramian instead.
inline Matrix lyapunov_gramian(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) {
    throw InvalidArgumentError("lyapunov_gramian: dimension mismatch");
  }
  const Eigen::Index n = a.rows();
  if (n == 0) return Matrix(0, 0);
  if (!is_hurwitz(a)) {
    throw NotHurwitzError("lyapunov_gramian: system matrix is not Hurwitz");
  }
  using CMatrix = Eigen::MatrixXcd;
  Eigen::ComplexSchur<Matrix> schur(a);
  const CMatrix& t = schur.matrixT();
  const CMatrix& u = schur.matrixU();
  CMatrix q = u.adjoint() * (b * b.transpose()).cast<std::complex<double>>() * u.conjugate();
  // Solve T V + V T^T = -Q column by column, last column first.
  CMatrix v = CMatrix::Zero(n, n);
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    Eigen::VectorXcd rhs = -q.col(j);
    for (Eigen::Index k = j + 1; k < n; ++k) rhs -= t(j, k) * v.col(k);
    CMatrix coeff = t;
    coeff.diagonal().array() += t(j, j);
    v.col(j) = coeff.triangularView<Eigen::Upper>().solve(rhs);
  }
  Matrix w = (u * v * u.transpose()).real();
  return 0.5 * (w + w.transpose());
}

/// Finite-horizon controllability Gramian over [t0, t1] via the exponential
/// of the augmented block matrix [[A, B B^T], [0, -A^T]].
inline Matrix finite_horizon_gramian(const Matrix& a, const Matrix& b, double t0, double t1) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) {
    throw InvalidArgumentError("finite_horizon_gramian: dimension mismatch");
  }
  if (!(t1 > t0)) throw InvalidArgumentError("finite_horizon_gramian: t1 must exceed t0");
  const Eigen::Index n = a.rows();
  if (n == 0) return Matrix(0, 0);
  const double horizon = t1 - t0;
  Matrix block = Matrix::Zero(2 * n, 2 * n);
  block.topLeftCorner(n, n) = a;
  block.topRightCorner(n, n) = b * b.transpose();
  block.bottomRightCorner(n, n) = -a.transpose();
  Matrix e = expm(block * horizon);
  Matrix gramian = e.topRightCorner(n, n) * e.topLeftCorner(n, n).transpose();
  return 0.5 * (gramian + gramian.transpose());
}

}  // namespace netsel
