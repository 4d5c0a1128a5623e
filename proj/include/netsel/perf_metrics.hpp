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

#include <algorithm>
#include <cmath>
#include <vector>

#include "netsel/graph.hpp"
#include "netsel/numerics.hpp"
#include "netsel/rng.hpp"

namespace netsel {

namespace detail {

inline Matrix spd_inverse_or_singular(const Matrix& m, const char* context) {
  try {
    return solve_spd(m, Matrix::Identity(m.rows(), m.cols()));
  } catch (const NotPositiveDefiniteError&) {
    throw SingularLaplacianError(std::string(context) +
                                 ": grounded Laplacian is singular (a follower component has no input)");
  }
}

}  // namespace detail

/// Steady-state noise amplification trace(L_ff^{-1}); equal to twice the
/// total stationary variance of the follower states under unit white noise.
inline double noise_variance(const Graph& g, const std::vector<int>& s) {
  const GroundedLaplacian gl = grounded_laplacian(g, s);
  if (gl.input_set.empty()) throw InvalidArgumentError("noise_variance: input set must be nonempty");
  if (gl.followers.empty()) return 0.0;
  return detail::spd_inverse_or_singular(gl.l_ff, "noise_variance").trace();
}

/// Per-node noise variance (L_ff^{-1})_{uu}.
inline double node_noise_variance(const Graph& g, const std::vector<int>& s, int u) {
  const GroundedLaplacian gl = grounded_laplacian(g, s);
  const int row = gl.follower_index(u);
  if (row < 0) throw InvalidArgumentError("node_noise_variance: node is in the input set");
  Matrix rhs = Matrix::Zero(gl.l_ff.rows(), 1);
  rhs(row, 0) = 1.0;
  try {
    return solve_spd(gl.l_ff, rhs)(row, 0);
  } catch (const NotPositiveDefiniteError&) {
    throw SingularLaplacianError("node_noise_variance: grounded Laplacian is singular");
  }
}

/// Discrete-time estimation setup: time-invariant transition matrix, prior
/// covariance per state block, measurement noise sigma^2 I, and the number of
/// observed steps. The stacked vector z = (x_0, w_0, ..., w_{k-1}) carries a
/// block-diagonal prior built from prior_cov.
struct KalmanSetup {
  Matrix a;
  Matrix prior_cov;
  double sigma2 = 1.0;
  int horizon = 1;

  int state_dim() const { return static_cast<int>(a.rows()); }

  void validate() const {
    if (a.rows() != a.cols()) throw InvalidArgumentError("KalmanSetup: a must be square");
    if (prior_cov.rows() != a.rows() || prior_cov.cols() != a.cols()) {
      throw InvalidArgumentError("KalmanSetup: prior_cov must match the state dimension");
    }
    if (!(sigma2 > 0.0)) throw InvalidArgumentError("KalmanSetup: sigma2 must be positive");
    if (horizon < 0) throw InvalidArgumentError("KalmanSetup: horizon must be nonnegative");
  }

  static KalmanSetup with_identity_prior(Matrix a, int horizon, double sigma2 = 1.0) {
    KalmanSetup k;
    k.prior_cov = Matrix::Identity(a.rows(), a.cols());
    k.a = std::move(a);
    k.sigma2 = sigma2;
    k.horizon = horizon;
    k.validate();
    return k;
  }
};

/// Builds the stacked observation matrix O_k for measurement rows C over
/// observation steps 0..k. Block (i, 0) is C A^i; block (i, j) for j >= 1 is
/// C A^{i-j} when i >= j and zero otherwise.
inline Matrix kalman_observation_matrix(const KalmanSetup& setup, const Matrix& c) {
  const int n = setup.state_dim();
  const int k = setup.horizon;
  const int rows_per_step = static_cast<int>(c.rows());
  std::vector<Matrix> powers(k + 1);
  powers[0] = Matrix::Identity(n, n);
  for (int i = 1; i <= k; ++i) powers[i] = setup.a * powers[i - 1];
  Matrix o = Matrix::Zero(static_cast<Eigen::Index>(rows_per_step) * (k + 1),
                          static_cast<Eigen::Index>(n) * (k + 1));
  for (int i = 0; i <= k; ++i) {
    o.block(static_cast<Eigen::Index>(i) * rows_per_step, 0, rows_per_step, n) = c * powers[i];
    for (int j = 1; j <= i; ++j) {
      o.block(static_cast<Eigen::Index>(i) * rows_per_step, static_cast<Eigen::Index>(j) * n,
              rows_per_step, n) = c * powers[i - j];
    }
  }
  return o;
}

/// log det of the posterior covariance of z = (x_0, w_0, ..., w_{k-1}) when
/// the states indexed by s are measured at every step. Supermodular and
/// nonincreasing in s.
inline double kalman_log_det(const KalmanSetup& setup, const std::vector<int>& s_in) {
  setup.validate();
  const int n = setup.state_dim();
  std::vector<int> s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 0 || v >= n) throw InvalidArgumentError("kalman_log_det: state index out of range");
  }
  const int k = setup.horizon;
  const Eigen::Index zdim = static_cast<Eigen::Index>(n) * (k + 1);
  Matrix czz = Matrix::Zero(zdim, zdim);
  for (int b = 0; b <= k; ++b) {
    czz.block(static_cast<Eigen::Index>(b) * n, static_cast<Eigen::Index>(b) * n, n, n) =
        setup.prior_cov;
  }
  if (s.empty()) return log_det_spd(czz);

  Matrix c = Matrix::Zero(static_cast<Eigen::Index>(s.size()), n);
  for (std::size_t r = 0; r < s.size(); ++r) c(static_cast<Eigen::Index>(r), s[r]) = 1.0;
  const Matrix o = kalman_observation_matrix(setup, c);
  const Matrix oc = o * czz;
  Matrix gram = oc * o.transpose();
  gram.diagonal().array() += setup.sigma2;
  Matrix sigma = czz - oc.transpose() * solve_spd(gram, oc);
  sigma = 0.5 * (sigma + sigma.transpose());
  return log_det_spd(sigma);
}

/// Parameters of the random-walk convergence-error bound: transition matrix
/// P = exp(-L delta), walk length tau = round(t / delta), exponent p >= 1.
struct ConvergenceParams {
  double t = 1.0;
  double delta = 0.1;
  double p = 2.0;
  int horizon_steps = 10;

  void validate() const {
    if (!(delta > 0.0)) throw InvalidArgumentError("ConvergenceParams: delta must be positive");
    if (!(p >= 1.0)) throw InvalidArgumentError("ConvergenceParams: p must be at least 1");
    if (horizon_steps < 0) throw InvalidArgumentError("ConvergenceParams: tau must be nonnegative");
  }

  static ConvergenceParams from_time(double t, double delta, double p) {
    ConvergenceParams c;
    c.t = t;
    c.delta = delta;
    c.p = p;
    c.horizon_steps = static_cast<int>(std::lround(t / delta));
    c.validate();
    return c;
  }

  /// Default step size 0.1 / max diagonal of L keeps each step well mixed.
  static double default_delta(const Graph& g) {
    const Matrix l = laplacian(g);
    double max_diag = 0.0;
    for (Eigen::Index i = 0; i < l.rows(); ++i) max_diag = std::max(max_diag, l(i, i));
    return max_diag > 0.0 ? 0.1 / max_diag : 0.1;
  }

  static ConvergenceParams for_graph(const Graph& g, double t, double p) {
    return from_time(t, default_delta(g), p);
  }
};

namespace detail {

inline double convergence_bound_from_power(const Matrix& p_tau, const std::vector<char>& is_input,
                                           double p) {
  const int n = static_cast<int>(p_tau.rows());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    if (is_input[i]) continue;
    double h_i = 0.0;
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (is_input[j]) continue;
      const double g_ij = p_tau(i, j);
      row += std::pow(std::max(g_ij, 0.0), p);
      h_i += g_ij;
    }
    total += row + std::pow(std::max(h_i, 0.0), p);
  }
  return total;
}

}  // namespace detail

/// Convergence-error bound sum_{i not in S} [ sum_{j not in S} g_ij^p + h_i^p ]
/// where g_ij is the tau-step transition probability of the absorbing walk
/// P = exp(-L delta) and h_i the probability of not being absorbed by step tau.
inline double convergence_bound(const Graph& g, const std::vector<int>& s,
                                const ConvergenceParams& params) {
  params.validate();
  const std::vector<int> inputs = normalize_node_set(g, s);
  const int n = g.node_count();
  std::vector<char> is_input(n, 0);
  for (int v : inputs) is_input[v] = 1;
  const Matrix p_step = expm(-absorbing_laplacian(g, inputs) * params.delta);
  const Matrix p_tau = matrix_power(p_step, params.horizon_steps);
  return detail::convergence_bound_from_power(p_tau, is_input, params.p);
}

struct TotalBoundResult {
  double value = 0.0;
  bool capped = false;  // step cap hit before the tail fell below tolerance
  int steps = 0;
};

/// Left Riemann sum delta * sum_k f_hat(tau = k), truncated when the next term
/// falls below rel_tol of the running sum or when max_steps is reached (the
/// result is then flagged as a lower bound).
inline TotalBoundResult total_convergence_bound(const Graph& g, const std::vector<int>& s,
                                                const ConvergenceParams& params,
                                                int max_steps = 20000, double rel_tol = 1e-6) {
  params.validate();
  const std::vector<int> inputs = normalize_node_set(g, s);
  if (inputs.empty()) {
    throw InvalidArgumentError("total_convergence_bound: input set must be nonempty");
  }
  const int n = g.node_count();
  std::vector<char> is_input(n, 0);
  for (int v : inputs) is_input[v] = 1;
  const Matrix p_step = expm(-absorbing_laplacian(g, inputs) * params.delta);

  TotalBoundResult out;
  Matrix p_k = Matrix::Identity(n, n);
  double sum = 0.0;
  for (int k = 0; k <= max_steps; ++k) {
    const double term = detail::convergence_bound_from_power(p_k, is_input, params.p);
    sum += term;
    out.steps = k;
    if (k > 0 && term < rel_tol * sum) {
      out.value = params.delta * sum;
      return out;
    }
    p_k = p_k * p_step;
  }
  out.value = params.delta * sum;
  out.capped = true;
  return out;
}

struct CommuteEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long walks = 0;
};

/// Monte-Carlo estimate of the commute time kappa(S, u): expected steps for
/// the neighbor-hopping walk (P_ij proportional to |L_ij|) to travel from u
/// to the set S and back to u.
inline CommuteEstimate commute_time_mc(const Graph& g, const std::vector<int>& s, int u,
                                       long walks, std::uint64_t seed,
                                       long step_cap = 10'000'000) {
  const std::vector<int> inputs = normalize_node_set(g, s);
  if (inputs.empty()) throw InvalidArgumentError("commute_time_mc: input set must be nonempty");
  const int n = g.node_count();
  if (u < 0 || u >= n) throw InvalidArgumentError("commute_time_mc: unknown node");
  std::vector<char> is_input(n, 0);
  for (int v : inputs) is_input[v] = 1;
  if (is_input[u]) throw InvalidArgumentError("commute_time_mc: u must not be an input");
  if (walks < 1) throw InvalidArgumentError("commute_time_mc: need at least one walk");

  // Per-node neighbor tables with cumulative weights for categorical sampling.
  std::vector<std::vector<int>> nbr(n);
  std::vector<std::vector<double>> cum(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const auto& [j, w] : g.in_neighbors(i)) {
      nbr[i].push_back(j);
      acc += std::abs(w);
      cum[i].push_back(acc);
    }
    if (nbr[i].empty()) {
      throw WalkCapExceededError("commute_time_mc: node " + std::to_string(i) + " has no neighbors");
    }
  }

  Rng rng(seed);
  auto hop = [&](int at) {
    const auto& c = cum[at];
    const double x = rng.uniform() * c.back();
    const auto it = std::lower_bound(c.begin(), c.end(), x);
    return nbr[at][static_cast<std::size_t>(it - c.begin())];
  };

  double sum = 0.0;
  double sum_sq = 0.0;
  for (long w = 0; w < walks; ++w) {
    long steps = 0;
    int at = u;
    while (!is_input[at]) {
      at = hop(at);
      if (++steps > step_cap) {
        throw WalkCapExceededError("commute_time_mc: walk exceeded the step cap");
      }
    }
    while (at != u) {
      at = hop(at);
      if (++steps > step_cap) {
        throw WalkCapExceededError("commute_time_mc: walk exceeded the step cap");
      }
    }
    const double x = static_cast<double>(steps);
    sum += x;
    sum_sq += x * x;
  }
  CommuteEstimate est;
  est.walks = walks;
  est.mean = sum / static_cast<double>(walks);
  if (walks > 1) {
    const double var = (sum_sq - sum * sum / static_cast<double>(walks)) /
                       static_cast<double>(walks - 1);
    est.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(walks));
  }
  return est;
}

}  // namespace netsel
