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
#include <sstream>
#include <vector>

#include "netsel/graph.hpp"
#include "netsel/numerics.hpp"
#include "netsel/rng.hpp"

namespace netsel {

struct Trajectory {
  std::vector<double> times;      // strictly increasing sample instants
  Matrix states;                  // row per instant, column per node
  std::vector<int> input_set;     // sorted
  Vector input_values;

  /// CSV with header "t,x0,x1,...,x{n-1}".
  std::string to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "t";
    for (Eigen::Index j = 0; j < states.cols(); ++j) out << ",x" << j;
    out << "\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
      out << times[i];
      for (Eigen::Index j = 0; j < states.cols(); ++j) {
        out << "," << states(static_cast<Eigen::Index>(i), j);
      }
      out << "\n";
    }
    return out.str();
  }
};

namespace detail {

struct ConsensusSetup {
  GroundedLaplacian gl;
  std::vector<int> inputs;
  Vector x;  // full state, inputs already pinned
};

inline ConsensusSetup consensus_setup(const Graph& g, const std::vector<int>& s,
                                      const Vector& input_values, const Vector& x0) {
  ConsensusSetup setup;
  setup.inputs = normalize_node_set(g, s);
  if (setup.inputs.empty()) throw InvalidArgumentError("simulation needs a nonempty input set");
  if (input_values.size() != static_cast<Eigen::Index>(setup.inputs.size())) {
    throw InvalidArgumentError("one input value per input node required");
  }
  if (x0.size() != g.node_count()) {
    throw InvalidArgumentError("x0 must have one entry per node");
  }
  setup.gl = grounded_laplacian(g, setup.inputs);
  setup.x = x0;
  for (std::size_t i = 0; i < setup.inputs.size(); ++i) {
    setup.x(setup.inputs[i]) = input_values(static_cast<Eigen::Index>(i));
  }
  return setup;
}

}  // namespace detail

/// Euler-Maruyama integration of noisy consensus: followers follow
/// dx_f = (-L_ff x_f - L_fl x_l) dt + noise_sigma dW, inputs held constant.
/// sample_stride thins the stored trajectory.
inline Trajectory simulate_noisy_consensus(const Graph& g, const std::vector<int>& s,
                                           const Vector& input_values, const Vector& x0, double dt,
                                           double t_end, double noise_sigma, std::uint64_t seed,
                                           int sample_stride = 1) {
  if (!(dt > 0.0) || !(t_end >= 0.0)) throw InvalidArgumentError("bad dt or t_end");
  if (sample_stride < 1) throw InvalidArgumentError("sample_stride must be at least 1");
  detail::ConsensusSetup setup = detail::consensus_setup(g, s, input_values, x0);
  const Matrix& l_ff = setup.gl.l_ff;
  const int nf = static_cast<int>(l_ff.rows());
  double max_diag = 0.0;
  for (int i = 0; i < nf; ++i) max_diag = std::max(max_diag, l_ff(i, i));
  if (max_diag > 0.0 && dt >= 1.0 / max_diag) {
    throw UnstableStepError("simulate_noisy_consensus: dt must be below 1/max(diag(L_ff))");
  }

  const long steps = static_cast<long>(std::ceil(t_end / dt - 1e-12));
  Vector xf(nf);
  for (int i = 0; i < nf; ++i) xf(i) = setup.x(setup.gl.followers[i]);
  const Vector input_drive = setup.gl.l_fl * input_values;
  const double noise_scale = noise_sigma * std::sqrt(dt);

  Rng rng(seed);
  Trajectory traj;
  traj.input_set = setup.inputs;
  traj.input_values = input_values;
  const long samples = steps / sample_stride + 1;
  traj.states.resize(samples, g.node_count());
  traj.times.reserve(static_cast<std::size_t>(samples));

  Vector full = setup.x;
  long row = 0;
  auto record = [&](double t) {
    for (int i = 0; i < nf; ++i) full(setup.gl.followers[i]) = xf(i);
    traj.states.row(row++) = full.transpose();
    traj.times.push_back(t);
  };
  record(0.0);
  Vector drift(nf);
  for (long k = 1; k <= steps; ++k) {
    drift.noalias() = -(l_ff * xf);
    drift -= input_drive;
    for (int i = 0; i < nf; ++i) {
      xf(i) += dt * drift(i) + noise_scale * rng.normal();
    }
    if (k % sample_stride == 0) record(static_cast<double>(k) * dt);
  }
  traj.states.conservativeResize(row, g.node_count());
  return traj;
}

/// Deterministic weighted consensus propagated with the exact matrix
/// exponential: states at sample instants equal e^{-L t} x(0).
inline Trajectory simulate_weighted_consensus(const Graph& g, const std::vector<int>& s,
                                              const Vector& input_values, const Vector& x0,
                                              double dt, double t_end) {
  if (!(dt > 0.0) || !(t_end >= 0.0)) throw InvalidArgumentError("bad dt or t_end");
  detail::ConsensusSetup setup = detail::consensus_setup(g, s, input_values, x0);
  const Matrix propagator = expm(-absorbing_laplacian(g, setup.inputs) * dt);
  const long steps = static_cast<long>(std::ceil(t_end / dt - 1e-12));

  Trajectory traj;
  traj.input_set = setup.inputs;
  traj.input_values = input_values;
  traj.states.resize(steps + 1, g.node_count());
  traj.times.reserve(static_cast<std::size_t>(steps + 1));
  Vector x = setup.x;
  traj.states.row(0) = x.transpose();
  traj.times.push_back(0.0);
  for (long k = 1; k <= steps; ++k) {
    x = propagator * x;
    traj.states.row(k) = x.transpose();
    traj.times.push_back(static_cast<double>(k) * dt);
  }
  return traj;
}

/// Absorbing-walk table at step tau for P = exp(-L delta): g(r, c) is the
/// probability that a walk from follower r sits at follower c, h(r) the
/// probability it has not been absorbed.
struct AbsorbingWalkTable {
  std::vector<int> followers;
  Matrix g;  // followers x followers
  Vector h;
};

inline AbsorbingWalkTable absorbing_walk_probabilities(const Graph& g, const std::vector<int>& s,
                                                       double delta, int tau) {
  if (!(delta > 0.0)) throw InvalidArgumentError("absorbing_walk_probabilities: delta > 0 required");
  if (tau < 0) throw InvalidArgumentError("absorbing_walk_probabilities: tau must be nonnegative");
  const std::vector<int> inputs = normalize_node_set(g, s);
  const int n = g.node_count();
  std::vector<char> is_input(n, 0);
  for (int v : inputs) is_input[v] = 1;
  const Matrix p_tau = matrix_power(expm(-absorbing_laplacian(g, inputs) * delta), tau);

  AbsorbingWalkTable table;
  for (int v = 0; v < n; ++v) {
    if (!is_input[v]) table.followers.push_back(v);
  }
  const int nf = static_cast<int>(table.followers.size());
  table.g.resize(nf, nf);
  table.h.resize(nf);
  for (int r = 0; r < nf; ++r) {
    double mass = 0.0;
    for (int c = 0; c < nf; ++c) {
      table.g(r, c) = p_tau(table.followers[r], table.followers[c]);
      mass += table.g(r, c);
    }
    table.h(r) = mass;
  }
  return table;
}

/// Stationary covariance estimate for noisy consensus with burn-in and
/// thinning; standard errors come from batch means, which absorb the residual
/// autocorrelation of the thinned samples.
struct StationaryStats {
  Matrix cov;        // follower x follower
  Matrix std_error;  // entrywise std error of cov
  std::vector<int> followers;
  long samples = 0;      // thinned samples used
  long effective = 0;    // = samples (thinning targets near-independence)
  int thin = 1;          // steps between retained samples
  double burn_in = 0.0;  // discarded leading time span
  int batches = 0;
};

inline StationaryStats stationary_covariance(const Graph& g, const std::vector<int>& s, double dt,
                                             double t_total, double noise_sigma,
                                             std::uint64_t seed, int batches = 40) {
  detail::ConsensusSetup setup = detail::consensus_setup(
      g, s, Vector::Zero(static_cast<Eigen::Index>(normalize_node_set(g, s).size())),
      Vector::Zero(g.node_count()));
  const Matrix& l_ff = setup.gl.l_ff;
  const int nf = static_cast<int>(l_ff.rows());
  if (nf == 0) throw InvalidArgumentError("stationary_covariance: no followers");
  double max_diag = 0.0;
  for (int i = 0; i < nf; ++i) max_diag = std::max(max_diag, l_ff(i, i));
  if (dt >= 1.0 / max_diag) {
    throw UnstableStepError("stationary_covariance: dt must be below 1/max(diag(L_ff))");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(l_ff);
  const double lambda_min = es.eigenvalues().minCoeff();
  if (!(lambda_min > 0.0)) {
    throw SingularLaplacianError("stationary_covariance: grounded Laplacian is singular");
  }

  StationaryStats stats;
  stats.followers = setup.gl.followers;
  stats.burn_in = 10.0 / lambda_min;
  stats.thin = std::max(1, static_cast<int>(std::lround((2.0 / lambda_min) / dt)));
  const long burn_steps = static_cast<long>(std::ceil(stats.burn_in / dt));
  const long total_steps = static_cast<long>(std::ceil(t_total / dt));
  if (total_steps <= burn_steps) {
    throw InvalidArgumentError("stationary_covariance: t_total shorter than the burn-in");
  }

  Rng rng(seed);
  Vector xf = Vector::Zero(nf);
  const double noise_scale = noise_sigma * std::sqrt(dt);
  Vector drift(nf);
  auto advance = [&]() {
    drift.noalias() = -(l_ff * xf);
    for (int i = 0; i < nf; ++i) xf(i) += dt * drift(i) + noise_scale * rng.normal();
  };
  for (long k = 0; k < burn_steps; ++k) advance();

  const long keep = (total_steps - burn_steps) / stats.thin;
  const long nbatches = std::max<long>(2, std::min<long>(batches, keep));
  const long per_batch = keep / nbatches;
  if (per_batch < 1) throw InvalidArgumentError("stationary_covariance: too few samples");
  std::vector<Matrix> batch_mean(static_cast<std::size_t>(nbatches), Matrix::Zero(nf, nf));
  long retained = 0;
  for (long b = 0; b < nbatches; ++b) {
    Matrix& acc = batch_mean[static_cast<std::size_t>(b)];
    for (long i = 0; i < per_batch; ++i) {
      for (int t = 0; t < stats.thin; ++t) advance();
      acc.noalias() += xf * xf.transpose();
      ++retained;
    }
    acc /= static_cast<double>(per_batch);
  }
  stats.samples = retained;
  stats.effective = retained;
  stats.batches = static_cast<int>(nbatches);

  Matrix mean = Matrix::Zero(nf, nf);
  for (const Matrix& m : batch_mean) mean += m;
  mean /= static_cast<double>(nbatches);
  Matrix var = Matrix::Zero(nf, nf);
  for (const Matrix& m : batch_mean) var += (m - mean).cwiseProduct(m - mean);
  var /= static_cast<double>(nbatches - 1);
  stats.cov = mean;
  stats.std_error = (var / static_cast<double>(nbatches)).cwiseSqrt();
  return stats;
}

}  // namespace netsel
