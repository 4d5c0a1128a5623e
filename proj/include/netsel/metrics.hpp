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

#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "netsel/controllability.hpp"
#include "netsel/graph.hpp"
#include "netsel/optimize.hpp"
#include "netsel/perf_metrics.hpp"

namespace netsel {

/// Knobs for the named metrics; every field has a sensible graph-derived
/// default so the CLI can run with none of them set.
struct MetricParams {
  // convergence bound
  double conv_t = -1.0;      // < 0: use conv_tau steps of the default delta
  double conv_delta = -1.0;  // < 0: 0.1 / max diag(L)
  double conv_p = 2.0;
  int conv_tau = 16;
  // kalman
  int kalman_horizon = 2;
  double kalman_dt = 0.25;  // transition matrix exp(-L dt)
  double sigma2 = 1.0;
  // gramian / energy
  double t0 = 0.0;
  double t1 = 5.0;
  double epsilon = 1e-2;
};

inline ConvergenceParams resolve_convergence_params(const Graph& g, const MetricParams& mp) {
  const double delta = mp.conv_delta > 0.0 ? mp.conv_delta : ConvergenceParams::default_delta(g);
  const double t = mp.conv_t > 0.0 ? mp.conv_t : delta * mp.conv_tau;
  return ConvergenceParams::from_time(t, delta, mp.conv_p);
}

inline std::vector<int> all_nodes(const Graph& g) {
  std::vector<int> v(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

/// Builds a named metric as a SetFunction over the nodes of g. Metrics that
/// are singular at some sets (noise, gramian-energy) evaluate to +infinity
/// there and are flagged empty_defined = false.
inline SetFunction make_metric(const std::string& name, const Graph& g,
                               const MetricParams& mp = {}) {
  SetFunction f;
  f.ground = all_nodes(g);
  f.description = name;
  auto graph = std::make_shared<Graph>(g);

  if (name == "noise") {
    f.orientation = Orientation::minimize_supermodular;
    f.empty_defined = false;
    f.evaluate = [graph](const std::vector<int>& s) {
      if (s.empty()) return std::numeric_limits<double>::infinity();
      try {
        return noise_variance(*graph, s);
      } catch (const SingularLaplacianError&) {
        return std::numeric_limits<double>::infinity();
      }
    };
    return f;
  }
  if (name == "convergence") {
    f.orientation = Orientation::minimize_supermodular;
    const ConvergenceParams params = resolve_convergence_params(g, mp);
    f.evaluate = [graph, params](const std::vector<int>& s) {
      return convergence_bound(*graph, s, params);
    };
    return f;
  }
  if (name == "kalman") {
    f.orientation = Orientation::minimize_supermodular;
    auto setup = std::make_shared<KalmanSetup>(KalmanSetup::with_identity_prior(
        expm(-laplacian(g) * mp.kalman_dt), mp.kalman_horizon, mp.sigma2));
    f.evaluate = [setup](const std::vector<int>& s) { return kalman_log_det(*setup, s); };
    return f;
  }
  if (name == "ctrb-rank") {
    f.orientation = Orientation::maximize_submodular;
    auto sys = std::make_shared<LinearSystem>();
    sys->w = system_matrix(g);
    sys->variant = SystemVariant::actuated;
    f.evaluate = [sys](const std::vector<int>& s) {
      return static_cast<double>(ctrb_rank(*sys, s));
    };
    return f;
  }
  if (name == "gramian-h2") {
    f.orientation = Orientation::maximize_submodular;
    auto sys = std::make_shared<LinearSystem>();
    sys->w = system_matrix(g);
    sys->variant = SystemVariant::actuated;
    sys->t0 = mp.t0;
    sys->t1 = mp.t1;
    const int n = g.node_count();
    f.evaluate = [sys, n](const std::vector<int>& s) {
      return gramian_h2(*sys, s, Matrix::Identity(n, n));
    };
    return f;
  }
  if (name == "gramian-energy") {
    f.orientation = Orientation::minimize_supermodular;
    f.empty_defined = false;
    auto sys = std::make_shared<LinearSystem>();
    sys->w = system_matrix(g);
    sys->variant = SystemVariant::actuated;
    sys->t0 = mp.t0;
    sys->t1 = mp.t1;
    f.evaluate = [sys](const std::vector<int>& s) {
      if (s.empty()) return std::numeric_limits<double>::infinity();
      try {
        return gramian_avg_energy(*sys, s);
      } catch (const GramianSingularError&) {
        return std::numeric_limits<double>::infinity();
      }
    };
    return f;
  }
  if (name == "min-energy") {
    f.orientation = Orientation::minimize_supermodular;
    LinearSystem sys;
    sys.w = system_matrix(g);
    sys.t0 = mp.t0;
    sys.t1 = mp.t1;
    EnergyTarget target;
    target.x0 = Vector::Zero(g.node_count());
    target.x1 = Vector::Ones(g.node_count());
    target.epsilon = mp.epsilon;
    auto eval = std::make_shared<MinEnergyEvaluator>(sys, target);
    f.evaluate = [eval](const std::vector<int>& s) { return (*eval)(s); };
    return f;
  }
  if (name == "gci") {
    f.orientation = Orientation::maximize_submodular;
    f.evaluate = [graph](const std::vector<int>& s) {
      return static_cast<double>(gci(*graph, s));
    };
    return f;
  }
  throw InvalidArgumentError("unknown metric: " + name);
}

/// Joint objective g(S) + lambda * GCI(S), where g is the shifted base metric
/// (monotone submodular, 0 at the empty set); lambda < 0 picks the dominating
/// default 10 * f(empty).
inline SetFunction make_joint_metric(const Graph& g, const std::string& base_name,
                                     const MetricParams& mp, double lambda,
                                     double* lambda_out = nullptr) {
  SetFunction base = make_metric(base_name, g, mp);
  SetFunction shifted = base.orientation == Orientation::minimize_supermodular
                            ? shift_to_max(base)
                            : base;
  if (lambda < 0.0) {
    const double scale = base.orientation == Orientation::minimize_supermodular
                             ? std::abs(base.evaluate({}))
                             : 1.0;
    lambda = 10.0 * std::max(scale, 1.0);
  }
  if (lambda_out) *lambda_out = lambda;
  auto graph = std::make_shared<Graph>(g);
  SetFunction f;
  f.ground = shifted.ground;
  f.orientation = Orientation::maximize_submodular;
  f.monotone = true;
  f.empty_defined = true;
  f.description = "joint(" + base_name + " + " + std::to_string(lambda) + "*gci)";
  auto inner = shifted.evaluate;
  f.evaluate = [graph, inner, lambda](const std::vector<int>& s) {
    return inner(s) + lambda * static_cast<double>(gci(*graph, s));
  };
  return f;
}

}  // namespace netsel
