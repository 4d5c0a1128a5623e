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
#include <queue>
#include <utility>
#include <vector>

#include "netsel/graph.hpp"
#include "netsel/matching.hpp"
#include "netsel/numerics.hpp"

namespace netsel {

/// How an input set realizes (A, B) from the weight matrix W:
///  - actuated: A = W fixed, B = identity columns indexed by the input set.
///  - grounded: A and B are the follower/input submatrices of W.
enum class SystemVariant { actuated, grounded };

struct LinearSystem {
  Matrix w;
  SystemVariant variant = SystemVariant::actuated;
  double t0 = 0.0;  // finite-horizon Gramian window, used when A is not Hurwitz
  double t1 = 10.0;

  int dim() const { return static_cast<int>(w.rows()); }

  void validate() const {
    if (w.rows() != w.cols()) throw InvalidArgumentError("LinearSystem: w must be square");
    if (!(t1 > t0)) throw InvalidArgumentError("LinearSystem: t1 must exceed t0");
  }
};

/// Consensus drift matrix -L(g): the natural W for leader-follower analyses.
inline Matrix system_matrix(const Graph& g) { return -laplacian(g); }

/// Weight matrix with W_ij drawn for each edge (j -> i); zero diagonal.
inline Matrix weight_matrix(const Graph& g, Rng& rng, double lo = 0.5, double hi = 1.5) {
  const int n = g.node_count();
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, wt] : g.in_neighbors(i)) {
      (void)wt;
      w(i, j) = rng.uniform(lo, hi);
    }
  }
  return w;
}

struct RealizedPair {
  Matrix a;
  Matrix b;
  std::vector<int> followers;  // grounded variant: node id per state row
};

inline RealizedPair realize(const LinearSystem& sys, const std::vector<int>& s_in) {
  sys.validate();
  const int n = sys.dim();
  std::vector<int> s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 0 || v >= n) throw InvalidArgumentError("realize: node id out of range");
  }
  RealizedPair out;
  if (sys.variant == SystemVariant::actuated) {
    out.a = sys.w;
    out.b = Matrix::Zero(n, static_cast<Eigen::Index>(s.size()));
    for (std::size_t c = 0; c < s.size(); ++c) out.b(s[c], static_cast<Eigen::Index>(c)) = 1.0;
    out.followers.resize(n);
    for (int i = 0; i < n; ++i) out.followers[i] = i;
    return out;
  }
  std::vector<char> is_input(n, 0);
  for (int v : s) is_input[v] = 1;
  for (int i = 0; i < n; ++i) {
    if (!is_input[i]) out.followers.push_back(i);
  }
  const int nf = static_cast<int>(out.followers.size());
  out.a.resize(nf, nf);
  out.b.resize(nf, static_cast<Eigen::Index>(s.size()));
  for (int r = 0; r < nf; ++r) {
    for (int c = 0; c < nf; ++c) out.a(r, c) = sys.w(out.followers[r], out.followers[c]);
    for (std::size_t c = 0; c < s.size(); ++c) {
      out.b(r, static_cast<Eigen::Index>(c)) = sys.w(out.followers[r], s[c]);
    }
  }
  return out;
}

/// Kalman controllability matrix [B, AB, ..., A^{n-1}B]. Blocks are rescaled
/// to unit max norm as they are generated; this only rescales columns and so
/// leaves the rank unchanged.
inline Matrix controllability_matrix(const Matrix& a, const Matrix& b) {
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.cols();
  if (n == 0 || m == 0) return Matrix(n, 0);
  Matrix ctrb(n, n * m);
  Matrix block = b;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double scale = block.cwiseAbs().maxCoeff();
    if (scale > 0.0) block /= scale;
    ctrb.middleCols(i * m, m) = block;
    if (i + 1 < n) block = a * block;
  }
  return ctrb;
}

/// rank of the controllability matrix. In the actuated variant this is a
/// monotone submodular function of the input set.
inline int ctrb_rank(const LinearSystem& sys, const std::vector<int>& s) {
  const RealizedPair p = realize(sys, s);
  return numerical_rank(controllability_matrix(p.a, p.b));
}

/// Gramian of the realized pair: Lyapunov solution when A is Hurwitz, the
/// finite-horizon Gramian over [t0, t1] otherwise.
inline Matrix input_set_gramian(const LinearSystem& sys, const std::vector<int>& s,
                                bool* finite_horizon = nullptr) {
  const RealizedPair p = realize(sys, s);
  if (is_hurwitz(p.a)) {
    if (finite_horizon) *finite_horizon = false;
    return lyapunov_gramian(p.a, p.b);
  }
  if (finite_horizon) *finite_horizon = true;
  return finite_horizon_gramian(p.a, p.b, sys.t0, sys.t1);
}

inline double gramian_h2(const LinearSystem& sys, const std::vector<int>& s, const Matrix& x) {
  const Matrix w = input_set_gramian(sys, s);
  if (x.cols() != w.rows()) throw InvalidArgumentError("gramian_h2: X has the wrong column count");
  return (x * w * x.transpose()).trace();
}

inline double gramian_avg_energy(const LinearSystem& sys, const std::vector<int>& s) {
  const Matrix w = input_set_gramian(sys, s);
  if (w.rows() == 0) return 0.0;
  try {
    return solve_spd(w, Matrix::Identity(w.rows(), w.cols())).trace();
  } catch (const NotPositiveDefiniteError&) {
    throw GramianSingularError("gramian_avg_energy: controllability Gramian is singular");
  }
}

struct GramianMetrics {
  double h2 = 0.0;
  double avg_energy = 0.0;
  bool finite_horizon = false;
};

inline GramianMetrics gramian_metrics(const LinearSystem& sys, const std::vector<int>& s,
                                      const Matrix& x) {
  GramianMetrics out;
  const Matrix w = input_set_gramian(sys, s, &out.finite_horizon);
  if (x.cols() != w.rows()) {
    throw InvalidArgumentError("gramian_metrics: X has the wrong column count");
  }
  out.h2 = (x * w * x.transpose()).trace();
  if (w.rows() > 0) {
    try {
      out.avg_energy = solve_spd(w, Matrix::Identity(w.rows(), w.cols())).trace();
    } catch (const NotPositiveDefiniteError&) {
      throw GramianSingularError("gramian_metrics: controllability Gramian is singular");
    }
  }
  return out;
}

/// Steering target for the epsilon-regularized minimum-energy metric.
struct EnergyTarget {
  Vector x0;
  Vector x1;
  double epsilon = 1e-2;
};

/// Precomputes the per-node Gramians Gamma_i of the diagonal-actuation model
/// so greedy sweeps can evaluate many input sets cheaply.
class MinEnergyEvaluator {
 public:
  MinEnergyEvaluator(const LinearSystem& sys, const EnergyTarget& target) {
    sys.validate();
    const int n = sys.dim();
    if (target.x0.size() != n || target.x1.size() != n) {
      throw InvalidArgumentError("MinEnergyEvaluator: state vectors must match the system size");
    }
    if (!(target.epsilon > 0.0)) {
      throw InvalidArgumentError("MinEnergyEvaluator: epsilon must be positive");
    }
    epsilon_ = target.epsilon;
    n_ = n;
    gammas_.reserve(n);
    for (int i = 0; i < n; ++i) {
      Matrix b = Matrix::Zero(n, 1);
      b(i, 0) = 1.0;
      gammas_.push_back(finite_horizon_gramian(sys.w, b, sys.t0, sys.t1));
    }
    v_ = target.x1 - expm(sys.w * (sys.t1 - sys.t0)) * target.x0;
    basis_ = complement_basis(v_);
  }

  int dim() const { return n_; }
  const Vector& steering_vector() const { return v_; }

  /// f_eps(S) = v^T (Gamma + eps I)^{-1} v + eps * sum_i vbar_i^T (Gamma + eps^2 I)^{-1} vbar_i
  /// with Gamma = sum_{i in S} Gamma_i.
  double operator()(const std::vector<int>& s) const {
    Matrix gamma = Matrix::Zero(n_, n_);
    for (int v : s) {
      if (v < 0 || v >= n_) throw InvalidArgumentError("MinEnergyEvaluator: node id out of range");
      gamma += gammas_[v];
    }
    double value = 0.0;
    if (v_.squaredNorm() > 0.0) {
      Matrix reg = gamma;
      reg.diagonal().array() += epsilon_;
      value += (v_.transpose() * solve_spd(reg, v_))(0, 0);
    }
    if (basis_.cols() > 0) {
      Matrix reg = gamma;
      reg.diagonal().array() += epsilon_ * epsilon_;
      value += epsilon_ * (basis_.transpose() * solve_spd(reg, basis_)).trace();
    }
    return value;
  }

  /// Orthonormal basis of the orthogonal complement of v (n-1 columns); for
  /// v = 0 the first n-1 identity columns are used.
  static Matrix complement_basis(const Vector& v) {
    const Eigen::Index n = v.size();
    if (n <= 1) return Matrix(n, 0);
    if (v.squaredNorm() == 0.0) return Matrix::Identity(n, n).leftCols(n - 1);
    Eigen::HouseholderQR<Matrix> qr(v);
    Matrix q = qr.householderQ();
    return q.rightCols(n - 1);
  }

 private:
  int n_ = 0;
  double epsilon_ = 0.0;
  std::vector<Matrix> gammas_;
  Vector v_;
  Matrix basis_;
};

inline std::vector<int> normalize_node_set_ids(std::vector<int> s, int n) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 0 || v >= n) throw InvalidArgumentError("node id out of range");
  }
  return s;
}

inline double min_energy_metric(const LinearSystem& sys, const std::vector<int>& s,
                                const EnergyTarget& target) {
  return MinEnergyEvaluator(sys, target)(normalize_node_set_ids(s, sys.dim()));
}

/// Bipartite matching instance for dilation analysis: left side = the
/// followers to be matched, right side = all nodes, edge (z_j, u_i) when i is
/// an in-neighbor of j.
inline BipartiteGraph dilation_bipartite(const Graph& g, const std::vector<int>& followers) {
  BipartiteGraph bg(static_cast<int>(followers.size()), g.node_count());
  for (std::size_t l = 0; l < followers.size(); ++l) {
    for (const auto& [j, w] : g.in_neighbors(followers[l])) {
      (void)w;
      bg.adj[l].push_back(j);
    }
  }
  return bg;
}

struct StructuralReport {
  bool accessible = false;
  std::vector<int> inaccessible;
  bool dilation_free = false;
  std::vector<int> dilation_witness;  // follower set A with |N(A)| < |A|
  bool controllable = false;
  std::vector<std::pair<int, int>> max_matching;  // (in-neighbor, follower)
  int gci = 0;
};

/// Structural controllability analysis for input set s: accessibility by
/// multi-source reachability, dilation-freeness by maximum matching of the
/// followers against their in-neighbors (Hall condition).
inline StructuralReport structural_report(const Graph& g, const std::vector<int>& s_in) {
  const std::vector<int> s = normalize_node_set(g, s_in);
  const int n = g.node_count();
  StructuralReport rep;

  std::vector<char> reached(n, 0);
  std::queue<int> frontier;
  for (int v : s) {
    reached[v] = 1;
    frontier.push(v);
  }
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (const auto& [u, w] : g.out_neighbors(v)) {
      (void)w;
      if (!reached[u]) {
        reached[u] = 1;
        frontier.push(u);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!reached[v]) rep.inaccessible.push_back(v);
  }
  rep.accessible = rep.inaccessible.empty();

  std::vector<char> is_input(n, 0);
  for (int v : s) is_input[v] = 1;
  std::vector<int> followers;
  for (int v = 0; v < n; ++v) {
    if (!is_input[v]) followers.push_back(v);
  }
  const BipartiteGraph bg = dilation_bipartite(g, followers);
  const Matching m = maximum_matching(bg);
  rep.dilation_free = m.size == static_cast<int>(followers.size());
  for (std::size_t l = 0; l < followers.size(); ++l) {
    if (m.left_to_right[l] != -1) rep.max_matching.push_back({m.left_to_right[l], followers[l]});
  }
  if (!rep.dilation_free) {
    for (int l : hall_violator(bg, m)) rep.dilation_witness.push_back(followers[l]);
  }
  rep.gci = m.size + static_cast<int>(s.size());
  rep.controllable = rep.accessible && rep.dilation_free;
  return rep;
}

/// Graph controllability index GCI(S) = rank(V \ S) + |S|: the transversal
/// matroid rank of the follower set (maximum matched followers) plus the
/// input count. Monotone nondecreasing and submodular in S.
inline int gci(const Graph& g, const std::vector<int>& s_in) {
  const std::vector<int> s = normalize_node_set(g, s_in);
  const int n = g.node_count();
  std::vector<char> is_input(n, 0);
  for (int v : s) is_input[v] = 1;
  std::vector<int> followers;
  for (int v = 0; v < n; ++v) {
    if (!is_input[v]) followers.push_back(v);
  }
  return maximum_matching(dilation_bipartite(g, followers)).size + static_cast<int>(s.size());
}

struct MinInputResult {
  std::vector<int> inputs;
  bool strongly_connected = false;  // false means the result is advisory only
};

/// Minimum input set for structural controllability via maximum matching:
/// the unmatched nodes become inputs; when a perfect matching exists the
/// lowest-id node is chosen. Exact for strongly connected graphs, advisory
/// otherwise (re-verify with structural_report).
inline MinInputResult min_input_set_structural(const Graph& g) {
  const int n = g.node_count();
  MinInputResult out;
  out.strongly_connected = g.strongly_connected();
  if (n == 0) return out;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const Matching m = maximum_matching(dilation_bipartite(g, all));
  for (int v = 0; v < n; ++v) {
    if (m.left_to_right[v] == -1) out.inputs.push_back(v);
  }
  if (out.inputs.empty()) out.inputs.push_back(0);
  return out;
}

}  // namespace netsel
