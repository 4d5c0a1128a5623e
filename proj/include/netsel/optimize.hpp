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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "netsel/errors.hpp"
#include "netsel/graph.hpp"
#include "netsel/matroids.hpp"
#include "netsel/rng.hpp"
#include "netsel/utils.hpp"

namespace netsel {

enum class Orientation { maximize_submodular, minimize_supermodular };

/// The evaluation contract used by every selector. `evaluate` takes a sorted
/// node set and must be deterministic (stochastic metrics are frozen with
/// fixed seeds by their constructors). `empty_defined` is false for metrics
/// that are singular at the empty set, such as trace-of-inverse costs.
struct SetFunction {
  std::vector<int> ground;
  std::function<double(const std::vector<int>&)> evaluate;
  Orientation orientation = Orientation::maximize_submodular;
  bool monotone = true;
  bool empty_defined = true;
  std::string description;
};

enum class BoundType { none, one_minus_inv_e, ln_cover, half_matroid, exact };

inline const char* to_string(BoundType t) {
  switch (t) {
    case BoundType::none: return "none";
    case BoundType::one_minus_inv_e: return "1-1/e";
    case BoundType::ln_cover: return "ln-cover";
    case BoundType::half_matroid: return "half-matroid";
    case BoundType::exact: return "exact";
  }
  return "none";
}

/// Optimality certificate attached to a selection. For shifted objectives the
/// bound refers to g(S) = baseline - f(S), not to f itself; when f is
/// undefined at the empty set the baseline is the first greedy pick and the
/// ln-cover factor carries the extra additive element.
struct BoundCertificate {
  BoundType type = BoundType::none;
  double value = 0.0;
  bool shifted = false;
  double shift_baseline = 0.0;
  bool baseline_is_first_pick = false;
};

struct SelectionStep {
  int element = -1;
  double objective = 0.0;
};

struct SelectionResult {
  std::vector<int> selected;  // sorted
  std::vector<SelectionStep> trace;
  BoundCertificate bound;
  double objective = 0.0;
  std::uint64_t seed = 0;
  long evaluations = 0;
  double wall_time_ms = 0.0;
};

struct GreedyOptions {
  bool lazy = false;
  int jobs = 1;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Counted evaluation in the "maximize view": returns f for maximize
/// orientation and -f for minimize, so all selectors maximize gains.
class MaxView {
 public:
  MaxView(const SetFunction& f, long& evals) : f_(f), evals_(evals) {}

  double operator()(const std::vector<int>& s) const {
    ++evals_;
    const double v = f_.evaluate(s);
    return f_.orientation == Orientation::maximize_submodular ? v : -v;
  }

  double original(double view_value) const {
    return f_.orientation == Orientation::maximize_submodular ? view_value : -view_value;
  }

 private:
  const SetFunction& f_;
  long& evals_;
};

// true when (a, id_a) wins over (b, id_b): larger value, ties to lower id.
inline bool beats(double a, int id_a, double b, int id_b) {
  if (a != b) return a > b;
  return id_a < id_b;
}

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  int id = -1;
  bool valid() const { return id >= 0 && !std::isnan(value); }
};

/// One plain greedy step: evaluate all admissible candidates, return the
/// winner under the tie rule. `admissible` filters (e.g. matroid feasibility).
inline Candidate scan_candidates(const MaxView& view, const std::vector<int>& ground,
                                 const std::vector<int>& current,
                                 const std::function<bool(int)>& admissible, int jobs) {
  std::vector<int> candidates;
  for (int v : ground) {
    if (!sorted_contains(current, v) && (!admissible || admissible(v))) candidates.push_back(v);
  }
  Candidate best;
  if (candidates.empty()) return best;
  std::vector<double> values(candidates.size());
  if (jobs > 1) {
    parallel_for(static_cast<int>(candidates.size()), jobs, [&](int i) {
      values[static_cast<std::size_t>(i)] =
          view(sorted_insert(current, candidates[static_cast<std::size_t>(i)]));
    });
  } else {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      values[i] = view(sorted_insert(current, candidates[i]));
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (std::isnan(values[i])) continue;
    if (!best.valid() || beats(values[i], candidates[i], best.value, best.id)) {
      best = {values[i], candidates[i]};
    }
  }
  return best;
}

}  // namespace detail

/// Greedy maximization of f under |S| <= k (Nemhauser-Wolsey-Fisher greedy).
/// Minimize-supermodular objectives are selected by smallest value; the
/// (1-1/e) certificate then refers to the shifted gain g(S) = f(empty) - f(S)
/// and is omitted when f is undefined at the empty set.
inline SelectionResult greedy_max(const SetFunction& f, int k, const GreedyOptions& opts = {}) {
  if (k < 0 || k > static_cast<int>(f.ground.size())) {
    throw InvalidArgumentError("greedy_max: k must be between 0 and |ground|");
  }
  detail::Stopwatch watch;
  SelectionResult result;
  detail::MaxView view(f, result.evaluations);

  // Lazy gains are only sound upper bounds when the empty-set value exists to
  // anchor the first round; fall back to the plain scan otherwise.
  const bool lazy = opts.lazy && f.empty_defined;
  if (!lazy) {
    for (int step = 0; step < k; ++step) {
      const detail::Candidate best =
          detail::scan_candidates(view, f.ground, result.selected, nullptr, opts.jobs);
      if (!best.valid()) break;
      result.selected = sorted_insert(result.selected, best.id);
      result.trace.push_back({best.id, view.original(best.value)});
    }
  } else {
    // Lazy greedy: cached gains are upper bounds for submodular objectives,
    // so an entry is re-evaluated only while it could still beat the current
    // best under the (value, then lowest id) rule. Must return exactly the
    // plain greedy set; tests assert the equality.
    struct Entry {
      double gain;
      int id;
      long round;
    };
    auto cmp = [](const Entry& a, const Entry& b) {
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.id > b.id;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
    double current_value = view({});
    for (int v : f.ground) {
      queue.push({std::numeric_limits<double>::infinity(), v, -1});
    }
    for (long round = 0; round < k; ++round) {
      std::vector<Entry> popped;
      detail::Candidate best;
      while (!queue.empty()) {
        Entry top = queue.top();
        const bool could_beat =
            !best.valid() || detail::beats(top.gain, top.id, best.value - current_value, best.id);
        if (!could_beat) break;
        queue.pop();
        double value;
        if (top.round == round) {
          value = current_value + top.gain;
        } else {
          value = view(sorted_insert(result.selected, top.id));
          top.gain = value - current_value;
          top.round = round;
        }
        popped.push_back(top);
        if (!std::isnan(value) &&
            (!best.valid() || detail::beats(value, top.id, best.value, best.id))) {
          best = {value, top.id};
        }
      }
      if (!best.valid()) break;
      for (const Entry& e : popped) {
        if (e.id != best.id) queue.push(e);
      }
      current_value = best.value;
      result.selected = sorted_insert(result.selected, best.id);
      result.trace.push_back({best.id, view.original(best.value)});
    }
  }

  if (!result.trace.empty()) {
    result.objective = result.trace.back().objective;
  } else if (f.empty_defined) {
    result.objective = f.evaluate({});
    ++result.evaluations;
  } else {
    result.objective = std::numeric_limits<double>::quiet_NaN();
  }

  if (f.monotone) {
    if (f.orientation == Orientation::maximize_submodular) {
      result.bound = {BoundType::one_minus_inv_e, 1.0 - 1.0 / std::exp(1.0), false, 0.0, false};
    } else if (f.empty_defined) {
      ++result.evaluations;
      result.bound = {BoundType::one_minus_inv_e, 1.0 - 1.0 / std::exp(1.0), true, f.evaluate({}),
                      false};
    }
  }
  result.wall_time_ms = watch.ms();
  return result;
}

namespace detail {

/// Wolsey-style ln certificate on the maximize view. With a well-defined
/// empty set the paper's expression 1 + log((g(V)-g(0))/(g(S')-g(S''))) is
/// used directly; otherwise the cover is analyzed relative to the first pick
/// and the factor carries one extra additive element.
inline BoundCertificate cover_certificate(double g_v, std::optional<double> g_empty,
                                          const std::vector<double>& g_prefix) {
  BoundCertificate cert;
  cert.type = BoundType::ln_cover;
  const std::size_t picks = g_prefix.size();
  if (picks == 0) {
    cert.value = 1.0;
    return cert;
  }
  if (g_empty.has_value()) {
    const double base = picks >= 2 ? g_prefix[picks - 2] : *g_empty;
    const double last_gain = g_prefix.back() - base;
    const double range = g_v - *g_empty;
    cert.value = last_gain > 0.0 ? 1.0 + std::log(std::max(1.0, range / last_gain))
                                 : std::numeric_limits<double>::infinity();
    return cert;
  }
  cert.baseline_is_first_pick = true;
  cert.shift_baseline = g_prefix.front();
  if (picks == 1) {
    cert.value = 1.0;
    return cert;
  }
  const double last_gain = g_prefix.back() - g_prefix[picks - 2];
  const double range = g_v - g_prefix.front();
  cert.value = last_gain > 0.0 ? 2.0 + std::log(std::max(1.0, range / last_gain))
                               : std::numeric_limits<double>::infinity();
  return cert;
}

}  // namespace detail

/// Greedy cover: smallest greedy prefix With f(S) >= alpha (or <= alpha for
/// minimize-supermodular objectives). Throws InfeasibleTargetError when even
/// the full ground set misses the target.
inline SelectionResult greedy_cover(const SetFunction& f, double alpha,
                                    const GreedyOptions& opts = {}) {
  detail::Stopwatch watch;
  SelectionResult result;
  detail::MaxView view(f, result.evaluations);
  const double target =
      f.orientation == Orientation::maximize_submodular ? alpha : -alpha;  // view scale

  const double g_v = view(f.ground);
  if (g_v < target) {
    throw InfeasibleTargetError("greedy_cover: target unreachable even with the full ground set");
  }
  std::optional<double> g_empty;
  if (f.empty_defined) {
    g_empty = view({});
    if (*g_empty >= target) {
      result.objective = view.original(*g_empty);
      result.bound = detail::cover_certificate(g_v, g_empty, {});
      result.wall_time_ms = watch.ms();
      return result;
    }
  }

  std::vector<double> g_prefix;
  double g_current = -std::numeric_limits<double>::infinity();
  while (g_current < target && result.selected.size() < f.ground.size()) {
    const detail::Candidate best =
        detail::scan_candidates(view, f.ground, result.selected, nullptr, opts.jobs);
    if (!best.valid()) break;
    result.selected = sorted_insert(result.selected, best.id);
    result.trace.push_back({best.id, view.original(best.value)});
    g_prefix.push_back(best.value);
    g_current = best.value;
  }
  if (g_current < target) {
    throw InfeasibleTargetError("greedy_cover: target not reached (non-monotone objective?)");
  }
  result.objective = view.original(g_current);
  result.bound = detail::cover_certificate(g_v, g_empty, g_prefix);
  result.wall_time_ms = watch.ms();
  return result;
}

/// Greedy maximization subject to a matroid constraint; the returned set is a
/// basis (or the k-th prefix for truncated matroids) with the classic 1/2
/// optimality certificate.
inline SelectionResult matroid_greedy(const SetFunction& f, const Matroid& m,
                                      const GreedyOptions& opts = {}) {
  if (f.orientation != Orientation::maximize_submodular) {
    throw InvalidArgumentError(
        "matroid_greedy: shift minimize-supermodular objectives to maximize form first");
  }
  detail::Stopwatch watch;
  SelectionResult result;
  detail::MaxView view(f, result.evaluations);
  auto admissible = [&](int v) {
    return m.is_independent(sorted_insert(result.selected, v));
  };
  while (true) {
    const detail::Candidate best =
        detail::scan_candidates(view, f.ground, result.selected, admissible, opts.jobs);
    if (!best.valid()) break;
    result.selected = sorted_insert(result.selected, best.id);
    result.trace.push_back({best.id, view.original(best.value)});
  }
  if (!result.trace.empty()) {
    result.objective = result.trace.back().objective;
  } else if (f.empty_defined) {
    result.objective = f.evaluate({});
    ++result.evaluations;
  }
  result.bound = {BoundType::half_matroid, 0.5, false, 0.0, false};
  result.wall_time_ms = watch.ms();
  return result;
}

/// g(S) = f(empty) - f(S): the standard shift turning a monotone decreasing
/// supermodular cost into a monotone nondecreasing submodular gain.
inline SetFunction shift_to_max(const SetFunction& f) {
  if (f.orientation != Orientation::minimize_supermodular) {
    throw InvalidArgumentError("shift_to_max: expected a minimize-supermodular function");
  }
  if (!f.empty_defined) {
    throw InvalidArgumentError("shift_to_max: f is undefined at the empty set");
  }
  const double baseline = f.evaluate({});
  SetFunction g;
  g.ground = f.ground;
  g.orientation = Orientation::maximize_submodular;
  g.monotone = f.monotone;
  g.empty_defined = true;
  g.description = "shifted(" + f.description + ")";
  auto inner = f.evaluate;
  g.evaluate = [baseline, inner](const std::vector<int>& s) { return baseline - inner(s); };
  return g;
}

/// Expected objective over a family of functions sharing ground set and
/// orientation; submodularity/supermodularity is inherited by the weighted
/// average.
inline SetFunction expected_objective(std::vector<SetFunction> fs, std::vector<double> weights = {}) {
  if (fs.empty()) throw InvalidArgumentError("expected_objective: empty family");
  if (weights.empty()) {
    weights.assign(fs.size(), 1.0 / static_cast<double>(fs.size()));
  }
  if (weights.size() != fs.size()) {
    throw InvalidArgumentError("expected_objective: one weight per function");
  }
  SetFunction out;
  out.ground = fs.front().ground;
  out.orientation = fs.front().orientation;
  out.monotone = true;
  out.empty_defined = true;
  for (const SetFunction& f : fs) {
    if (f.ground != out.ground || f.orientation != out.orientation) {
      throw InvalidArgumentError("expected_objective: functions must share ground and orientation");
    }
    out.monotone = out.monotone && f.monotone;
    out.empty_defined = out.empty_defined && f.empty_defined;
  }
  out.description = "expectation(" + fs.front().description + ", M=" + std::to_string(fs.size()) + ")";
  auto shared = std::make_shared<std::vector<SetFunction>>(std::move(fs));
  auto w = std::make_shared<std::vector<double>>(std::move(weights));
  out.evaluate = [shared, w](const std::vector<int>& s) {
    double total = 0.0;
    for (std::size_t i = 0; i < shared->size(); ++i) {
      total += (*w)[i] * (*shared)[i].evaluate(s);
    }
    return total;
  };
  return out;
}

/// Expected objective over a TopologySet: plain average, distribution-weighted
/// average, or a seeded Monte-Carlo average of `mc_samples` draws.
inline SetFunction expected_objective(const TopologySet& ts,
                                      const std::function<SetFunction(const Graph&)>& make,
                                      int mc_samples = 0, std::uint64_t seed = 0) {
  ts.validate();
  if (ts.mode == TopologyMode::worst_case) {
    throw InvalidArgumentError("expected_objective: use worst_case_cover for worst-case mode");
  }
  std::vector<SetFunction> fs;
  std::vector<double> weights;
  if (ts.mode == TopologyMode::sampled && mc_samples > 0) {
    Rng rng(seed);
    std::vector<double> cdf;
    double acc = 0.0;
    for (double w : ts.weights) {
      acc += w;
      cdf.push_back(acc);
    }
    for (int i = 0; i < mc_samples; ++i) {
      const double x = rng.uniform() * acc;
      const std::size_t idx = static_cast<std::size_t>(
          std::lower_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
      fs.push_back(make(ts.topologies[std::min(idx, ts.topologies.size() - 1)]));
    }
  } else {
    for (const Graph& g : ts.topologies) fs.push_back(make(g));
    if (ts.mode == TopologyMode::sampled) weights = ts.weights;
  }
  return expected_objective(std::move(fs), std::move(weights));
}

/// Worst-case cover over a topology family: grows S until every
/// f_i(S) <= alpha, selecting by the supermodular surrogate
/// (1/M) * sum_i max(f_i(S), alpha).
inline SelectionResult worst_case_cover(const std::vector<SetFunction>& fs, double alpha,
                                        const GreedyOptions& opts = {}) {
  if (fs.empty()) throw InvalidArgumentError("worst_case_cover: empty family");
  for (const SetFunction& f : fs) {
    if (f.orientation != Orientation::minimize_supermodular) {
      throw InvalidArgumentError("worst_case_cover: expects minimize-supermodular objectives");
    }
  }
  detail::Stopwatch watch;
  SelectionResult result;

  const std::vector<int>& ground = fs.front().ground;
  auto eval_all_max = [&](const std::vector<int>& s) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const SetFunction& f : fs) {
      ++result.evaluations;
      worst = std::max(worst, f.evaluate(s));
    }
    return worst;
  };
  auto surrogate = [&](const std::vector<int>& s) {
    double total = 0.0;
    for (const SetFunction& f : fs) {
      ++result.evaluations;
      total += std::max(f.evaluate(s), alpha);
    }
    return total / static_cast<double>(fs.size());
  };

  for (const SetFunction& f : fs) {
    ++result.evaluations;
    if (f.evaluate(ground) > alpha) {
      throw InfeasibleTargetError("worst_case_cover: target unreachable on topology \"" +
                                  f.description + "\"");
    }
  }

  bool empty_ok = true;
  for (const SetFunction& f : fs) empty_ok = empty_ok && f.empty_defined;
  std::optional<double> g_empty;
  if (empty_ok) {
    g_empty = -surrogate({});
    if (eval_all_max({}) <= alpha) {
      result.bound = detail::cover_certificate(-alpha, g_empty, {});
      result.objective = -(*g_empty);
      result.wall_time_ms = watch.ms();
      return result;
    }
  }

  std::vector<double> g_prefix;  // maximize view of the surrogate
  while (result.selected.size() < ground.size()) {
    detail::Candidate best;
    for (int v : ground) {
      if (sorted_contains(result.selected, v)) continue;
      const double val = -surrogate(sorted_insert(result.selected, v));
      if (std::isnan(val)) continue;
      if (!best.valid() || detail::beats(val, v, best.value, best.id)) best = {val, v};
    }
    if (!best.valid()) break;
    result.selected = sorted_insert(result.selected, best.id);
    result.trace.push_back({best.id, -best.value});
    g_prefix.push_back(best.value);
    if (-best.value <= alpha && eval_all_max(result.selected) <= alpha) break;
  }
  const double worst = result.selected.empty() ? std::numeric_limits<double>::infinity()
                                               : eval_all_max(result.selected);
  if (worst > alpha) {
    throw InfeasibleTargetError("worst_case_cover: failed to certify the target");
  }
  result.objective = worst;  // certified max_i f_i; trace carries the surrogate
  result.bound = detail::cover_certificate(-alpha, g_empty, g_prefix);
  result.wall_time_ms = watch.ms();
  return result;
}

struct ConstraintSpec {
  SetFunction f;  // maximize orientation, monotone submodular
  double alpha = 0.0;
};

struct MultiCoverResult {
  SelectionResult result;
  std::vector<bool> satisfied;
  std::vector<double> final_values;
};

/// Joint cover of several targets via the truncated sum
/// F(S) = sum_i min(f_i(S), alpha_i), target sum_i alpha_i. Greedy selection
/// uses F; termination requires every constraint to hold on direct
/// evaluation.
inline MultiCoverResult multi_constraint_cover(const std::vector<ConstraintSpec>& constraints,
                                               const GreedyOptions& opts = {}) {
  (void)opts;
  if (constraints.empty()) throw InvalidArgumentError("multi_constraint_cover: no constraints");
  detail::Stopwatch watch;
  MultiCoverResult out;
  SelectionResult& result = out.result;
  const std::vector<int>& ground = constraints.front().f.ground;

  for (const ConstraintSpec& c : constraints) {
    if (c.f.orientation != Orientation::maximize_submodular) {
      throw InvalidArgumentError("multi_constraint_cover: constraints must be maximize-oriented");
    }
    if (c.f.ground != ground) {
      throw InvalidArgumentError("multi_constraint_cover: constraints must share the ground set");
    }
    ++result.evaluations;
    if (c.f.evaluate(ground) < c.alpha) {
      throw InfeasibleTargetError("multi_constraint_cover: constraint \"" + c.f.description +
                                  "\" cannot reach its target");
    }
  }

  double target = 0.0;
  for (const ConstraintSpec& c : constraints) target += c.alpha;
  auto truncated_sum = [&](const std::vector<int>& s) {
    double total = 0.0;
    for (const ConstraintSpec& c : constraints) {
      ++result.evaluations;
      total += std::min(c.f.evaluate(s), c.alpha);
    }
    return total;
  };
  auto all_satisfied = [&](const std::vector<int>& s) {
    for (const ConstraintSpec& c : constraints) {
      ++result.evaluations;
      if (c.f.evaluate(s) < c.alpha) return false;
    }
    return true;
  };

  bool empty_ok = true;
  for (const ConstraintSpec& c : constraints) empty_ok = empty_ok && c.f.empty_defined;
  std::optional<double> g_empty;
  if (empty_ok) g_empty = truncated_sum({});

  std::vector<double> g_prefix;
  bool done = empty_ok && g_empty.has_value() && *g_empty >= target && all_satisfied({});
  while (!done && result.selected.size() < ground.size()) {
    detail::Candidate best;
    for (int v : ground) {
      if (sorted_contains(result.selected, v)) continue;
      const double val = truncated_sum(sorted_insert(result.selected, v));
      if (std::isnan(val)) continue;
      if (!best.valid() || detail::beats(val, v, best.value, best.id)) best = {val, v};
    }
    if (!best.valid()) break;
    result.selected = sorted_insert(result.selected, best.id);
    result.trace.push_back({best.id, best.value});
    g_prefix.push_back(best.value);
    done = best.value >= target && all_satisfied(result.selected);
  }
  if (!done) {
    throw InfeasibleTargetError("multi_constraint_cover: greedy failed to satisfy all targets");
  }
  result.objective = result.trace.empty() ? *g_empty : result.trace.back().objective;
  result.bound = detail::cover_certificate(target, g_empty, g_prefix);
  for (const ConstraintSpec& c : constraints) {
    const double v = c.f.evaluate(result.selected);
    ++result.evaluations;
    out.final_values.push_back(v);
    out.satisfied.push_back(v >= c.alpha);
  }
  result.wall_time_ms = watch.ms();
  return out;
}

enum class BaselineKind { max_degree, avg_degree, random };

inline BaselineKind baseline_kind_from_string(const std::string& s) {
  if (s == "max-degree") return BaselineKind::max_degree;
  if (s == "avg-degree") return BaselineKind::avg_degree;
  if (s == "random") return BaselineKind::random;
  throw InvalidArgumentError("unknown baseline kind: " + s);
}

/// Full nested selection order for a heuristic baseline; prefixes of the
/// order give the k-element selections.
inline std::vector<int> baseline_order(const Graph& g, BaselineKind kind, std::uint64_t seed = 0) {
  const int n = g.node_count();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  switch (kind) {
    case BaselineKind::max_degree:
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
      });
      break;
    case BaselineKind::avg_degree: {
      double mean = 0.0;
      for (int i = 0; i < n; ++i) mean += g.degree(i);
      mean /= std::max(1, n);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double da = std::abs(g.degree(a) - mean);
        const double db = std::abs(g.degree(b) - mean);
        if (da != db) return da < db;
        return a < b;
      });
      break;
    }
    case BaselineKind::random: {
      Rng rng(seed);
      for (int i = n - 1; i > 0; --i) {
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.index(i + 1))]);
      }
      break;
    }
  }
  return order;
}

inline std::vector<int> baseline_select(const Graph& g, int k, BaselineKind kind,
                                        std::uint64_t seed = 0) {
  if (k < 0 || k > g.node_count()) throw InvalidArgumentError("baseline_select: bad k");
  std::vector<int> order = baseline_order(g, kind, seed);
  order.resize(static_cast<std::size_t>(k));
  std::sort(order.begin(), order.end());
  return order;
}

namespace detail {

template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Enumeration is allowed for |ground| <= 12 unrestricted, or |ground| <= 20
// when the subset size is capped at 4.
inline void brute_guard(int n, int size) {
  if (n <= 12) return;
  if (n <= 20 && size <= 4) return;
  throw InstanceTooLargeError(
      "brute force guard: need |ground| <= 20 with sizes <= 4, or |ground| <= 12");
}

}  // namespace detail

/// Exact optimum over all subsets of size at most k, by enumeration
/// (sizes ascending, lexicographic); the certificate records the optimum.
inline SelectionResult brute_force_max(const SetFunction& f, int k) {
  const int n = static_cast<int>(f.ground.size());
  if (k < 0 || k > n) throw InvalidArgumentError("brute_force_max: bad k");
  detail::brute_guard(n, k);
  detail::Stopwatch watch;
  SelectionResult result;
  detail::MaxView view(f, result.evaluations);
  double best = -std::numeric_limits<double>::infinity();
  bool have_best = false;
  for (int size = 0; size <= k; ++size) {
    if (size == 0 && !f.empty_defined) continue;
    detail::for_each_combination(n, size, [&](const std::vector<int>& idx) {
      std::vector<int> s;
      s.reserve(idx.size());
      for (int i : idx) s.push_back(f.ground[static_cast<std::size_t>(i)]);
      const double v = view(s);
      if (std::isnan(v)) return;
      if (!have_best || v > best) {
        best = v;
        have_best = true;
        result.selected = s;
      }
    });
  }
  if (!have_best) throw InvalidArgumentError("brute_force_max: no feasible subset");
  result.objective = view.original(best);
  result.bound = {BoundType::exact, result.objective, false, 0.0, false};
  result.wall_time_ms = watch.ms();
  return result;
}

/// Exact minimum-size cover: smallest set meeting the target, sizes ascending.
inline SelectionResult brute_force_cover(const SetFunction& f, double alpha) {
  const int n = static_cast<int>(f.ground.size());
  detail::Stopwatch watch;
  SelectionResult result;
  detail::MaxView view(f, result.evaluations);
  const double target = f.orientation == Orientation::maximize_submodular ? alpha : -alpha;
  if (view(f.ground) < target) {
    throw InfeasibleTargetError("brute_force_cover: target unreachable");
  }
  for (int size = 0; size <= n; ++size) {
    if (size == 0 && !f.empty_defined) continue;
    detail::brute_guard(n, size);
    bool found = false;
    detail::for_each_combination(n, size, [&](const std::vector<int>& idx) {
      if (found) return;
      std::vector<int> s;
      s.reserve(idx.size());
      for (int i : idx) s.push_back(f.ground[static_cast<std::size_t>(i)]);
      const double v = view(s);
      if (!std::isnan(v) && v >= target) {
        found = true;
        result.selected = s;
        result.objective = view.original(v);
      }
    });
    if (found) break;
  }
  result.bound = {BoundType::exact, static_cast<double>(result.selected.size()), false, 0.0, false};
  result.wall_time_ms = watch.ms();
  return result;
}

/// Exact optimum over the independent sets of a matroid (DFS over sorted
/// ground ids; prefix pruning is valid by the hereditary property).
inline SelectionResult brute_force_matroid(const SetFunction& f, const Matroid& m) {
  const int n = static_cast<int>(f.ground.size());
  if (n > 20) {
    throw InstanceTooLargeError("brute_force_matroid: |ground| must be at most 20");
  }
  detail::Stopwatch watch;
  SelectionResult result;
  detail::MaxView view(f, result.evaluations);
  double best = -std::numeric_limits<double>::infinity();
  bool have_best = false;
  long visited = 0;

  // DFS over independent sets only; prefix pruning is sound by heredity (M2).
  std::vector<int> current;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    if (++visited > (1L << 21)) {
      throw InstanceTooLargeError("brute_force_matroid: too many independent sets");
    }
    if (!current.empty() || f.empty_defined) {
      const double v = view(current);
      if (!std::isnan(v) && (!have_best || v > best)) {
        best = v;
        have_best = true;
        result.selected = current;
      }
    }
    for (std::size_t i = start; i < f.ground.size(); ++i) {
      current.push_back(f.ground[i]);
      if (m.is_independent(current)) {
        dfs(i + 1);
      }
      current.pop_back();
    }
  };
  dfs(0);
  if (!have_best) throw InvalidArgumentError("brute_force_matroid: no feasible subset");
  result.objective = view.original(best);
  result.bound = {BoundType::exact, result.objective, false, 0.0, false};
  result.wall_time_ms = watch.ms();
  return result;
}

}  // namespace netsel
