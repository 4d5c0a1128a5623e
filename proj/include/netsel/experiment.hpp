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
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "netsel/controllability.hpp"
#include "netsel/graph.hpp"
#include "netsel/graph_io.hpp"
#include "netsel/metrics.hpp"
#include "netsel/optimize.hpp"
#include "netsel/utils.hpp"

namespace netsel {

struct GraphSpec {
  std::string kind = "geometric";  // geometric | er | ring | path | star | file
  int n = 60;
  double width = 1000.0;
  double radius = 300.0;
  double q = 0.07;
  bool directed = false;
  std::string file;
  std::vector<std::uint64_t> seeds;    // explicit per-trial seeds
  std::uint64_t master_seed = 1;       // used when seeds is empty

  Graph build(std::uint64_t seed) const {
    if (kind == "geometric") return geometric_graph(n, width, radius, seed);
    if (kind == "er") return erdos_renyi(n, q, seed, directed);
    if (kind == "ring" || kind == "path" || kind == "star") {
      return named_graph(named_topology_from_string(kind), n);
    }
    if (kind == "file") return load_graph(file);
    throw InvalidArgumentError("unknown graph kind: " + kind);
  }

  std::uint64_t trial_seed(int trial) const {
    if (!seeds.empty()) return seeds[static_cast<std::size_t>(trial)];
    return derive_seed(master_seed, static_cast<std::uint64_t>(trial));
  }
};

/// Batch experiment description; "sweep" sweeps input-set sizes, "cover"
/// sweeps error targets and reports the inputs each selector needs.
struct ExperimentConfig {
  std::string mode = "sweep";  // sweep | cover
  GraphSpec graph;
  std::string metric = "convergence";
  MetricParams metric_params;
  std::vector<std::string> selectors{"greedy", "max-degree", "avg-degree", "random"};
  int k_min = 1;
  int k_max = 10;
  std::vector<double> targets;  // cover mode; empty -> auto grid
  int target_count = 8;
  bool joint_gci = false;       // augment the greedy objective with lambda * GCI
  double lambda_gci = -1.0;     // < 0: auto 10 * metric scale
  int trials = 20;
  int jobs = 1;
  std::string output = "experiment.csv";

  void validate() const {
    if (mode != "sweep" && mode != "cover") throw InvalidArgumentError("bad experiment mode");
    if (trials < 1) throw InvalidArgumentError("trials must be at least 1");
    if (!graph.seeds.empty() && static_cast<int>(graph.seeds.size()) < trials) {
      throw InvalidArgumentError("seed list shorter than the trial count");
    }
    if (mode == "sweep" && (k_min < 1 || k_max < k_min)) {
      throw InvalidArgumentError("bad k range");
    }
    if (mode == "cover" && targets.empty() && target_count < 1) {
      throw InvalidArgumentError("cover mode needs targets or a target count");
    }
  }
};

inline ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.mode = j.value("mode", c.mode);
  if (j.contains("graph")) {
    const auto& g = j.at("graph");
    c.graph.kind = g.value("kind", c.graph.kind);
    c.graph.n = g.value("n", c.graph.n);
    c.graph.width = g.value("width", c.graph.width);
    c.graph.radius = g.value("radius", c.graph.radius);
    c.graph.q = g.value("q", c.graph.q);
    c.graph.directed = g.value("directed", c.graph.directed);
    c.graph.file = g.value("file", c.graph.file);
    c.graph.master_seed = g.value("master_seed", c.graph.master_seed);
    if (g.contains("seeds")) c.graph.seeds = g.at("seeds").get<std::vector<std::uint64_t>>();
  }
  c.metric = j.value("metric", c.metric);
  if (j.contains("metric_params")) {
    const auto& m = j.at("metric_params");
    c.metric_params.conv_t = m.value("conv_t", c.metric_params.conv_t);
    c.metric_params.conv_delta = m.value("conv_delta", c.metric_params.conv_delta);
    c.metric_params.conv_p = m.value("conv_p", c.metric_params.conv_p);
    c.metric_params.conv_tau = m.value("conv_tau", c.metric_params.conv_tau);
    c.metric_params.kalman_horizon = m.value("kalman_horizon", c.metric_params.kalman_horizon);
    c.metric_params.kalman_dt = m.value("kalman_dt", c.metric_params.kalman_dt);
    c.metric_params.sigma2 = m.value("sigma2", c.metric_params.sigma2);
    c.metric_params.t0 = m.value("t0", c.metric_params.t0);
    c.metric_params.t1 = m.value("t1", c.metric_params.t1);
    c.metric_params.epsilon = m.value("epsilon", c.metric_params.epsilon);
  }
  if (j.contains("selectors")) c.selectors = j.at("selectors").get<std::vector<std::string>>();
  c.k_min = j.value("k_min", c.k_min);
  c.k_max = j.value("k_max", c.k_max);
  if (j.contains("targets")) c.targets = j.at("targets").get<std::vector<double>>();
  c.target_count = j.value("target_count", c.target_count);
  c.joint_gci = j.value("joint_gci", c.joint_gci);
  c.lambda_gci = j.value("lambda_gci", c.lambda_gci);
  c.trials = j.value("trials", c.trials);
  c.jobs = j.value("jobs", c.jobs);
  c.output = j.value("output", c.output);
  c.validate();
  return c;
}

inline nlohmann::json experiment_config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["mode"] = c.mode;
  j["graph"] = {{"kind", c.graph.kind}, {"n", c.graph.n},       {"width", c.graph.width},
                {"radius", c.graph.radius}, {"q", c.graph.q},   {"directed", c.graph.directed},
                {"master_seed", c.graph.master_seed}};
  if (!c.graph.seeds.empty()) j["graph"]["seeds"] = c.graph.seeds;
  if (!c.graph.file.empty()) j["graph"]["file"] = c.graph.file;
  j["metric"] = c.metric;
  j["metric_params"] = {{"conv_t", c.metric_params.conv_t},
                        {"conv_delta", c.metric_params.conv_delta},
                        {"conv_p", c.metric_params.conv_p},
                        {"conv_tau", c.metric_params.conv_tau},
                        {"kalman_horizon", c.metric_params.kalman_horizon},
                        {"kalman_dt", c.metric_params.kalman_dt},
                        {"sigma2", c.metric_params.sigma2},
                        {"t0", c.metric_params.t0},
                        {"t1", c.metric_params.t1},
                        {"epsilon", c.metric_params.epsilon}};
  j["selectors"] = c.selectors;
  j["k_min"] = c.k_min;
  j["k_max"] = c.k_max;
  if (!c.targets.empty()) j["targets"] = c.targets;
  j["target_count"] = c.target_count;
  j["joint_gci"] = c.joint_gci;
  j["lambda_gci"] = c.lambda_gci;
  j["trials"] = c.trials;
  j["jobs"] = c.jobs;
  j["output"] = c.output;
  return j;
}

struct ExperimentRow {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string selector;
  int k = 0;
  int target_index = -1;     // cover mode
  double target = std::numeric_limits<double>::quiet_NaN();
  double value = std::numeric_limits<double>::quiet_NaN();
  bool controllable = false;
  std::vector<int> inputs;
  double wall_time_ms = 0.0;
  std::string error;
};

struct AggregateRow {
  std::string selector;
  int k = 0;
  int target_index = -1;
  double mean_value = std::numeric_limits<double>::quiet_NaN();
  double mean_target = std::numeric_limits<double>::quiet_NaN();
  double mean_inputs = 0.0;
  double success_rate = 0.0;
  int count = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<AggregateRow> aggregates;
  std::vector<std::string> header;  // "# key: value" comment lines
};

namespace detail {

inline std::string join_inputs(const std::vector<int>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ";";
    os << s[i];
  }
  return os.str();
}

inline std::string format_double(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

/// Nested selection order for a selector name; greedy orders come from the
/// per-iteration trace so prefixes are the k-element selections.
inline std::vector<int> selection_order(const std::string& selector, const Graph& g,
                                        const SetFunction& greedy_objective, int depth,
                                        std::uint64_t trial_seed) {
  if (selector == "greedy") {
    SelectionResult r = greedy_max(greedy_objective, std::min<int>(depth, g.node_count()));
    std::vector<int> order;
    for (const SelectionStep& s : r.trace) order.push_back(s.element);
    return order;
  }
  if (selector == "max-degree" || selector == "avg-degree" || selector == "random") {
    return baseline_order(g, baseline_kind_from_string(selector), derive_seed(trial_seed, 0xBA5E));
  }
  throw InvalidArgumentError("unknown selector: " + selector);
}

}  // namespace detail

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult out;
  {
    std::ostringstream os;
    os << "# config: " << experiment_config_to_json(cfg).dump();
    out.header.push_back(os.str());
    std::ostringstream seeds;
    seeds << "# trial_seeds:";
    for (int t = 0; t < cfg.trials; ++t) seeds << " " << cfg.graph.trial_seed(t);
    out.header.push_back(seeds.str());
  }

  std::vector<std::vector<ExperimentRow>> per_trial(static_cast<std::size_t>(cfg.trials));
  parallel_for(cfg.trials, cfg.jobs, [&](int trial) {
    std::vector<ExperimentRow>& rows = per_trial[static_cast<std::size_t>(trial)];
    const std::uint64_t seed = cfg.graph.trial_seed(trial);
    try {
      const Graph g = cfg.graph.build(seed);
      const SetFunction base = make_metric(cfg.metric, g, cfg.metric_params);
      SetFunction greedy_objective = base;
      if (cfg.joint_gci) {
        greedy_objective = make_joint_metric(g, cfg.metric, cfg.metric_params, cfg.lambda_gci);
      }

      if (cfg.mode == "sweep") {
        for (const std::string& selector : cfg.selectors) {
          detail::Stopwatch watch;
          const std::vector<int> order =
              detail::selection_order(selector, g, greedy_objective, cfg.k_max, seed);
          std::vector<int> prefix;
          for (int k = 1; k <= cfg.k_max && k <= static_cast<int>(order.size()); ++k) {
            prefix = sorted_insert(prefix, order[static_cast<std::size_t>(k - 1)]);
            if (k < cfg.k_min) continue;
            ExperimentRow row;
            row.trial = trial;
            row.seed = seed;
            row.selector = selector;
            row.k = k;
            row.inputs = prefix;
            try {
              row.value = base.evaluate(prefix);
              row.controllable = structural_report(g, prefix).controllable;
            } catch (const Error& e) {
              row.error = e.what();
            }
            row.wall_time_ms = watch.ms();
            rows.push_back(std::move(row));
          }
        }
      } else {
        // Cover mode: one nested ordering per selector; the inputs required
        // for each target are read off the prefix values.
        std::vector<double> targets = cfg.targets;
        const int depth = g.node_count();
        std::map<std::string, std::vector<int>> orders;
        std::map<std::string, std::vector<double>> values;
        for (const std::string& selector : cfg.selectors) {
          const std::vector<int> order =
              detail::selection_order(selector, g, greedy_objective, depth, seed);
          std::vector<double> vals;
          std::vector<int> prefix;
          for (std::size_t i = 0; i < order.size(); ++i) {
            prefix = sorted_insert(prefix, order[i]);
            vals.push_back(base.evaluate(prefix));
          }
          orders[selector] = order;
          values[selector] = vals;
        }
        if (targets.empty()) {
          // Geometric grid from 1.1x the deepest greedy value up to half the
          // best single-input value (recorded in the output header).
          const std::vector<double>& gv = values.count("greedy") ? values["greedy"]
                                                                 : values[cfg.selectors.front()];
          double lo = 1.1 * gv.back();
          double hi = 0.5 * gv.front();
          if (!(hi > lo)) hi = 2.0 * lo;
          targets.resize(static_cast<std::size_t>(cfg.target_count));
          const double ratio =
              cfg.target_count > 1
                  ? std::pow(hi / lo, 1.0 / static_cast<double>(cfg.target_count - 1))
                  : 1.0;
          for (int i = 0; i < cfg.target_count; ++i) {
            targets[static_cast<std::size_t>(i)] = lo * std::pow(ratio, i);
          }
        }
        const bool minimize = base.orientation == Orientation::minimize_supermodular;
        for (const std::string& selector : cfg.selectors) {
          const std::vector<double>& vals = values[selector];
          for (std::size_t ti = 0; ti < targets.size(); ++ti) {
            ExperimentRow row;
            row.trial = trial;
            row.seed = seed;
            row.selector = selector;
            row.target_index = static_cast<int>(ti);
            row.target = targets[ti];
            int needed = -1;
            for (std::size_t i = 0; i < vals.size(); ++i) {
              const bool met = minimize ? vals[i] <= targets[ti] : vals[i] >= targets[ti];
              if (met) {
                needed = static_cast<int>(i) + 1;
                break;
              }
            }
            if (needed < 0) {
              row.error = "target not reached within the ordering";
              row.k = static_cast<int>(vals.size());
            } else {
              row.k = needed;
              row.value = vals[static_cast<std::size_t>(needed - 1)];
              row.controllable = true;
              std::vector<int> prefix(orders[selector].begin(),
                                      orders[selector].begin() + needed);
              std::sort(prefix.begin(), prefix.end());
              row.inputs = prefix;
            }
            rows.push_back(std::move(row));
          }
        }
      }
    } catch (const Error& e) {
      ExperimentRow row;
      row.trial = trial;
      row.seed = seed;
      row.selector = "*";
      row.error = e.what();
      rows.push_back(std::move(row));
    }
  });

  for (auto& rows : per_trial) {
    for (auto& r : rows) out.rows.push_back(std::move(r));
  }

  // Aggregates keyed by (selector, k) in sweep mode, (selector, target_index)
  // in cover mode. Means are over error-free rows; success_rate is over all
  // rows in the cell.
  struct Accum {
    double value_sum = 0.0;
    double target_sum = 0.0;
    double inputs_sum = 0.0;
    int success = 0;
    int valid = 0;
    int total = 0;
    bool has_target = false;
  };
  std::map<std::pair<std::string, int>, Accum> agg;
  for (const ExperimentRow& r : out.rows) {
    if (r.selector == "*") continue;
    const int key2 = cfg.mode == "sweep" ? r.k : r.target_index;
    Accum& a = agg[{r.selector, key2}];
    ++a.total;
    if (r.controllable) ++a.success;
    if (!r.error.empty() || std::isnan(r.value)) continue;
    ++a.valid;
    a.value_sum += r.value;
    a.inputs_sum += r.k;
    if (!std::isnan(r.target)) {
      a.target_sum += r.target;
      a.has_target = true;
    }
  }
  for (const auto& [key, a] : agg) {
    AggregateRow row;
    row.selector = key.first;
    if (cfg.mode == "sweep") {
      row.k = key.second;
    } else {
      row.target_index = key.second;
    }
    row.count = a.total;
    row.success_rate = a.total > 0 ? static_cast<double>(a.success) / a.total : 0.0;
    if (a.valid > 0) {
      row.mean_value = a.value_sum / a.valid;
      row.mean_inputs = a.inputs_sum / a.valid;
      if (a.has_target) row.mean_target = a.target_sum / a.valid;
    }
    out.aggregates.push_back(row);
  }
  return out;
}

inline std::string experiment_rows_csv(const ExperimentResult& res,
                                       const std::vector<std::string>& extra_header = {}) {
  std::ostringstream os;
  for (const std::string& h : extra_header) os << h << "\n";
  for (const std::string& h : res.header) os << h << "\n";
  os << "trial,seed,selector,k,target_index,target,value,controllable,inputs,wall_time_ms,error\n";
  for (const ExperimentRow& r : res.rows) {
    os << r.trial << "," << r.seed << "," << r.selector << "," << r.k << "," << r.target_index
       << "," << detail::format_double(r.target) << "," << detail::format_double(r.value) << ","
       << (r.controllable ? 1 : 0) << "," << detail::join_inputs(r.inputs) << ","
       << r.wall_time_ms << "," << r.error << "\n";
  }
  return os.str();
}

inline std::string experiment_aggregates_csv(const ExperimentResult& res,
                                             const std::vector<std::string>& extra_header = {}) {
  std::ostringstream os;
  for (const std::string& h : extra_header) os << h << "\n";
  for (const std::string& h : res.header) os << h << "\n";
  os << "selector,k,target_index,mean_target,mean_value,mean_inputs,success_rate,count\n";
  for (const AggregateRow& a : res.aggregates) {
    os << a.selector << "," << a.k << "," << a.target_index << ","
       << detail::format_double(a.mean_target) << "," << detail::format_double(a.mean_value) << ","
       << a.mean_inputs << "," << a.success_rate << "," << a.count << "\n";
  }
  return os.str();
}

/// Presets mirroring the three numerical studies; `reduced` shrinks the node
/// count for fast runs while keeping densities comparable.
inline ExperimentConfig preset_robustness(bool reduced = true) {
  ExperimentConfig c;
  c.mode = "cover";
  c.metric = "noise";
  c.graph.kind = "geometric";
  if (reduced) {
    c.graph.n = 60;
    c.graph.width = 775.0;
    c.trials = 20;
  } else {
    c.graph.n = 100;
    c.graph.width = 1000.0;
    c.trials = 50;
  }
  c.graph.radius = 300.0;
  c.graph.master_seed = 1;
  c.target_count = 8;
  c.output = "robustness.csv";
  return c;
}

inline ExperimentConfig preset_convergence(bool reduced = true) {
  ExperimentConfig c;
  c.mode = "sweep";
  c.metric = "convergence";
  c.metric_params.conv_p = 2.0;
  c.metric_params.conv_tau = 16;
  c.graph.kind = "geometric";
  if (reduced) {
    c.graph.n = 60;
    c.graph.width = 1084.0;
    c.trials = 20;
  } else {
    c.graph.n = 100;
    c.graph.width = 1400.0;
    c.trials = 50;
  }
  c.graph.radius = 250.0;
  c.graph.master_seed = 2;
  c.k_min = 1;
  c.k_max = 10;
  c.output = "convergence.csv";
  return c;
}

inline ExperimentConfig preset_controllability() {
  ExperimentConfig c;
  c.mode = "sweep";
  c.metric = "convergence";
  c.metric_params.conv_p = 2.0;
  c.metric_params.conv_tau = 16;
  c.joint_gci = true;
  c.graph.kind = "er";
  c.graph.n = 70;
  c.graph.q = 0.07;
  c.graph.master_seed = 3;
  c.trials = 50;
  c.k_min = 1;
  c.k_max = 5;
  c.output = "controllability.csv";
  return c;
}

}  // namespace netsel
