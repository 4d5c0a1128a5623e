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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netsel/controllability.hpp"
#include "netsel/experiment.hpp"
#include "netsel/graph_io.hpp"
#include "netsel/metrics.hpp"
#include "netsel/optimize.hpp"
#include "netsel/serialize.hpp"
#include "netsel/simulate.hpp"
#include "netsel/verify.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitSingular = 4;
constexpr int kExitTooLarge = 5;

std::string g_invocation;

std::string join_args(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) {
    if (i) os << " ";
    os << argv[i];
  }
  return os.str();
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(std::stoi(token));
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw netsel::Error("cannot open output file: " + path);
  out << text;
}

nlohmann::json meta(std::uint64_t seed) {
  return nlohmann::json{{"invocation", g_invocation}, {"seed", seed}};
}

struct MetricFlags {
  double conv_t = -1.0, conv_delta = -1.0, conv_p = 2.0;
  int conv_tau = 16;
  int kalman_horizon = 2;
  double kalman_dt = 0.25, sigma2 = 1.0;
  double t0 = 0.0, t1 = 5.0, epsilon = 1e-2;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--conv-t", conv_t, "convergence horizon time (default tau steps of delta)");
    cmd->add_option("--conv-delta", conv_delta, "walk step size (default 0.1/max diag L)");
    cmd->add_option("--conv-p", conv_p, "convergence norm order p");
    cmd->add_option("--conv-tau", conv_tau, "walk steps when --conv-t is unset");
    cmd->add_option("--kalman-horizon", kalman_horizon, "observation steps k");
    cmd->add_option("--kalman-dt", kalman_dt, "consensus step for the Kalman transition matrix");
    cmd->add_option("--sigma2", sigma2, "measurement noise variance");
    cmd->add_option("--t0", t0, "Gramian horizon start");
    cmd->add_option("--t1", t1, "Gramian horizon end");
    cmd->add_option("--epsilon", epsilon, "min-energy regularizer");
  }

  netsel::MetricParams params() const {
    netsel::MetricParams mp;
    mp.conv_t = conv_t;
    mp.conv_delta = conv_delta;
    mp.conv_p = conv_p;
    mp.conv_tau = conv_tau;
    mp.kalman_horizon = kalman_horizon;
    mp.kalman_dt = kalman_dt;
    mp.sigma2 = sigma2;
    mp.t0 = t0;
    mp.t1 = t1;
    mp.epsilon = epsilon;
    return mp;
  }
};

int run(int argc, char** argv) {
  g_invocation = join_args(argc, argv);
  CLI::App app{"Input-node selection for networked dynamical systems"};
  app.require_subcommand(1);

  // ---- generate ----------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "generate a graph file");
  std::string gen_kind = "geometric";
  int gen_n = 100;
  double gen_width = 1000.0, gen_radius = 300.0, gen_q = 0.07;
  bool gen_directed = false;
  std::uint64_t gen_seed = 1;
  std::string gen_output = "graph.json";
  gen->add_option("kind", gen_kind, "geometric | er | ring | path | star")->required();
  gen->add_option("--n", gen_n, "node count");
  gen->add_option("--width", gen_width, "square width (geometric)");
  gen->add_option("--radius", gen_radius, "connection radius (geometric)");
  gen->add_option("--q", gen_q, "edge probability (er)");
  gen->add_flag("--directed", gen_directed, "directed edges (er)");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("-o,--output", gen_output, "output path (.json or .txt)");
  gen->callback([&]() {
    netsel::Graph g = [&]() {
      if (gen_kind == "geometric") return netsel::geometric_graph(gen_n, gen_width, gen_radius, gen_seed);
      if (gen_kind == "er") return netsel::erdos_renyi(gen_n, gen_q, gen_seed, gen_directed);
      return netsel::named_graph(netsel::named_topology_from_string(gen_kind), gen_n);
    }();
    nlohmann::json j = netsel::graph_to_json(g);
    j["_meta"] = meta(gen_seed);
    if (gen_output.size() >= 4 && gen_output.substr(gen_output.size() - 4) == ".txt") {
      std::string text = "# invocation: " + g_invocation + "\n" + netsel::graph_to_edge_list(g);
      write_text(gen_output, text);
    } else {
      write_text(gen_output, j.dump(2) + "\n");
    }
    std::cout << "n=" << g.node_count() << " edges=" << g.edge_count()
              << " connected=" << (g.connected() ? 1 : 0)
              << " strongly_connected=" << (g.strongly_connected() ? 1 : 0) << "\n";
  });

  // ---- select -------------------------------------------------------------
  auto* sel = app.add_subcommand("select", "select input nodes");
  std::string sel_graph, sel_metric = "noise", sel_selector = "greedy", sel_output;
  int sel_k = -1;
  double sel_alpha = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t sel_seed = 1;
  bool sel_joint = false, sel_lazy = false;
  double sel_lambda = -1.0;
  int sel_jobs = 1;
  MetricFlags sel_flags;
  sel->add_option("--graph", sel_graph, "graph file")->required();
  sel->add_option("--metric", sel_metric,
                  "noise | convergence | kalman | ctrb-rank | gramian-h2 | gramian-energy | "
                  "min-energy | gci");
  sel->add_option("--selector", sel_selector,
                  "greedy | cover | matroid-greedy | max-degree | avg-degree | random | brute");
  sel->add_option("--k", sel_k, "input budget");
  sel->add_option("--alpha", sel_alpha, "cover target");
  sel->add_option("--seed", sel_seed, "rng seed (random baseline, stochastic metrics)");
  sel->add_flag("--joint", sel_joint, "augment the objective with lambda * GCI");
  sel->add_option("--lambda", sel_lambda, "GCI weight (default 10 x metric scale)");
  sel->add_flag("--lazy", sel_lazy, "lazy greedy accelerator");
  sel->add_option("--jobs", sel_jobs, "parallel candidate evaluations");
  sel->add_option("-o,--output", sel_output, "write SelectionResult JSON here");
  sel_flags.add_to(sel);
  sel->callback([&]() {
    const netsel::Graph g = netsel::load_graph(sel_graph);
    const netsel::MetricParams mp = sel_flags.params();
    netsel::SetFunction f = sel_joint
                                ? netsel::make_joint_metric(g, sel_metric, mp, sel_lambda)
                                : netsel::make_metric(sel_metric, g, mp);
    netsel::GreedyOptions opts;
    opts.lazy = sel_lazy;
    opts.jobs = sel_jobs;
    netsel::SelectionResult result;
    if (sel_selector == "greedy") {
      if (sel_k < 0) throw netsel::InvalidArgumentError("greedy needs --k");
      result = netsel::greedy_max(f, sel_k, opts);
    } else if (sel_selector == "cover") {
      if (std::isnan(sel_alpha)) throw netsel::InvalidArgumentError("cover needs --alpha");
      result = netsel::greedy_cover(f, sel_alpha, opts);
    } else if (sel_selector == "matroid-greedy") {
      if (sel_k < 0) throw netsel::InvalidArgumentError("matroid-greedy needs --k");
      netsel::SetFunction maxf =
          f.orientation == netsel::Orientation::minimize_supermodular ? netsel::shift_to_max(f) : f;
      auto matroid = netsel::controllability_matroid(g, sel_k);
      result = netsel::matroid_greedy(maxf, *matroid, opts);
    } else if (sel_selector == "brute") {
      if (sel_k >= 0) {
        result = netsel::brute_force_max(f, sel_k);
      } else if (!std::isnan(sel_alpha)) {
        result = netsel::brute_force_cover(f, sel_alpha);
      } else {
        throw netsel::InvalidArgumentError("brute needs --k or --alpha");
      }
    } else {
      const auto kind = netsel::baseline_kind_from_string(sel_selector);
      if (sel_k < 0) throw netsel::InvalidArgumentError("baseline selectors need --k");
      result.selected = netsel::baseline_select(g, sel_k, kind, sel_seed);
      result.objective = f.evaluate(result.selected);
      result.evaluations = 1;
    }
    result.seed = sel_seed;
    nlohmann::json j = netsel::to_json(result);
    j["metric"] = sel_metric;
    j["selector"] = sel_selector;
    j["controllable"] = netsel::structural_report(g, result.selected).controllable;
    j["_meta"] = meta(sel_seed);
    write_text(sel_output, j.dump(2) + "\n");
    if (!sel_output.empty() && sel_output != "-") {
      std::cout << "selected " << netsel::format_set(result.selected) << " objective "
                << result.objective << "\n";
    }
  });

  // ---- evaluate -----------------------------------------------------------
  auto* ev = app.add_subcommand("evaluate", "evaluate a metric at a given input set");
  std::string ev_graph, ev_metric = "noise", ev_set, ev_output;
  MetricFlags ev_flags;
  ev->add_option("--graph", ev_graph, "graph file")->required();
  ev->add_option("--metric", ev_metric, "metric name (see select)");
  ev->add_option("--set", ev_set, "comma-separated node ids")->required();
  ev->add_option("-o,--output", ev_output, "write JSON here");
  ev_flags.add_to(ev);
  ev->callback([&]() {
    const netsel::Graph g = netsel::load_graph(ev_graph);
    const netsel::SetFunction f = netsel::make_metric(ev_metric, g, ev_flags.params());
    const std::vector<int> s = netsel::normalize_node_set(g, parse_id_list(ev_set));
    nlohmann::json j;
    j["metric"] = ev_metric;
    j["set"] = s;
    j["value"] = f.evaluate(s);
    j["structural"] = netsel::to_json(netsel::structural_report(g, s));
    j["_meta"] = meta(0);
    write_text(ev_output, j.dump(2) + "\n");
  });

  // ---- simulate -----------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "simulate consensus trajectories");
  std::string sim_graph, sim_inputs, sim_values, sim_output = "trajectory.csv";
  double sim_dt = 0.01, sim_tend = 10.0, sim_noise = 0.0, sim_x0 = 0.0;
  std::uint64_t sim_seed = 1;
  int sim_stride = 1;
  sim->add_option("--graph", sim_graph, "graph file")->required();
  sim->add_option("--inputs", sim_inputs, "comma-separated input node ids")->required();
  sim->add_option("--values", sim_values, "comma-separated input values (default all 1)");
  sim->add_option("--x0", sim_x0, "initial follower state (constant)");
  sim->add_option("--dt", sim_dt, "step size");
  sim->add_option("--t-end", sim_tend, "end time");
  sim->add_option("--noise", sim_noise, "noise sigma (0 = deterministic propagator)");
  sim->add_option("--seed", sim_seed, "rng seed");
  sim->add_option("--stride", sim_stride, "store every n-th sample");
  sim->add_option("-o,--output", sim_output, "output CSV");
  sim->callback([&]() {
    const netsel::Graph g = netsel::load_graph(sim_graph);
    const std::vector<int> inputs = netsel::normalize_node_set(g, parse_id_list(sim_inputs));
    netsel::Vector values =
        netsel::Vector::Ones(static_cast<Eigen::Index>(inputs.size()));
    if (!sim_values.empty()) {
      const std::vector<int> dummy;
      std::vector<double> vals;
      std::string token;
      std::istringstream in(sim_values);
      while (std::getline(in, token, ',')) vals.push_back(std::stod(token));
      if (vals.size() != inputs.size()) {
        throw netsel::InvalidArgumentError("need one value per input node");
      }
      for (std::size_t i = 0; i < vals.size(); ++i) values(static_cast<Eigen::Index>(i)) = vals[i];
    }
    const netsel::Vector x0 = netsel::Vector::Constant(g.node_count(), sim_x0);
    const netsel::Trajectory traj =
        sim_noise > 0.0
            ? netsel::simulate_noisy_consensus(g, inputs, values, x0, sim_dt, sim_tend, sim_noise,
                                               sim_seed, sim_stride)
            : netsel::simulate_weighted_consensus(g, inputs, values, x0, sim_dt, sim_tend);
    write_text(sim_output, "# invocation: " + g_invocation + "\n# seed: " +
                               std::to_string(sim_seed) + "\n" + traj.to_csv());
  });

  // ---- experiment ----------------------------------------------------------
  auto* exp = app.add_subcommand("experiment", "run a batch experiment");
  std::string exp_config, exp_preset, exp_output;
  bool exp_full = false;
  int exp_n = -1, exp_trials = -1, exp_jobs = -1;
  std::uint64_t exp_seed = 0;
  bool exp_seed_set = false;
  exp->add_option("--config", exp_config, "experiment config JSON");
  exp->add_option("--preset", exp_preset, "robustness | convergence | controllability");
  exp->add_flag("--full", exp_full, "paper-scale preset sizes");
  exp->add_option("--n", exp_n, "override node count");
  exp->add_option("--trials", exp_trials, "override trial count");
  exp->add_option("--jobs", exp_jobs, "parallel trials");
  exp->add_option("--seed", exp_seed, "override master seed")->each([&](const std::string&) {
    exp_seed_set = true;
  });
  exp->add_option("-o,--output", exp_output, "rows CSV path (aggregates in <path>.agg.csv)");
  exp->callback([&]() {
    netsel::ExperimentConfig cfg;
    if (!exp_config.empty()) {
      std::ifstream in(exp_config);
      if (!in) throw netsel::Error("cannot open config: " + exp_config);
      nlohmann::json j;
      in >> j;
      cfg = netsel::experiment_config_from_json(j);
    } else if (exp_preset == "robustness") {
      cfg = netsel::preset_robustness(!exp_full);
    } else if (exp_preset == "convergence") {
      cfg = netsel::preset_convergence(!exp_full);
    } else if (exp_preset == "controllability") {
      cfg = netsel::preset_controllability();
    } else {
      throw netsel::InvalidArgumentError("experiment needs --config or a valid --preset");
    }
    if (exp_n > 0) cfg.graph.n = exp_n;
    if (exp_trials > 0) cfg.trials = exp_trials;
    if (exp_jobs > 0) cfg.jobs = exp_jobs;
    if (exp_seed_set) cfg.graph.master_seed = exp_seed;
    if (!exp_output.empty()) cfg.output = exp_output;
    const netsel::ExperimentResult res = netsel::run_experiment(cfg);
    const std::vector<std::string> inv{"# invocation: " + g_invocation};
    write_text(cfg.output, netsel::experiment_rows_csv(res, inv));
    write_text(cfg.output + ".agg.csv", netsel::experiment_aggregates_csv(res, inv));
    std::cout << "wrote " << res.rows.size() << " rows to " << cfg.output << "\n";
  });

  // ---- verify ---------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run a property suite");
  std::string ver_suite = "all";
  std::uint64_t ver_seed = 0xC0FFEE;
  int ver_count = -1;
  ver->add_option("suite", ver_suite, "submodularity | matroid | structural | montecarlo | bounds | all");
  ver->add_option("--seed", ver_seed, "suite seed");
  ver->add_option("--count", ver_count, "override instance/graph count");
  ver->callback([&]() {
    std::vector<netsel::SuiteReport> reports;
    if (ver_suite == "submodularity") {
      reports.push_back(netsel::verify_submodularity(ver_count > 0 ? ver_count : 200, 7, ver_seed));
    } else if (ver_suite == "matroid") {
      reports.push_back(netsel::verify_matroid(ver_count > 0 ? ver_count : 60, ver_seed));
    } else if (ver_suite == "structural") {
      reports.push_back(netsel::verify_structural(ver_count > 0 ? ver_count : 200, 5, ver_seed));
    } else if (ver_suite == "montecarlo") {
      reports.push_back(netsel::verify_montecarlo(ver_count > 0 ? ver_count : 20, 100000,
                                                  ver_count > 0 ? std::min(ver_count, 10) : 10, 5,
                                                  ver_seed));
    } else if (ver_suite == "bounds") {
      reports.push_back(netsel::verify_bounds(ver_count > 0 ? ver_count : 100, ver_seed));
    } else if (ver_suite == "all") {
      reports = netsel::verify_all(ver_seed);
    } else {
      throw netsel::InvalidArgumentError("unknown suite: " + ver_suite);
    }
    bool all_passed = true;
    for (const netsel::SuiteReport& r : reports) {
      std::cout << r.summary() << "\n";
      for (const std::string& f : r.failures) std::cout << "  counterexample: " << f << "\n";
      all_passed = all_passed && r.passed();
    }
    if (!all_passed) throw netsel::Error("verification failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  } catch (const netsel::InfeasibleTargetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const netsel::SingularLaplacianError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSingular;
  } catch (const netsel::InstanceTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const netsel::InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const netsel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
