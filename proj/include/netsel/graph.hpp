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
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "netsel/errors.hpp"
#include "netsel/numerics.hpp"
#include "netsel/rng.hpp"

namespace netsel {

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 1.0;
};

/// Weighted graph over dense node ids 0..n-1. Immutable once built (add_edge
/// is for construction only); no self-loops, no duplicate edges, nonzero
/// weights. Undirected graphs store each edge once and expose symmetric
/// adjacency.
class Graph {
 public:
  Graph(int n, bool directed) : n_(n), directed_(directed), in_adj_(n), out_adj_(n) {
    if (n < 0) throw InvalidArgumentError("Graph: negative node count");
  }

  static Graph from_edges(int n, bool directed, const std::vector<Edge>& edges) {
    Graph g(n, directed);
    for (const Edge& e : edges) g.add_edge(e.src, e.dst, e.weight);
    return g;
  }

  void add_edge(int src, int dst, double weight = 1.0) {
    check_node(src);
    check_node(dst);
    if (src == dst) throw InvalidArgumentError("Graph: self-loops are not allowed");
    if (weight == 0.0) throw InvalidArgumentError("Graph: edge weights must be nonzero");
    if (has_edge(src, dst)) throw InvalidArgumentError("Graph: duplicate edge");
    edge_keys_.insert(key(src, dst));
    edges_.push_back({src, dst, weight});
    out_adj_[src].push_back({dst, weight});
    in_adj_[dst].push_back({src, weight});
    if (!directed_) {
      edge_keys_.insert(key(dst, src));
      out_adj_[dst].push_back({src, weight});
      in_adj_[src].push_back({dst, weight});
    }
  }

  int node_count() const { return n_; }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int src, int dst) const { return edge_keys_.count(key(src, dst)) > 0; }

  /// In-neighbors (j, w) with an edge j -> i; for undirected graphs this is
  /// the full neighbor set.
  const std::vector<std::pair<int, double>>& in_neighbors(int i) const {
    check_node(i);
    return in_adj_[i];
  }

  const std::vector<std::pair<int, double>>& out_neighbors(int i) const {
    check_node(i);
    return out_adj_[i];
  }

  double weighted_in_degree(int i) const {
    double d = 0.0;
    for (const auto& [j, w] : in_neighbors(i)) {
      (void)j;
      d += w;
    }
    return d;
  }

  /// Undirected degree; in-degree plus out-degree for directed graphs.
  int degree(int i) const {
    check_node(i);
    if (directed_) return static_cast<int>(in_adj_[i].size() + out_adj_[i].size());
    return static_cast<int>(in_adj_[i].size());
  }

  /// Weak connectivity (ignoring edge directions).
  bool connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      auto visit = [&](int u) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          frontier.push(u);
        }
      };
      for (const auto& [u, w] : out_adj_[v]) {
        (void)w;
        visit(u);
      }
      for (const auto& [u, w] : in_adj_[v]) {
        (void)w;
        visit(u);
      }
    }
    return reached == n_;
  }

  bool strongly_connected() const {
    if (!directed_) return connected();
    if (n_ <= 1) return true;
    return full_reach(/*forward=*/true) && full_reach(/*forward=*/false);
  }

 private:
  void check_node(int i) const {
    if (i < 0 || i >= n_) {
      throw InvalidArgumentError("Graph: unknown node id " + std::to_string(i));
    }
  }

  std::uint64_t key(int src, int dst) const {
    return static_cast<std::uint64_t>(src) * static_cast<std::uint64_t>(n_) +
           static_cast<std::uint64_t>(dst);
  }

  bool full_reach(bool forward) const {
    std::vector<char> seen(n_, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      const auto& adj = forward ? out_adj_[v] : in_adj_[v];
      for (const auto& [u, w] : adj) {
        (void)w;
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          frontier.push(u);
        }
      }
    }
    return reached == n_;
  }

  int n_;
  bool directed_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> in_adj_, out_adj_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

/// Normalizes a node set: sorted, unique, all ids valid.
inline std::vector<int> normalize_node_set(const Graph& g, std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s) {
    if (v < 0 || v >= g.node_count()) {
      throw InvalidArgumentError("unknown node id " + std::to_string(v) + " in node set");
    }
  }
  return s;
}

/// Full Laplacian with in-neighbor sums: L_ii = weighted in-degree,
/// L_ij = -W_ij for each in-neighbor j of i. For unweighted undirected graphs
/// this is the standard degree-minus-adjacency Laplacian.
inline Matrix laplacian(const Graph& g) {
  const int n = g.node_count();
  Matrix l = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, w] : g.in_neighbors(i)) {
      l(i, j) -= w;
      l(i, i) += w;
    }
  }
  return l;
}

/// Full-size Laplacian with input rows zeroed, so that the input nodes act as
/// absorbing states of the induced diffusion.
inline Matrix absorbing_laplacian(const Graph& g, const std::vector<int>& s) {
  Matrix l = laplacian(g);
  for (int v : normalize_node_set(g, s)) l.row(v).setZero();
  return l;
}

/// The follower/input partition of the grounded Laplacian: l_ff over
/// followers, l_fl coupling followers to inputs.
struct GroundedLaplacian {
  std::vector<int> input_set;  // sorted
  std::vector<int> followers;  // sorted; row/col i of l_ff is followers[i]
  Matrix l_ff;
  Matrix l_fl;

  int follower_index(int node) const {
    auto it = std::lower_bound(followers.begin(), followers.end(), node);
    if (it == followers.end() || *it != node) return -1;
    return static_cast<int>(it - followers.begin());
  }
};

inline GroundedLaplacian grounded_laplacian(const Graph& g, const std::vector<int>& s_in) {
  GroundedLaplacian out;
  out.input_set = normalize_node_set(g, s_in);
  const int n = g.node_count();
  std::vector<char> is_input(n, 0);
  for (int v : out.input_set) is_input[v] = 1;
  std::vector<int> col_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!is_input[v]) {
      col_of[v] = static_cast<int>(out.followers.size());
      out.followers.push_back(v);
    }
  }
  std::vector<int> input_col(n, -1);
  for (std::size_t i = 0; i < out.input_set.size(); ++i) input_col[out.input_set[i]] = static_cast<int>(i);

  const int nf = static_cast<int>(out.followers.size());
  const int nl = static_cast<int>(out.input_set.size());
  out.l_ff = Matrix::Zero(nf, nf);
  out.l_fl = Matrix::Zero(nf, nl);
  for (int r = 0; r < nf; ++r) {
    const int i = out.followers[r];
    for (const auto& [j, w] : g.in_neighbors(i)) {
      out.l_ff(r, r) += w;
      if (is_input[j]) {
        out.l_fl(r, input_col[j]) -= w;
      } else {
        out.l_ff(r, col_of[j]) -= w;
      }
    }
  }
  return out;
}

/// Random geometric graph: n points uniform over a width x width square,
/// undirected edge when the Euclidean distance is at most radius.
inline Graph geometric_graph(int n, double width, double radius, std::uint64_t seed) {
  if (n < 1) throw InvalidArgumentError("geometric_graph: n must be at least 1");
  if (!(width > 0.0) || !(radius > 0.0)) {
    throw InvalidArgumentError("geometric_graph: width and radius must be positive");
  }
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.uniform(0.0, width);
    y[i] = rng.uniform(0.0, width);
  }
  Graph g(n, /*directed=*/false);
  const double r2 = radius * radius;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx * dx + dy * dy <= r2) g.add_edge(i, j);
    }
  }
  return g;
}

/// Erdos-Renyi graph: each (un)ordered pair is an edge independently with
/// probability q.
inline Graph erdos_renyi(int n, double q, std::uint64_t seed, bool directed = false) {
  if (n < 0) throw InvalidArgumentError("erdos_renyi: negative node count");
  if (q < 0.0 || q > 1.0) throw InvalidArgumentError("erdos_renyi: q must be in [0, 1]");
  Rng rng(seed);
  Graph g(n, directed);
  if (directed) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && rng.bernoulli(q)) g.add_edge(i, j);
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng.bernoulli(q)) g.add_edge(i, j);
      }
    }
  }
  return g;
}

enum class NamedTopology { ring, path, star };

inline Graph named_graph(NamedTopology kind, int n) {
  if (n < 1) throw InvalidArgumentError("named_graph: n must be at least 1");
  Graph g(n, /*directed=*/false);
  switch (kind) {
    case NamedTopology::ring:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      if (n >= 3) g.add_edge(n - 1, 0);
      break;
    case NamedTopology::path:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case NamedTopology::star:
      for (int i = 1; i < n; ++i) g.add_edge(0, i);
      break;
  }
  return g;
}

inline NamedTopology named_topology_from_string(const std::string& s) {
  if (s == "ring") return NamedTopology::ring;
  if (s == "path") return NamedTopology::path;
  if (s == "star") return NamedTopology::star;
  throw InvalidArgumentError("unknown topology kind: " + s);
}

enum class TopologyMode { average, worst_case, sampled };

/// A finite family of topologies over a common node set.
struct TopologySet {
  std::vector<Graph> topologies;
  TopologyMode mode = TopologyMode::average;
  std::vector<double> weights;  // sampled mode only; nonnegative, sums to 1

  void validate() const {
    if (topologies.empty()) throw InvalidArgumentError("TopologySet: empty topology list");
    const int n = topologies.front().node_count();
    for (const Graph& g : topologies) {
      if (g.node_count() != n) {
        throw InvalidArgumentError("TopologySet: member graphs must share the node set");
      }
    }
    if (mode == TopologyMode::sampled) {
      if (weights.size() != topologies.size()) {
        throw InvalidArgumentError("TopologySet: sampled mode needs one weight per topology");
      }
      double total = 0.0;
      for (double w : weights) {
        if (w < 0.0) throw InvalidArgumentError("TopologySet: weights must be nonnegative");
        total += w;
      }
      if (std::abs(total - 1.0) > 1e-9) {
        throw InvalidArgumentError("TopologySet: weights must sum to 1");
      }
    }
  }
};

}  // namespace netsel
