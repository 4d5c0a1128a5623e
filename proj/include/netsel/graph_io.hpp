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

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "netsel/graph.hpp"

namespace netsel {

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.node_count();
  j["directed"] = g.directed();
  auto edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(nlohmann::json::array({e.src, e.dst, e.weight}));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("edges")) {
    throw InvalidArgumentError("graph JSON needs fields \"n\" and \"edges\"");
  }
  Graph g(j.at("n").get<int>(), j.value("directed", false));
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3) {
      throw InvalidArgumentError("graph JSON edge entries must be [i, j] or [i, j, w]");
    }
    const double w = e.size() == 3 ? e.at(2).get<double>() : 1.0;
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), w);
  }
  return g;
}

/// Whitespace-delimited edge list, one "i j [w]" per line. Header comments
/// "# n <count>" and "# directed <0|1>" preserve node count and directedness
/// on round-trip; other "#" lines are ignored.
inline std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.node_count() << "\n";
  out << "# directed " << (g.directed() ? 1 : 0) << "\n";
  out.precision(17);
  for (const Edge& e : g.edges()) {
    out << e.src << " " << e.dst;
    if (e.weight != 1.0) out << " " << e.weight;
    out << "\n";
  }
  return out.str();
}

inline Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  bool directed = false;
  std::vector<Edge> edges;
  int max_id = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "#") {
      std::string tag;
      if (ls >> tag) {
        if (tag == "n") ls >> n;
        if (tag == "directed") {
          int d = 0;
          ls >> d;
          directed = d != 0;
        }
      }
      continue;
    }
    Edge e;
    e.src = std::stoi(first);
    if (!(ls >> e.dst)) throw InvalidArgumentError("edge list line needs at least two ids: " + line);
    if (!(ls >> e.weight)) e.weight = 1.0;
    max_id = std::max({max_id, e.src, e.dst});
    edges.push_back(e);
  }
  if (n < 0) n = max_id + 1;
  return Graph::from_edges(n, directed, edges);
}

inline void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".txt") {
    out << graph_to_edge_list(g);
  } else {
    out << graph_to_json(g).dump(2) << "\n";
  }
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return graph_from_json(nlohmann::json::parse(text));
    break;
  }
  return graph_from_edge_list(text);
}

}  // namespace netsel
