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

#include <string>

#include <json.hpp>

#include "netsel/controllability.hpp"
#include "netsel/optimize.hpp"

namespace netsel {

inline nlohmann::json to_json(const BoundCertificate& b) {
  nlohmann::json j;
  j["type"] = to_string(b.type);
  j["value"] = b.value;
  if (b.shifted) {
    j["shifted"] = true;
    j["shift_baseline"] = b.shift_baseline;
  }
  if (b.baseline_is_first_pick) {
    j["baseline_is_first_pick"] = true;
    j["baseline"] = b.shift_baseline;
  }
  return j;
}

inline nlohmann::json to_json(const SelectionResult& r) {
  nlohmann::json j;
  j["selected"] = r.selected;
  auto trace = nlohmann::json::array();
  for (const SelectionStep& s : r.trace) {
    trace.push_back({{"element", s.element}, {"objective", s.objective}});
  }
  j["trace"] = std::move(trace);
  j["bound"] = to_json(r.bound);
  j["objective"] = r.objective;
  j["seed"] = r.seed;
  j["evaluations"] = r.evaluations;
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

inline nlohmann::json to_json(const StructuralReport& rep) {
  nlohmann::json j;
  j["accessible"] = rep.accessible;
  j["inaccessible"] = rep.inaccessible;
  j["dilation_free"] = rep.dilation_free;
  j["dilation_witness"] = rep.dilation_witness;
  j["controllable"] = rep.controllable;
  auto matching = nlohmann::json::array();
  for (const auto& [u, z] : rep.max_matching) {
    matching.push_back(nlohmann::json::array({u, z}));
  }
  j["max_matching"] = std::move(matching);
  j["gci"] = rep.gci;
  return j;
}

}  // namespace netsel
