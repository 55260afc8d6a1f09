// Copyright 2026 The motifwalk Authors
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


#ifndef MOTIFWALK_APP_APP_HPP_
#define MOTIFWALK_APP_APP_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "motifwalk/graph.hpp"

namespace motifwalk::app {

/// Everything one command needs; serialized into manifest.json.
struct ExperimentConfig {
  std::string command;
  /// Edge-list path, or "fixture:<name>" for a built-in graph.
  std::string graph;
  GraphMode mode = GraphMode::kUndirected;
  std::vector<std::string> methods;
  int k = 3;
  /// Walk steps B; derived from B* or T when unset.
  std::optional<std::uint64_t> steps;
  /// Distinct-node budget B*.
  std::optional<std::uint64_t> budget_nodes;
  /// Simulated-time budget T.
  std::optional<double> budget_ms;
  double query_delay_ms = 0.0;
  double step_compute_ms = 0.0;
  std::size_t runs = 200;
  std::uint64_t seed = 1;
  std::uint64_t burn_in = 0;
  std::filesystem::path out;
  std::vector<std::filesystem::path> truth;
  std::size_t threads = 1;
  bool lazy = false;
  std::vector<double> esu_probs;
  std::optional<std::uint64_t> max_cises;
  /// compare: 3/4/5-size joint mode.
  bool joint = false;
  /// compare: equalize walk steps instead of B*.
  bool step_equalized = false;
  /// zscore: degrees from a random-walk estimate of φ ("sampled") or the
  /// graph's own sequence ("exact").
  std::string null_source = "sampled";
  std::size_t n_random = 100;
  std::uint64_t jdd_steps = 100000;
};

nlohmann::ordered_json to_json(const ExperimentConfig& config);

/// Loads cfg.graph (edge list or fixture) and keeps its largest connected component.
LabeledGraph load_graph(const ExperimentConfig& cfg);

int cmd_enumerate(const ExperimentConfig& cfg, std::ostream& out);
int cmd_sample(const ExperimentConfig& cfg, std::ostream& out);
int cmd_compare(const ExperimentConfig& cfg, std::ostream& out);
int cmd_zscore(const ExperimentConfig& cfg, std::ostream& out);
int cmd_fixture(const ExperimentConfig& cfg, const std::string& name, std::ostream& out);
int cmd_classes(const ExperimentConfig& cfg, bool drawings, std::ostream& out);

/// Parses argv and dispatches. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motifwalk::app

#endif  // MOTIFWALK_APP_APP_HPP_
