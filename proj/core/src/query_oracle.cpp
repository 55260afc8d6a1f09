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


#include "motifwalk/query_oracle.hpp"

#include <fmt/format.h>

namespace motifwalk {

QueryOracle::QueryOracle(const LabeledGraph& graph, QueryBudget budget, LatencyModel latency)
    : graph_(&graph), budget_(budget), latency_(latency), cached_(graph.node_count(), false) {
  if (latency_.per_query_ms < 0 || latency_.per_step_compute_ms < 0) {
    throw std::invalid_argument("latencies must be non-negative");
  }
}

NodeView QueryOracle::query(NodeId v) {
  if (v >= cached_.size()) {
    throw std::out_of_range(fmt::format("query of node {} outside graph", v));
  }
  if (log_enabled_) log_.push_back(v);
  if (cached_[v]) {
    ++stats_.cache_hits;
    return {v, graph_->neighbors(v)};
  }
  if (budget_.limit_nodes && stats_.distinct_queried >= *budget_.limit_nodes) {
    throw BudgetExhausted(
        fmt::format("node budget of {} distinct queries exhausted", *budget_.limit_nodes));
  }
  const double elapsed = stats_.simulated_elapsed_ms + latency_.per_query_ms;
  if (budget_.limit_ms && elapsed > *budget_.limit_ms) {
    throw BudgetExhausted(fmt::format("time budget of {} ms exhausted", *budget_.limit_ms));
  }
  stats_.simulated_elapsed_ms = elapsed;
  ++stats_.distinct_queried;
  cached_[v] = true;
  first_order_.push_back(v);
  return {v, graph_->neighbors(v)};
}

void QueryOracle::charge_step() {
  const double elapsed = stats_.simulated_elapsed_ms + latency_.per_step_compute_ms;
  if (budget_.limit_ms && elapsed > *budget_.limit_ms) {
    throw BudgetExhausted(fmt::format("time budget of {} ms exhausted", *budget_.limit_ms));
  }
  stats_.simulated_elapsed_ms = elapsed;
  ++stats_.steps;
}

}  // namespace motifwalk
