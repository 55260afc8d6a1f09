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


#ifndef MOTIFWALK_QUERY_ORACLE_HPP_
#define MOTIFWALK_QUERY_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "motifwalk/graph.hpp"

namespace motifwalk {

/// Limits on a crawl. Unset limits are unbounded.
struct QueryBudget {
  std::optional<std::uint64_t> limit_nodes;  // distinct nodes (B*)
  std::optional<double> limit_ms;            // simulated milliseconds (T)
};

struct LatencyModel {
  double per_query_ms = 0.0;
  double per_step_compute_ms = 0.0;
};

struct OracleStats {
  std::uint64_t distinct_queried = 0;
  double simulated_elapsed_ms = 0.0;
  std::uint64_t cache_hits = 0;
  std::uint64_t steps = 0;

  friend bool operator==(const OracleStats&, const OracleStats&) = default;
};

/// What a single query reveals: the node's full incident edge set.
struct NodeView {
  NodeId node = 0;
  std::span<const Neighbor> incident;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Crawl-style access to a graph. The first query of a node costs one unit of
/// the node budget and `per_query_ms` of simulated time; repeats are served
/// from the cache for free. One oracle per walker chain.
class QueryOracle {
 public:
  explicit QueryOracle(const LabeledGraph& graph, QueryBudget budget = {},
                       LatencyModel latency = {});

  /// Throws BudgetExhausted if `v` is uncached and the budget cannot pay
  /// for it. Throws std::out_of_range for invalid ids.
  NodeView query(NodeId v);

  /// Accounts one walk step of simulated compute time.
  void charge_step();

  bool is_cached(NodeId v) const { return v < cached_.size() && cached_[v]; }
  OracleStats stats() const { return stats_; }
  const QueryBudget& budget() const { return budget_; }
  const LabeledGraph& graph() const { return *graph_; }
  std::size_t node_count() const { return graph_->node_count(); }
  GraphMode mode() const { return graph_->mode(); }

  /// When enabled, every query() call (hits included) is appended to the log.
  void enable_query_log(bool on) { log_enabled_ = on; }
  std::span<const NodeId> query_log() const { return log_; }
  /// Distinct nodes in first-query order.
  std::span<const NodeId> first_query_order() const { return first_order_; }

 private:
  const LabeledGraph* graph_;
  QueryBudget budget_;
  LatencyModel latency_;
  OracleStats stats_;
  std::vector<bool> cached_;
  std::vector<NodeId> first_order_;
  std::vector<NodeId> log_;
  bool log_enabled_ = false;
};

}  // namespace motifwalk

#endif  // MOTIFWALK_QUERY_ORACLE_HPP_
