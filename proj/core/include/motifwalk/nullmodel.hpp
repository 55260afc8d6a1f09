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


#ifndef MOTIFWALK_NULLMODEL_HPP_
#define MOTIFWALK_NULLMODEL_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motifwalk/class_registry.hpp"
#include "motifwalk/estimators.hpp"
#include "motifwalk/graph.hpp"
#include "motifwalk/query_oracle.hpp"
#include "motifwalk/walkers.hpp"

namespace motifwalk {

/// (in, out) degrees. Undirected and signed nodes use in = out = degree.
struct DegreePair {
  std::uint32_t in = 0;
  std::uint32_t out = 0;

  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

struct JointDegreeDistribution {
  GraphMode mode = GraphMode::kUndirected;
  std::map<DegreePair, double> mass;
  std::size_t node_count_estimate = 0;
  std::uint64_t samples = 0;
  bool truncated = false;
};

DegreePair degree_pair(const LabeledGraph& g, NodeId v);
std::vector<DegreePair> degree_sequence(const LabeledGraph& g);
JointDegreeDistribution exact_joint_degree_dist(const LabeledGraph& g);

/// Simple random walk over nodes; each visit is weighted by 1/degree.
/// Stops early (flagged) when the oracle budget runs out.
JointDegreeDistribution estimate_joint_degree_dist(QueryOracle& oracle, std::uint64_t steps,
                                                   std::uint64_t seed);

double l1_distance(const JointDegreeDistribution& a, const JointDegreeDistribution& b);

/// Draws n pairs from φ, then rebalances stubs (Σin = Σout, or an even degree
/// sum) by redrawing the last node, and the whole sequence if that fails.
std::vector<DegreePair> sample_degree_sequence(const JointDegreeDistribution& phi, std::size_t n,
                                               Rng& rng);

struct ConfigurationOptions {
  int max_retries = 100;  // per stub pick
  int max_restarts = 50;
  /// Signed mode: probability that an edge is positive.
  double positive_fraction = 1.0;
};

/// Stub wiring: each in-stub is matched with a random out-stub, redrawing
/// the out-stub on self-loops and repeated arcs. Throws GraphError when the
/// restart cap is hit or the stubs do not balance.
LabeledGraph generate_configuration_graph(GraphMode mode, std::span<const DegreePair> sequence,
                                          std::uint64_t seed,
                                          const ConfigurationOptions& options = {});

/// Fraction of positive edges; 1 outside signed mode.
double positive_fraction(const LabeledGraph& g);

/// Where null-graph degrees come from: a fixed sequence or draws from φ.
struct NullSource {
  GraphMode mode = GraphMode::kUndirected;
  std::vector<DegreePair> sequence;
  std::optional<JointDegreeDistribution> phi;
  std::size_t node_count = 0;
  double positive_fraction = 1.0;

  static NullSource from_graph(const LabeledGraph& g);
  static NullSource from_distribution(const JointDegreeDistribution& phi, std::size_t n,
                                      double positive_fraction = 1.0);
};

struct NullOptions {
  std::size_t n_random = 100;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  /// Exact enumeration while a null graph has at most this many k-node CISes.
  std::uint64_t exact_guard = 2'000'000;
  /// PSRW walk length otherwise.
  std::uint64_t psrw_steps = 20'000;
  ConfigurationOptions configuration;
};

struct NullStats {
  int k = 0;
  GraphMode mode = GraphMode::kUndirected;
  std::vector<double> mu;
  std::vector<double> sigma;  // n - 1 denominator
  std::size_t n_random = 0;
  std::size_t exact_graphs = 0;
  std::size_t sampled_graphs = 0;
  std::vector<ConcentrationVector> per_graph;

  /// "exact", "psrw" or "exact+psrw".
  std::string method() const;
};

NullStats compute_null_stats(const NullSource& source,
                             const std::shared_ptr<const ClassRegistry>& registry,
                             const NullOptions& options);

struct ZScoreRow {
  ClassId id = 0;
  double omega = 0.0;
  double mu = 0.0;
  double sigma = 0.0;
  /// Absent when sigma is zero.
  std::optional<double> z;
};

struct ZScoreReport {
  std::vector<ZScoreRow> rows;
  std::string method;
  std::size_t n_random = 0;
};

ZScoreReport z_scores(const ConcentrationVector& estimate, const NullStats& stats);

}  // namespace motifwalk

#endif  // MOTIFWALK_NULLMODEL_HPP_
