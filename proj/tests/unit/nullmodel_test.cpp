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


#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "motifwalk/enumeration.hpp"
#include "motifwalk/fixtures.hpp"
#include "motifwalk/nullmodel.hpp"

namespace motifwalk {
namespace {

std::vector<DegreePair> sorted(std::vector<DegreePair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(DegreePairs, Modes) {
  const LabeledGraph u = fixtures::star(3);
  EXPECT_EQ(degree_pair(u, 0), (DegreePair{3, 3}));
  const std::vector<Arc> arcs{{0, 1}, {1, 0}, {0, 2}, {3, 0}};
  const LabeledGraph d = LabeledGraph::from_arcs(GraphMode::kDirected, 4, arcs);
  EXPECT_EQ(degree_pair(d, 0), (DegreePair{2, 2}));
  EXPECT_EQ(degree_pair(d, 2), (DegreePair{1, 0}));
  EXPECT_EQ(degree_pair(d, 3), (DegreePair{0, 1}));
}

TEST(JointDegreeDist, ExactSumsToOne) {
  const LabeledGraph g = fixtures::fig1();
  const JointDegreeDistribution phi = exact_joint_degree_dist(g);
  double total = 0.0;
  for (const auto& [pair, m] : phi.mass) total += m;
  EXPECT_DOUBLE_EQ(total, 1.0);
  EXPECT_DOUBLE_EQ(phi.mass.at({3, 3}), 0.6);
  EXPECT_DOUBLE_EQ(phi.mass.at({4, 4}), 0.2);
  EXPECT_DOUBLE_EQ(phi.mass.at({1, 1}), 0.2);
  EXPECT_DOUBLE_EQ(l1_distance(phi, phi), 0.0);
}

TEST(JointDegreeDist, RandomWalkEstimateConverges) {
  for (const GraphMode mode : {GraphMode::kUndirected, GraphMode::kDirected}) {
    const LabeledGraph g = fixtures::random_connected(400, 0.01, 9, mode);
    QueryOracle oracle(g);
    const JointDegreeDistribution est = estimate_joint_degree_dist(oracle, 100000, 3);
    EXPECT_FALSE(est.truncated);
    EXPECT_LT(l1_distance(est, exact_joint_degree_dist(g)), 0.05) << to_string(mode);
  }
}

TEST(JointDegreeDist, BudgetTruncates) {
  const LabeledGraph g = fixtures::random_connected(400, 0.01, 9);
  QueryOracle oracle(g, QueryBudget{30, std::nullopt});
  const JointDegreeDistribution est = estimate_joint_degree_dist(oracle, 100000, 3);
  EXPECT_TRUE(est.truncated);
  EXPECT_GT(est.samples, 0U);
}

TEST(SampleDegreeSequence, Balanced) {
  Rng rng(5);
  for (const GraphMode mode : {GraphMode::kUndirected, GraphMode::kDirected}) {
    const JointDegreeDistribution phi = exact_joint_degree_dist(fixtures::random_connected(200, 0.02, 4, mode));
    for (int trial = 0; trial < 50; ++trial) {
      const auto seq = sample_degree_sequence(phi, 150, rng);
      ASSERT_EQ(seq.size(), 150U);
      std::uint64_t in = 0;
      std::uint64_t out = 0;
      for (const DegreePair& p : seq) {
        in += p.in;
        out += p.out;
        EXPECT_TRUE(phi.mass.count(p));
      }
      if (mode == GraphMode::kDirected) {
        EXPECT_EQ(in, out);
      } else {
        EXPECT_EQ(in % 2, 0U);
      }
    }
  }
}

TEST(Configuration, PreservesSequenceWithoutLoopsOrMultiEdges) {
  for (const GraphMode mode : {GraphMode::kUndirected, GraphMode::kDirected, GraphMode::kSigned}) {
    const LabeledGraph source = fixtures::random_connected(40, 0.08, 2, mode);
    const std::vector<DegreePair> seq = degree_sequence(source);
    ConfigurationOptions opts;
    opts.positive_fraction = 0.7;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      const LabeledGraph g = generate_configuration_graph(mode, seq, seed, opts);
      ASSERT_EQ(degree_sequence(g), seq) << to_string(mode) << " seed " << seed;
      for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_FALSE(g.has_edge(v, v).has_value());
    }
  }
}

TEST(Configuration, SignedFraction) {
  const LabeledGraph source = fixtures::random_connected(300, 0.02, 2, GraphMode::kSigned);
  ConfigurationOptions opts;
  opts.positive_fraction = positive_fraction(source);
  EXPECT_NEAR(opts.positive_fraction, 0.75, 0.05);
  const LabeledGraph g = generate_configuration_graph(GraphMode::kSigned, degree_sequence(source), 3, opts);
  EXPECT_NEAR(positive_fraction(g), opts.positive_fraction, 0.05);
}

TEST(Configuration, ImpossibleSequencesFail) {
  const std::vector<DegreePair> odd{{1, 1}, {1, 1}, {1, 1}};
  EXPECT_THROW(generate_configuration_graph(GraphMode::kUndirected, odd, 1), GraphError);
  const std::vector<DegreePair> dense{{3, 3}, {3, 3}, {1, 1}, {1, 1}};
  EXPECT_THROW(generate_configuration_graph(GraphMode::kUndirected, dense, 1), GraphError);
  const std::vector<DegreePair> unbalanced{{1, 0}, {1, 0}, {0, 1}};
  EXPECT_THROW(generate_configuration_graph(GraphMode::kDirected, unbalanced, 1), GraphError);
}

TEST(ZScores, EqualToMeanGivesZero) {
  NullStats stats;
  stats.k = 3;
  stats.mu = {0.7, 0.3};
  stats.sigma = {0.1, 0.0};
  stats.n_random = 10;
  stats.exact_graphs = 10;
  ConcentrationVector est;
  est.k = 3;
  est.values = {0.7, 0.4};
  est.observed = {true, true};
  const ZScoreReport r = z_scores(est, stats);
  ASSERT_EQ(r.rows.size(), 2U);
  EXPECT_DOUBLE_EQ(*r.rows[0].z, 0.0);
  EXPECT_FALSE(r.rows[1].z.has_value());
  est.values = {0.9, 0.3};
  EXPECT_NEAR(*z_scores(est, stats).rows[0].z, 2.0, 1e-12);
}

TEST(NullStats, ExactPathAndSpread) {
  const LabeledGraph g = fixtures::random_connected(30, 0.1, 6);
  const auto reg = ClassRegistry::built_in(3, GraphMode::kUndirected);
  NullOptions opts;
  opts.n_random = 40;
  opts.seed = 9;
  const NullStats stats = compute_null_stats(NullSource::from_graph(g), reg, opts);
  EXPECT_EQ(stats.method(), "exact");
  EXPECT_EQ(stats.per_graph.size(), 40U);
  double mean = 0.0;
  for (const ConcentrationVector& c : stats.per_graph) mean += c.at(2);
  mean /= 40.0;
  EXPECT_NEAR(stats.mu[1], mean, 1e-12);
  double var = 0.0;
  for (const ConcentrationVector& c : stats.per_graph) var += (c.at(2) - mean) * (c.at(2) - mean);
  EXPECT_NEAR(stats.sigma[1], std::sqrt(var / 39.0), 1e-12);
  EXPECT_NEAR(stats.mu[0] + stats.mu[1], 1.0, 1e-12);

  NullOptions threaded = opts;
  threaded.threads = 3;
  const NullStats again = compute_null_stats(NullSource::from_graph(g), reg, threaded);
  EXPECT_EQ(again.mu, stats.mu);
}

TEST(NullStats, SampledPath) {
  const LabeledGraph g = fixtures::random_connected(80, 0.05, 6);
  const auto reg = ClassRegistry::built_in(3, GraphMode::kUndirected);
  NullOptions opts;
  opts.n_random = 6;
  opts.exact_guard = 10;
  opts.psrw_steps = 3000;
  const NullStats stats = compute_null_stats(NullSource::from_graph(g), reg, opts);
  EXPECT_EQ(stats.method(), "psrw");
  EXPECT_EQ(stats.sampled_graphs, 6U);
}

TEST(NullStats, DistributionSource) {
  const LabeledGraph g = fixtures::random_connected(200, 0.02, 6, GraphMode::kDirected);
  const auto reg = ClassRegistry::built_in(3, GraphMode::kDirected);
  NullOptions opts;
  opts.n_random = 8;
  const NullStats stats =
      compute_null_stats(NullSource::from_distribution(exact_joint_degree_dist(g), 120), reg, opts);
  EXPECT_EQ(stats.per_graph.size(), 8U);
  EXPECT_NEAR(std::accumulate(stats.mu.begin(), stats.mu.end(), 0.0), 1.0, 1e-9);
}

// The spread of the null mean shrinks as more random graphs are drawn.
TEST(NullStats, MeanStabilizesWithMoreGraphs) {
  const LabeledGraph g = fixtures::random_connected(30, 0.1, 6);
  const auto reg = ClassRegistry::built_in(3, GraphMode::kUndirected);
  auto spread = [&](std::size_t n_random) {
    std::vector<double> means;
    for (std::uint64_t rep = 0; rep < 12; ++rep) {
      NullOptions opts;
      opts.n_random = n_random;
      opts.seed = 100 + rep;
      means.push_back(compute_null_stats(NullSource::from_graph(g), reg, opts).mu[1]);
    }
    const double m = std::accumulate(means.begin(), means.end(), 0.0) / 12.0;
    double v = 0.0;
    for (const double x : means) v += (x - m) * (x - m);
    return std::sqrt(v / 11.0);
  };
  EXPECT_LT(spread(80), spread(5));
}

}  // namespace
}  // namespace motifwalk
