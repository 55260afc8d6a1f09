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


#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "motifwalk/enumeration.hpp"
#include "motifwalk/estimators.hpp"
#include "motifwalk/fixtures.hpp"

namespace motifwalk {
namespace {

std::shared_ptr<const ClassRegistry> reg3() { return ClassRegistry::built_in(3, GraphMode::kUndirected); }

// Class 1 is the 3-path, class 2 the triangle.
Cis path3() { return induced_cis(fixtures::path(3), std::vector<NodeId>{0, 1, 2}); }
Cis triangle() { return induced_cis(fixtures::complete(3), std::vector<NodeId>{0, 1, 2}); }

ConcentrationVector vec(std::vector<double> v) {
  ConcentrationVector c;
  c.k = 3;
  c.values = std::move(v);
  c.observed.assign(c.values.size(), true);
  return c;
}

TEST(HtNode, HandArithmetic) {
  WalkTrace t;
  t.samples = {{path3(), 1, 1}, {triangle(), 2, 3}};
  const ConcentrationVector w = ht_node_estimate(t, *reg3());
  ASSERT_EQ(w.size(), 2U);
  EXPECT_DOUBLE_EQ(w.at(1), 0.75);
  EXPECT_DOUBLE_EQ(w.at(2), 0.25);
  EXPECT_EQ(w.total_samples_used, 2U);
}

TEST(HtNode, SelfNormalizedAndScaleFree) {
  WalkTrace a;
  WalkTrace b;
  for (std::uint32_t d = 1; d < 20; ++d) {
    const bool tri = d % 3 == 0;
    a.samples.push_back({tri ? triangle() : path3(), tri ? 2U : 1U, d});
    b.samples.push_back({tri ? triangle() : path3(), tri ? 2U : 1U, 5 * d});
  }
  const ConcentrationVector wa = ht_node_estimate(a, *reg3());
  const ConcentrationVector wb = ht_node_estimate(b, *reg3());
  EXPECT_NEAR(wa.at(1) + wa.at(2), 1.0, 1e-12);
  EXPECT_NEAR(wa.at(1), wb.at(1), 1e-12);
}

TEST(HtNode, UnobservedClassesAreMarked) {
  WalkTrace t;
  t.samples = {{path3(), 1, 2}};
  const ConcentrationVector w = ht_node_estimate(t, *reg3());
  EXPECT_TRUE(w.observed[0]);
  EXPECT_FALSE(w.observed[1]);
  EXPECT_DOUBLE_EQ(w.at(2), 0.0);
}

TEST(HtNode, EmptyTraceThrows) {
  WalkTrace t;
  EXPECT_THROW(ht_node_estimate(t, *reg3()), EstimatorError);
}

TEST(PlainAverage, IgnoresDegrees) {
  WalkTrace t;
  t.samples = {{path3(), 1, 1}, {triangle(), 2, 3}};
  const ConcentrationVector w = plain_average(t, *reg3());
  EXPECT_DOUBLE_EQ(w.at(1), 0.5);
  EXPECT_DOUBLE_EQ(w.at(2), 0.5);
}

TEST(HtEdge, HandArithmetic) {
  PairTrace t;
  t.samples = {{path3(), 1, 2}, {triangle(), 2, 3}};
  const ConcentrationVector w = ht_edge_estimate(t, *reg3());
  EXPECT_DOUBLE_EQ(w.at(1), 0.75);
  EXPECT_DOUBLE_EQ(w.at(2), 0.25);
}

TEST(HtEdge, RejectsImpossiblePairCount) {
  PairTrace t;
  t.samples = {{path3(), 1, 1}};
  EXPECT_THROW(ht_edge_estimate(t, *reg3()), EstimatorError);
}

TEST(HtReduce, HandArithmetic) {
  ReduceTrace t;
  ReduceSample r;
  r.degree = 2;
  r.count = 2;
  r.entries[0] = {1, 2};
  r.entries[1] = {2, 4};
  t.samples = {r};
  const ConcentrationVector w = ht_reduce_estimate(t, *reg3());
  EXPECT_NEAR(w.at(1), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(w.at(2), 1.0 / 3.0, 1e-12);
}

TEST(Concentrations, FromCounts) {
  const std::vector<std::uint64_t> counts{3, 1};
  const ConcentrationVector w = concentrations_from_counts(3, GraphMode::kUndirected, counts);
  EXPECT_DOUBLE_EQ(w.at(1), 0.75);
  EXPECT_DOUBLE_EQ(w.at(2), 0.25);
  EXPECT_DOUBLE_EQ(w.at(3), 0.0);
  EXPECT_DOUBLE_EQ(w.at(0), 0.0);
}

TEST(Nrmse, ExactEstimatesGiveZero) {
  const ConcentrationVector truth = vec({0.75, 0.25});
  const std::vector<ConcentrationVector> runs{truth, truth, truth};
  const ErrorReport r = nrmse(runs, truth);
  EXPECT_EQ(r.runs, 3U);
  for (const ClassError& e : r.per_class) EXPECT_DOUBLE_EQ(*e.nrmse, 0.0);
  EXPECT_DOUBLE_EQ(r.rmse, 0.0);
}

TEST(Nrmse, ConstantBias) {
  const ConcentrationVector truth = vec({0.8, 0.2});
  const std::vector<ConcentrationVector> runs{vec({0.7, 0.3}), vec({0.7, 0.3})};
  const ErrorReport r = nrmse(runs, truth);
  EXPECT_NEAR(*r.per_class[0].nrmse, 0.1 / 0.8, 1e-12);
  EXPECT_NEAR(*r.per_class[1].nrmse, 0.1 / 0.2, 1e-12);
  EXPECT_NEAR(r.rmse, std::sqrt(0.02), 1e-12);
}

TEST(Nrmse, SymmetricSpread) {
  const ConcentrationVector truth = vec({0.6, 0.4});
  const std::vector<ConcentrationVector> runs{vec({0.65, 0.35}), vec({0.55, 0.45})};
  const ErrorReport r = nrmse(runs, truth);
  EXPECT_NEAR(*r.per_class[0].nrmse, 0.05 / 0.6, 1e-12);
  EXPECT_NEAR(r.per_class[0].mean, 0.6, 1e-12);
}

TEST(Nrmse, ZeroTruthUndefined) {
  const ConcentrationVector truth = vec({1.0, 0.0});
  const std::vector<ConcentrationVector> runs{vec({1.0, 0.0}), vec({0.9, 0.1})};
  const ErrorReport r = nrmse(runs, truth);
  EXPECT_TRUE(r.per_class[0].nrmse.has_value());
  EXPECT_FALSE(r.per_class[1].nrmse.has_value());
  EXPECT_EQ(r.notes.size(), 1U);
}

TEST(Nrmse, Errors) {
  const ConcentrationVector truth = vec({1.0});
  const std::vector<ConcentrationVector> one{truth};
  EXPECT_THROW(nrmse(one, truth), EstimatorError);
  ConcentrationVector other = truth;
  other.k = 4;
  const std::vector<ConcentrationVector> mixed{truth, other};
  EXPECT_THROW(nrmse(mixed, truth), EstimatorError);
}

struct Case {
  GraphMode mode;
  int k;
};

class Consistency : public ::testing::TestWithParam<Case> {};

// Long walks on small graphs converge to the enumerated concentrations.
TEST_P(Consistency, WalkEstimatesApproachTruth) {
  const Case c = GetParam();
  const LabeledGraph g = fixtures::random_connected(14, 0.25, 31, c.mode);
  std::vector<int> sizes;
  for (int k = std::max(2, c.k - 2); k <= c.k + 1; ++k) sizes.push_back(k);
  const RegistrySet regs(c.mode, sizes);
  const ConcentrationVector truth = exact_concentrations(g, c.k, *regs.get(c.k));
  WalkConfig cfg;
  cfg.k = c.k;
  cfg.steps = 60000;
  cfg.seed = 5;
  auto l1 = [&](const ConcentrationVector& w) {
    double d = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) d += std::abs(w.at(static_cast<ClassId>(i + 1)) - truth.values[i]);
    return d;
  };
  {
    QueryOracle oracle(g);
    cfg.method = Method::kSrw;
    EXPECT_LT(l1(ht_node_estimate(run_srw(oracle, cfg, regs), regs.at(c.k))), 0.05);
  }
  {
    QueryOracle oracle(g);
    cfg.method = Method::kMhsrw;
    EXPECT_LT(l1(plain_average(run_mhsrw(oracle, cfg, regs), regs.at(c.k))), 0.05);
  }
  if (c.k >= 3) {
    QueryOracle oracle(g);
    cfg.method = Method::kPsrw;
    EXPECT_LT(l1(ht_edge_estimate(run_psrw(oracle, cfg, regs), regs.at(c.k))), 0.05);
  }
  if (c.k >= 4) {
    QueryOracle oracle(g);
    cfg.method = Method::kMss;
    cfg.k = c.k - 1;
    const MssResult r = run_mss(oracle, cfg, regs);
    cfg.k = c.k;
    EXPECT_LT(l1(ht_edge_estimate(r.size_k_plus, regs.at(c.k))), 0.05);
  }
  if (c.k >= 3 && c.k + 1 < 14) {
    QueryOracle oracle(g);
    cfg.method = Method::kMss;
    const MssResult r = run_mss(oracle, cfg, regs);
    EXPECT_LT(l1(ht_node_estimate(r.size_k, regs.at(c.k))), 0.05);
    const ConcentrationVector down = exact_concentrations(g, c.k - 1, *regs.get(c.k - 1));
    const ConcentrationVector est = ht_reduce_estimate(r.size_k_minus, regs.at(c.k - 1));
    double d = 0.0;
    for (std::size_t i = 0; i < down.size(); ++i) d += std::abs(est.at(static_cast<ClassId>(i + 1)) - down.values[i]);
    EXPECT_LT(d, 0.05);
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, Consistency,
                         ::testing::Values(Case{GraphMode::kUndirected, 3}, Case{GraphMode::kUndirected, 4},
                                           Case{GraphMode::kDirected, 3}, Case{GraphMode::kSigned, 3}),
                         [](const ::testing::TestParamInfo<Case>& info) {
                           return std::string(to_string(info.param.mode)) + "_k" +
                                  std::to_string(info.param.k);
                         });

// A walk that ignores the degree correction is biased on a graph whose
// classes have very different degrees.
TEST(NegativeControl, UnweightedSrwIsBiased) {
  const LabeledGraph g = fixtures::random_connected(40, 0.05, 12);
  const RegistrySet regs(GraphMode::kUndirected, {3});
  const ConcentrationVector truth = exact_concentrations(g, 3, *regs.get(3));
  QueryOracle oracle(g);
  WalkConfig cfg;
  cfg.k = 3;
  cfg.steps = 100000;
  const WalkTrace t = run_srw(oracle, cfg, regs);
  const double fixed = std::abs(ht_node_estimate(t, regs.at(3)).at(2) - truth.at(2));
  const double naive = std::abs(plain_average(t, regs.at(3)).at(2) - truth.at(2));
  EXPECT_LT(fixed, 0.02);
  EXPECT_GT(naive, 3 * fixed);
}

}  // namespace
}  // namespace motifwalk
