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


// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Usage: motifwalk_acceptance [--expected-fail=N]... [criterion numbers...]
// A criterion named in --expected-fail still prints its verdict but does not
// change the exit status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "motifwalk/enumeration.hpp"
#include "motifwalk/estimators.hpp"
#include "motifwalk/fixtures.hpp"
#include "motifwalk/log.hpp"
#include "motifwalk/neighborhood.hpp"
#include "motifwalk/nullmodel.hpp"
#include "motifwalk/parallel.hpp"
#include "motifwalk/walkers.hpp"
#include "oracles.hpp"

namespace {

using namespace motifwalk;
using NodeSet = std::vector<NodeId>;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::size_t threads() { return resolve_threads(0); }

NodeSet nodes_of(const Cis& s) { return {s.nodes().begin(), s.nodes().end()}; }

struct Dataset {
  LabeledGraph graph;
  std::string label;
};

const Dataset& gnutella() {
  static const Dataset data = [] {
    std::vector<std::filesystem::path> candidates;
    if (const char* env = std::getenv("MOTIFWALK_GNUTELLA")) candidates.emplace_back(env);
    candidates.emplace_back(std::filesystem::path(MOTIFWALK_SOURCE_DIR) / "data" / "p2p-Gnutella08.txt");
    for (const auto& path : candidates) {
      if (std::filesystem::exists(path)) {
        return Dataset{largest_connected_component(load_edge_list(path, GraphMode::kUndirected)),
                       "gnutella"};
      }
    }
    return Dataset{fixtures::gnutella_surrogate(), "gnutella [surrogate]"};
  }();
  return data;
}

/// Exact concentrations of the dataset, computed once per k.
const ConcentrationVector& gnutella_truth(int k) {
  static std::mutex mutex;
  static std::map<int, ConcentrationVector> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) {
    EnumerationOptions opts;
    opts.threads = threads();
    const auto reg = ClassRegistry::built_in(k, GraphMode::kUndirected);
    it = cache.emplace(k, exact_concentrations(gnutella().graph, k, *reg, opts)).first;
  }
  return it->second;
}

/// Runs `runs` independent estimates with derived seeds, in run order.
std::vector<ConcentrationVector> repeat(std::size_t runs, std::uint64_t master,
                                        const std::function<ConcentrationVector(std::uint64_t)>& run) {
  std::vector<ConcentrationVector> out(runs);
  parallel_for(runs, threads(), [&](std::size_t, std::size_t i) { out[i] = run(derive_seed(master, i)); });
  return out;
}

WalkConfig walk(Method m, int k, std::uint64_t steps, std::uint64_t seed) {
  WalkConfig cfg;
  cfg.method = m;
  cfg.k = k;
  cfg.steps = steps;
  cfg.seed = seed;
  return cfg;
}

/// Equalized query budget B*: the walk stops when B* distinct nodes have
/// been queried, with a step cap of 200 B*.
QueryBudget budget(std::uint64_t b_star) { return QueryBudget{b_star, std::nullopt}; }

double mean_nrmse(const ErrorReport& r) {
  double sum = 0.0;
  int n = 0;
  for (const ClassError& e : r.per_class) {
    if (e.nrmse) {
      sum += *e.nrmse;
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / n;
}

// 1 ---------------------------------------------------------------------------

Outcome fixture_exactness() {
  const LabeledGraph g = fixtures::fig1();
  using fixtures::kA, fixtures::kB, fixtures::kC, fixtures::kD, fixtures::kE;
  const auto reg = ClassRegistry::built_in(3, GraphMode::kUndirected);
  const std::uint64_t total = count_cises(g, 3);
  const ConcentrationVector w = exact_concentrations(g, 3, *reg);
  QueryOracle oracle(g);
  const Cis bcd = induced_cis(g, NodeSet{kB, kC, kD});
  const Cis abc = induced_cis(g, NodeSet{kA, kB, kC});
  const std::size_t d_bcd = neighbor_cises(bcd, frontier(oracle, bcd)).degree();
  const std::size_t x_abc = neighbor_cises(abc, frontier(oracle, abc)).degree();
  const std::size_t o_ace = containing_count(oracle, induced_cis(g, NodeSet{kA, kC, kE}));
  const bool pass = total == 7 && w.at(1) == 3.0 / 7.0 && w.at(2) == 4.0 / 7.0 && d_bcd == 3 &&
                    x_abc == 5 && o_ace == 2;
  return {pass, fmt::format("|C3|={} omega=({:.6f}, {:.6f}) d({{b,c,d}})={} |X({{a,b,c}})|={} "
                            "|O4({{a,c,e}})|={}",
                            total, w.at(1), w.at(2), d_bcd, x_abc, o_ace)};
}

// 2 ---------------------------------------------------------------------------

std::pair<bool, bool> explicit_shape(const oracle::ExplicitGraph& r) {
  std::vector<int> colour(r.sets.size(), -1);
  std::vector<std::size_t> queue{0};
  colour[0] = 0;
  bool bipartite = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (const std::size_t v : r.neighbors[u]) {
      if (colour[v] < 0) {
        colour[v] = 1 - colour[u];
        queue.push_back(v);
      } else if (colour[v] == colour[u]) {
        bipartite = false;
      }
    }
  }
  return {queue.size() == r.sets.size(), bipartite};
}

Outcome structural_theorems() {
  Rng rng(20240601);
  int graphs_checked = 0;
  int relationship_graphs = 0;
  int odd_cycle_checks = 0;
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng() % 7;
    const double p = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
    const LabeledGraph g = fixtures::random_connected(n, p, rng());
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    ++graphs_checked;
    for (int k = 2; k < static_cast<int>(n); ++k) {
      bool connected = false;
      bool bipartite = false;
      if (k <= kMaxCisSize) {
        const RelationshipGraph r = build_relationship_graph(g, k);
        connected = r.connected();
        bipartite = r.bipartite();
      } else {
        std::tie(connected, bipartite) = explicit_shape(oracle::relationship_graph(g, k));
      }
      ++relationship_graphs;
      failures += !connected;
      if (max_degree >= 3) {
        ++odd_cycle_checks;
        failures += bipartite;
      }
    }
  }
  return {failures == 0, fmt::format("{} graphs, {} relationship graphs, {} non-bipartite checks, "
                                     "{} failures",
                                     graphs_checked, relationship_graphs, odd_cycle_checks, failures)};
}

// 3 ---------------------------------------------------------------------------

double l1_normalized(const std::map<NodeSet, double>& seen, const std::map<NodeSet, double>& want) {
  auto norm = [](const std::map<NodeSet, double>& m) {
    double total = 0.0;
    for (const auto& [k, v] : m) total += v;
    std::map<NodeSet, double> out;
    for (const auto& [k, v] : m) out[k] = v / total;
    return out;
  };
  return oracle::l1(norm(seen), norm(want));
}

Outcome stationarity() {
  constexpr std::uint64_t kSteps = 1'000'000;
  constexpr double kTol = 0.02;
  struct Case {
    std::string name;
    LabeledGraph g;
  };
  const std::vector<Case> cases{{"fig1", fixtures::fig1()},
                                {"random8", fixtures::random_connected(8, 0.2, 77)}};
  const RegistrySet regs(GraphMode::kUndirected, {3});
  double worst = 0.0;
  std::vector<std::string> parts;
  for (const Case& c : cases) {
    const RelationshipGraph r = build_relationship_graph(c.g, 3);
    std::map<NodeSet, double> by_degree;
    std::map<NodeSet, double> uniform;
    std::map<NodeSet, double> edges_uniform;
    for (std::size_t i = 0; i < r.size(); ++i) {
      by_degree[nodes_of(r.nodes[i])] = static_cast<double>(r.degree(i));
      uniform[nodes_of(r.nodes[i])] = 1.0;
      for (const std::uint32_t j : r.adjacency[i]) {
        if (j < i) continue;
        NodeSet key = nodes_of(r.nodes[i]);
        const NodeSet other = nodes_of(r.nodes[j]);
        key.insert(key.end(), other.begin(), other.end());
        edges_uniform[key] = 1.0;
      }
    }
    std::map<NodeSet, double> pair_law;
    for (const NodeSet& s : oracle::connected_subsets(c.g, 3)) {
      const double i = oracle::non_cut_count(c.g, s);
      pair_law[s] = i * (i - 1);
    }

    QueryOracle o1(c.g);
    const WalkTrace srw = run_srw(o1, walk(Method::kSrw, 3, kSteps, 11), regs);
    std::map<NodeSet, double> visits;
    std::map<NodeSet, double> traversals;
    for (std::size_t j = 0; j < srw.samples.size(); ++j) {
      visits[nodes_of(srw.samples[j].cis)] += 1.0;
      if (j == 0) continue;
      const Cis& a = std::min(srw.samples[j - 1].cis, srw.samples[j].cis);
      const Cis& b = std::max(srw.samples[j - 1].cis, srw.samples[j].cis);
      NodeSet key = nodes_of(a);
      const NodeSet other = nodes_of(b);
      key.insert(key.end(), other.begin(), other.end());
      traversals[key] += 1.0;
    }
    QueryOracle o2(c.g);
    const PairTrace psrw = run_psrw(o2, walk(Method::kPsrw, 3, kSteps, 12), regs);
    std::map<NodeSet, double> unions;
    for (const PairSample& p : psrw.samples) unions[nodes_of(p.union_cis)] += 1.0;
    QueryOracle o3(c.g);
    const WalkTrace mh = run_mhsrw(o3, walk(Method::kMhsrw, 3, kSteps, 13), regs);
    std::map<NodeSet, double> mh_visits;
    for (const WalkSample& s : mh.samples) mh_visits[nodes_of(s.cis)] += 1.0;

    const double l_srw = l1_normalized(visits, by_degree);
    const double l_edge = l1_normalized(traversals, edges_uniform);
    const double l_psrw = l1_normalized(unions, pair_law);
    const double l_mh = l1_normalized(mh_visits, uniform);
    worst = std::max({worst, l_srw, l_edge, l_psrw, l_mh});
    parts.push_back(fmt::format("{} (|C3|={}, |E3|={}): srw {:.4f} edges {:.4f} psrw {:.4f} mhsrw {:.4f}",
                                c.name, r.size(), r.edge_count(), l_srw, l_edge, l_psrw, l_mh));
  }
  return {worst < kTol, fmt::format("L1 < {}; {}; {}", kTol, parts[0], parts[1])};
}

// 4 ---------------------------------------------------------------------------

struct BiasCheck {
  int classes_checked = 0;
  int failures = 0;
  double worst_z = 0.0;
};

void check_unbiased(const std::vector<ConcentrationVector>& runs, const ConcentrationVector& truth,
                    BiasCheck& out) {
  const auto n = static_cast<double>(runs.size());
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth.values[i] <= 0.05) continue;
    double sum = 0.0;
    double sq = 0.0;
    for (const ConcentrationVector& r : runs) {
      const double v = r.at(static_cast<ClassId>(i + 1));
      sum += v;
      sq += v * v;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(std::max(0.0, (sq - n * mean * mean) / (n - 1)));
    const double se = sd / std::sqrt(n);
    const double z = se > 0 ? std::abs(mean - truth.values[i]) / se : (mean == truth.values[i] ? 0.0 : 1e9);
    out.worst_z = std::max(out.worst_z, z);
    ++out.classes_checked;
    out.failures += z > 3.0;
  }
}

Outcome unbiasedness() {
  constexpr std::size_t kRuns = 1000;
  constexpr std::uint64_t kSteps = 10'000;
  struct Case {
    std::string name;
    LabeledGraph g;
    int k;
  };
  const std::vector<Case> cases{{"fig1", fixtures::fig1(), 3},
                                {"random12", fixtures::random_connected(12, 0.25, 2012), 4}};
  std::vector<std::string> parts;
  bool pass = true;
  for (const Case& c : cases) {
    const RegistrySet regs(GraphMode::kUndirected, {c.k, c.k + 1, c.k + 2});
    const ConcentrationVector truth = exact_concentrations(c.g, c.k, regs.at(c.k));
    BiasCheck node;
    BiasCheck edge;
    BiasCheck reduce;
    check_unbiased(repeat(kRuns, 401, [&](std::uint64_t seed) {
                     QueryOracle o(c.g);
                     return ht_node_estimate(run_srw(o, walk(Method::kSrw, c.k, kSteps, seed), regs),
                                             regs.at(c.k));
                   }),
                   truth, node);
    check_unbiased(repeat(kRuns, 402, [&](std::uint64_t seed) {
                     QueryOracle o(c.g);
                     return ht_edge_estimate(run_psrw(o, walk(Method::kPsrw, c.k, kSteps, seed), regs),
                                             regs.at(c.k));
                   }),
                   truth, edge);
    check_unbiased(repeat(kRuns, 403, [&](std::uint64_t seed) {
                     QueryOracle o(c.g);
                     const MssResult r = run_mss(o, walk(Method::kMss, c.k + 1, kSteps, seed), regs);
                     return ht_reduce_estimate(r.size_k_minus, regs.at(c.k));
                   }),
                   truth, reduce);
    for (const BiasCheck* b : {&node, &edge, &reduce}) pass = pass && b->failures == 0;
    parts.push_back(fmt::format("{} k={}: max |mean-omega|/SE node {:.2f} edge {:.2f} reduce {:.2f} "
                                "({} classes with omega > 0.05)",
                                c.name, c.k, node.worst_z, edge.worst_z, reduce.worst_z,
                                node.classes_checked));
  }
  return {pass, fmt::format("{} runs x {} steps, 3 SE; {}; {}", kRuns, kSteps, parts[0], parts[1])};
}

// 5 ---------------------------------------------------------------------------

Outcome gnutella_k4_accuracy() {
  constexpr std::size_t kRuns = 200;
  constexpr std::uint64_t kBudget = 2000;
  const LabeledGraph& g = gnutella().graph;
  const auto started = std::chrono::steady_clock::now();
  const ConcentrationVector& truth = gnutella_truth(4);
  const double enum_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const RegistrySet regs(GraphMode::kUndirected, {4});
  const auto runs = repeat(kRuns, 501, [&](std::uint64_t seed) {
    QueryOracle o(g, budget(kBudget));
    return ht_edge_estimate(run_psrw(o, walk(Method::kPsrw, 4, 200 * kBudget, seed), regs), regs.at(4));
  });
  const ErrorReport report = nrmse(runs, truth);
  std::vector<std::size_t> order(truth.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return truth.values[a] > truth.values[b]; });
  bool pass = true;
  std::string cols;
  for (std::size_t r = 0; r < 5; ++r) {
    const ClassError& e = report.per_class[order[r]];
    const double v = e.nrmse.value_or(INFINITY);
    pass = pass && v < 0.6;
    cols += fmt::format(" class{}={:.3f}", e.id, v);
  }
  return {pass, fmt::format("{}: {} CISes enumerated in {:.1f}s; PSRW B*={} x {} runs; NRMSE < 0.6 for "
                            "top five:{}",
                            gnutella().label, truth.total_samples_used, enum_seconds, kBudget, kRuns, cols)};
}

// 6 ---------------------------------------------------------------------------

Outcome error_scaling() {
  constexpr std::size_t kRuns = 200;
  const LabeledGraph& g = gnutella().graph;
  const ConcentrationVector& truth = gnutella_truth(3);
  const RegistrySet regs(GraphMode::kUndirected, {3});
  auto triangle_nrmse = [&](std::uint64_t steps, std::uint64_t master) {
    const auto runs = repeat(kRuns, master, [&](std::uint64_t seed) {
      QueryOracle o(g);
      return ht_edge_estimate(run_psrw(o, walk(Method::kPsrw, 3, steps, seed), regs), regs.at(3));
    });
    return *nrmse(runs, truth).per_class[1].nrmse;
  };
  const double small = triangle_nrmse(1000, 601);
  const double large = triangle_nrmse(10000, 602);
  const double ratio = small / large;
  return {ratio >= 2.0 && ratio <= 5.0,
          fmt::format("{}: triangle NRMSE B=10^3 {:.4f}, B=10^4 {:.4f}, ratio {:.3f} in [2, 5] "
                      "(B counts walk steps)",
                      gnutella().label, small, large, ratio)};
}

// 7 ---------------------------------------------------------------------------

Outcome method_ordering() {
  constexpr std::size_t kRuns = 200;
  constexpr std::uint64_t kBudget3 = 2000;
  constexpr std::uint64_t kBudgetMix = 3000;
  const LabeledGraph& g = gnutella().graph;
  const RegistrySet regs(GraphMode::kUndirected, {3, 4, 5});

  const ConcentrationVector& t3 = gnutella_truth(3);
  const double psrw = mean_nrmse(nrmse(repeat(kRuns, 701, [&](std::uint64_t seed) {
    QueryOracle o(g, budget(kBudget3));
    return ht_edge_estimate(run_psrw(o, walk(Method::kPsrw, 3, 200 * kBudget3, seed), regs), regs.at(3));
  }), t3));
  const double srw = mean_nrmse(nrmse(repeat(kRuns, 702, [&](std::uint64_t seed) {
    QueryOracle o(g, budget(kBudget3));
    return ht_node_estimate(run_srw(o, walk(Method::kSrw, 3, 200 * kBudget3, seed), regs), regs.at(3));
  }), t3));
  const double mh = mean_nrmse(nrmse(repeat(kRuns, 703, [&](std::uint64_t seed) {
    QueryOracle o(g, budget(kBudget3));
    return plain_average(run_mhsrw(o, walk(Method::kMhsrw, 3, 200 * kBudget3, seed), regs), regs.at(3));
  }), t3));

  std::vector<ConcentrationVector> mss3(kRuns), mss4(kRuns), mss5(kRuns);
  std::vector<ConcentrationVector> gu3(kRuns), gu4(kRuns), gu5(kRuns);
  parallel_for(kRuns, threads(), [&](std::size_t, std::size_t i) {
    QueryOracle o(g, budget(kBudgetMix));
    const MssResult r = run_mss(o, walk(Method::kMss, 4, 200 * kBudgetMix, derive_seed(704, i)), regs);
    mss3[i] = ht_reduce_estimate(r.size_k_minus, regs.at(3));
    mss4[i] = ht_node_estimate(r.size_k, regs.at(4));
    mss5[i] = ht_edge_estimate(r.size_k_plus, regs.at(5));
  });
  parallel_for(kRuns, threads(), [&](std::size_t, std::size_t i) {
    QueryOracle o(g, budget(kBudgetMix));
    const WalkTrace t = run_guise(o, walk(Method::kGuise, 3, 200 * kBudgetMix, derive_seed(705, i)), regs);
    gu3[i] = plain_average(t, regs.at(3));
    gu4[i] = plain_average(t, regs.at(4));
    gu5[i] = plain_average(t, regs.at(5));
  });
  const double m3 = nrmse(mss3, t3).rmse, g3 = nrmse(gu3, t3).rmse;
  const double m4 = nrmse(mss4, gnutella_truth(4)).rmse, g4 = nrmse(gu4, gnutella_truth(4)).rmse;
  const double m5 = nrmse(mss5, gnutella_truth(5)).rmse, g5 = nrmse(gu5, gnutella_truth(5)).rmse;

  const bool k3_order = psrw < srw && srw < mh;
  const bool mix_order = m3 < g3 && m4 < g4 && m5 < g5;
  return {k3_order && mix_order,
          fmt::format("{}: k=3 B*={} mean NRMSE psrw {:.4f} < srw {:.4f} < mhsrw {:.4f} [{}]; "
                      "B*={} RMSE mss/guise size3 {:.4f}/{:.4f} size4 {:.4f}/{:.4f} size5 {:.4f}/{:.4f} [{}]",
                      gnutella().label, kBudget3, psrw, srw, mh, k3_order ? "ok" : "violated",
                      kBudgetMix, m3, g3, m4, g4, m5, g5, mix_order ? "ok" : "violated")};
}

// 8 ---------------------------------------------------------------------------

Outcome null_model() {
  int graphs = 0;
  int failures = 0;
  auto check_sequence = [&](const LabeledGraph& source, int count, std::uint64_t master) {
    const std::vector<DegreePair> seq = degree_sequence(source);
    std::uint64_t stubs = 0;
    for (const DegreePair& p : seq) stubs += p.out;
    ConfigurationOptions opts;
    opts.positive_fraction = positive_fraction(source);
    for (int i = 0; i < count; ++i) {
      const LabeledGraph g = generate_configuration_graph(source.mode(), seq, derive_seed(master, i), opts);
      ++graphs;
      bool ok = degree_sequence(g) == seq;
      const std::uint64_t arcs_expected = source.mode() == GraphMode::kDirected ? stubs : stubs / 2;
      std::uint64_t arcs = 0;
      for (NodeId v = 0; v < g.node_count(); ++v) {
        ok = ok && !g.has_edge(v, v);
        for (const Neighbor& nb : g.neighbors(v)) {
          if (nb.node < v) continue;
          arcs += nb.label.direction == Direction::kBoth ? 2 : 1;
        }
      }
      ok = ok && arcs == arcs_expected;
      failures += !ok;
    }
  };
  check_sequence(gnutella().graph, 100, 801);
  check_sequence(fixtures::random_connected(2000, 0.003, 5, GraphMode::kDirected), 100, 802);
  check_sequence(fixtures::random_connected(2000, 0.003, 6, GraphMode::kSigned), 100, 803);

  const LabeledGraph small = fixtures::random_connected(60, 0.08, 8);
  const auto reg = ClassRegistry::built_in(3, GraphMode::kUndirected);
  NullOptions opts;
  opts.n_random = 100;
  const NullStats stats = compute_null_stats(NullSource::from_graph(small), reg, opts);
  ConcentrationVector at_mean;
  at_mean.k = 3;
  at_mean.values = stats.mu;
  at_mean.observed.assign(stats.mu.size(), true);
  int z_failures = 0;
  for (const ZScoreRow& row : z_scores(at_mean, stats).rows) {
    if (row.sigma > 0.0) {
      z_failures += !(row.z && *row.z == 0.0);
    } else {
      z_failures += row.z.has_value();
    }
  }
  return {failures == 0 && z_failures == 0,
          fmt::format("{} configuration graphs (undirected {}, directed, signed), {} violations; "
                      "Z at the null mean: {} failures over {} classes ({} null graphs, {})",
                      graphs, gnutella().label, failures, z_failures, stats.mu.size(), stats.n_random,
                      stats.method())};
}

// 9 ---------------------------------------------------------------------------

Outcome query_accounting() {
  struct Run {
    int k;
    std::uint64_t states;
    std::uint64_t distinct;
  };
  std::vector<Run> runs;
  std::mutex mutex;
  auto srw_runs = [&](const LabeledGraph& g, int k, std::size_t count, std::uint64_t steps,
                      std::optional<std::uint64_t> b_star, std::uint64_t master) {
    const RegistrySet regs(GraphMode::kUndirected, {k});
    parallel_for(count, threads(), [&](std::size_t, std::size_t i) {
      QueryOracle o(g, QueryBudget{b_star, std::nullopt});
      const WalkTrace t = run_srw(o, walk(Method::kSrw, k, steps, derive_seed(master, i)), regs);
      std::lock_guard lock(mutex);
      runs.push_back({k, t.info.states, t.info.stats.distinct_queried});
    });
  };
  const LabeledGraph& g = gnutella().graph;
  srw_runs(g, 3, 200, 400000, 2000, 901);
  srw_runs(g, 4, 100, 5000, std::nullopt, 902);
  srw_runs(g, 5, 50, 2000, std::nullopt, 903);
  const std::size_t dataset_runs = runs.size();
  const std::vector<DegreePair> regular(50000, DegreePair{6, 6});
  const LabeledGraph expander =
      largest_connected_component(generate_configuration_graph(GraphMode::kUndirected, regular, 9));
  srw_runs(expander, 3, 20, 5000, std::nullopt, 904);
  srw_runs(expander, 4, 20, 5000, std::nullopt, 905);

  int violations = 0;
  double expander_ratio = 0.0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const Run& r = runs[i];
    violations += r.distinct > static_cast<std::uint64_t>(r.k) + r.states;
    if (i >= dataset_runs) {
      expander_ratio += static_cast<double>(r.distinct) / static_cast<double>(r.k + r.states);
    }
  }
  expander_ratio /= static_cast<double>(runs.size() - dataset_runs);
  return {violations == 0,
          fmt::format("{} SRW runs ({} on {}), distinct_queried <= k + steps violated {} times; "
                      "expander mean distinct/(k + steps) = {:.3f}",
                      runs.size(), dataset_runs, gnutella().label, violations, expander_ratio)};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "fixture exactness", fixture_exactness},
      {2, "structural theorems", structural_theorems},
      {3, "stationarity", stationarity},
      {4, "unbiasedness", unbiasedness},
      {5, "gnutella k=4 accuracy", gnutella_k4_accuracy},
      {6, "error scaling", error_scaling},
      {7, "method ordering", method_ordering},
      {8, "null model", null_model},
      {9, "query accounting", query_accounting},
  };
  std::set<int> wanted;
  std::set<int> expected_fail;
  constexpr std::string_view kExpectedFail = "--expected-fail=";
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg.starts_with(kExpectedFail)) {
      expected_fail.insert(std::atoi(argv[i] + kExpectedFail.size()));
    } else {
      wanted.insert(std::atoi(argv[i]));
    }
  }
  motifwalk::set_warning_handler([](std::string_view) {});

  int failed = 0;
  for (const Criterion& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, fmt::format("error: {}", e.what())};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool tolerated = expected_fail.count(c.id) > 0;
    failed += !out.pass && !tolerated;
    const char* verdict = out.pass ? (tolerated ? "PASS (listed as expected failure)" : "PASS")
                                   : (tolerated ? "FAIL (expected)" : "FAIL");
    fmt::print("criterion {} {}: {} ({:.1f}s) {}\n", c.id, c.name, verdict, secs, out.detail);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
