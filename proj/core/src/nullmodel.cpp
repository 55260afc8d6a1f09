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


#include "motifwalk/nullmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "motifwalk/enumeration.hpp"
#include "motifwalk/parallel.hpp"

namespace motifwalk {
namespace {

constexpr int kLastNodeRedraws = 1000;
constexpr int kSequenceRedraws = 100;

bool is_out(Direction d) { return d == Direction::kForward || d == Direction::kBoth; }
bool is_in(Direction d) { return d == Direction::kBackward || d == Direction::kBoth; }

std::int64_t imbalance(GraphMode mode, std::span<const DegreePair> seq) {
  std::int64_t in = 0;
  std::int64_t out = 0;
  for (const DegreePair& d : seq) {
    in += d.in;
    out += d.out;
  }
  if (mode == GraphMode::kDirected) return in - out;
  return out % 2;
}

JointDegreeDistribution normalized(JointDegreeDistribution jdd) {
  double total = 0.0;
  for (const auto& [key, m] : jdd.mass) total += m;
  if (total > 0.0) {
    for (auto& [key, m] : jdd.mass) m /= total;
  }
  return jdd;
}

}  // namespace

DegreePair degree_pair(const LabeledGraph& g, NodeId v) {
  if (g.mode() != GraphMode::kDirected) {
    const auto d = static_cast<std::uint32_t>(g.degree(v));
    return {d, d};
  }
  DegreePair p;
  for (const Neighbor& nb : g.neighbors(v)) {
    if (is_in(nb.label.direction)) ++p.in;
    if (is_out(nb.label.direction)) ++p.out;
  }
  return p;
}

std::vector<DegreePair> degree_sequence(const LabeledGraph& g) {
  std::vector<DegreePair> seq(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) seq[v] = degree_pair(g, v);
  return seq;
}

JointDegreeDistribution exact_joint_degree_dist(const LabeledGraph& g) {
  JointDegreeDistribution jdd;
  jdd.mode = g.mode();
  jdd.node_count_estimate = g.node_count();
  for (NodeId v = 0; v < g.node_count(); ++v) jdd.mass[degree_pair(g, v)] += 1.0;
  jdd.samples = g.node_count();
  return normalized(std::move(jdd));
}

JointDegreeDistribution estimate_joint_degree_dist(QueryOracle& oracle, std::uint64_t steps,
                                                   std::uint64_t seed) {
  JointDegreeDistribution jdd;
  jdd.mode = oracle.mode();
  jdd.node_count_estimate = oracle.node_count();
  Rng rng(seed);
  NodeId v = std::uniform_int_distribution<NodeId>(
      0, static_cast<NodeId>(oracle.node_count() - 1))(rng);
  try {
    for (std::uint64_t step = 0; step < steps; ++step) {
      const NodeView view = oracle.query(v);
      if (view.incident.empty()) throw GraphError(fmt::format("node {} is isolated", v));
      DegreePair p;
      if (jdd.mode == GraphMode::kDirected) {
        for (const Neighbor& nb : view.incident) {
          if (is_in(nb.label.direction)) ++p.in;
          if (is_out(nb.label.direction)) ++p.out;
        }
      } else {
        p = {static_cast<std::uint32_t>(view.incident.size()),
             static_cast<std::uint32_t>(view.incident.size())};
      }
      jdd.mass[p] += 1.0 / static_cast<double>(view.incident.size());
      ++jdd.samples;
      const std::size_t next =
          std::uniform_int_distribution<std::size_t>(0, view.incident.size() - 1)(rng);
      v = view.incident[next].node;
    }
  } catch (const BudgetExhausted&) {
    jdd.truncated = true;
  }
  return normalized(std::move(jdd));
}

double l1_distance(const JointDegreeDistribution& a, const JointDegreeDistribution& b) {
  double d = 0.0;
  for (const auto& [key, m] : a.mass) {
    const auto it = b.mass.find(key);
    d += std::abs(m - (it == b.mass.end() ? 0.0 : it->second));
  }
  for (const auto& [key, m] : b.mass) {
    if (!a.mass.contains(key)) d += m;
  }
  return d;
}

std::vector<DegreePair> sample_degree_sequence(const JointDegreeDistribution& phi, std::size_t n,
                                               Rng& rng) {
  if (phi.mass.empty() || n == 0) throw GraphError("cannot sample from an empty distribution");
  std::vector<DegreePair> keys;
  std::vector<double> weights;
  for (const auto& [key, m] : phi.mass) {
    keys.push_back(key);
    weights.push_back(m);
  }
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> any_node(0, n - 1);
  std::vector<DegreePair> seq(n);
  for (int attempt = 0; attempt < kSequenceRedraws; ++attempt) {
    for (DegreePair& d : seq) d = keys[pick(rng)];
    std::int64_t gap = imbalance(phi.mode, seq);
    for (int r = 0; r < kLastNodeRedraws && gap != 0; ++r) {
      const DegreePair old = seq.back();
      seq.back() = keys[pick(rng)];
      const std::int64_t next = imbalance(phi.mode, seq);
      if (std::llabs(next) > std::llabs(gap)) {
        seq.back() = old;
      } else {
        gap = next;
      }
    }
    for (std::size_t r = 0; r < 100 * n && gap != 0; ++r) {
      const std::size_t i = any_node(rng);
      const DegreePair old = seq[i];
      seq[i] = keys[pick(rng)];
      const std::int64_t next = imbalance(phi.mode, seq);
      if (std::llabs(next) > std::llabs(gap)) {
        seq[i] = old;
      } else {
        gap = next;
      }
    }
    if (gap == 0) return seq;
  }
  throw GraphError("could not draw a stub-balanced degree sequence");
}

LabeledGraph generate_configuration_graph(GraphMode mode, std::span<const DegreePair> sequence,
                                          std::uint64_t seed, const ConfigurationOptions& options) {
  const std::size_t n = sequence.size();
  if (imbalance(mode, sequence) != 0) {
    throw GraphError(mode == GraphMode::kDirected ? "in-stubs and out-stubs do not balance"
                                                  : "degree sum is odd");
  }
  std::vector<NodeId> in_stubs;
  std::vector<NodeId> out_stubs;
  for (NodeId v = 0; v < n; ++v) {
    in_stubs.insert(in_stubs.end(), sequence[v].in, v);
    if (mode == GraphMode::kDirected) out_stubs.insert(out_stubs.end(), sequence[v].out, v);
  }
  Rng rng(seed);
  auto pick = [&rng](std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  };
  auto take = [](std::vector<NodeId>& pool, std::size_t i) {
    const NodeId v = pool[i];
    pool[i] = pool.back();
    pool.pop_back();
    return v;
  };
  auto key = [](NodeId a, NodeId b) { return (static_cast<std::uint64_t>(a) << 32) | b; };

  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    std::vector<Arc> arcs;
    std::unordered_set<std::uint64_t> present;
    bool stuck = false;
    if (mode == GraphMode::kDirected) {
      std::vector<NodeId> ins = in_stubs;
      std::vector<NodeId> outs = out_stubs;
      while (!ins.empty() && !stuck) {
        const NodeId vi = take(ins, pick(ins.size()));
        for (int retry = 0;; ++retry) {
          if (retry > options.max_retries) {
            stuck = true;
            break;
          }
          const std::size_t j = pick(outs.size());
          const NodeId vo = outs[j];
          if (vo == vi || present.contains(key(vo, vi))) continue;
          take(outs, j);
          present.insert(key(vo, vi));
          arcs.push_back({vo, vi, Sign::kNone});
          break;
        }
      }
    } else {
      std::vector<NodeId> stubs = in_stubs;
      while (!stubs.empty() && !stuck) {
        const NodeId a = take(stubs, pick(stubs.size()));
        for (int retry = 0;; ++retry) {
          if (retry > options.max_retries || stubs.empty()) {
            stuck = true;
            break;
          }
          const std::size_t j = pick(stubs.size());
          const NodeId b = stubs[j];
          if (a == b || present.contains(key(std::min(a, b), std::max(a, b)))) continue;
          take(stubs, j);
          present.insert(key(std::min(a, b), std::max(a, b)));
          Sign sign = Sign::kNone;
          if (mode == GraphMode::kSigned) {
            sign = std::bernoulli_distribution(options.positive_fraction)(rng) ? Sign::kPositive
                                                                               : Sign::kNegative;
          }
          arcs.push_back({a, b, sign});
          break;
        }
      }
    }
    if (!stuck) return LabeledGraph::from_arcs(mode, n, arcs);
  }
  throw GraphError(fmt::format("configuration wiring failed after {} restarts",
                               options.max_restarts));
}

double positive_fraction(const LabeledGraph& g) {
  if (g.mode() != GraphMode::kSigned || g.edge_count() == 0) return 1.0;
  std::size_t positive = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.node > v && nb.label.sign == Sign::kPositive) ++positive;
    }
  }
  return static_cast<double>(positive) / static_cast<double>(g.edge_count());
}

NullSource NullSource::from_graph(const LabeledGraph& g) {
  NullSource s;
  s.mode = g.mode();
  s.sequence = degree_sequence(g);
  s.node_count = g.node_count();
  s.positive_fraction = motifwalk::positive_fraction(g);
  return s;
}

NullSource NullSource::from_distribution(const JointDegreeDistribution& phi, std::size_t n,
                                         double positive_fraction) {
  NullSource s;
  s.mode = phi.mode;
  s.phi = phi;
  s.node_count = n;
  s.positive_fraction = positive_fraction;
  return s;
}

std::string NullStats::method() const {
  if (sampled_graphs == 0) return "exact";
  if (exact_graphs == 0) return "psrw";
  return "exact+psrw";
}

NullStats compute_null_stats(const NullSource& source,
                             const std::shared_ptr<const ClassRegistry>& registry,
                             const NullOptions& options) {
  if (options.n_random < 2) throw std::invalid_argument("n_random must be at least 2");
  if (registry->mode() != source.mode) {
    throw std::invalid_argument("registry mode does not match the null source");
  }
  const int k = registry->k();
  RegistrySet registries;
  registries.put(registry);
  NullStats stats;
  stats.k = k;
  stats.mode = source.mode;
  stats.n_random = options.n_random;
  stats.per_graph.resize(options.n_random);
  std::vector<char> exact(options.n_random, 0);

  parallel_for(options.n_random, options.threads, [&](std::size_t, std::size_t i) {
    const std::uint64_t graph_seed = derive_seed(options.seed, i);
    Rng rng(graph_seed);
    std::vector<DegreePair> seq =
        source.phi ? sample_degree_sequence(*source.phi, source.node_count, rng) : source.sequence;
    ConfigurationOptions wiring = options.configuration;
    wiring.positive_fraction = source.positive_fraction;
    const LabeledGraph g = generate_configuration_graph(source.mode, seq, rng(), wiring);

    EnumerationOptions enumeration;
    if (k > 2) enumeration.max_cises = options.exact_guard;
    ConcentrationVector conc;
    try {
      const ClassCounts counts = count_classes(g, k, *registry, enumeration);
      if (counts.total == 0) {
        conc.k = k;
        conc.mode = source.mode;
        conc.values.assign(counts.counts.size(), 0.0);
        conc.observed.assign(counts.counts.size(), false);
      } else {
        conc = to_concentrations(counts);
      }
      exact[i] = 1;
    } catch (const EnumerationGuardExceeded&) {
      const LabeledGraph lcc = largest_connected_component(g);
      QueryOracle oracle(lcc);
      WalkConfig cfg;
      cfg.method = Method::kPsrw;
      cfg.k = k;
      cfg.steps = options.psrw_steps;
      cfg.seed = rng();
      conc = ht_edge_estimate(run_psrw(oracle, cfg, registries), *registry);
    }
    stats.per_graph[i] = std::move(conc);
  });

  const std::size_t classes = registry->size();
  stats.mu.assign(classes, 0.0);
  stats.sigma.assign(classes, 0.0);
  for (ConcentrationVector& c : stats.per_graph) {
    c.values.resize(std::max(c.values.size(), classes), 0.0);
    c.observed.resize(c.values.size(), false);
  }
  const auto n = static_cast<double>(options.n_random);
  for (std::size_t c = 0; c < classes; ++c) {
    double sum = 0.0;
    for (const ConcentrationVector& v : stats.per_graph) sum += v.values[c];
    const double mean = sum / n;
    double sq = 0.0;
    for (const ConcentrationVector& v : stats.per_graph) sq += (v.values[c] - mean) * (v.values[c] - mean);
    stats.mu[c] = mean;
    stats.sigma[c] = std::sqrt(sq / (n - 1.0));
  }
  stats.exact_graphs = static_cast<std::size_t>(std::count(exact.begin(), exact.end(), 1));
  stats.sampled_graphs = options.n_random - stats.exact_graphs;
  return stats;
}

ZScoreReport z_scores(const ConcentrationVector& estimate, const NullStats& stats) {
  if (estimate.k != stats.k || estimate.mode != stats.mode) {
    throw std::invalid_argument("estimate and null statistics use different registries");
  }
  ZScoreReport report;
  report.method = stats.method();
  report.n_random = stats.n_random;
  const std::size_t classes = std::max(estimate.size(), stats.mu.size());
  for (std::size_t c = 0; c < classes; ++c) {
    ZScoreRow row;
    row.id = static_cast<ClassId>(c + 1);
    row.omega = estimate.at(row.id);
    row.mu = c < stats.mu.size() ? stats.mu[c] : 0.0;
    row.sigma = c < stats.sigma.size() ? stats.sigma[c] : 0.0;
    if (row.sigma > 0.0) row.z = (row.omega - row.mu) / row.sigma;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace motifwalk
