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


#include "motifwalk/walkers.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace motifwalk {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kSrw:
      return "srw";
    case Method::kPsrw:
      return "psrw";
    case Method::kMss:
      return "mss";
    case Method::kMhsrw:
      return "mhsrw";
    case Method::kGuise:
      return "guise";
    case Method::kRandEsu:
      return "rand_esu";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (const Method m : {Method::kSrw, Method::kPsrw, Method::kMss, Method::kMhsrw,
                         Method::kGuise, Method::kRandEsu}) {
    if (text == to_string(m)) return m;
  }
  if (text == "rand-esu") return Method::kRandEsu;
  throw std::invalid_argument(fmt::format("unknown method '{}'", text));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RegistrySet::RegistrySet(GraphMode mode, std::span<const int> sizes) : mode_(mode) {
  for (const int k : sizes) {
    if (k < 2 || k > kMaxCisSize) {
      throw std::invalid_argument(fmt::format("subgraph size {} outside 2..{}", k, kMaxCisSize));
    }
    auto& slot = by_size_[static_cast<std::size_t>(k)];
    if (!slot) slot = build_registry(k, mode);
  }
}

void RegistrySet::put(std::shared_ptr<const ClassRegistry> registry) {
  if (!registry) throw std::invalid_argument("null registry");
  if (std::all_of(by_size_.begin(), by_size_.end(), [](const auto& r) { return r == nullptr; })) {
    mode_ = registry->mode();
  } else if (registry->mode() != mode_) {
    throw std::invalid_argument("registry mode does not match the set");
  }
  by_size_[static_cast<std::size_t>(registry->k())] = std::move(registry);
}

bool RegistrySet::has(int k) const {
  return k >= 0 && k <= kMaxCisSize && by_size_[static_cast<std::size_t>(k)] != nullptr;
}

const ClassRegistry& RegistrySet::at(int k) const { return *get(k); }

std::shared_ptr<const ClassRegistry> RegistrySet::get(int k) const {
  if (!has(k)) throw std::out_of_range(fmt::format("no registry for subgraph size {}", k));
  return by_size_[static_cast<std::size_t>(k)];
}

Cis seed_cis(QueryOracle& oracle, int k, std::optional<NodeId> start, Rng& rng) {
  const std::size_t n = oracle.node_count();
  if (k < 1 || k > kMaxCisSize) {
    throw std::invalid_argument(fmt::format("subgraph size {} outside 1..{}", k, kMaxCisSize));
  }
  if (n < static_cast<std::size_t>(k)) {
    throw GraphError(fmt::format("graph has {} nodes, fewer than k={}", n, k));
  }
  const NodeId root =
      start ? *start : std::uniform_int_distribution<NodeId>(0, static_cast<NodeId>(n - 1))(rng);
  if (root >= n) throw std::out_of_range(fmt::format("start node {} outside graph", root));

  std::vector<NodeId> picked{root};
  std::deque<NodeId> queue{root};
  while (picked.size() < static_cast<std::size_t>(k) && !queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : oracle.query(v).incident) {
      if (std::find(picked.begin(), picked.end(), nb.node) != picked.end()) continue;
      picked.push_back(nb.node);
      queue.push_back(nb.node);
      if (picked.size() == static_cast<std::size_t>(k)) break;
    }
  }
  if (picked.size() < static_cast<std::size_t>(k)) {
    throw GraphError(fmt::format("fewer than {} nodes reachable from node {}", k, root));
  }
  std::sort(picked.begin(), picked.end());
  Cis s = Cis::with_nodes(picked);
  for (int i = 0; i < k; ++i) {
    for (const Neighbor& nb : oracle.query(s.node(i)).incident) {
      const int j = s.index_of(nb.node);
      if (j > i) s.set_edge(i, j, nb.label);
    }
  }
  return s;
}

SubgraphWalk::SubgraphWalk(QueryOracle& oracle, const Cis& start, Rng rng)
    : oracle_(&oracle), rng_(std::move(rng)) {
  current_.build(oracle, start);
  if (current_.degree() == 0) {
    throw GraphError(fmt::format("subgraph {} has no neighbors", to_string(start)));
  }
}

void SubgraphWalk::advance_to(const Cis& next) { spare_.build(*oracle_, next); }

SubgraphWalk::Transition SubgraphWalk::step(bool lazy) {
  oracle_->charge_step();
  if (lazy && (rng_() >> 63) != 0) return {};
  const std::size_t i =
      std::uniform_int_distribution<std::size_t>(0, current_.degree() - 1)(rng_);
  const NeighborMoves::Move move = current_.moves()[i];
  advance_to(current_.neighbor(i));
  previous_.swap(current_);
  current_.swap(spare_);
  return {true, move};
}

SubgraphWalk::Transition SubgraphWalk::mh_step() {
  oracle_->charge_step();
  const std::size_t i =
      std::uniform_int_distribution<std::size_t>(0, current_.degree() - 1)(rng_);
  const NeighborMoves::Move move = current_.moves()[i];
  advance_to(current_.neighbor(i));
  const double dx = static_cast<double>(current_.degree());
  const double dy = static_cast<double>(spare_.degree());
  const bool accept = dy <= dx || std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < dx / dy;
  if (!accept) return {};
  previous_.swap(current_);
  current_.swap(spare_);
  return {true, move};
}

namespace {

void check_config(const QueryOracle& oracle, const WalkConfig& cfg, int min_k, int walk_k) {
  if (cfg.steps < 1) throw std::invalid_argument("steps must be at least 1");
  if (cfg.k < min_k || cfg.k > kMaxCisSize) {
    throw std::invalid_argument(fmt::format("{} needs {} <= k <= {}, got k={}",
                                            to_string(cfg.method), min_k, kMaxCisSize, cfg.k));
  }
  if (static_cast<std::size_t>(walk_k) >= oracle.node_count()) {
    throw std::invalid_argument(fmt::format("k={} requires a graph with more than {} nodes",
                                            cfg.k, walk_k));
  }
}

template <class Sample>
Trace<Sample> begin_trace(const WalkConfig& cfg) {
  Trace<Sample> t;
  t.info.method = cfg.method;
  t.info.k = cfg.k;
  if (cfg.steps < (std::uint64_t{1} << 24)) t.samples.reserve(cfg.steps);
  return t;
}

}  // namespace

WalkTrace run_srw(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries) {
  check_config(oracle, cfg, 2, cfg.k);
  WalkTrace trace = begin_trace<WalkSample>(cfg);
  const ClassRegistry& registry = registries.at(cfg.k);
  auto record = [&](const SubgraphWalk& walk) {
    if (++trace.info.states > cfg.burn_in) {
      trace.samples.push_back({walk.state(), registry.classify(walk.state()),
                               static_cast<std::uint32_t>(walk.degree())});
    }
  };
  try {
    Rng rng(cfg.seed);
    const Cis start = seed_cis(oracle, cfg.k, cfg.start, rng);
    SubgraphWalk walk(oracle, start, std::move(rng));
    record(walk);
    while (trace.info.states < cfg.steps) {
      walk.step(cfg.lazy);
      ++trace.info.proposals;
      ++trace.info.accepted;
      record(walk);
    }
  } catch (const BudgetExhausted&) {
    trace.info.truncated = true;
  }
  trace.info.stats = oracle.stats();
  return trace;
}

PairTrace run_psrw(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries) {
  check_config(oracle, cfg, 3, cfg.k);
  PairTrace trace = begin_trace<PairSample>(cfg);
  const ClassRegistry& registry = registries.at(cfg.k);
  std::uint64_t pairs = 0;
  try {
    Rng rng(cfg.seed);
    const Cis start = seed_cis(oracle, cfg.k - 1, cfg.start, rng);
    SubgraphWalk walk(oracle, start, std::move(rng));
    trace.info.states = 1;
    while (trace.info.states < cfg.steps) {
      const auto t = walk.step(cfg.lazy);
      ++trace.info.states;
      ++trace.info.proposals;
      if (!t.moved) continue;
      ++trace.info.accepted;
      if (++pairs <= cfg.burn_in) continue;
      const Cis joined = walk.previous().extension(t.move.group);
      trace.samples.push_back({joined, registry.classify(joined),
                               static_cast<std::uint32_t>(count_contained(joined))});
    }
  } catch (const BudgetExhausted&) {
    trace.info.truncated = true;
  }
  trace.info.stats = oracle.stats();
  return trace;
}

WalkTrace run_mhsrw(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries) {
  check_config(oracle, cfg, 2, cfg.k);
  WalkTrace trace = begin_trace<WalkSample>(cfg);
  const ClassRegistry& registry = registries.at(cfg.k);
  auto record = [&](const SubgraphWalk& walk) {
    if (++trace.info.states > cfg.burn_in) {
      trace.samples.push_back({walk.state(), registry.classify(walk.state()),
                               static_cast<std::uint32_t>(walk.degree())});
    }
  };
  try {
    Rng rng(cfg.seed);
    const Cis start = seed_cis(oracle, cfg.k, cfg.start, rng);
    SubgraphWalk walk(oracle, start, std::move(rng));
    record(walk);
    while (trace.info.states < cfg.steps) {
      ++trace.info.proposals;
      if (walk.mh_step().moved) ++trace.info.accepted;
      record(walk);
    }
  } catch (const BudgetExhausted&) {
    trace.info.truncated = true;
  }
  trace.info.stats = oracle.stats();
  return trace;
}

MssResult run_mss(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries) {
  check_config(oracle, cfg, 3, cfg.k);
  if (cfg.k + 1 > kMaxCisSize) {
    throw std::invalid_argument(fmt::format("mss needs k + 1 <= {}, got k={}", kMaxCisSize, cfg.k));
  }
  MssResult out;
  out.size_k = begin_trace<WalkSample>(cfg);
  out.size_k_plus = begin_trace<PairSample>(cfg);
  out.size_k_minus = begin_trace<ReduceSample>(cfg);
  out.size_k_plus.info.k = cfg.k + 1;
  out.size_k_minus.info.k = cfg.k - 1;
  const ClassRegistry& reg_k = registries.at(cfg.k);
  const ClassRegistry& reg_up = registries.at(cfg.k + 1);
  const ClassRegistry& reg_down = registries.at(cfg.k - 1);
  std::uint64_t states = 0;
  std::uint64_t pairs = 0;

  auto record_state = [&](const SubgraphWalk& walk) {
    if (++states <= cfg.burn_in) return;
    const Cis& s = walk.state();
    const auto degree = static_cast<std::uint32_t>(walk.degree());
    out.size_k.samples.push_back({s, reg_k.classify(s), degree});
    ReduceSample r;
    r.degree = degree;
    const NeighborMoves& moves = walk.moves();
    for (int i = 0; i < s.size(); ++i) {
      if ((moves.non_cut_mask() & (1U << i)) == 0) continue;
      r.entries[r.count++] = {reg_down.classify(remove_node(s, i)),
                              static_cast<std::uint32_t>(moves.containing_count_without(i))};
    }
    out.size_k_minus.samples.push_back(r);
  };

  bool truncated = false;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  try {
    Rng rng(cfg.seed);
    const Cis start = seed_cis(oracle, cfg.k, cfg.start, rng);
    SubgraphWalk walk(oracle, start, std::move(rng));
    record_state(walk);
    while (states < cfg.steps) {
      const auto t = walk.step(cfg.lazy);
      ++proposals;
      if (t.moved) {
        ++accepted;
        if (++pairs > cfg.burn_in) {
          const Cis joined = walk.previous().extension(t.move.group);
          out.size_k_plus.samples.push_back(
              {joined, reg_up.classify(joined), static_cast<std::uint32_t>(count_contained(joined))});
        }
      }
      record_state(walk);
    }
  } catch (const BudgetExhausted&) {
    truncated = true;
  }
  for (TraceInfo* info : {&out.size_k.info, &out.size_k_plus.info, &out.size_k_minus.info}) {
    info->truncated = truncated;
    info->states = states;
    info->proposals = proposals;
    info->accepted = accepted;
    info->stats = oracle.stats();
  }
  return out;
}

void write_trace(std::ostream& out, const WalkTrace& trace) {
  fmt::print(out, "# method={} k={} samples={} truncated={}\n", to_string(trace.info.method),
             trace.info.k, trace.samples.size(), trace.info.truncated);
  for (std::size_t j = 0; j < trace.samples.size(); ++j) {
    const WalkSample& s = trace.samples[j];
    fmt::print(out, "{}\t{}\t{}\t{}\t-\n", j, to_string(s.cis), s.class_id, s.degree);
  }
}

void write_trace(std::ostream& out, const PairTrace& trace) {
  fmt::print(out, "# method={} k={} samples={} truncated={}\n", to_string(trace.info.method),
             trace.info.k, trace.samples.size(), trace.info.truncated);
  for (std::size_t j = 0; j < trace.samples.size(); ++j) {
    const PairSample& s = trace.samples[j];
    fmt::print(out, "{}\t{}\t{}\t-\ti={}\n", j, to_string(s.union_cis), s.class_id, s.i_count);
  }
}

void write_trace(std::ostream& out, const ReduceTrace& trace) {
  fmt::print(out, "# method={} k={} samples={} truncated={}\n", to_string(trace.info.method),
             trace.info.k, trace.samples.size(), trace.info.truncated);
  for (std::size_t j = 0; j < trace.samples.size(); ++j) {
    const ReduceSample& s = trace.samples[j];
    std::string aux;
    for (const ContainedSample& c : s.contained()) {
      if (!aux.empty()) aux += ',';
      aux += fmt::format("{}:{}", c.class_id, c.containing);
    }
    fmt::print(out, "{}\t-\t-\t{}\t{}\n", j, s.degree, aux);
  }
}

}  // namespace motifwalk
