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
#include <numeric>

#include <fmt/format.h>

#include "motifwalk/enumeration.hpp"

namespace motifwalk {
namespace {

class RandEsu {
 public:
  RandEsu(QueryOracle& oracle, int k, std::span<const double> probs, Rng& rng, RandEsuResult& out)
      : oracle_(oracle), k_(k), probs_(probs), rng_(rng), out_(out),
        block_(oracle.node_count(), 0) {
    inclusion_ = std::accumulate(probs.begin(), probs.end(), 1.0, std::multiplies<>());
  }

  void run_root(NodeId v) {
    root_ = v;
    sub_[0] = v;
    const auto incident = oracle_.query(v).incident;
    block(v, incident);
    auto& ext = ext_[1];
    ext.clear();
    for (const Neighbor& nb : incident) {
      if (nb.node > v) ext.push_back(nb.node);
    }
    extend(1);
    unblock(v, incident);
  }

  bool survive(int depth) {
    const double p = probs_[static_cast<std::size_t>(depth - 1)];
    return p >= 1.0 || std::bernoulli_distribution(p)(rng_);
  }

 private:
  void block(NodeId w, std::span<const Neighbor> incident) {
    ++block_[w];
    for (const Neighbor& nb : incident) ++block_[nb.node];
  }
  void unblock(NodeId w, std::span<const Neighbor> incident) {
    --block_[w];
    for (const Neighbor& nb : incident) --block_[nb.node];
  }

  void extend(int size) {
    auto& ext = ext_[static_cast<std::size_t>(size)];
    while (!ext.empty()) {
      const NodeId w = ext.back();
      ext.pop_back();
      if (!survive(size + 1)) continue;
      sub_[static_cast<std::size_t>(size)] = w;
      if (size + 1 == k_) {
        emit();
        continue;
      }
      const auto incident = oracle_.query(w).incident;
      auto& next = ext_[static_cast<std::size_t>(size + 1)];
      next = ext;
      for (const Neighbor& nb : incident) {
        if (nb.node > root_ && block_[nb.node] == 0) next.push_back(nb.node);
      }
      block(w, incident);
      extend(size + 1);
      unblock(w, incident);
    }
  }

  void emit() {
    std::array<NodeId, kMaxCisSize> nodes = sub_;
    const auto n = static_cast<std::size_t>(k_);
    std::sort(nodes.begin(), nodes.begin() + k_);
    Cis s = Cis::with_nodes({nodes.data(), n});
    // Edges come from the adjacency of queried members only.
    for (int i = 0; i < k_; ++i) {
      if (!oracle_.is_cached(s.node(i))) continue;
      for (const Neighbor& nb : oracle_.graph().neighbors(s.node(i))) {
        const int j = s.index_of(nb.node);
        if (j >= 0) s.set_edge(i, j, nb.label);
      }
    }
    out_.samples.push_back({s, inclusion_});
  }

  QueryOracle& oracle_;
  int k_;
  std::span<const double> probs_;
  Rng& rng_;
  RandEsuResult& out_;
  std::vector<std::uint32_t> block_;
  std::array<std::vector<NodeId>, kMaxCisSize + 1> ext_;
  std::array<NodeId, kMaxCisSize> sub_{};
  NodeId root_ = 0;
  double inclusion_ = 1.0;
};

}  // namespace

std::vector<double> default_esu_probs(int k) {
  std::vector<double> p(static_cast<std::size_t>(std::max(k, 1)), 0.5);
  p[0] = 1.0;
  return p;
}

RandEsuResult rand_esu(QueryOracle& oracle, int k, std::span<const double> depth_probs,
                       std::uint64_t seed) {
  if (k < 2 || k > kMaxCisSize) {
    throw std::invalid_argument(fmt::format("subgraph size k={} outside 2..{}", k, kMaxCisSize));
  }
  if (depth_probs.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument(
        fmt::format("need {} depth probabilities, got {}", k, depth_probs.size()));
  }
  for (const double p : depth_probs) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw std::invalid_argument(fmt::format("depth probability {} outside (0, 1]", p));
    }
  }
  RandEsuResult out;
  out.k = k;
  Rng rng(seed);
  std::vector<NodeId> roots(oracle.node_count());
  std::iota(roots.begin(), roots.end(), NodeId{0});
  std::shuffle(roots.begin(), roots.end(), rng);
  RandEsu esu(oracle, k, depth_probs, rng, out);
  try {
    for (const NodeId v : roots) {
      if (esu.survive(1)) esu.run_root(v);
    }
  } catch (const BudgetExhausted&) {
    out.truncated = true;
  }
  out.stats = oracle.stats();
  return out;
}

ConcentrationVector rand_esu_estimate(const RandEsuResult& result, const ClassRegistry& registry) {
  WeightedTally tally(registry.k(), registry.mode(), registry.size());
  for (const RandEsuSample& s : result.samples) {
    tally.add(registry.classify(s.cis), 1.0 / s.inclusion_probability);
    tally.count_sample();
  }
  return tally.result();
}

}  // namespace motifwalk
