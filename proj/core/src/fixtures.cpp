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


#include "motifwalk/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace motifwalk::fixtures {
namespace {

using Rng = std::mt19937_64;

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

LabeledGraph undirected(std::size_t n, const std::vector<Arc>& arcs) {
  return LabeledGraph::from_arcs(GraphMode::kUndirected, n, arcs);
}

/// Labels undirected pairs for the requested mode.
std::vector<Arc> decorate(std::vector<Arc> arcs, GraphMode mode, Rng& rng) {
  std::bernoulli_distribution both(0.2);
  std::bernoulli_distribution flip(0.5);
  std::bernoulli_distribution negative(0.25);
  std::vector<Arc> out;
  out.reserve(arcs.size() * 2);
  for (Arc a : arcs) {
    switch (mode) {
      case GraphMode::kUndirected:
        out.push_back(a);
        break;
      case GraphMode::kDirected:
        if (both(rng)) {
          out.push_back({a.from, a.to, Sign::kNone});
          out.push_back({a.to, a.from, Sign::kNone});
        } else if (flip(rng)) {
          out.push_back({a.to, a.from, Sign::kNone});
        } else {
          out.push_back(a);
        }
        break;
      case GraphMode::kSigned:
        a.sign = negative(rng) ? Sign::kNegative : Sign::kPositive;
        out.push_back(a);
        break;
    }
  }
  return out;
}

}  // namespace

LabeledGraph fig1() {
  const std::vector<Arc> arcs = {{kA, kB}, {kA, kC}, {kA, kD}, {kA, kE},
                                 {kB, kC}, {kB, kD}, {kC, kD}};
  return undirected(5, arcs);
}

LabeledGraph complete(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) arcs.push_back({i, j});
  }
  return undirected(n, arcs);
}

LabeledGraph cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId i = 0; i < n; ++i) arcs.push_back({i, static_cast<NodeId>((i + 1) % n)});
  return undirected(n, arcs);
}

LabeledGraph path(std::size_t n) {
  std::vector<Arc> arcs;
  for (NodeId i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return undirected(n, arcs);
}

LabeledGraph star(std::size_t leaves) {
  std::vector<Arc> arcs;
  for (NodeId i = 1; i <= leaves; ++i) arcs.push_back({0, i});
  return undirected(leaves + 1, arcs);
}

LabeledGraph random_connected(std::size_t n, double p, std::uint64_t seed, GraphMode mode) {
  if (n < 2) throw std::invalid_argument("random_connected needs at least 2 nodes");
  Rng rng(seed);
  std::vector<NodeId> order(n);
  for (NodeId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> present;
  for (std::size_t i = 1; i < n; ++i) {
    const NodeId parent = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    arcs.push_back({parent, order[i]});
    present.insert(pair_key(parent, order[i]));
  }
  std::bernoulli_distribution extra(p);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (!present.contains(pair_key(i, j)) && extra(rng)) arcs.push_back({i, j});
    }
  }
  return LabeledGraph::from_arcs(mode, n, decorate(std::move(arcs), mode, rng));
}

LabeledGraph gnutella_surrogate(std::uint64_t seed, GraphMode mode) {
  constexpr std::size_t n = kGnutellaNodes;
  constexpr double kXmin = 2.2;
  constexpr double kAlpha = 2.3;
  constexpr double kCap = 130.0;
  constexpr double kClosureShare = 0.07;

  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weight(n);
  for (double& w : weight) w = std::min(kCap, kXmin * std::pow(1.0 - unit(rng), -1.0 / (kAlpha - 1.0)));
  std::discrete_distribution<NodeId> by_weight(weight.begin(), weight.end());

  std::vector<Arc> arcs;
  std::unordered_set<std::uint64_t> present;
  std::vector<std::vector<NodeId>> adj(n);
  auto add = [&](NodeId a, NodeId b) {
    if (a == b || !present.insert(pair_key(a, b)).second) return false;
    arcs.push_back({a, b});
    adj[a].push_back(b);
    adj[b].push_back(a);
    return true;
  };

  // Spanning tree: node i joins a uniformly drawn earlier node.
  for (NodeId i = 1; i < n; ++i) {
    add(i, std::uniform_int_distribution<NodeId>(0, i - 1)(rng));
  }
  const auto closure_target =
      static_cast<std::size_t>(kClosureShare * static_cast<double>(kGnutellaEdges));
  while (arcs.size() < kGnutellaEdges - closure_target) add(by_weight(rng), by_weight(rng));
  while (arcs.size() < kGnutellaEdges) {
    const NodeId v = by_weight(rng);
    if (adj[v].size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, adj[v].size() - 1);
    add(adj[v][pick(rng)], adj[v][pick(rng)]);
  }
  return LabeledGraph::from_arcs(mode, n, decorate(std::move(arcs), mode, rng));
}

}  // namespace motifwalk::fixtures
