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


#ifndef MOTIFWALK_WALKERS_HPP_
#define MOTIFWALK_WALKERS_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "motifwalk/cis.hpp"
#include "motifwalk/class_registry.hpp"
#include "motifwalk/neighborhood.hpp"
#include "motifwalk/query_oracle.hpp"

namespace motifwalk {

enum class Method { kSrw, kPsrw, kMss, kMhsrw, kGuise, kRandEsu };

std::string_view to_string(Method method);
/// Accepts srw, psrw, mss, mhsrw, guise, rand_esu.
Method parse_method(std::string_view text);

using Rng = std::mt19937_64;

/// Independent stream seed for run `index` under `master` (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Registries for several subgraph sizes of one mode.
class RegistrySet {
 public:
  RegistrySet() = default;
  /// Built-in registries where available, dynamic ones (with a warning) otherwise.
  RegistrySet(GraphMode mode, std::span<const int> sizes);
  RegistrySet(GraphMode mode, std::initializer_list<int> sizes)
      : RegistrySet(mode, std::span<const int>(sizes.begin(), sizes.size())) {}

  /// Adds or replaces the registry for its own size.
  void put(std::shared_ptr<const ClassRegistry> registry);

  GraphMode mode() const { return mode_; }
  bool has(int k) const;
  /// Throws std::out_of_range when size k was not requested.
  const ClassRegistry& at(int k) const;
  std::shared_ptr<const ClassRegistry> get(int k) const;

 private:
  GraphMode mode_ = GraphMode::kUndirected;
  std::array<std::shared_ptr<const ClassRegistry>, kMaxCisSize + 1> by_size_{};
};

struct WalkConfig {
  Method method = Method::kSrw;
  int k = 3;
  /// Recorded walk states B, burn-in included.
  std::uint64_t steps = 1000;
  std::uint64_t burn_in = 0;
  std::uint64_t seed = 1;
  std::optional<NodeId> start;
  /// Stay put with probability 1/2 at each SRW step.
  bool lazy = false;
};

struct WalkSample {
  Cis cis;
  ClassId class_id = 0;
  std::uint32_t degree = 0;  // d^(k), or d_mix for GUISE
};

struct PairSample {
  Cis union_cis;
  ClassId class_id = 0;
  std::uint32_t i_count = 0;
};

struct ContainedSample {
  ClassId class_id = 0;
  std::uint32_t containing = 0;  // |O^(k)(s')|
};

/// One walk state seen through its connected (k-1)-node subgraphs.
struct ReduceSample {
  std::uint32_t degree = 0;
  std::uint8_t count = 0;
  std::array<ContainedSample, kMaxCisSize> entries{};

  std::span<const ContainedSample> contained() const { return {entries.data(), count}; }
};

struct TraceInfo {
  Method method = Method::kSrw;
  int k = 0;
  bool truncated = false;
  std::uint64_t states = 0;  // walk states visited, burn-in included
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  OracleStats stats;
};

template <class Sample>
struct Trace {
  TraceInfo info;
  std::vector<Sample> samples;
};

using WalkTrace = Trace<WalkSample>;
using PairTrace = Trace<PairSample>;
using ReduceTrace = Trace<ReduceSample>;

struct MssResult {
  WalkTrace size_k;        // k
  PairTrace size_k_plus;   // k + 1
  ReduceTrace size_k_minus;  // k - 1
};

/// BFS from `start` (or a uniformly drawn node) over ascending neighbor ids,
/// keeping the first k nodes visited. Throws GraphError if fewer than k
/// nodes are reachable.
Cis seed_cis(QueryOracle& oracle, int k, std::optional<NodeId> start, Rng& rng);

/// Simple random walk on G^(k), one query per new node.
class SubgraphWalk {
 public:
  struct Transition {
    bool moved = false;
    NeighborMoves::Move move;
  };

  /// Queries V(start). Throws GraphError if start has no neighbors in G^(k).
  SubgraphWalk(QueryOracle& oracle, const Cis& start, Rng rng);

  const Cis& state() const { return current_.center(); }
  std::size_t degree() const { return current_.degree(); }
  const NeighborMoves& moves() const { return current_; }
  /// Moves of the state before the last transition that moved.
  const NeighborMoves& previous() const { return previous_; }
  Rng& rng() { return rng_; }

  /// Uniform neighbor move. BudgetExhausted leaves the walk unchanged.
  Transition step(bool lazy = false);
  /// Uniform proposal accepted with probability min{1, d(x)/d(y)}.
  Transition mh_step();

 private:
  void advance_to(const Cis& next);

  QueryOracle* oracle_;
  Rng rng_;
  NeighborMoves current_;
  NeighborMoves previous_;
  NeighborMoves spare_;
};

WalkTrace run_srw(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries);
/// Walks G^(k-1) and records the union of each pair of consecutive states.
PairTrace run_psrw(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries);
WalkTrace run_mhsrw(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries);
MssResult run_mss(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries);
/// Metropolis-Hastings walk over 3-, 4- and 5-node CISes; cfg.k is ignored.
WalkTrace run_guise(QueryOracle& oracle, const WalkConfig& cfg, const RegistrySet& registries);

/// Degree of x in the mixed 3/4/5-node graph, from x's moves.
std::size_t guise_degree(const NeighborMoves& moves);

/// Tab-separated lines: step, node set, class id, degree or i_count, aux.
void write_trace(std::ostream& out, const WalkTrace& trace);
void write_trace(std::ostream& out, const PairTrace& trace);
void write_trace(std::ostream& out, const ReduceTrace& trace);

}  // namespace motifwalk

#endif  // MOTIFWALK_WALKERS_HPP_
