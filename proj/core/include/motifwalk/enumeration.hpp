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


#ifndef MOTIFWALK_ENUMERATION_HPP_
#define MOTIFWALK_ENUMERATION_HPP_

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "motifwalk/cis.hpp"
#include "motifwalk/class_registry.hpp"
#include "motifwalk/estimators.hpp"
#include "motifwalk/graph.hpp"
#include "motifwalk/query_oracle.hpp"
#include "motifwalk/walkers.hpp"

namespace motifwalk {

class EnumerationGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EnumerationCancelled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  std::size_t threads = 1;  // 0 = all hardware threads
  /// Throw EnumerationGuardExceeded once more CISes than this are found.
  std::optional<std::uint64_t> max_cises;
  const std::atomic<bool>* cancel = nullptr;
};

/// ESU: every k-node CIS exactly once, roots in ascending order.
/// Single-threaded; `visit` sees each CIS with sorted nodes.
void enumerate_cises(const LabeledGraph& g, int k, const std::function<void(const Cis&)>& visit,
                     const EnumerationOptions& options = {});

/// All k-node CISes sorted by node set.
std::vector<Cis> enumerate_all(const LabeledGraph& g, int k, const EnumerationOptions& options = {});

/// |C^(k)| without classification.
std::uint64_t count_cises(const LabeledGraph& g, int k, const EnumerationOptions& options = {});

struct ClassCounts {
  int k = 0;
  GraphMode mode = GraphMode::kUndirected;
  std::vector<std::uint64_t> counts;  // index = class id - 1
  std::uint64_t total = 0;
};

/// Per-class CIS counts. Dynamic registries receive new classes in
/// ascending pattern order, so results do not depend on thread count.
ClassCounts count_classes(const LabeledGraph& g, int k, const ClassRegistry& registry,
                          const EnumerationOptions& options = {});

ConcentrationVector exact_concentrations(const LabeledGraph& g, int k,
                                         const ClassRegistry& registry,
                                         const EnumerationOptions& options = {});
ConcentrationVector to_concentrations(const ClassCounts& counts);

inline constexpr std::size_t kRelationshipGraphGuard = 100000;

/// An explicit graph whose nodes are CISes.
struct RelationshipGraph {
  std::vector<Cis> nodes;  // sorted by (size, node set)
  std::vector<std::vector<std::uint32_t>> adjacency;

  std::size_t size() const { return nodes.size(); }
  std::size_t degree(std::size_t i) const { return adjacency[i].size(); }
  std::size_t edge_count() const;
  std::optional<std::size_t> index_of(const Cis& s) const;
  bool connected() const;
  bool bipartite() const;
};

/// G^(k): CISes adjacent iff they share k-1 nodes.
RelationshipGraph build_relationship_graph(const LabeledGraph& g, int k,
                                           std::size_t guard = kRelationshipGraphGuard);

/// G_mix over 3-, 4- and 5-node CISes: same-size CISes sharing all but one
/// node, and pairs where the smaller CIS is contained in the larger.
RelationshipGraph build_mix_graph(const LabeledGraph& g,
                                  std::size_t guard = kRelationshipGraphGuard);

/// Ground-truth cache: a '#' header with fingerprint, k, mode and total, then
/// one line per class: class_id, canonical code, count, concentration.
void write_ground_truth(std::ostream& out, const ClassCounts& counts,
                        const ClassRegistry& registry, std::uint64_t fingerprint);
/// Throws ParseError on malformed input or a registry/code mismatch.
ClassCounts read_ground_truth(std::istream& in, const ClassRegistry& registry,
                              std::uint64_t* fingerprint = nullptr);

struct RandEsuSample {
  Cis cis;
  double inclusion_probability = 1.0;
};

struct RandEsuResult {
  int k = 0;
  std::vector<RandEsuSample> samples;
  bool truncated = false;
  OracleStats stats;
};

/// Probabilistic ESU over the oracle: an extension to depth d survives with
/// probability depth_probs[d - 1]; roots are visited in a random order.
/// Queries each node whose adjacency is read (roots and internal tree nodes).
RandEsuResult rand_esu(QueryOracle& oracle, int k, std::span<const double> depth_probs,
                       std::uint64_t seed);

/// p_1 = 1 and 0.5 for every deeper level.
std::vector<double> default_esu_probs(int k);

/// Inclusion-weighted class frequencies of a RAND-ESU sample.
ConcentrationVector rand_esu_estimate(const RandEsuResult& result, const ClassRegistry& registry);

}  // namespace motifwalk

#endif  // MOTIFWALK_ENUMERATION_HPP_
