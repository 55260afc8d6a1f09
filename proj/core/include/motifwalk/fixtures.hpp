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


#ifndef MOTIFWALK_FIXTURES_HPP_
#define MOTIFWALK_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>

#include "motifwalk/graph.hpp"

namespace motifwalk::fixtures {

/// The five-node example graph: a-b, a-c, a-d, a-e, b-c, b-d, c-d.
/// Nodes a..e are ids 0..4.
LabeledGraph fig1();
inline constexpr NodeId kA = 0;
inline constexpr NodeId kB = 1;
inline constexpr NodeId kC = 2;
inline constexpr NodeId kD = 3;
inline constexpr NodeId kE = 4;

LabeledGraph complete(std::size_t n);
LabeledGraph cycle(std::size_t n);
LabeledGraph path(std::size_t n);
LabeledGraph star(std::size_t leaves);

/// Random spanning tree plus every other pair with probability p. Directed
/// mode orients each edge at random (both ways with probability 1/5);
/// signed mode makes each edge negative with probability 1/4.
LabeledGraph random_connected(std::size_t n, double p, std::uint64_t seed,
                              GraphMode mode = GraphMode::kUndirected);

inline constexpr std::size_t kGnutellaNodes = 6299;
inline constexpr std::size_t kGnutellaEdges = 20776;

/// Connected, heavy-tailed, sparsely clustered graph with exactly
/// kGnutellaNodes nodes and kGnutellaEdges edges, standing in for the
/// Gnutella peer-to-peer LCC when the dataset is not available.
LabeledGraph gnutella_surrogate(std::uint64_t seed = 8, GraphMode mode = GraphMode::kUndirected);

}  // namespace motifwalk::fixtures

#endif  // MOTIFWALK_FIXTURES_HPP_
