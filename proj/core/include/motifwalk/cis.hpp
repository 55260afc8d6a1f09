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


#ifndef MOTIFWALK_CIS_HPP_
#define MOTIFWALK_CIS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motifwalk/graph.hpp"

namespace motifwalk {

inline constexpr int kMaxCisSize = 8;
inline constexpr int kMaxCisPairs = kMaxCisSize * (kMaxCisSize - 1) / 2;

/// Storage slot of the unordered local pair {i, j}. Independent of k, so a
/// subgraph can grow without relaying out existing pairs.
constexpr int pair_slot(int i, int j) {
  return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

struct CisEdge {
  int a = 0;  // local index, a < b
  int b = 0;
  EdgeLabel label;  // seen from a
};

/// A small induced subgraph: sorted node ids plus the labeled edges among
/// them. Fixed capacity (k <= 8) so walkers can copy states without
/// allocating.
class Cis {
 public:
  Cis() = default;

  /// Edgeless subgraph on `sorted_nodes` (ascending, distinct, 1..8 nodes).
  static Cis with_nodes(std::span<const NodeId> sorted_nodes);

  int size() const { return size_; }
  std::span<const NodeId> nodes() const { return {nodes_.data(), static_cast<std::size_t>(size_)}; }
  NodeId node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  /// Local index of `v`, or -1.
  int index_of(NodeId v) const;
  bool contains(NodeId v) const { return index_of(v) >= 0; }

  /// Label code of {i, j} seen from i; 0 when not adjacent.
  std::uint8_t code(int i, int j) const;
  std::optional<EdgeLabel> label(int i, int j) const;
  void set_code(int i, int j, std::uint8_t code_from_i);
  void set_edge(int i, int j, EdgeLabel label_from_i) { set_code(i, j, label_code(label_from_i)); }

  /// Bit j set when local nodes i and j are adjacent.
  std::uint8_t adjacency_mask(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
  std::uint8_t full_mask() const { return static_cast<std::uint8_t>((1U << size_) - 1U); }
  int edge_count() const;
  std::vector<CisEdge> edges() const;

  friend bool operator==(const Cis&, const Cis&) = default;
  /// Orders by size, then node set.
  friend bool operator<(const Cis& a, const Cis& b);

 private:
  std::array<NodeId, kMaxCisSize> nodes_{};
  std::array<std::uint8_t, kMaxCisPairs> codes_{};
  std::array<std::uint8_t, kMaxCisSize> adjacency_{};
  std::uint8_t size_ = 0;
};

struct CisHash {
  std::size_t operator()(const Cis& s) const;
};

/// True when the local nodes in `members` induce a connected skeleton.
bool mask_connected(const Cis& s, std::uint8_t members);

/// Induced subgraph of g on `nodes` (any order). Throws GraphError on
/// duplicates or more than kMaxCisSize nodes.
Cis induced_cis(const LabeledGraph& g, std::span<const NodeId> nodes);

bool is_connected(const Cis& s);

/// `s` without its local node `index`.
Cis remove_node(const Cis& s, int index);

/// `s` plus node `u`; `codes_from_members[i]` is the label code of
/// {s.node(i), u} seen from s.node(i), 0 when not adjacent.
Cis add_node(const Cis& s, NodeId u, std::span<const std::uint8_t> codes_from_members);

/// Replaces local node `index` with `u` (codes as in add_node, indexed by
/// the original local positions of s).
Cis replace_node(const Cis& s, int index, NodeId u,
                 std::span<const std::uint8_t> codes_from_members);

std::string to_string(const Cis& s);

}  // namespace motifwalk

#endif  // MOTIFWALK_CIS_HPP_
