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


#ifndef MOTIFWALK_NEIGHBORHOOD_HPP_
#define MOTIFWALK_NEIGHBORHOOD_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "motifwalk/cis.hpp"
#include "motifwalk/query_oracle.hpp"

namespace motifwalk {

struct CrossEdge {
  NodeId inside = 0;
  NodeId outside = 0;
  EdgeLabel label;  // seen from `inside`
};

/// N(s) and the edges E^(N)(s) joining it to s.
struct Frontier {
  std::vector<NodeId> outside_nodes;  // ascending
  std::vector<CrossEdge> cross_edges;
};

/// Queries the nodes of s (and only those).
Frontier frontier(QueryOracle& oracle, const Cis& s);

/// X(s): CISes sharing all but one node with s.
struct NeighborSet {
  std::vector<Cis> neighbors;
  std::size_t degree() const { return neighbors.size(); }
};

NeighborSet neighbor_cises(const Cis& s, const Frontier& f);

/// Non-cut vertices of x, i.e. the number of connected (k-1)-node CISes in x.
int count_contained(const Cis& x);

/// One subgraph per non-cut vertex removed, in local-index order.
std::vector<Cis> contained_cises(const Cis& s);

/// Number of (k+1)-node CISes containing s_prime; equals |N(s_prime)|.
std::size_t containing_count(QueryOracle& oracle, const Cis& s_prime);

/// An outside node with the local members it touches.
struct FrontierGroup {
  NodeId node = 0;
  std::uint8_t mask = 0;
  std::array<std::uint8_t, kMaxCisSize> codes{};  // from each member's side, 0 if absent
};

/// X(s) in compact form: each move drops local node `removed` and adds
/// frontier group `group`. Buffers are reused across rebuilds.
class NeighborMoves {
 public:
  struct Move {
    std::uint8_t removed = 0;
    std::uint32_t group = 0;
  };

  /// Queries V(s). On BudgetExhausted the object is left unchanged.
  void build(QueryOracle& oracle, const Cis& s);
  void build(const Cis& s, const Frontier& f);

  const Cis& center() const { return s_; }
  std::size_t degree() const { return moves_.size(); }
  std::span<const Move> moves() const { return moves_; }
  std::span<const FrontierGroup> groups() const { return groups_; }

  Cis neighbor(std::size_t index) const;
  /// s plus the node of `group`: a (k+1)-node CIS containing s.
  Cis extension(std::uint32_t group) const;

  /// |N(s minus local node r)|, for r a non-cut vertex of s.
  std::size_t containing_count_without(int r) const;
  /// Non-cut vertices of s as a bitmask.
  std::uint8_t non_cut_mask() const { return non_cut_; }

  void swap(NeighborMoves& other) noexcept;

 private:
  void enumerate();

  Cis s_;
  std::vector<FrontierGroup> groups_;
  std::vector<Move> moves_;
  std::uint8_t non_cut_ = 0;
  struct Entry {
    NodeId outside;
    std::uint8_t member;
    std::uint8_t code;
  };
  std::vector<Entry> scratch_;
};

}  // namespace motifwalk

#endif  // MOTIFWALK_NEIGHBORHOOD_HPP_
