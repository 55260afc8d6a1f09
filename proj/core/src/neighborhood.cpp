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


#include "motifwalk/neighborhood.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace motifwalk {
namespace {

std::uint8_t bit(int i) { return static_cast<std::uint8_t>(1U << i); }

std::uint8_t reach_within(const Cis& s, std::uint8_t seed, std::uint8_t members) {
  std::uint8_t reach = seed;
  for (;;) {
    std::uint8_t next = reach;
    for (std::uint8_t rest = reach; rest != 0; rest &= static_cast<std::uint8_t>(rest - 1)) {
      next |= s.adjacency_mask(std::countr_zero(rest));
    }
    next &= members;
    if (next == reach) return reach;
    reach = next;
  }
}

}  // namespace

Frontier frontier(QueryOracle& oracle, const Cis& s) {
  Frontier f;
  for (const NodeId v : s.nodes()) {
    for (const Neighbor& nb : oracle.query(v).incident) {
      if (s.contains(nb.node)) continue;
      f.cross_edges.push_back({v, nb.node, nb.label});
      f.outside_nodes.push_back(nb.node);
    }
  }
  std::sort(f.outside_nodes.begin(), f.outside_nodes.end());
  f.outside_nodes.erase(std::unique(f.outside_nodes.begin(), f.outside_nodes.end()),
                        f.outside_nodes.end());
  return f;
}

NeighborSet neighbor_cises(const Cis& s, const Frontier& f) {
  NeighborMoves moves;
  moves.build(s, f);
  NeighborSet out;
  out.neighbors.reserve(moves.degree());
  for (std::size_t i = 0; i < moves.degree(); ++i) out.neighbors.push_back(moves.neighbor(i));
  return out;
}

int count_contained(const Cis& x) {
  if (x.size() < 2) return 0;
  int count = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (mask_connected(x, static_cast<std::uint8_t>(x.full_mask() & ~bit(i)))) ++count;
  }
  return count;
}

std::vector<Cis> contained_cises(const Cis& s) {
  std::vector<Cis> out;
  if (s.size() < 2) return out;
  for (int i = 0; i < s.size(); ++i) {
    if (mask_connected(s, static_cast<std::uint8_t>(s.full_mask() & ~bit(i)))) {
      out.push_back(remove_node(s, i));
    }
  }
  return out;
}

std::size_t containing_count(QueryOracle& oracle, const Cis& s_prime) {
  return frontier(oracle, s_prime).outside_nodes.size();
}

void NeighborMoves::build(QueryOracle& oracle, const Cis& s) {
  scratch_.clear();
  for (int i = 0; i < s.size(); ++i) {
    for (const Neighbor& nb : oracle.query(s.node(i)).incident) {
      if (!s.contains(nb.node)) {
        scratch_.push_back({nb.node, static_cast<std::uint8_t>(i), label_code(nb.label)});
      }
    }
  }
  s_ = s;
  enumerate();
}

void NeighborMoves::build(const Cis& s, const Frontier& f) {
  scratch_.clear();
  for (const CrossEdge& e : f.cross_edges) {
    const int i = s.index_of(e.inside);
    assert(i >= 0 && !s.contains(e.outside));
    scratch_.push_back({e.outside, static_cast<std::uint8_t>(i), label_code(e.label)});
  }
  s_ = s;
  enumerate();
}

void NeighborMoves::enumerate() {
  std::sort(scratch_.begin(), scratch_.end(),
            [](const Entry& a, const Entry& b) { return a.outside < b.outside; });
  groups_.clear();
  for (const Entry& e : scratch_) {
    if (groups_.empty() || groups_.back().node != e.outside) groups_.push_back({e.outside, 0, {}});
    FrontierGroup& g = groups_.back();
    g.mask |= bit(e.member);
    g.codes[e.member] = e.code;
  }

  moves_.clear();
  non_cut_ = 0;
  const int k = s_.size();
  const std::uint8_t full = s_.full_mask();
  const auto group_count = static_cast<std::uint32_t>(groups_.size());
  if (k == 1) {
    for (std::uint32_t g = 0; g < group_count; ++g) moves_.push_back({0, g});
    return;
  }
  for (int r = 0; r < k; ++r) {
    const auto rest = static_cast<std::uint8_t>(full & ~bit(r));
    std::array<std::uint8_t, kMaxCisSize> components{};
    int component_count = 0;
    for (std::uint8_t left = rest; left != 0;) {
      const std::uint8_t c = reach_within(s_, static_cast<std::uint8_t>(left & (~left + 1)), rest);
      components[static_cast<std::size_t>(component_count++)] = c;
      left = static_cast<std::uint8_t>(left & ~c);
    }
    if (component_count == 1) non_cut_ |= bit(r);
    for (std::uint32_t g = 0; g < group_count; ++g) {
      const std::uint8_t mask = groups_[g].mask;
      bool joins_all = true;
      for (int c = 0; c < component_count && joins_all; ++c) {
        joins_all = (mask & components[static_cast<std::size_t>(c)]) != 0;
      }
      if (joins_all) moves_.push_back({static_cast<std::uint8_t>(r), g});
    }
  }
}

Cis NeighborMoves::neighbor(std::size_t index) const {
  const Move m = moves_.at(index);
  const FrontierGroup& g = groups_[m.group];
  return replace_node(s_, m.removed, g.node,
                      {g.codes.data(), static_cast<std::size_t>(s_.size())});
}

Cis NeighborMoves::extension(std::uint32_t group) const {
  const FrontierGroup& g = groups_.at(group);
  return add_node(s_, g.node, {g.codes.data(), static_cast<std::size_t>(s_.size())});
}

std::size_t NeighborMoves::containing_count_without(int r) const {
  assert((non_cut_ & bit(r)) != 0);
  const auto keep = static_cast<std::uint8_t>(s_.full_mask() & ~bit(r));
  // Starts at 1 for the removed node.
  std::size_t count = 1;
  for (const FrontierGroup& g : groups_) {
    if ((g.mask & keep) != 0) ++count;
  }
  return count;
}

void NeighborMoves::swap(NeighborMoves& other) noexcept {
  std::swap(s_, other.s_);
  groups_.swap(other.groups_);
  moves_.swap(other.moves_);
  std::swap(non_cut_, other.non_cut_);
}

}  // namespace motifwalk
