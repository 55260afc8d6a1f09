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


#include "motifwalk/cis.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace motifwalk {

Cis Cis::with_nodes(std::span<const NodeId> sorted_nodes) {
  if (sorted_nodes.empty() || sorted_nodes.size() > static_cast<std::size_t>(kMaxCisSize)) {
    throw GraphError(fmt::format("subgraph size {} outside 1..{}", sorted_nodes.size(),
                                 kMaxCisSize));
  }
  Cis s;
  s.size_ = static_cast<std::uint8_t>(sorted_nodes.size());
  for (std::size_t i = 0; i < sorted_nodes.size(); ++i) {
    if (i > 0 && sorted_nodes[i - 1] >= sorted_nodes[i]) {
      throw GraphError("subgraph nodes must be sorted and distinct");
    }
    s.nodes_[i] = sorted_nodes[i];
  }
  return s;
}

int Cis::index_of(NodeId v) const {
  const auto begin = nodes_.begin();
  const auto end = begin + size_;
  const auto it = std::lower_bound(begin, end, v);
  return (it != end && *it == v) ? static_cast<int>(it - begin) : -1;
}

std::uint8_t Cis::code(int i, int j) const {
  const std::uint8_t stored = codes_[static_cast<std::size_t>(pair_slot(i, j))];
  return i < j ? stored : reverse_code(stored);
}

std::optional<EdgeLabel> Cis::label(int i, int j) const {
  const std::uint8_t c = code(i, j);
  if (c == 0) return std::nullopt;
  return label_from_code(c);
}

void Cis::set_code(int i, int j, std::uint8_t code_from_i) {
  const auto slot = static_cast<std::size_t>(pair_slot(i, j));
  codes_[slot] = i < j ? code_from_i : reverse_code(code_from_i);
  const auto bi = static_cast<std::uint8_t>(1U << j);
  const auto bj = static_cast<std::uint8_t>(1U << i);
  if (code_from_i != 0) {
    adjacency_[static_cast<std::size_t>(i)] |= bi;
    adjacency_[static_cast<std::size_t>(j)] |= bj;
  } else {
    adjacency_[static_cast<std::size_t>(i)] &= static_cast<std::uint8_t>(~bi);
    adjacency_[static_cast<std::size_t>(j)] &= static_cast<std::uint8_t>(~bj);
  }
}

int Cis::edge_count() const {
  int twice = 0;
  for (int i = 0; i < size_; ++i) twice += std::popcount(adjacency_[static_cast<std::size_t>(i)]);
  return twice / 2;
}

std::vector<CisEdge> Cis::edges() const {
  std::vector<CisEdge> out;
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) {
      if (const auto l = label(i, j)) out.push_back({i, j, *l});
    }
  }
  return out;
}

bool operator<(const Cis& a, const Cis& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return std::lexicographical_compare(a.nodes_.begin(), a.nodes_.begin() + a.size_,
                                      b.nodes_.begin(), b.nodes_.begin() + b.size_);
}

std::size_t CisHash::operator()(const Cis& s) const {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(s.size());
  for (const NodeId v : s.nodes()) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool mask_connected(const Cis& s, std::uint8_t members) {
  if (members == 0) return false;
  auto reach = static_cast<std::uint8_t>(members & (~members + 1));  // lowest bit
  for (;;) {
    std::uint8_t next = reach;
    for (std::uint8_t rest = reach; rest != 0; rest &= static_cast<std::uint8_t>(rest - 1)) {
      next |= s.adjacency_mask(std::countr_zero(rest));
    }
    next &= members;
    if (next == reach) break;
    reach = next;
  }
  return reach == members;
}

Cis induced_cis(const LabeledGraph& g, std::span<const NodeId> nodes) {
  std::array<NodeId, kMaxCisSize> sorted{};
  if (nodes.empty() || nodes.size() > sorted.size()) {
    throw GraphError(fmt::format("subgraph size {} outside 1..{}", nodes.size(), kMaxCisSize));
  }
  std::copy(nodes.begin(), nodes.end(), sorted.begin());
  const auto end = sorted.begin() + static_cast<std::ptrdiff_t>(nodes.size());
  std::sort(sorted.begin(), end);
  if (std::adjacent_find(sorted.begin(), end) != end) {
    throw GraphError("duplicate node in induced subgraph request");
  }
  Cis s = Cis::with_nodes({sorted.data(), nodes.size()});
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (const auto l = g.has_edge(s.node(i), s.node(j))) s.set_edge(i, j, *l);
    }
  }
  return s;
}

bool is_connected(const Cis& s) { return s.size() > 0 && mask_connected(s, s.full_mask()); }

Cis remove_node(const Cis& s, int index) {
  std::array<NodeId, kMaxCisSize> kept{};
  std::array<int, kMaxCisSize> old{};
  int n = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (i == index) continue;
    kept[static_cast<std::size_t>(n)] = s.node(i);
    old[static_cast<std::size_t>(n)] = i;
    ++n;
  }
  Cis out = Cis::with_nodes({kept.data(), static_cast<std::size_t>(n)});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint8_t c = s.code(old[static_cast<std::size_t>(i)], old[static_cast<std::size_t>(j)]);
      if (c != 0) out.set_code(i, j, c);
    }
  }
  return out;
}

Cis add_node(const Cis& s, NodeId u, std::span<const std::uint8_t> codes_from_members) {
  const int k = s.size();
  if (k >= kMaxCisSize) throw GraphError("subgraph already at maximum size");
  if (s.contains(u)) throw GraphError(fmt::format("node {} already in subgraph", u));
  const auto members = s.nodes();
  const int pos = static_cast<int>(std::lower_bound(members.begin(), members.end(), u) - members.begin());
  std::array<NodeId, kMaxCisSize> merged{};
  for (int i = 0, o = 0; i <= k; ++i) {
    merged[static_cast<std::size_t>(i)] = (i == pos) ? u : s.node(o++);
  }
  Cis out = Cis::with_nodes({merged.data(), static_cast<std::size_t>(k + 1)});
  auto shifted = [pos](int i) { return i < pos ? i : i + 1; };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::uint8_t c = s.code(i, j);
      if (c != 0) out.set_code(shifted(i), shifted(j), c);
    }
    const std::uint8_t c = codes_from_members[static_cast<std::size_t>(i)];
    if (c != 0) out.set_code(shifted(i), pos, c);
  }
  return out;
}

Cis replace_node(const Cis& s, int index, NodeId u,
                 std::span<const std::uint8_t> codes_from_members) {
  std::array<std::uint8_t, kMaxCisSize> rest{};
  for (int i = 0, o = 0; i < s.size(); ++i) {
    if (i == index) continue;
    rest[static_cast<std::size_t>(o++)] = codes_from_members[static_cast<std::size_t>(i)];
  }
  return add_node(remove_node(s, index), u,
                  {rest.data(), static_cast<std::size_t>(s.size() - 1)});
}

std::string to_string(const Cis& s) { return fmt::format("{{{}}}", fmt::join(s.nodes(), ",")); }

}  // namespace motifwalk
