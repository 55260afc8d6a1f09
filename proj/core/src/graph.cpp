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


#include "motifwalk/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include <fmt/format.h>

namespace motifwalk {

std::string_view to_string(GraphMode mode) {
  switch (mode) {
    case GraphMode::kUndirected:
      return "undirected";
    case GraphMode::kDirected:
      return "directed";
    case GraphMode::kSigned:
      return "signed";
  }
  return "unknown";
}

GraphMode parse_graph_mode(std::string_view text) {
  if (text == "undirected") return GraphMode::kUndirected;
  if (text == "directed") return GraphMode::kDirected;
  if (text == "signed") return GraphMode::kSigned;
  throw std::invalid_argument(fmt::format("unknown graph mode '{}'", text));
}

bool label_matches_mode(EdgeLabel label, GraphMode mode) {
  const bool directed = label.direction != Direction::kNone;
  const bool signed_label = label.sign != Sign::kNone;
  return directed == (mode == GraphMode::kDirected) &&
         signed_label == (mode == GraphMode::kSigned);
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError(fmt::format("line {}: {}", line, what)), line_(line) {}

namespace {

struct HalfEdge {
  NodeId owner;
  NodeId other;
  EdgeLabel label;
};

Direction merge_direction(Direction a, Direction b) {
  if (a == b) return a;
  return Direction::kBoth;
}

Sign merge_sign(Sign a, Sign b) {
  if (a == Sign::kNegative || b == Sign::kNegative) return Sign::kNegative;
  return a;
}

}  // namespace

LabeledGraph LabeledGraph::from_arcs(GraphMode mode, std::size_t node_count,
                                     std::span<const Arc> arcs,
                                     std::vector<std::int64_t> original_ids) {
  if (!original_ids.empty() && original_ids.size() != node_count) {
    throw GraphError("original id table does not match node count");
  }
  std::vector<HalfEdge> half;
  half.reserve(arcs.size() * 2);
  for (const Arc& arc : arcs) {
    if (arc.from >= node_count || arc.to >= node_count) {
      throw GraphError(fmt::format("arc ({}, {}) references a node outside 0..{}",
                                   arc.from, arc.to, node_count));
    }
    if (arc.from == arc.to) continue;
    EdgeLabel label;
    if (mode == GraphMode::kDirected) label.direction = Direction::kForward;
    if (mode == GraphMode::kSigned) {
      label.sign = arc.sign == Sign::kNone ? Sign::kPositive : arc.sign;
    }
    half.push_back({arc.from, arc.to, label});
    half.push_back({arc.to, arc.from, label.reversed()});
  }
  std::sort(half.begin(), half.end(), [](const HalfEdge& a, const HalfEdge& b) {
    return a.owner != b.owner ? a.owner < b.owner : a.other < b.other;
  });

  LabeledGraph g;
  g.mode_ = mode;
  g.offsets_.assign(node_count + 1, 0);
  g.adjacency_.reserve(half.size());
  for (std::size_t i = 0; i < half.size();) {
    std::size_t j = i;
    EdgeLabel label = half[i].label;
    for (++j; j < half.size() && half[j].owner == half[i].owner &&
              half[j].other == half[i].other;
         ++j) {
      label.direction = merge_direction(label.direction, half[j].label.direction);
      label.sign = merge_sign(label.sign, half[j].label.sign);
    }
    g.adjacency_.push_back({half[i].other, label});
    ++g.offsets_[half[i].owner + 1];
    i = j;
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  if (original_ids.empty()) {
    original_ids.resize(node_count);
    std::iota(original_ids.begin(), original_ids.end(), std::int64_t{0});
  }
  g.original_ids_ = std::move(original_ids);
  return g;
}

void LabeledGraph::check_node(NodeId v) const {
  if (v >= node_count()) {
    throw std::out_of_range(
        fmt::format("node {} out of range (graph has {} nodes)", v, node_count()));
  }
}

std::span<const Neighbor> LabeledGraph::neighbors(NodeId v) const {
  check_node(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t LabeledGraph::degree(NodeId v) const {
  check_node(v);
  return offsets_[v + 1] - offsets_[v];
}

std::optional<EdgeLabel> LabeledGraph::has_edge(NodeId u, NodeId v) const {
  check_node(v);
  const auto adj = neighbors(u);
  const auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& n, NodeId target) { return n.node < target; });
  if (it == adj.end() || it->node != v) return std::nullopt;
  return it->label;
}

std::int64_t LabeledGraph::original_id(NodeId v) const {
  check_node(v);
  return original_ids_[v];
}

LabeledGraph LabeledGraph::induced(std::span<const NodeId> nodes) const {
  std::vector<NodeId> local(node_count(), static_cast<NodeId>(-1));
  std::vector<std::int64_t> ids;
  ids.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    check_node(nodes[i]);
    if (local[nodes[i]] != static_cast<NodeId>(-1)) {
      throw GraphError(fmt::format("node {} listed twice", nodes[i]));
    }
    local[nodes[i]] = static_cast<NodeId>(i);
    ids.push_back(original_ids_[nodes[i]]);
  }
  LabeledGraph g;
  g.mode_ = mode_;
  g.offsets_.assign(nodes.size() + 1, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::size_t begin = g.adjacency_.size();
    for (const Neighbor& n : neighbors(nodes[i])) {
      if (local[n.node] != static_cast<NodeId>(-1)) {
        g.adjacency_.push_back({local[n.node], n.label});
      }
    }
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(begin), g.adjacency_.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    g.offsets_[i + 1] = g.adjacency_.size();
  }
  g.original_ids_ = std::move(ids);
  return g;
}

std::uint64_t LabeledGraph::fingerprint() const {
  // FNV-1a over (mode, n, adjacency).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(mode_));
  mix(node_count());
  for (NodeId v = 0; v < node_count(); ++v) {
    mix(degree(v));
    for (const Neighbor& n : neighbors(v)) {
      mix(n.node);
      mix(label_code(n.label));
    }
  }
  return h;
}

namespace {

std::vector<std::uint32_t> component_labels(const LabeledGraph& g,
                                            std::uint32_t& component_count) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(g.node_count(), kUnset);
  component_count = 0;
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (comp[root] != kUnset) continue;
    comp[root] = component_count;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const Neighbor& n : g.neighbors(v)) {
        if (comp[n.node] == kUnset) {
          comp[n.node] = component_count;
          stack.push_back(n.node);
        }
      }
    }
    ++component_count;
  }
  return comp;
}

}  // namespace

LabeledGraph largest_connected_component(const LabeledGraph& g) {
  std::uint32_t count = 0;
  const auto comp = component_labels(g, count);
  std::vector<std::size_t> sizes(count, 0);
  std::vector<std::int64_t> min_id(count, std::numeric_limits<std::int64_t>::max());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    ++sizes[comp[v]];
    min_id[comp[v]] = std::min(min_id[comp[v]], g.original_id(v));
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < count; ++c) {
    if (sizes[c] > sizes[best] || (sizes[c] == sizes[best] && min_id[c] < min_id[best])) {
      best = c;
    }
  }
  std::vector<NodeId> keep;
  keep.reserve(count == 0 ? 0 : sizes[best]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] == best) keep.push_back(v);
  }
  return g.induced(keep);
}

bool is_connected(const LabeledGraph& g) {
  std::uint32_t count = 0;
  component_labels(g, count);
  return count <= 1;
}

}  // namespace motifwalk
