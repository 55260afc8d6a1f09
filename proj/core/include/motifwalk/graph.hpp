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


#ifndef MOTIFWALK_GRAPH_HPP_
#define MOTIFWALK_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace motifwalk {

/// Dense node index, 0..node_count-1 after loading.
using NodeId = std::uint32_t;

enum class GraphMode : std::uint8_t { kUndirected, kDirected, kSigned };

enum class Direction : std::uint8_t { kNone, kForward, kBackward, kBoth };

enum class Sign : std::uint8_t { kNone, kPositive, kNegative };

std::string_view to_string(GraphMode mode);
GraphMode parse_graph_mode(std::string_view text);

/// Label of an edge as seen from one endpoint. `kForward` means the arc
/// leaves the viewing endpoint.
struct EdgeLabel {
  Direction direction = Direction::kNone;
  Sign sign = Sign::kNone;

  /// The same edge seen from the other endpoint.
  constexpr EdgeLabel reversed() const {
    EdgeLabel out = *this;
    if (direction == Direction::kForward) {
      out.direction = Direction::kBackward;
    } else if (direction == Direction::kBackward) {
      out.direction = Direction::kForward;
    }
    return out;
  }

  friend constexpr bool operator==(EdgeLabel, EdgeLabel) = default;
};

/// Compact nonzero byte for a label; 0 is reserved for "no edge".
/// code = 1 + direction + 4 * sign.
constexpr std::uint8_t label_code(EdgeLabel label) {
  return static_cast<std::uint8_t>(1 + static_cast<int>(label.direction) +
                                   4 * static_cast<int>(label.sign));
}

constexpr EdgeLabel label_from_code(std::uint8_t code) {
  const int raw = code - 1;
  return EdgeLabel{static_cast<Direction>(raw % 4),
                   static_cast<Sign>(raw / 4)};
}

constexpr std::uint8_t reverse_code(std::uint8_t code) {
  return code == 0 ? 0 : label_code(label_from_code(code).reversed());
}

/// True when `label` carries exactly the fields that `mode` requires.
bool label_matches_mode(EdgeLabel label, GraphMode mode);

struct Neighbor {
  NodeId node = 0;
  EdgeLabel label;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Input record for graph construction. In directed mode the arc runs
/// `from -> to`; in the other modes the pair is unordered.
struct Arc {
  NodeId from = 0;
  NodeId to = 0;
  Sign sign = Sign::kNone;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable labeled graph in CSR form. Each undirected skeleton edge is
/// stored twice, once per endpoint, with symmetric-consistent labels.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Builds a graph over nodes 0..node_count-1. Self-loops are dropped;
  /// duplicate arcs merge, reciprocal directed arcs become `kBoth`, and
  /// conflicting signs on one skeleton edge resolve to negative.
  static LabeledGraph from_arcs(GraphMode mode, std::size_t node_count,
                                std::span<const Arc> arcs,
                                std::vector<std::int64_t> original_ids = {});

  GraphMode mode() const { return mode_; }
  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adjacency_.size() / 2; }

  std::span<const Neighbor> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const;
  /// O(log d(u)) lookup; the label is seen from `u`.
  std::optional<EdgeLabel> has_edge(NodeId u, NodeId v) const;

  std::int64_t original_id(NodeId v) const;
  std::span<const std::int64_t> original_ids() const { return original_ids_; }

  /// Induced subgraph on `nodes`; node i of the result is nodes[i].
  LabeledGraph induced(std::span<const NodeId> nodes) const;

  /// Stable 64-bit hash of mode and labeled structure (not original ids).
  std::uint64_t fingerprint() const;

 private:
  void check_node(NodeId v) const;

  GraphMode mode_ = GraphMode::kUndirected;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::vector<std::int64_t> original_ids_;
};

/// Parses a SNAP-style edge list: "u v" per line ("u v s" with s = +1/-1 in
/// signed mode), '#' comment lines. External ids are densified in ascending
/// order. Throws ParseError on malformed input and GraphError when empty.
LabeledGraph load_edge_list(std::istream& in, GraphMode mode);
LabeledGraph load_edge_list(const std::filesystem::path& path, GraphMode mode);

/// Writes one line per skeleton edge using original ids. Directed `kBoth`
/// edges are written as two reciprocal lines.
void write_edge_list(std::ostream& out, const LabeledGraph& g);

/// Induced subgraph on the largest connected component of the undirected
/// skeleton. Ties go to the component holding the smallest original id.
LabeledGraph largest_connected_component(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);

}  // namespace motifwalk

#endif  // MOTIFWALK_GRAPH_HPP_
