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


#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "motifwalk/graph.hpp"

namespace motifwalk {
namespace {

struct RawEdge {
  std::int64_t u;
  std::int64_t v;
  Sign sign;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::int64_t parse_id(std::string_view field, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, fmt::format("'{}' is not an integer node id", field));
  }
  return value;
}

Sign parse_sign(std::string_view field, std::size_t line_no) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc() && ptr == field.data() + field.size()) {
    if (value == 1) return Sign::kPositive;
    if (value == -1) return Sign::kNegative;
  }
  throw ParseError(line_no, fmt::format("sign must be +1 or -1, got '{}'", field));
}

}  // namespace

LabeledGraph load_edge_list(std::istream& in, GraphMode mode) {
  std::vector<RawEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    while (!view.empty() && is_space(view.front())) view.remove_prefix(1);
    if (view.empty() || view.front() == '#') continue;
    const auto fields = split_fields(view);
    if (fields.size() < 2) {
      throw ParseError(line_no, "expected at least two fields");
    }
    RawEdge edge{parse_id(fields[0], line_no), parse_id(fields[1], line_no), Sign::kNone};
    if (mode == GraphMode::kSigned) {
      if (fields.size() < 3) throw ParseError(line_no, "signed mode needs a third field");
      edge.sign = parse_sign(fields[2], line_no);
    }
    edges.push_back(edge);
  }
  if (in.bad()) throw GraphError("read error while loading edge list");

  std::vector<std::int64_t> ids;
  ids.reserve(edges.size() * 2);
  for (const RawEdge& e : edges) {
    if (e.u == e.v) continue;
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw GraphError("edge list contains no edges");

  auto dense = [&ids](std::int64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (const RawEdge& e : edges) {
    if (e.u == e.v) continue;
    arcs.push_back({dense(e.u), dense(e.v), e.sign});
  }
  const std::size_t n = ids.size();
  return LabeledGraph::from_arcs(mode, n, arcs, std::move(ids));
}

LabeledGraph load_edge_list(const std::filesystem::path& path, GraphMode mode) {
  std::ifstream in(path);
  if (!in) throw GraphError(fmt::format("cannot open '{}'", path.string()));
  return load_edge_list(in, mode);
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
  out << "# motifwalk edge list, mode=" << to_string(g.mode()) << ", nodes=" << g.node_count()
      << ", edges=" << g.edge_count() << '\n';
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (const Neighbor& n : g.neighbors(u)) {
      const std::int64_t a = g.original_id(u);
      const std::int64_t b = g.original_id(n.node);
      switch (g.mode()) {
        case GraphMode::kUndirected:
          if (u < n.node) out << a << ' ' << b << '\n';
          break;
        case GraphMode::kSigned:
          if (u < n.node) {
            out << a << ' ' << b << ' ' << (n.label.sign == Sign::kNegative ? "-1" : "1") << '\n';
          }
          break;
        case GraphMode::kDirected:
          if (n.label.direction == Direction::kForward ||
              (n.label.direction == Direction::kBoth)) {
            out << a << ' ' << b << '\n';
          }
          break;
      }
    }
  }
}

}  // namespace motifwalk
