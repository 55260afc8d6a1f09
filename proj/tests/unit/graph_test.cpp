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


#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "motifwalk/fixtures.hpp"
#include "motifwalk/graph.hpp"

namespace motifwalk {
namespace {

LabeledGraph parse(const std::string& text, GraphMode mode = GraphMode::kUndirected) {
  std::istringstream in(text);
  return load_edge_list(in, mode);
}

std::size_t degree_sum(const LabeledGraph& g) {
  std::size_t sum = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) sum += g.degree(v);
  return sum;
}

TEST(EdgeList, SingleEdge) {
  const LabeledGraph g = parse("0 1\n");
  EXPECT_EQ(g.node_count(), 2U);
  EXPECT_EQ(g.edge_count(), 1U);
}

TEST(EdgeList, CommentsSelfLoopsAndDuplicates) {
  const LabeledGraph g = parse("# header\n10 20\n20 10\n20 20\n\n30 10\n");
  EXPECT_EQ(g.node_count(), 3U);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.original_id(0), 10);
  EXPECT_EQ(g.original_id(2), 30);
}

TEST(EdgeList, ReciprocalArcsBecomeBoth) {
  const LabeledGraph g = parse("1 2\n2 1\n2 3\n", GraphMode::kDirected);
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.has_edge(0, 1)->direction, Direction::kBoth);
  EXPECT_EQ(g.has_edge(1, 2)->direction, Direction::kForward);
  EXPECT_EQ(g.has_edge(2, 1)->direction, Direction::kBackward);
}

TEST(EdgeList, SignedEdgesCarrySign) {
  const LabeledGraph g = parse("1 2 1\n2 3 -1\n3 4 +1\n", GraphMode::kSigned);
  EXPECT_EQ(g.has_edge(0, 1)->sign, Sign::kPositive);
  EXPECT_EQ(g.has_edge(2, 1)->sign, Sign::kNegative);
  EXPECT_EQ(g.has_edge(3, 2)->sign, Sign::kPositive);
}

TEST(EdgeList, MalformedLineReportsLineNumber) {
  try {
    parse("0 1\n# ok\n2 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  EXPECT_THROW(parse("0 1\n1\n"), ParseError);
  EXPECT_THROW(parse("0 1 2\n", GraphMode::kSigned), ParseError);
  EXPECT_THROW(parse("0 1\n", GraphMode::kSigned), ParseError);
}

TEST(EdgeList, EmptyGraphIsAnError) {
  EXPECT_THROW(parse("# nothing\n"), GraphError);
  EXPECT_THROW(parse("3 3\n"), GraphError);
}

TEST(EdgeList, WriteThenReadRoundTrips) {
  for (const GraphMode mode : {GraphMode::kUndirected, GraphMode::kDirected, GraphMode::kSigned}) {
    const LabeledGraph g = fixtures::random_connected(15, 0.2, 7, mode);
    std::ostringstream out;
    write_edge_list(out, g);
    const LabeledGraph back = parse(out.str(), mode);
    EXPECT_EQ(back.fingerprint(), g.fingerprint()) << to_string(mode);
  }
}

TEST(Graph, Fig1Degrees) {
  const LabeledGraph g = fixtures::fig1();
  EXPECT_EQ(g.node_count(), 5U);
  EXPECT_EQ(g.edge_count(), 7U);
  EXPECT_EQ(g.degree(fixtures::kA), 4U);
  EXPECT_EQ(g.degree(fixtures::kE), 1U);
  EXPECT_FALSE(g.has_edge(fixtures::kB, fixtures::kE));
  EXPECT_TRUE(g.has_edge(fixtures::kC, fixtures::kD));
}

TEST(Graph, OutOfRangeIdsThrow) {
  const LabeledGraph g = fixtures::fig1();
  EXPECT_THROW(g.neighbors(5), std::out_of_range);
  EXPECT_THROW(g.degree(99), std::out_of_range);
  EXPECT_THROW(g.has_edge(0, 5), std::out_of_range);
}

TEST(Graph, AdjacencySortedAndDegreeSumIsTwiceEdges) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const GraphMode mode : {GraphMode::kUndirected, GraphMode::kDirected, GraphMode::kSigned}) {
      const LabeledGraph g = fixtures::random_connected(12, 0.3, seed, mode);
      EXPECT_EQ(degree_sum(g), 2 * g.edge_count());
      for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
          EXPECT_NE(nbrs[i].node, v);
          if (i > 0) EXPECT_LT(nbrs[i - 1].node, nbrs[i].node);
          EXPECT_TRUE(label_matches_mode(nbrs[i].label, mode));
        }
      }
    }
  }
}

TEST(Graph, DirectionRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const LabeledGraph g = fixtures::random_connected(10, 0.4, seed, GraphMode::kDirected);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (const Neighbor& nb : g.neighbors(u)) {
        EXPECT_EQ(*g.has_edge(nb.node, u), nb.label.reversed());
      }
    }
  }
}

TEST(Lcc, ConnectedGraphIsUnchanged) {
  const LabeledGraph g = fixtures::random_connected(20, 0.1, 3);
  const LabeledGraph lcc = largest_connected_component(g);
  EXPECT_EQ(lcc.fingerprint(), g.fingerprint());
}

TEST(Lcc, PicksLargestThenSmallestOriginalId) {
  const LabeledGraph g = parse("10 11\n11 12\n12 10\n1 2\n2 3\n3 1\n7 8\n");
  const LabeledGraph lcc = largest_connected_component(g);
  EXPECT_EQ(lcc.node_count(), 3U);
  EXPECT_EQ(lcc.edge_count(), 3U);
  EXPECT_EQ(lcc.original_id(0), 1);

  const LabeledGraph bigger = parse("1 2\n5 6\n6 7\n7 8\n");
  EXPECT_EQ(largest_connected_component(bigger).node_count(), 4U);
}

TEST(Lcc, Idempotent) {
  const LabeledGraph g = parse("1 2\n2 3\n4 5\n5 6\n6 7\n8 9\n");
  const LabeledGraph once = largest_connected_component(g);
  const LabeledGraph twice = largest_connected_component(once);
  EXPECT_EQ(once.fingerprint(), twice.fingerprint());
  EXPECT_TRUE(std::equal(once.original_ids().begin(), once.original_ids().end(),
                         twice.original_ids().begin(), twice.original_ids().end()));
  EXPECT_TRUE(is_connected(once));
}

TEST(Lcc, GnutellaDatasetWhenPresent) {
  const char* env = std::getenv("MOTIFWALK_GNUTELLA");
  const std::filesystem::path path = env != nullptr ? env : "data/p2p-Gnutella08.txt";
  if (!std::filesystem::exists(path)) GTEST_SKIP() << "dataset not available at " << path;
  const LabeledGraph lcc = largest_connected_component(load_edge_list(path, GraphMode::kUndirected));
  EXPECT_EQ(lcc.node_count(), 6299U);
  EXPECT_EQ(lcc.edge_count(), 20776U);
}

TEST(Fixtures, GnutellaSurrogateShape) {
  const LabeledGraph g = fixtures::gnutella_surrogate();
  EXPECT_EQ(g.node_count(), fixtures::kGnutellaNodes);
  EXPECT_EQ(g.edge_count(), fixtures::kGnutellaEdges);
  EXPECT_TRUE(is_connected(g));
}

}  // namespace
}  // namespace motifwalk
