// Copyright 2026 The hamsq Authors
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

#include <gtest/gtest.h>

#include "hamsq/corpus.h"
#include "hamsq/decomposition.h"
#include "hamsq/error.h"
#include "hamsq/hamilton.h"
#include "oracles.h"

namespace hamsq {
namespace {

Graph bowtie() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

TEST(DecompositionTest, BowtieHasTwoTriangleBlocks) {
  const BlockForest f = block_forest(bowtie());
  ASSERT_EQ(f.blocks.size(), 2u);
  EXPECT_EQ(f.cutvertices, VertexSet({2}));
  for (const Block& b : f.blocks) {
    EXPECT_EQ(b.kind, BlockKind::kTwoConnected);
    EXPECT_EQ(b.vertices.size(), 3u);
    EXPECT_TRUE(b.endblock);
  }
  EXPECT_EQ(f.bc.order(), 3);
  EXPECT_EQ(f.bc.size(), 2);
  EXPECT_EQ(is_block_chain(bowtie()), ChainKind::kNonTrivial);
}

TEST(DecompositionTest, StarIsNotAChain) {
  EXPECT_EQ(is_block_chain(star_graph(3)), ChainKind::kNotAChain);
  EXPECT_EQ(is_block_chain(path_graph(4)), ChainKind::kNonTrivial);
  EXPECT_EQ(is_block_chain(cycle_graph(5)), ChainKind::kTrivial);
}

TEST(DecompositionTest, ChainRejectsDisconnected) {
  try {
    is_block_chain(Graph::build(3, {{0, 1}}));
    FAIL();
  } catch (const HamsqError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(DecompositionTest, DigonIsTwoConnected) {
  EXPECT_TRUE(is_two_connected(Graph::build(2, {{0, 1}, {0, 1}})));
  EXPECT_FALSE(is_two_connected(path_graph(2)));
}

TEST(DecompositionTest, IsolatedVertexAndBridgeKinds) {
  EXPECT_EQ(block_forest(Graph::build(1, {})).blocks.at(0).kind, BlockKind::kIsolated);
  EXPECT_EQ(block_forest(path_graph(2)).blocks.at(0).kind, BlockKind::kBridge);
}

TEST(DecompositionTest, SubdividedK4) {
  const Graph s = full_subdivision(complete_graph(4));
  EXPECT_EQ(s.order(), 10);
  EXPECT_EQ(s.size(), 12);
  EXPECT_TRUE(is_dt_graph(s));
  EXPECT_FALSE(is_dt_graph(complete_graph(4)));
  EXPECT_EQ(v2(s).size(), 6u);
  const auto paths = suspended_paths(s);
  ASSERT_EQ(paths.size(), 6u);
  for (const auto& p : paths) {
    EXPECT_EQ(p.vertices.size(), 3u);
    EXPECT_LT(p.front(), p.back());
    EXPECT_EQ(s.degree(p.vertices[1]), 2);
  }
}

TEST(DecompositionTest, NoSuspendedPathsInCycleOrK4) {
  EXPECT_TRUE(suspended_paths(cycle_graph(4)).empty());
  EXPECT_TRUE(suspended_paths(complete_graph(4)).empty());
}

TEST(DecompositionTest, SuspendedPathsAreMaximal) {
  // Theta graph: two branch vertices joined by paths of lengths 1, 2, 3.
  const Graph theta = Graph::build(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}});
  const auto paths = suspended_paths(theta);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].vertices.size() + paths[1].vertices.size(), 7u);
}

TEST(DecompositionTest, AgreesWithDeletionOracle) {
  for (const Graph& g : oracle::small_graphs()) {
    if (!is_connected(g)) continue;
    const BlockForest f = block_forest(g);
    ASSERT_EQ(f.cutvertices.members(), oracle::cutvertices(g)) << to_graph6(g);
    ASSERT_EQ(is_two_connected(g), oracle::two_connected(g)) << to_graph6(g);
    std::size_t edges = 0;
    for (const Block& b : f.blocks) edges += b.edges.size();
    ASSERT_EQ(edges, static_cast<std::size_t>(g.size()));
    const bool single = f.blocks.size() == 1 && f.blocks[0].kind == BlockKind::kTwoConnected;
    ASSERT_EQ(is_two_connected(g), single);
  }
}

TEST(DecompositionTest, NonTrivialChainHasTwoEndblocksAndPathBc) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() > 7 || !is_connected(g)) continue;
    const BlockForest f = block_forest(g);
    int ends = 0;
    for (const Block& b : f.blocks) ends += b.endblock;
    bool bc_path = f.bc.size() >= 1 && is_tree(f.bc);
    for (Vertex v = 0; v < f.bc.order() && bc_path; ++v) bc_path = f.bc.degree(v) <= 2;
    const bool expected = ends == 2 && bc_path;
    ASSERT_EQ(is_block_chain(g) == ChainKind::kNonTrivial, expected) << to_graph6(g);
  }
}

TEST(DecompositionTest, DtMatchesDefinition) {
  for (const Graph& g : oracle::small_graphs()) {
    bool dt = true;
    for (const Edge& e : g.edges()) dt = dt && (g.degree(e.u) == 2 || g.degree(e.v) == 2);
    ASSERT_EQ(is_dt_graph(g), dt) << to_graph6(g);
  }
}

TEST(DecompositionTest, SubdivisionPreservesTwoConnectivity) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() > 6 || g.size() == 0) continue;
    const Graph s = full_subdivision(g);
    ASSERT_TRUE(is_dt_graph(s));
    if (is_two_connected(g)) ASSERT_TRUE(is_two_connected(s));
  }
}

// G+ of a DT-graph stays DT when x1, x2 are not adjacent and only see
// 2-valent vertices.
TEST(DecompositionTest, GPlusOfDtGraph) {
  for (const Graph& g : read_graph_file(oracle::data_path("dt_blocks_n3-10.g6"))) {
    const VertexSet two = v2(g);
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex b = a + 1; b < g.order(); ++b) {
        const Graph h = g_plus(g, a, b).graph;
        ASSERT_TRUE(is_two_connected(h));
        bool inside = true;
        for (Vertex x : {a, b}) {
          for (Vertex y : g.neighbors(x)) inside = inside && two.contains(y);
        }
        if (inside && !g.adjacent(a, b)) {
          ASSERT_TRUE(is_dt_graph(h)) << to_graph6(g) << " " << a << " " << b;
        }
      }
    }
  }
}

}  // namespace
}  // namespace hamsq
