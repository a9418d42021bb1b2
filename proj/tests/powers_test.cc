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

#include <random>

#include <gtest/gtest.h>

#include "hamsq/decomposition.h"
#include "hamsq/error.h"
#include "hamsq/powers.h"
#include "oracles.h"

namespace hamsq {
namespace {

// Pairs at distance <= k, computed straight from the distance table.
std::vector<std::pair<Vertex, Vertex>> close_pairs(const Graph& g, int k) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const auto d = oracle::distance_table(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (d[u][v] != kUnreachable && d[u][v] <= k) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(PowersTest, SquareOfSixCycle) {
  const Graph s = square(cycle_graph(6));
  EXPECT_EQ(s.size(), 12);
  EXPECT_TRUE(s.adjacent(0, 2));
  EXPECT_FALSE(s.adjacent(0, 3));
  EXPECT_EQ(power(cycle_graph(6), 2), s);
}

TEST(PowersTest, PowerOneIsUnderlyingSimple) {
  const Graph g = Graph::build(3, {{0, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(edge_pairs(power(g, 1)), edge_pairs(underlying_simple(g)));
}

TEST(PowersTest, PowerZeroRejected) {
  try {
    power(path_graph(3), 0);
    FAIL();
  } catch (const HamsqError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidK);
  }
}

TEST(PowersTest, DisconnectedSquaredComponentwise) {
  const Graph g = Graph::build(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  const Graph s = square(g);
  EXPECT_EQ(s.size(), 6);
  EXPECT_FALSE(s.adjacent(2, 3));
}

TEST(PowersTest, MatchesDistanceOracleOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 30;
    const Graph g = oracle::random_graph(rng, n, 0.08 + 0.02 * (trial % 7));
    for (int k = 1; k <= 4; ++k) {
      ASSERT_EQ(edge_pairs(power(g, k)), close_pairs(g, k)) << "k=" << k;
    }
    ASSERT_EQ(edge_pairs(square(g)), close_pairs(g, 2));
  }
}

TEST(PowersTest, SquareOfTwoConnectedIsTwoConnected) {
  for (const Graph& g : oracle::small_graphs_where(
           [](const Graph& h) { return h.order() <= 7 && is_two_connected(h); })) {
    EXPECT_TRUE(is_two_connected(square(g)));
  }
}

TEST(PowersTest, Diameter) {
  EXPECT_EQ(diameter(cycle_graph(7)), 3);
  EXPECT_EQ(diameter(path_graph(5)), 4);
  EXPECT_EQ(diameter(Graph::build(0, {})), -1);
}

}  // namespace
}  // namespace hamsq
