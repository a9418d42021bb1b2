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
#include "hamsq/cycles.h"
#include "hamsq/decomposition.h"
#include "hamsq/error.h"
#include "oracles.h"

namespace hamsq {
namespace {

std::uint64_t mask_of(const CycleWitness& c) {
  std::uint64_t m = 0;
  for (Vertex v : c.vertices) m |= std::uint64_t{1} << v;
  return m;
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

std::vector<std::uint64_t> enumerate(const Graph& g) {
  std::vector<std::uint64_t> out;
  for_each_cycle(g, kDefaultCycleCap, [&](const CycleWitness& c) {
    EXPECT_TRUE(is_valid_cycle(g, c));
    out.push_back(mask_of(c));
    return true;
  });
  return out;
}

TEST(CyclesTest, CountsOnNamedGraphs) {
  EXPECT_EQ(enumerate(cycle_graph(5)).size(), 1u);
  EXPECT_EQ(enumerate(complete_graph(4)).size(), 7u);
  EXPECT_EQ(enumerate(path_graph(5)).size(), 0u);
  EXPECT_EQ(enumerate(Graph::build(2, {{0, 1}, {0, 1}, {0, 1}})).size(), 3u);
}

TEST(CyclesTest, EnumerationMatchesEdgeSubsetOracle) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.size() > 12) continue;
    auto got = enumerate(g);
    auto want = oracle::cycle_vertex_masks(g);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ASSERT_EQ(got, want) << to_graph6(g);
  }
}

TEST(CyclesTest, EnumerationStopsAndCaps) {
  int seen = 0;
  EXPECT_EQ(for_each_cycle(complete_graph(4), 100, [&](const CycleWitness&) { return ++seen < 2; }),
            EnumerationEnd::kStopped);
  EXPECT_EQ(seen, 2);
  EXPECT_EQ(for_each_cycle(complete_graph(4), 3, [](const CycleWitness&) { return true; }),
            EnumerationEnd::kCapped);
}

TEST(CyclesTest, InvalidCyclesRejected) {
  const Graph g = cycle_graph(4);
  EXPECT_TRUE(is_valid_cycle(g, {{0, 1, 2, 3}, {0, 1, 2, 3}}));
  EXPECT_FALSE(is_valid_cycle(g, {{0, 1, 2}, {0, 1, 2}}));
  EXPECT_FALSE(is_valid_cycle(g, {{0, 0, 2, 3}, {0, 1, 2, 3}}));
}

TEST(CyclesTest, CycleThroughMatchesOracle) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() > 6 || g.size() > 12) continue;
    const auto cycles = oracle::cycle_vertex_masks(g);
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex b = a + 1; b < g.order(); ++b) {
        const VertexSet need{a, b};
        const bool want = std::any_of(cycles.begin(), cycles.end(), [&](std::uint64_t c) {
          return (c & mask_of(need)) == mask_of(need);
        });
        const auto got = find_cycle_through(g, need);
        ASSERT_EQ(got.found(), want) << to_graph6(g) << " " << a << " " << b;
        if (got.found()) {
          ASSERT_TRUE(is_valid_cycle(g, *got.witness));
          ASSERT_TRUE(got.witness->contains(a) && got.witness->contains(b));
        }
      }
    }
  }
}

TEST(CyclesTest, ThetaGraphWCycle) {
  // Branch vertices 0, 1 joined through 2, through 3-4, and through 5-6-7.
  const Graph theta =
      Graph::build(8, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
  const WCycle c = best_w_cycle(theta, VertexSet{2, 3, 4, 5, 6});
  EXPECT_EQ(c.count, 4);
  EXPECT_TRUE(c.sound);
  EXPECT_TRUE(c.certified);
  EXPECT_TRUE(is_valid_cycle(theta, c.cycle));
  const WCycle low = best_w_cycle(theta, VertexSet{2, 3, 5});
  EXPECT_EQ(low.count, 2);
  EXPECT_FALSE(low.sound);
}

TEST(CyclesTest, WCycleIsMaximal) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() != 6 || !is_two_connected(g) || g.size() > 11) continue;
    const auto cycles = oracle::cycle_vertex_masks(g);
    const VertexSet w{0, 2, 3, 5};
    int best = 0;
    for (auto c : cycles) best = std::max(best, std::popcount(c & mask_of(w)));
    const WCycle got = best_w_cycle(g, w);
    ASSERT_EQ(got.count, best) << to_graph6(g);
    ASSERT_TRUE(got.certified);
  }
}

TEST(CyclesTest, AcyclicGraphRejected) {
  try {
    best_w_cycle(path_graph(4), VertexSet{0, 1});
    FAIL();
  } catch (const HamsqError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAcyclic);
  }
}

TEST(CyclesTest, Vw1w2MaximalCycle) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() != 6 || !is_two_connected(g) || g.size() > 10) continue;
    const auto cycles = oracle::cycle_vertex_masks(g);
    const bool all_three = std::any_of(cycles.begin(), cycles.end(),
                                       [](std::uint64_t c) { return (c & 0b111) == 0b111; });
    const CycleWitness c = find_vw1w2_maximal_cycle(g, 0, 1, 2);
    ASSERT_TRUE(is_valid_cycle(g, c));
    ASSERT_TRUE(c.contains(0) && c.contains(1));
    ASSERT_EQ(c.contains(2), all_three) << to_graph6(g);
  }
}

TEST(CyclesTest, Vw1w2NeedsBlockAndDistinctVertices) {
  EXPECT_THROW(find_vw1w2_maximal_cycle(path_graph(4), 0, 1, 2), HamsqError);
  EXPECT_THROW(find_vw1w2_maximal_cycle(cycle_graph(4), 0, 0, 2), HamsqError);
}

}  // namespace
}  // namespace hamsq
