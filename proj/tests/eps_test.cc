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
#include "hamsq/eps.h"
#include "hamsq/error.h"
#include "oracles.h"

namespace hamsq {
namespace {

DegreeConstraint to_constraint(const oracle::EpsQuery& q) {
  DegreeConstraint c;
  for (Vertex v = 0; v < static_cast<Vertex>(q.caps.size()); ++v) {
    if (q.caps[v] == 1) c.set_cap(v, PCap::kAtMostOne);
    if (q.caps[v] == 2) c.set_cap(v, PCap::kZero);
  }
  c.nonempty_e = q.nonempty_e;
  return c;
}

// Is e a bridge of the subgraph formed by `edges`? Checked by deletion.
bool is_bridge_of(const Graph& g, const std::vector<EdgeId>& edges, EdgeId e) {
  oracle::Dsu without(g.order());
  for (EdgeId f : edges) {
    if (f != e) without.unite(g.edge(f).u, g.edge(f).v);
  }
  return without.find(g.edge(e).u) != without.find(g.edge(e).v);
}

TEST(EpsTest, CycleIsItsOwnE) {
  const auto r = find_eps(cycle_graph(5), {});
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_eps(*r.witness));
  EXPECT_EQ(r.witness->e_edges.size(), 5u);
}

TEST(EpsTest, PathNeedsAllEdgesInP) {
  const auto r = find_eps(path_graph(4), {});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->p_edges.size(), 3u);
  EXPECT_FALSE(find_eps(star_graph(3), {}).found());
  EXPECT_EQ(find_eps(star_graph(3), {}).status, SearchStatus::kNone);
}

TEST(EpsTest, DisconnectedRejected) {
  try {
    find_eps(Graph::build(3, {{0, 1}}), {});
    FAIL();
  } catch (const HamsqError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(EpsTest, BudgetExhaustionIsUnknown) {
  const auto r = find_eps(complete_graph(6), DegreeConstraint::bracket(0, {1, 2}), 1);
  EXPECT_EQ(r.status, SearchStatus::kUnknown);
}

TEST(EpsTest, VerifierCatchesBrokenDecompositions) {
  EpsDecomposition d{cycle_graph(4), {0, 1, 2}, {3}};
  EXPECT_FALSE(verify_eps(d));
  d = {cycle_graph(4), {}, {0, 1, 2, 3}};
  EXPECT_FALSE(verify_eps(d));
  EXPECT_EQ(verify_eps(d).violation, "P contains a cycle");
  d = {path_graph(3), {}, {0}};
  EXPECT_FALSE(verify_eps(d));
  d = {path_graph(3), {}, {0, 0, 1}};
  EXPECT_FALSE(verify_eps(d));
}

TEST(EpsTest, ConstraintClauses) {
  const EpsDecomposition d{path_graph(3), {}, {0, 1}};
  EXPECT_TRUE(verify_constraint(d, DegreeConstraint::at_most_one({0, 2})));
  EXPECT_FALSE(verify_constraint(d, DegreeConstraint::at_most_one({1})));
  EXPECT_FALSE(verify_constraint(d, DegreeConstraint::bracket(0, {})));
  DegreeConstraint ne;
  ne.nonempty_e = true;
  EXPECT_FALSE(verify_constraint(d, ne));
}

TEST(EpsTest, NormalizeDropsPEdgesOnCycles) {
  // C4 plus the chord 0-2. E is the triangle 0-1-2, P the path 2-3-0.
  const Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const EpsDecomposition d{g, {0, 1, 4}, {2, 3}};
  ASSERT_TRUE(verify_eps(d));
  const EpsDecomposition n = normalize_eps(d);
  EXPECT_TRUE(verify_eps(n));
  EXPECT_EQ(n.e_edges, d.e_edges);
  std::vector<EdgeId> s = n.e_edges;
  s.insert(s.end(), n.p_edges.begin(), n.p_edges.end());
  for (EdgeId e : n.p_edges) EXPECT_TRUE(is_bridge_of(g, s, e));
  EXPECT_EQ(n.p_edges.size(), 1u);
}

TEST(EpsTest, NormalizeRejectsInvalidInput) {
  EXPECT_THROW(normalize_eps({cycle_graph(4), {0}, {}}), HamsqError);
}

TEST(EpsTest, NormalizedSearchWitnessesHaveBridgePEdges) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() > 6 || !is_connected(g)) continue;
    const auto r = find_eps(g, {});
    if (!r.found()) continue;
    const EpsDecomposition n = normalize_eps(*r.witness);
    ASSERT_TRUE(verify_eps(n));
    std::vector<EdgeId> s = n.e_edges;
    s.insert(s.end(), n.p_edges.begin(), n.p_edges.end());
    for (EdgeId e : n.p_edges) ASSERT_TRUE(is_bridge_of(g, s, e)) << to_graph6(g);
  }
}

TEST(EpsTest, FindEpsMatchesLabelingOracle) {
  int found = 0, none = 0;
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() > 6 || g.size() > 9 || !is_connected(g)) continue;
    const int n = g.order();
    // A few cap patterns per graph, cycling through the vertices.
    for (int pattern = 0; pattern < 3; ++pattern) {
      oracle::EpsQuery q;
      q.caps.assign(n, 0);
      if (pattern >= 1) q.caps[0] = 2;
      if (pattern >= 1 && n > 1) q.caps[n - 1] = 1;
      if (pattern == 2 && n > 2) q.caps[1] = 1;
      q.nonempty_e = pattern == 2;
      const bool want = oracle::brute_eps(g, q);
      const auto got = find_eps(g, to_constraint(q));
      ASSERT_NE(got.status, SearchStatus::kUnknown);
      ASSERT_EQ(got.found(), want) << to_graph6(g) << " pattern " << pattern;
      if (got.found()) {
        ASSERT_TRUE(verify_eps(*got.witness));
        ASSERT_TRUE(verify_constraint(*got.witness, to_constraint(q)));
        ++found;
      } else {
        ++none;
      }
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(none, 0);
}

TEST(EpsTest, RequiredCycleMatchesOracle) {
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() > 6 || g.size() > 9 || !is_two_connected(g)) continue;
    for_each_cycle(g, kDefaultCycleCap, [&](const CycleWitness& k) {
      oracle::EpsQuery q;
      q.caps.assign(g.order(), 0);
      q.caps[k.vertices[0]] = 2;
      q.in_e = k.edges;
      DegreeConstraint c = to_constraint(q);
      c.required_cycle = k;
      const auto got = find_eps(g, c);
      EXPECT_EQ(got.found(), oracle::brute_eps(g, q)) << to_graph6(g);
      if (got.found()) EXPECT_TRUE(verify_constraint(*got.witness, c));
      return !::testing::Test::HasFailure();
    });
    ASSERT_FALSE(::testing::Test::HasFailure());
  }
}

TEST(EpsTest, FourCycleJeps) {
  const Graph c4 = cycle_graph(4);
  for (Vertex v = 0; v < 4; ++v) {
    for (Vertex w = 0; w < 4; ++w) {
      if (v == w) continue;
      oracle::EpsQuery q;
      q.jeps = true;
      q.a = v;
      q.b = w;
      const auto got = find_jeps(c4, v, w, {});
      EXPECT_EQ(got.found(), oracle::brute_eps(c4, q));
      ASSERT_TRUE(got.found());
      EXPECT_TRUE(verify_eps(*got.witness));
      EXPECT_EQ(got.witness->trail_start, v);
      EXPECT_EQ(got.witness->trail_end, w);
    }
  }
}

TEST(EpsTest, FindJepsMatchesLabelingOracle) {
  int found = 0, none = 0;
  for (const Graph& g : oracle::small_graphs()) {
    if (g.order() < 2 || g.order() > 5 || g.size() > 8 || !is_connected(g)) continue;
    const Vertex v = 0, w = g.order() - 1;
    for (int pattern = 0; pattern < 2; ++pattern) {
      oracle::EpsQuery q;
      q.jeps = true;
      q.a = v;
      q.b = w;
      q.caps.assign(g.order(), 0);
      if (pattern == 1) q.caps[v] = q.caps[w] = 2;
      const auto got = find_jeps(g, v, w, to_constraint(q));
      ASSERT_EQ(got.found(), oracle::brute_eps(g, q)) << to_graph6(g) << " pattern " << pattern;
      if (got.found()) {
        ASSERT_TRUE(verify_eps(*got.witness));
        ASSERT_TRUE(verify_constraint(*got.witness, to_constraint(q)));
        ++found;
      } else {
        ++none;
      }
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(none, 0);
}

TEST(EpsTest, JepsRejectsEqualEnds) {
  try {
    find_jeps(cycle_graph(4), 1, 1, {});
    FAIL();
  } catch (const HamsqError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSameVertex);
  }
}

TEST(EpsTest, WatchedFullPLimit) {
  // P4: both internal vertices have d_P = 2 in the only EPS.
  DegreeConstraint c;
  c.full_p_watch = VertexSet{1, 2};
  c.full_p_limit = 1;
  EXPECT_EQ(find_eps(path_graph(4), c).status, SearchStatus::kNone);
  c.full_p_limit = 2;
  EXPECT_TRUE(find_eps(path_graph(4), c).found());
}

}  // namespace
}  // namespace hamsq
