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
#include "hamsq/harness.h"
#include "hamsq/serialize.h"
#include "oracles.h"

namespace hamsq {
namespace {

std::vector<Graph> graphs_up_to(int n) {
  return oracle::small_graphs_where([n](const Graph& g) { return g.order() <= n; });
}

TEST(HarnessTest, AllTargetsRegistered) {
  for (const char* name : {"theorem1", "theoremA", "theoremB", "theoremC", "theoremD",
                           "theoremF", "theoremG", "theorem2", "lemma1", "cor1", "cor2",
                           "caterpillar", "sekanina", "observation"}) {
    EXPECT_NE(find_target(name), nullptr) << name;
  }
  EXPECT_EQ(find_target("theorem9"), nullptr);
}

TEST(HarnessTest, SkipsGraphsOutsideThePrecondition) {
  const auto graphs = graphs_up_to(5);
  const SweepReport r = run_target(graphs, *find_target("theoremF"), kDefaultBudget, 1);
  std::int64_t blocks = 0;
  for (const Graph& g : graphs) blocks += g.order() >= 3 && is_two_connected(g);
  EXPECT_EQ(r.graphs, blocks);
  EXPECT_EQ(r.skipped, static_cast<std::int64_t>(graphs.size()) - blocks);
  EXPECT_TRUE(r.clean());
}

TEST(HarnessTest, ReportIndependentOfJobs) {
  const auto graphs = graphs_up_to(6);
  const auto& target = *find_target("theoremG");
  const std::string one = to_json(run_target(graphs, target, kDefaultBudget, 1)).dump();
  const std::string three = to_json(run_target(graphs, target, kDefaultBudget, 3)).dump();
  EXPECT_EQ(one, three);
  const std::string s1 = to_json(sample_target(graphs, "theoremB", 50, 4, kDefaultBudget, 1)).dump();
  const std::string s2 = to_json(sample_target(graphs, "theoremB", 50, 4, kDefaultBudget, 2)).dump();
  EXPECT_EQ(s1, s2);
}

TEST(HarnessTest, SamplingCountsAreExact) {
  const SweepReport r = sample_target(graphs_up_to(6), "theoremA", 40, 1, kDefaultBudget, 1);
  EXPECT_EQ(r.total.checked, 40);
  EXPECT_TRUE(r.clean());
  EXPECT_THROW(sample_target(graphs_up_to(4), "theorem2", 1, 1, kDefaultBudget, 1), HamsqError);
}

TEST(HarnessTest, EscapedExceptionsBecomeErrors) {
  const std::vector<Graph> graphs{cycle_graph(4), cycle_graph(5)};
  const SweepReport r = run_sweep(
      graphs, "boom", [](const Graph&) { return true; },
      [](const Graph& g) -> Tally {
        if (g.order() == 5) throw HamsqError(ErrorCode::kTooLarge, "synthetic");
        return {};
      },
      2);
  EXPECT_EQ(r.errors, 1);
  ASSERT_EQ(r.flagged.size(), 1u);
  EXPECT_EQ(r.flagged[0].index, 1u);
  EXPECT_FALSE(r.clean());
}

TEST(HarnessTest, HuntFindsF5Refutations) {
  const auto graphs = oracle::small_graphs_where([](const Graph& g) { return g.order() == 7; });
  const SweepReport r = hunt_fk_failures(graphs, 5, kDefaultBudget, 1);
  EXPECT_EQ(r.total.unknown, 0);
  EXPECT_EQ(r.errors, 0);
  for (const auto& item : r.flagged) {
    for (const Finding& f : item.tally.findings) {
      EXPECT_EQ(f.outcome, Outcome::kViolated);
      // Every refutation is confirmed by the permutation oracle.
      std::vector<Vertex> a;
      std::istringstream in(f.query.substr(f.query.find('(') + 1));
      for (std::string tok; std::getline(in, tok, ',');) a.push_back(std::stoi(tok));
      ASSERT_EQ(a.size(), 5u) << f.query;
      EXPECT_FALSE(oracle::brute_fk(from_graph6(item.graph), a)) << item.graph << " " << f.query;
    }
  }
  EXPECT_THROW(hunt_fk_failures(graphs, 2, kDefaultBudget, 1), HamsqError);
}

TEST(HarnessTest, GraphLabels) {
  EXPECT_EQ(graph_label(complete_graph(4)), "C~");
  EXPECT_EQ(graph_label(Graph::build(2, {{0, 1}, {0, 1}})), to_edge_list(Graph::build(2, {{0, 1}, {0, 1}})));
}

TEST(SerializeTest, CertificateRoundTrip) {
  const FkQuery q{cycle_graph(6), 4, {0, 3, 1, 4}};
  const auto r = check_fk(q);
  ASSERT_TRUE(r.found());
  const Json j = to_json(q, *r.witness);
  EXPECT_EQ(j["query"]["k"], 4);
  EXPECT_EQ(j["query"]["edges-hash"], host_hash(q.host));
  const FkCertificate back = certificate_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.path, r.witness->path);
  EXPECT_EQ(back.witnesses, r.witness->witnesses);
  EXPECT_TRUE(verify_certificate(q, back));
  EXPECT_THROW(certificate_from_json(Json::parse(R"({"path": 3})")), HamsqError);
}

TEST(SerializeTest, ReportCarriesSchemaVersion) {
  const SweepReport r = run_target(graphs_up_to(4), *find_target("sekanina"), kDefaultBudget, 1);
  const Json j = to_json(r);
  EXPECT_EQ(j["schema-version"], kSchemaVersion);
  EXPECT_EQ(j["target"], "sekanina");
  EXPECT_TRUE(j["findings"].empty());
}

TEST(SerializeTest, EpsJson) {
  const auto r = find_jeps(cycle_graph(4), 0, 2, {});
  ASSERT_TRUE(r.found());
  const Json j = to_json(*r.witness);
  EXPECT_TRUE(j.contains("j"));
  EXPECT_TRUE(j.contains("trail"));
  EXPECT_EQ(j["host-hash"], host_hash(cycle_graph(4)));
  const Json forest = to_json(block_forest(cycle_graph(4)));
  EXPECT_FALSE(forest.empty());
}

}  // namespace
}  // namespace hamsq
