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

#include "hamsq/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

#include "hamsq/corpus.h"
#include "hamsq/decomposition.h"
#include "hamsq/eps_checks.h"
#include "hamsq/error.h"
#include "hamsq/hamilton_checks.h"

namespace hamsq {

namespace {

bool block(const Graph& g) { return g.order() >= 3 && is_two_connected(g); }
bool dt_block(const Graph& g) { return block(g) && is_dt_graph(g); }
bool chain(const Graph& g) {
  return is_connected(g) && is_block_chain(g) == ChainKind::kNonTrivial;
}

VerifyTarget cited(CitedTheorem t) {
  return {std::string(cited_name(t)), "2-connected", block,
          [t](const Graph& g, std::uint64_t b) { return verify_cited(g, t, b); }};
}

// Runs work(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& work) {
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Merges per-item results in input order.
SweepReport collect(std::string name, std::vector<GraphReport>& items, std::int64_t skipped) {
  SweepReport report;
  report.target = std::move(name);
  report.graphs = static_cast<std::int64_t>(items.size());
  report.skipped = skipped;
  for (auto& item : items) {
    report.total.merge(item.tally);
    if (!item.error.empty()) ++report.errors;
    if (!item.tally.findings.empty() || !item.error.empty()) {
      report.flagged.push_back(std::move(item));
    }
  }
  return report;
}

void run_item(GraphReport& item, const Graph& g, const std::function<Tally(const Graph&)>& check) {
  item.graph = graph_label(g);
  try {
    item.tally = check(g);
  } catch (const std::exception& e) {
    item.error = e.what();
  }
}

}  // namespace

const std::vector<VerifyTarget>& verify_targets() {
  static const std::vector<VerifyTarget> targets = {
      {"theorem1", "2-connected", block, verify_theorem1},
      cited(CitedTheorem::kA),
      cited(CitedTheorem::kB),
      cited(CitedTheorem::kC),
      cited(CitedTheorem::kD),
      {"theoremF", "2-connected", block, verify_theorem_f},
      {"theoremG", "2-connected", block,
       [](const Graph& g, std::uint64_t b) { return verify_theorem_g(g, b); }},
      {"theorem2", "2-connected DT-graph", dt_block,
       [](const Graph& g, std::uint64_t b) { return verify_theorem2(g, b); }},
      {"lemma1", "non-trivial block chain", chain, check_lemma1},
      {"cor1", "non-trivial block chain, n >= 3",
       [](const Graph& g) { return g.order() >= 3 && chain(g); }, check_corollary1},
      {"cor2", "2-connected DT-graph", dt_block, verify_corollary2_all},
      {"caterpillar", "tree, n >= 3", [](const Graph& g) { return g.order() >= 3 && is_tree(g); },
       verify_caterpillar},
      {"sekanina", "connected", [](const Graph& g) { return is_connected(g); }, verify_sekanina},
      {"observation", "2-connected DT-graph", dt_block, verify_observation},
  };
  return targets;
}

const VerifyTarget* find_target(std::string_view name) {
  for (const auto& t : verify_targets()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::string graph_label(const Graph& g) {
  return g.is_simple() ? to_graph6(g) : to_edge_list(g);
}

SweepReport run_sweep(const std::vector<Graph>& graphs, std::string name,
                      const std::function<bool(const Graph&)>& applies,
                      const std::function<Tally(const Graph&)>& check, int jobs) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (applies(graphs[i])) chosen.push_back(i);
  }
  std::vector<GraphReport> items(chosen.size());
  parallel_for(chosen.size(), jobs, [&](std::size_t i) {
    items[i].index = chosen[i];
    run_item(items[i], graphs[chosen[i]], check);
  });
  return collect(std::move(name), items,
                 static_cast<std::int64_t>(graphs.size() - chosen.size()));
}

SweepReport run_target(const std::vector<Graph>& graphs, const VerifyTarget& target,
                       std::uint64_t budget, int jobs) {
  return run_sweep(graphs, target.name, target.applies,
                   [&](const Graph& g) { return target.check(g, budget); }, jobs);
}

SweepReport sample_target(const std::vector<Graph>& graphs, std::string_view name, int count,
                          std::uint64_t seed, std::uint64_t budget, int jobs) {
  std::optional<CitedTheorem> which;
  for (CitedTheorem t : {CitedTheorem::kA, CitedTheorem::kB, CitedTheorem::kC,
                         CitedTheorem::kD}) {
    if (cited_name(t) == name) which = t;
  }
  if (!which) {
    throw HamsqError(ErrorCode::kInvalidInput,
                     "sampling is available for theoremA..theoremD only");
  }
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (block(graphs[i]) && has_cited_instance(graphs[i], *which)) pool.push_back(i);
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> picks;
  if (!pool.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < count; ++i) {
      const std::size_t g = pool[pick(rng)];
      picks.emplace_back(g, rng());
    }
  }
  std::vector<GraphReport> items(picks.size());
  parallel_for(picks.size(), jobs, [&](std::size_t i) {
    items[i].index = picks[i].first;
    run_item(items[i], graphs[picks[i].first], [&](const Graph& g) {
      return sample_cited(g, *which, picks[i].second, budget);
    });
  });
  return collect(std::string(name), items,
                 static_cast<std::int64_t>(graphs.size() - pool.size()));
}

SweepReport hunt_fk_failures(const std::vector<Graph>& graphs, int k, std::uint64_t budget,
                             int jobs, bool canonical) {
  if (k < 3) throw HamsqError(ErrorCode::kInvalidK, "F_k needs k >= 3");
  return run_sweep(
      graphs, "hunt-fk" + std::to_string(k),
      [k](const Graph& g) { return block(g) && g.order() >= k; },
      [&](const Graph& g) { return verify_fk(g, FkSweep{k, canonical, budget}); }, jobs);
}

}  // namespace hamsq
