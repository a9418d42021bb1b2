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

#include "hamsq/hamilton_checks.h"

#include <string>

#include "hamsq/corpus.h"
#include "hamsq/cycles.h"
#include "hamsq/decomposition.h"
#include "hamsq/eps.h"
#include "hamsq/error.h"
#include "hamsq/powers.h"

namespace hamsq {

namespace {

std::string join(const std::vector<Vertex>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

void require_block(const Graph& g) {
  if (!is_two_connected(g) || g.order() < 3) {
    throw HamsqError(ErrorCode::kNotTwoConnected, "statement needs a 2-connected graph");
  }
}

// Records a search outcome after re-checking a Found witness.
void record_checked(Tally& tally, std::string query, SearchStatus status,
                    const VerifyReport& report) {
  if (status == SearchStatus::kFound && !report) {
    tally.record(std::move(query), Outcome::kViolated, "witness rejected: " + report.violation);
    return;
  }
  tally.record(std::move(query), status);
}

// Calls visit(tuple) for each F_k query tuple of an n-vertex graph.
template <typename Visit>
void for_each_tuple(int n, int k, bool canonical, Visit&& visit) {
  std::vector<Vertex> tuple;
  std::vector<bool> used(n, false);
  auto grow = [&](auto& self) -> void {
    const int pos = static_cast<int>(tuple.size());
    if (pos == k) {
      visit(tuple);
      return;
    }
    Vertex from = 0;
    if (canonical && (pos == 1 || pos >= 3)) from = tuple.back() + 1;
    for (Vertex x = from; x < n; ++x) {
      if (used[x]) continue;
      used[x] = true;
      tuple.push_back(x);
      self(self);
      tuple.pop_back();
      used[x] = false;
    }
  };
  if (k <= n) grow(grow);
}

bool within(const std::vector<int>& dist, Vertex v, int limit) {
  return dist[v] != kUnreachable && dist[v] <= limit;
}

}  // namespace

SearchResult<HamOrder> check_theorem_g2(const Graph& g, Vertex x, Vertex y, Vertex q,
                                        std::uint64_t budget) {
  require_block(g);
  if (q != x && q != y) throw HamsqError(ErrorCode::kInvalidInput, "q must be x or y");
  return ham_path_in_square(g, x, y, EdgeDemand{{{q, 1}}}, budget);
}

Tally verify_theorem_f(const Graph& g, std::uint64_t budget) {
  require_block(g);
  Tally tally;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (v == w) continue;
      const HamCycleConstraint c{v, {w}};
      const auto r = ham_cycle_in_square(g, c, budget);
      const VerifyReport report = r.found() ? verify_ham_cycle(g, c, *r.witness) : VerifyReport{};
      record_checked(tally, "v=" + std::to_string(v) + " w=" + std::to_string(w), r.status,
                     report);
    }
  }
  return tally;
}

Tally verify_fk(const Graph& g, const FkSweep& sweep) {
  Tally tally;
  FkQuery q{g, sweep.k, {}};
  for_each_tuple(g.order(), sweep.k, sweep.canonical, [&](const std::vector<Vertex>& tuple) {
    q.a = tuple;
    const auto r = check_fk(q, sweep.budget);
    VerifyReport report;
    if (r.found()) {
      report = verify_certificate(q, *r.witness);
      if (report && witness_touches_terminal(q, *r.witness)) ++tally.flagged;
    }
    record_checked(tally, "A=(" + join(tuple) + ")", r.status, report);
  });
  return tally;
}

Tally verify_theorem_g(const Graph& g, std::uint64_t budget, bool canonical) {
  require_block(g);
  Tally tally = verify_fk(g, FkSweep{3, canonical, budget});
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = 0; y < g.order(); ++y) {
      if (x == y) continue;
      const auto r = check_theorem_g2(g, x, y, x, budget);
      const VerifyReport report =
          r.found() ? verify_ham_path(g, x, y, EdgeDemand{{{x, 1}}}, *r.witness)
                    : VerifyReport{};
      record_checked(tally, "x=" + std::to_string(x) + " y=" + std::to_string(y) + " q=x",
                     r.status, report);
    }
  }
  return tally;
}

Tally verify_theorem2(const Graph& g, std::uint64_t budget, bool canonical) {
  if (!is_two_connected(g) || !is_dt_graph(g)) {
    throw HamsqError(ErrorCode::kPreconditionUnmet, "needs a 2-connected DT-graph");
  }
  return verify_fk(g, FkSweep{4, canonical, budget});
}

Tally check_corollary1(const Graph& b, std::uint64_t budget) {
  if (b.order() < 3 || !is_connected(b) || is_block_chain(b) != ChainKind::kNonTrivial) {
    throw HamsqError(ErrorCode::kPreconditionUnmet,
                     "needs a non-trivial block chain on at least 3 vertices");
  }
  const BlockForest forest = block_forest(b);
  std::vector<const Block*> ends;
  for (const auto& blk : forest.blocks) {
    if (blk.endblock) ends.push_back(&blk);
  }
  Tally tally;
  for (int side = 0; side < 2; ++side) {
    const Block& vb = *ends[side];
    const Block& wb = *ends[1 - side];
    for (Vertex v : vb.vertices) {
      if (forest.cutvertices.contains(v)) continue;
      for (Vertex w : wb.vertices) {
        if (forest.cutvertices.contains(w)) continue;
        const std::string pair = "v=" + std::to_string(v) + " w=" + std::to_string(w);
        HamCycleConstraint c;
        if (vb.kind == BlockKind::kTwoConnected) {
          c = {v, {w}};
        } else {
          c = {-1, {v, w}};
        }
        const auto cycle = ham_cycle_in_square(b, c, budget);
        record_checked(tally, pair + " (i)", cycle.status,
                       cycle.found() ? verify_ham_cycle(b, c, *cycle.witness) : VerifyReport{});

        const EdgeDemand ends_demand{{{v, 1}, {w, 1}}};
        const auto path = ham_path_in_square(b, v, w, ends_demand, budget);
        record_checked(tally, pair + " (ii)", path.status,
                       path.found() ? verify_ham_path(b, v, w, ends_demand, *path.witness)
                                    : VerifyReport{});
      }
    }
  }
  return tally;
}

std::string_view branch_name(Corollary2Branch b) {
  switch (b) {
    case Corollary2Branch::kBranchI: return "branch-i";
    case Corollary2Branch::kBranchII: return "branch-ii";
    case Corollary2Branch::kFail: return "fail";
    case Corollary2Branch::kUnknown: return "unknown";
  }
  return "?";
}

bool corollary2_applies(const Graph& g, Vertex x1, Vertex x2) {
  if (x1 == x2 || x1 < 0 || x2 < 0 || x1 >= g.order() || x2 >= g.order()) return false;
  if (!is_two_connected(g) || !is_dt_graph(g) || g.adjacent(x1, x2)) return false;
  const VertexSet two = v2(g);
  for (Vertex x : {x1, x2}) {
    for (Vertex u : g.neighbors(x)) {
      if (!two.contains(u)) return false;
    }
  }
  return true;
}

Corollary2Result check_corollary2(const Graph& g, Vertex x1, Vertex x2, std::uint64_t budget) {
  if (!corollary2_applies(g, x1, x2)) {
    throw HamsqError(ErrorCode::kPreconditionUnmet,
                     "needs a DT-block, N(x1), N(x2) in V2 and x1 x2 not an edge");
  }
  Corollary2Result result;
  bool unknown = false;

  HamProblem cycle;
  cycle.route = adjacency_masks(square(g));
  cycle.base = adjacency_masks(g);
  cycle.cover = all_vertices(g.order()) & ~bit(x2);
  cycle.start = x1;
  cycle.end = -1;
  cycle.demand.assign(g.order(), 0);
  cycle.demand[x1] = 2;
  auto first = search_hamiltonian(cycle, budget);
  if (first.found()) {
    result.branch = Corollary2Branch::kBranchI;
    result.order = std::move(*first.witness);
    return result;
  }
  unknown = first.status == SearchStatus::kUnknown;

  auto second = ham_path_in_square(g, x1, x2, EdgeDemand{{{x1, 1}, {x2, 1}}}, budget);
  if (second.found()) {
    result.branch = Corollary2Branch::kBranchII;
    result.order = std::move(*second.witness);
    return result;
  }
  unknown = unknown || second.status == SearchStatus::kUnknown;
  result.branch = unknown ? Corollary2Branch::kUnknown : Corollary2Branch::kFail;
  return result;
}

VerifyReport verify_corollary2(const Graph& g, Vertex x1, Vertex x2,
                               const Corollary2Result& r) {
  if (r.branch == Corollary2Branch::kBranchII) {
    return verify_ham_path(g, x1, x2, EdgeDemand{{{x1, 1}, {x2, 1}}}, r.order);
  }
  if (r.branch != Corollary2Branch::kBranchI) return {false, "no witness"};
  const int n = g.order();
  const auto& order = r.order;
  const int len = static_cast<int>(order.size());
  if (len != n - 1 || len < 3) return {false, "cycle does not span G - x2"};
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || v == x2 || seen[v]) return {false, "bad or repeated vertex"};
    seen[v] = true;
  }
  for (int i = 0; i < len; ++i) {
    const Vertex a = order[i], b = order[(i + 1) % len];
    if (!within(distances_from(g, a), b, 2)) return {false, "step not an edge of G^2"};
    if ((a == x1 || b == x1) && !g.adjacent(a, b)) return {false, "edge at x1 not in G"};
  }
  return {};
}

Tally verify_corollary2_all(const Graph& g, std::uint64_t budget) {
  Tally tally;
  for (Vertex x1 = 0; x1 < g.order(); ++x1) {
    for (Vertex x2 = 0; x2 < g.order(); ++x2) {
      if (!corollary2_applies(g, x1, x2)) continue;
      const std::string query = "x1=" + std::to_string(x1) + " x2=" + std::to_string(x2);
      const auto r = check_corollary2(g, x1, x2, budget);
      switch (r.branch) {
        case Corollary2Branch::kFail:
          tally.record(query, Outcome::kViolated, "neither branch exists");
          break;
        case Corollary2Branch::kUnknown:
          tally.record(query, Outcome::kUnknown);
          break;
        default: {
          const auto report = verify_corollary2(g, x1, x2, r);
          if (report) {
            tally.record(query, Outcome::kHolds, std::string(branch_name(r.branch)));
          } else {
            tally.record(query, Outcome::kViolated, "witness rejected: " + report.violation);
          }
        }
      }
    }
  }
  return tally;
}

Tally verify_observation(const Graph& g, std::uint64_t budget) {
  require_block(g);
  Tally tally;
  for (Vertex x1 = 0; x1 < g.order(); ++x1) {
    for (Vertex x2 = x1 + 1; x2 < g.order(); ++x2) {
      const GPlus plus = g_plus(g, x1, x2);
      const auto through_y = find_cycle_through(plus.graph, VertexSet{plus.y}, budget);
      const std::string query = "x1=" + std::to_string(x1) + " x2=" + std::to_string(x2);
      if (!through_y.found()) {
        tally.record(query, through_y.status == SearchStatus::kUnknown ? Outcome::kUnknown
                                                                       : Outcome::kViolated,
                     "no cycle through y");
        continue;
      }
      DegreeConstraint c = DegreeConstraint::at_most_one({x1, x2});
      c.required_cycle = *through_y.witness;
      const auto eps = find_eps(plus.graph, c, budget);
      if (eps.status == SearchStatus::kUnknown) {
        tally.record(query, Outcome::kUnknown, "EPS search");
        continue;
      }
      if (!eps.found()) continue;  // hypothesis not met
      const HamCycleConstraint at_y{plus.y, {}};
      const auto cycle = ham_cycle_in_square(plus.graph, at_y, budget);
      record_checked(tally, query, cycle.status,
                     cycle.found() ? verify_ham_cycle(plus.graph, at_y, *cycle.witness)
                                   : VerifyReport{});
    }
  }
  return tally;
}

Tally verify_sekanina(const Graph& g, std::uint64_t budget) {
  if (!is_connected(g)) {
    throw HamsqError(ErrorCode::kDisconnected, "needs a connected graph");
  }
  const Graph cube = power(g, 3);
  Tally tally;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (Vertex t = s + 1; t < g.order(); ++t) {
      const auto r = ham_path_in(cube, s, t, budget);
      VerifyReport report;
      if (r.found()) {
        const auto& path = *r.witness;
        std::vector<bool> seen(g.order(), false);
        for (Vertex v : path) {
          if (seen[v]) report = {false, "vertex repeated"};
          seen[v] = true;
        }
        if (static_cast<int>(path.size()) != g.order() || path.front() != s ||
            path.back() != t) {
          report = {false, "not an s-t hamiltonian path"};
        }
        for (std::size_t i = 0; report && i + 1 < path.size(); ++i) {
          if (!within(distances_from(g, path[i]), path[i + 1], 3)) {
            report = {false, "step longer than 3"};
          }
        }
      }
      record_checked(tally, "s=" + std::to_string(s) + " t=" + std::to_string(t), r.status,
                     report);
    }
  }
  return tally;
}

Tally verify_caterpillar(const Graph& t, std::uint64_t budget) {
  const bool caterpillar = is_caterpillar(t);
  if (t.order() < 3) throw HamsqError(ErrorCode::kTooSmall, "needs at least 3 vertices");
  const auto r = ham_cycle_in_square(t, HamCycleConstraint{}, budget);
  Tally tally;
  if (r.status == SearchStatus::kUnknown) {
    tally.record("tree", Outcome::kUnknown);
    return tally;
  }
  if (r.found()) {
    if (auto report = verify_ham_cycle(t, HamCycleConstraint{}, *r.witness); !report) {
      tally.record("tree", Outcome::kViolated, "witness rejected: " + report.violation);
      return tally;
    }
  }
  const bool hamiltonian = r.found();
  if (hamiltonian == caterpillar) {
    tally.record("tree", Outcome::kHolds);
  } else {
    tally.record("tree", Outcome::kViolated,
                 hamiltonian ? "square hamiltonian but not a caterpillar"
                             : "caterpillar with non-hamiltonian square");
  }
  return tally;
}

}  // namespace hamsq
