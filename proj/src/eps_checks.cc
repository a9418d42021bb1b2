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

#include "hamsq/eps_checks.h"

#include <algorithm>
#include <random>
#include <string>

#include "hamsq/cycles.h"
#include "hamsq/decomposition.h"
#include "hamsq/error.h"

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

std::string cycle_label(const CycleWitness& k) { return "K=[" + join(k.vertices) + "]"; }

void eps_instance(Tally& tally, const Graph& g, const DegreeConstraint& c, std::string query,
                  std::uint64_t budget) {
  auto r = find_eps(g, c, budget);
  if (r.found()) {
    auto report = verify_eps(*r.witness);
    if (report) report = verify_constraint(*r.witness, c);
    if (!report) {
      tally.record(std::move(query), Outcome::kViolated, "witness rejected: " + report.violation);
      return;
    }
  }
  tally.record(std::move(query), r.status);
}

void require_block(const Graph& g) {
  if (!is_two_connected(g)) {
    throw HamsqError(ErrorCode::kNotTwoConnected, "statement needs a 2-connected graph");
  }
}

// Every cycle of g; nullopt if the enumeration cap was hit.
std::optional<std::vector<CycleWitness>> all_cycles(const Graph& g) {
  std::vector<CycleWitness> out;
  const auto end = for_each_cycle(g, kDefaultCycleCap, [&](const CycleWitness& c) {
    out.push_back(c);
    return true;
  });
  if (end == EnumerationEnd::kCapped) return std::nullopt;
  return out;
}

// Calls visit(subset) for every k-subset of `from` in lexicographic order.
template <typename Visit>
void for_each_subset(const std::vector<Vertex>& from, int k, Visit&& visit) {
  const int n = static_cast<int>(from.size());
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> pick(k);
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = from[idx[i]];
    visit(pick);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Vertex> all_labels(const Graph& g) {
  std::vector<Vertex> v(g.order());
  for (Vertex x = 0; x < g.order(); ++x) v[x] = x;
  return v;
}

std::vector<Vertex> sorted_vertices(const CycleWitness& k) {
  std::vector<Vertex> v = k.vertices;
  std::sort(v.begin(), v.end());
  return v;
}

// Instances of a cited statement, as (query, constraint) pairs. Each one
// is an independent EPS search.
struct Instance {
  std::string query;
  DegreeConstraint constraint;
};

Instance make_a(const std::vector<Vertex>& w, const CycleWitness& k) {
  DegreeConstraint c = DegreeConstraint::at_most_one(w);
  c.required_cycle = k;
  return {"W={" + join(w) + "} " + cycle_label(k), std::move(c)};
}

Instance make_bracket(Vertex v, const std::vector<Vertex>& ws, const CycleWitness& k) {
  DegreeConstraint c = DegreeConstraint::bracket(v, ws);
  c.required_cycle = k;
  return {"v=" + std::to_string(v) + " w=" + join(ws) + " " + cycle_label(k), std::move(c)};
}

// Cycles that are W-maximal and W-sound for w.
std::vector<const CycleWitness*> sound_maximal(const std::vector<CycleWitness>& cycles,
                                               const std::vector<Vertex>& w) {
  const VertexSet ws(w);
  int best = 0;
  for (const auto& k : cycles) best = std::max(best, k.intersection(ws));
  std::vector<const CycleWitness*> out;
  if (best < 4) return out;
  for (const auto& k : cycles) {
    if (k.intersection(ws) == best) out.push_back(&k);
  }
  return out;
}

// [v; w1, w2]-maximal cycles.
std::vector<const CycleWitness*> vw1w2_maximal(const std::vector<CycleWitness>& cycles,
                                               Vertex v, Vertex w1, Vertex w2) {
  std::vector<const CycleWitness*> with_pair, with_all;
  for (const auto& k : cycles) {
    if (!k.contains(v) || !k.contains(w1)) continue;
    with_pair.push_back(&k);
    if (k.contains(w2)) with_all.push_back(&k);
  }
  return with_all.empty() ? with_pair : with_all;
}

// Ordered triples (v, w1, w2) of distinct vertices.
template <typename Visit>
void for_each_triple(int n, Visit&& visit) {
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w1 = 0; w1 < n; ++w1) {
      for (Vertex w2 = 0; w2 < n; ++w2) {
        if (v != w1 && v != w2 && w1 != w2) visit(v, w1, w2);
      }
    }
  }
}

std::vector<Instance> instances(const Graph& g, CitedTheorem t,
                                const std::vector<CycleWitness>& cycles) {
  std::vector<Instance> out;
  switch (t) {
    case CitedTheorem::kA:
      for_each_subset(all_labels(g), 5, [&](const std::vector<Vertex>& w) {
        for (const auto* k : sound_maximal(cycles, w)) out.push_back(make_a(w, *k));
      });
      break;
    case CitedTheorem::kB:
      for (const auto& k : cycles) {
        for_each_subset(sorted_vertices(k), 4, [&](const std::vector<Vertex>& four) {
          for (int i = 0; i < 4; ++i) {
            std::vector<Vertex> ws;
            for (int j = 0; j < 4; ++j) {
              if (j != i) ws.push_back(four[j]);
            }
            out.push_back(make_bracket(four[i], ws, k));
          }
        });
      }
      break;
    case CitedTheorem::kC:
      for_each_triple(g.order(), [&](Vertex v, Vertex w1, Vertex w2) {
        for (const auto* k : vw1w2_maximal(cycles, v, w1, w2)) {
          out.push_back(make_bracket(v, {w1, w2}, *k));
        }
      });
      break;
    case CitedTheorem::kD:
      for (const auto& k : cycles) {
        for (Vertex v : sorted_vertices(k)) {
          for (Vertex w : sorted_vertices(k)) {
            if (v != w) out.push_back(make_bracket(v, {w}, k));
          }
        }
      }
      break;
  }
  return out;
}

}  // namespace

std::string_view branch_name(Theorem1Branch b) {
  switch (b) {
    case Theorem1Branch::kBranchI: return "branch-i";
    case Theorem1Branch::kBranchII: return "branch-ii";
    case Theorem1Branch::kFail: return "fail";
    case Theorem1Branch::kUnknown: return "unknown";
  }
  return "?";
}

std::string_view cited_name(CitedTheorem t) {
  switch (t) {
    case CitedTheorem::kA: return "theoremA";
    case CitedTheorem::kB: return "theoremB";
    case CitedTheorem::kC: return "theoremC";
    case CitedTheorem::kD: return "theoremD";
  }
  return "?";
}

Tally check_lemma1(const Graph& g, std::uint64_t budget) {
  if (!is_connected(g) || is_block_chain(g) != ChainKind::kNonTrivial) {
    throw HamsqError(ErrorCode::kPreconditionUnmet, "needs a block chain with a cutvertex");
  }
  const BlockForest forest = block_forest(g);
  std::vector<const Block*> ends;
  for (const auto& b : forest.blocks) {
    if (b.endblock) ends.push_back(&b);
  }
  auto free_vertices = [&](const Block& b) {
    std::vector<Vertex> out;
    for (Vertex x : b.vertices) {
      if (!forest.cutvertices.contains(x)) out.push_back(x);
    }
    return out;
  };

  Tally tally;
  for (int side = 0; side < 2; ++side) {
    const Block& vb = *ends[side];
    const Block& wb = *ends[1 - side];
    for (Vertex v : free_vertices(vb)) {
      for (Vertex w : free_vertices(wb)) {
        const std::string pair = "v=" + std::to_string(v) + " w=" + std::to_string(w);
        DegreeConstraint first;
        first.set_cap(v, vb.kind == BlockKind::kTwoConnected ? PCap::kZero : PCap::kAtMostOne);
        first.set_cap(w, PCap::kAtMostOne);
        eps_instance(tally, g, first, pair + " (i)", budget);
        if (side == 1) continue;  // part (ii) is symmetric in v and w

        DegreeConstraint second = DegreeConstraint::bracket(v, {});
        second.set_cap(w, PCap::kZero);
        second.full_p_watch = forest.cutvertices;
        second.full_p_limit = 1;
        auto r = find_jeps(g, v, w, second, budget);
        if (r.found()) {
          auto report = verify_eps(*r.witness);
          if (report) report = verify_constraint(*r.witness, second);
          if (!report) {
            tally.record(pair + " (ii)", Outcome::kViolated,
                         "witness rejected: " + report.violation);
            continue;
          }
        }
        tally.record(pair + " (ii)", r.status);
      }
    }
  }
  return tally;
}

Theorem1Result check_theorem1(const Graph& g, Vertex v, Vertex w, std::uint64_t budget) {
  require_block(g);
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) throw HamsqError(ErrorCode::kSameVertex, "v and w must differ");
  DegreeConstraint c = DegreeConstraint::bracket(v, {});
  c.set_cap(w, PCap::kZero);

  Theorem1Result result;
  bool unknown = false;
  auto first = find_eps(g, c, budget);
  if (first.found()) {
    result.branch = Theorem1Branch::kBranchI;
    result.eps = std::move(first.witness);
    return result;
  }
  unknown = first.status == SearchStatus::kUnknown;
  auto second = find_jeps(g, v, w, c, budget);
  if (second.found()) {
    result.branch = Theorem1Branch::kBranchII;
    result.jeps = std::move(second.witness);
    return result;
  }
  unknown = unknown || second.status == SearchStatus::kUnknown;
  result.branch = unknown ? Theorem1Branch::kUnknown : Theorem1Branch::kFail;
  return result;
}

Tally verify_theorem1(const Graph& g, std::uint64_t budget) {
  require_block(g);
  Tally tally;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = v + 1; w < g.order(); ++w) {
      const std::string query = "v=" + std::to_string(v) + " w=" + std::to_string(w);
      const auto r = check_theorem1(g, v, w, budget);
      DegreeConstraint c = DegreeConstraint::bracket(v, {});
      c.set_cap(w, PCap::kZero);
      VerifyReport report;
      switch (r.branch) {
        case Theorem1Branch::kBranchI:
          report = verify_eps(*r.eps);
          if (report) report = verify_constraint(*r.eps, c);
          break;
        case Theorem1Branch::kBranchII:
          report = verify_eps(*r.jeps);
          if (report) report = verify_constraint(*r.jeps, c);
          if (report && (r.jeps->trail_start != v || r.jeps->trail_end != w)) {
            report = {false, "trail ends are not v and w"};
          }
          break;
        case Theorem1Branch::kFail:
          tally.record(query, Outcome::kViolated, "neither branch exists");
          continue;
        case Theorem1Branch::kUnknown:
          tally.record(query, Outcome::kUnknown);
          continue;
      }
      if (!report) {
        tally.record(query, Outcome::kViolated, "witness rejected: " + report.violation);
      } else {
        tally.record(query, Outcome::kHolds, std::string(branch_name(r.branch)));
      }
    }
  }
  return tally;
}

Tally verify_cited(const Graph& g, CitedTheorem t, std::uint64_t budget) {
  require_block(g);
  Tally tally;
  const auto cycles = all_cycles(g);
  if (!cycles) {
    tally.record(std::string(cited_name(t)), Outcome::kUnknown, "cycle enumeration capped");
    return tally;
  }
  for (auto& inst : instances(g, t, *cycles)) {
    eps_instance(tally, g, inst.constraint, std::move(inst.query), budget);
  }
  return tally;
}

bool has_cited_instance(const Graph& g, CitedTheorem t) {
  if (!is_two_connected(g)) return false;
  const auto cycles = all_cycles(g);
  return !cycles || !instances(g, t, *cycles).empty();
}

Tally sample_cited(const Graph& g, CitedTheorem t, std::uint64_t seed, std::uint64_t budget) {
  require_block(g);
  Tally tally;
  const auto cycles = all_cycles(g);
  if (!cycles) {
    tally.record(std::string(cited_name(t)), Outcome::kUnknown, "cycle enumeration capped");
    return tally;
  }
  auto pool = instances(g, t, *cycles);
  if (pool.empty()) return tally;
  std::mt19937_64 rng(seed);
  auto& inst = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  eps_instance(tally, g, inst.constraint, std::move(inst.query), budget);
  return tally;
}

}  // namespace hamsq
