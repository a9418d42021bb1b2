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

#ifndef HAMSQ_HAMILTON_H_
#define HAMSQ_HAMILTON_H_

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hamsq/eps.h"
#include "hamsq/graph.h"
#include "hamsq/mask.h"
#include "hamsq/search.h"

namespace hamsq {

// A hamiltonian path or cycle problem over an explicit "route" graph (where
// the path lives, e.g. G^2) with demands counted on a "base" graph (G).
// demand[v] is how many route edges at v must be base edges; all demanded
// edges must be pairwise different (an edge between two demanded vertices
// serves only one of them).
struct HamProblem {
  std::vector<Mask> route;
  std::vector<Mask> base;
  Mask cover = 0;
  Vertex start = -1;
  Vertex end = -1;  // -1 closes a cycle back to start
  std::vector<std::uint8_t> demand;
};

// Vertex order; for cycles the edge back to start is implied.
using HamOrder = std::vector<Vertex>;

SearchResult<HamOrder> search_hamiltonian(const HamProblem& p,
                                          std::uint64_t budget = kDefaultBudget);

// Assigns demanded base edges along `order`; each entry is (vertex, partner).
// Empty optional if the demands cannot all be met with distinct edges.
std::optional<std::vector<std::pair<Vertex, Vertex>>> match_demands(const HamProblem& p,
                                                                    const HamOrder& order);

// Per-vertex count of G-edges required at that vertex.
struct EdgeDemand {
  std::vector<std::pair<Vertex, int>> at;
};

// Hamiltonian s-t path in G^2 meeting the demands. Throws kSameVertex.
SearchResult<HamOrder> ham_path_in_square(const Graph& g, Vertex s, Vertex t,
                                          const EdgeDemand& demand,
                                          std::uint64_t budget = kDefaultBudget);

// Independent re-check of an s-t hamiltonian path of G^2 with demands.
VerifyReport verify_ham_path(const Graph& g, Vertex s, Vertex t, const EdgeDemand& demand,
                             const HamOrder& path);

// Hamiltonian s-t path in an arbitrary route graph (no demands).
SearchResult<HamOrder> ham_path_in(const Graph& route, Vertex s, Vertex t,
                                   std::uint64_t budget = kDefaultBudget);

// [v; w1, ..., wk]: both cycle edges at v are G-edges, each wi has at least
// one G-edge, all of them different. v = -1 drops the v clause.
struct HamCycleConstraint {
  Vertex v = -1;
  std::vector<Vertex> ws;
};

struct HamCycle {
  std::vector<Vertex> vertices;  // cyclic order
};

// Throws kTooSmall for n < 3.
SearchResult<HamCycle> ham_cycle_in_square(const Graph& g, const HamCycleConstraint& c,
                                           std::uint64_t budget = kDefaultBudget);

// Independent re-check of a [v; w...]-hamiltonian cycle of G^2.
VerifyReport verify_ham_cycle(const Graph& g, const HamCycleConstraint& c,
                              const HamCycle& cycle);

struct FkQuery {
  Graph host;
  int k = 3;
  std::vector<Vertex> a;  // x1, ..., xk
};

// Hamiltonian x1-x2 path of G^2 and, for i = 3..k, the G-edge x_i y_i it
// carries.
struct FkCertificate {
  std::vector<Vertex> path;
  std::map<int, EdgeId> witnesses;
};

// Throws kInvalidQuery when k < 3, k > n, or A has repeats / bad labels.
void validate_query(const FkQuery& q);

SearchResult<FkCertificate> check_fk(const FkQuery& q, std::uint64_t budget = kDefaultBudget);

// Re-checks a certificate from scratch (BFS distances, no search code).
VerifyReport verify_certificate(const FkQuery& q, const FkCertificate& cert);

// True if some witness edge x_i y_i has y_i in {x1, x2}.
bool witness_touches_terminal(const FkQuery& q, const FkCertificate& cert);

struct GPlus {
  Graph graph;
  Vertex y = -1;
};

// G plus a new vertex y = n joined to x1 and x2 (new edge ids m, m + 1).
GPlus g_plus(const Graph& g, Vertex x1, Vertex x2);

}  // namespace hamsq

#endif  // HAMSQ_HAMILTON_H_
