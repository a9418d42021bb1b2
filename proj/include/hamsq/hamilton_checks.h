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

#ifndef HAMSQ_HAMILTON_CHECKS_H_
#define HAMSQ_HAMILTON_CHECKS_H_

#include <cstdint>
#include <optional>

#include "hamsq/graph.h"
#include "hamsq/hamilton.h"
#include "hamsq/tally.h"

namespace hamsq {

// x-y hamiltonian path of G^2 with a G-edge at q. Throws kNotTwoConnected,
// kSameVertex, kInvalidInput (q not in {x, y}).
SearchResult<HamOrder> check_theorem_g2(const Graph& g, Vertex x, Vertex y, Vertex q,
                                        std::uint64_t budget = kDefaultBudget);

// [v; w]-hamiltonian cycle for every ordered (v, w). Throws kNotTwoConnected.
Tally verify_theorem_f(const Graph& g, std::uint64_t budget = kDefaultBudget);

// F_k over all k-tuples of one graph. With `canonical`, only tuples with
// x1 < x2 and x3 < ... < xk are searched: reversing a path swaps x1 and x2,
// and the witness clause does not depend on the order of x3..xk. Certificates
// with a witness ending at x1 or x2 are counted in `flagged`.
struct FkSweep {
  int k = 4;
  bool canonical = true;
  std::uint64_t budget = kDefaultBudget;
};

Tally verify_fk(const Graph& g, const FkSweep& sweep);

// F_3 on every triple plus the G(ii) path for every (x, y) and q = x.
// Throws kNotTwoConnected.
Tally verify_theorem_g(const Graph& g, std::uint64_t budget = kDefaultBudget,
                       bool canonical = true);

// F_4 on a 2-connected DT-graph. Throws kPreconditionUnmet otherwise.
Tally verify_theorem2(const Graph& g, std::uint64_t budget = kDefaultBudget,
                      bool canonical = true);

// Both parts for every ordered (v, w) of non-cutvertices in different
// endblocks. Throws kPreconditionUnmet unless B is a non-trivial block chain
// with at least 3 vertices.
Tally check_corollary1(const Graph& b, std::uint64_t budget = kDefaultBudget);

enum class Corollary2Branch { kBranchI, kBranchII, kFail, kUnknown };

std::string_view branch_name(Corollary2Branch b);

// Branch (i): cycle of G^2 - x2 (listed without x2). Branch (ii): x1-x2
// path of G^2. Branch (i) is preferred.
struct Corollary2Result {
  Corollary2Branch branch = Corollary2Branch::kFail;
  HamOrder order;
};

// True iff (G, x1, x2) meets the corollary's hypotheses.
bool corollary2_applies(const Graph& g, Vertex x1, Vertex x2);

// Throws kPreconditionUnmet.
Corollary2Result check_corollary2(const Graph& g, Vertex x1, Vertex x2,
                                  std::uint64_t budget = kDefaultBudget);

// Re-checks a branch witness without the search code.
VerifyReport verify_corollary2(const Graph& g, Vertex x1, Vertex x2,
                               const Corollary2Result& r);

// All ordered (x1, x2) meeting the hypotheses; none is fine.
Tally verify_corollary2_all(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Weak form of the G+ observation over all x1 < x2: if G+ has an EPS-graph
// with d_P(x1), d_P(x2) <= 1 whose E holds a cycle through y, then (G+)^2 has
// a hamiltonian cycle using y x1 and y x2. Only pairs meeting the hypothesis
// are counted.
Tally verify_observation(const Graph& g, std::uint64_t budget = kDefaultBudget);

// G^3 has an s-t hamiltonian path for all s < t. Throws kDisconnected.
Tally verify_sekanina(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Tree with n >= 3: G^2 hamiltonian iff caterpillar. Throws kNotATree,
// kTooSmall.
Tally verify_caterpillar(const Graph& t, std::uint64_t budget = kDefaultBudget);

}  // namespace hamsq

#endif  // HAMSQ_HAMILTON_CHECKS_H_
