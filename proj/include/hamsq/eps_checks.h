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

#ifndef HAMSQ_EPS_CHECKS_H_
#define HAMSQ_EPS_CHECKS_H_

#include <cstdint>
#include <optional>

#include "hamsq/eps.h"
#include "hamsq/graph.h"
#include "hamsq/tally.h"

namespace hamsq {

// Lemma 1 over every ordered (v, w) of non-cutvertices taken from the two
// endblocks. Throws kPreconditionUnmet unless G is a non-trivial block chain.
Tally check_lemma1(const Graph& g, std::uint64_t budget = kDefaultBudget);

enum class Theorem1Branch { kBranchI, kBranchII, kFail, kUnknown };

std::string_view branch_name(Theorem1Branch b);

// Branch (i) is tried first and reported whenever it exists.
struct Theorem1Result {
  Theorem1Branch branch = Theorem1Branch::kFail;
  std::optional<EpsDecomposition> eps;
  std::optional<JepsDecomposition> jeps;
};

// Throws kNotTwoConnected, kSameVertex.
Theorem1Result check_theorem1(const Graph& g, Vertex v, Vertex w,
                              std::uint64_t budget = kDefaultBudget);

// All unordered pairs {v, w}; each witness is re-verified.
Tally verify_theorem1(const Graph& g, std::uint64_t budget = kDefaultBudget);

// The cited EPS existence statements as properties of one 2-connected graph.
// Exhaustive over all vertex choices and all qualifying cycles.
//   A: every 5-set W and every W-sound W-maximal cycle K.
//   B: every cycle K and every v, {w1, w2, w3} on it.
//   C: every (v, w1, w2) and every [v; w1, w2]-maximal cycle K.
//   D: every cycle K and every ordered v, w on it.
enum class CitedTheorem { kA, kB, kC, kD };

std::string_view cited_name(CitedTheorem t);

Tally verify_cited(const Graph& g, CitedTheorem t, std::uint64_t budget = kDefaultBudget);

// False when the statement is vacuous on g (e.g. no W-sound cycle at all).
bool has_cited_instance(const Graph& g, CitedTheorem t);

// One random instance of the statement on g (a random choice of vertices
// and a random qualifying cycle). `seed` fixes the choice.
Tally sample_cited(const Graph& g, CitedTheorem t, std::uint64_t seed,
                   std::uint64_t budget = kDefaultBudget);

}  // namespace hamsq

#endif  // HAMSQ_EPS_CHECKS_H_
