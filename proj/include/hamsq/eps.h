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

#ifndef HAMSQ_EPS_H_
#define HAMSQ_EPS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamsq/cycles.h"
#include "hamsq/graph.h"
#include "hamsq/search.h"

namespace hamsq {

// Spanning connected subgraph S = E u P of the host: E has only even
// degrees (possibly empty or disconnected), P is a linear forest.
struct EpsDecomposition {
  Graph host;
  std::vector<EdgeId> e_edges;  // ascending
  std::vector<EdgeId> p_edges;  // ascending

  std::vector<int> e_degrees() const;
  std::vector<int> p_degrees() const;
  int d_e(Vertex v) const;
  int d_p(Vertex v) const;
};

// S = J u E u P where J is an open trail whose odd vertices are exactly
// {trail_start, trail_end}.
struct JepsDecomposition : EpsDecomposition {
  std::vector<EdgeId> j_edges;  // ascending
  Vertex trail_start = -1;
  Vertex trail_end = -1;

  int d_j(Vertex v) const;
};

enum class PCap : std::uint8_t { kFree, kAtMostOne, kZero };

// Per-vertex caps on d_P plus optional structural requirements.
struct DegreeConstraint {
  std::vector<PCap> caps;  // indexed by vertex; missing entries are kFree
  std::optional<CycleWitness> required_cycle;  // must lie inside E
  bool nonempty_e = false;
  // At most `full_p_limit` vertices of `full_p_watch` may have d_P == 2.
  VertexSet full_p_watch;
  int full_p_limit = -1;  // negative: unlimited

  PCap cap(Vertex v) const {
    return v < static_cast<Vertex>(caps.size()) ? caps[v] : PCap::kFree;
  }
  void set_cap(Vertex v, PCap c);

  // [v; w1, ..., wk]: d_P(v) = 0 and d_P(wi) <= 1.
  static DegreeConstraint bracket(Vertex v, const std::vector<Vertex>& ws);
  // [w1, ..., wk]: d_P(wi) <= 1 only.
  static DegreeConstraint at_most_one(const std::vector<Vertex>& ws);
};

struct VerifyReport {
  bool ok = true;
  std::string violation;  // first violated clause when !ok

  explicit operator bool() const { return ok; }
};

// Checks every type invariant. Never throws.
VerifyReport verify_eps(const EpsDecomposition& d);
VerifyReport verify_eps(const JepsDecomposition& d);

// Also checks the caps, the required cycle and the other constraint clauses.
VerifyReport verify_constraint(const EpsDecomposition& d, const DegreeConstraint& c);

// Deletes P-edges lying on cycles of S (ascending edge id, one at a time)
// until every P-edge is a bridge of S. E is untouched. Throws kInvalidInput
// if the input does not verify.
EpsDecomposition normalize_eps(const EpsDecomposition& d);

// Exact search over labelings {E, P, J, unused} of the host edges.
// Throws kDisconnected if G is not connected.
SearchResult<EpsDecomposition> find_eps(const Graph& g, const DegreeConstraint& c,
                                        std::uint64_t budget = kDefaultBudget);

// Throws kDisconnected, kSameVertex.
SearchResult<JepsDecomposition> find_jeps(const Graph& g, Vertex v, Vertex w,
                                          const DegreeConstraint& c,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace hamsq

#endif  // HAMSQ_EPS_H_
