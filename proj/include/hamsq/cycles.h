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

#ifndef HAMSQ_CYCLES_H_
#define HAMSQ_CYCLES_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "hamsq/graph.h"
#include "hamsq/search.h"

namespace hamsq {

// A cycle of the host: edges[i] joins vertices[i] and vertices[i + 1]
// (indices mod length). Length 2 is a digon through two parallel edges.
struct CycleWitness {
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;

  int intersection(const VertexSet& w) const;
  bool contains(Vertex v) const;
};

// Structural check of a cycle against its host.
bool is_valid_cycle(const Graph& g, const CycleWitness& c);

inline constexpr std::uint64_t kDefaultCycleCap = 5'000'000;

enum class EnumerationEnd { kCompleted, kStopped, kCapped };

// Visits every cycle exactly once (as an edge set). The visitor returns false
// to stop early. At most `cap` cycles are visited.
EnumerationEnd for_each_cycle(const Graph& g, std::uint64_t cap,
                              const std::function<bool(const CycleWitness&)>& visit);

SearchResult<CycleWitness> find_cycle_through(const Graph& g, const VertexSet& required,
                                              std::uint64_t budget = kDefaultBudget);

struct WCycle {
  CycleWitness cycle;
  int count = 0;
  bool sound = false;      // count >= 4
  bool certified = false;  // maximality proven (enumeration finished or count == |W|)
};

// A W-maximal cycle (first one met in enumeration order). Throws kAcyclic.
WCycle best_w_cycle(const Graph& g, const VertexSet& w, std::uint64_t cap = kDefaultCycleCap);

// Cycle through v and w1 that also passes w2 whenever some cycle through all
// three exists. Throws kNotTwoConnected, or kTooLarge if the budget runs out.
CycleWitness find_vw1w2_maximal_cycle(const Graph& g, Vertex v, Vertex w1, Vertex w2,
                                      std::uint64_t budget = kDefaultBudget);

}  // namespace hamsq

#endif  // HAMSQ_CYCLES_H_
