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

#ifndef HAMSQ_POWERS_H_
#define HAMSQ_POWERS_H_

#include "hamsq/graph.h"

namespace hamsq {

// G^2: simple graph on V(G) joining x != y when they are adjacent or share a
// neighbour. Computed by scanning neighbourhoods. Disconnected inputs are
// squared componentwise.
Graph square(const Graph& g);

// G^k: x != y adjacent iff d_G(x, y) <= k. Distance based (bounded BFS from
// every vertex). Throws kInvalidK for k == 0.
Graph power(const Graph& g, int k);

// Independent route to G^2 through the distance table; kept alongside the
// neighbour scan so the two can be cross-checked.
Graph square_by_distance(const Graph& g);

// Largest finite distance; -1 for the empty graph.
int diameter(const Graph& g);

}  // namespace hamsq

#endif  // HAMSQ_POWERS_H_
