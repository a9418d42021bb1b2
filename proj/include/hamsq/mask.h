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

#ifndef HAMSQ_MASK_H_
#define HAMSQ_MASK_H_

#include <bit>
#include <cstdint>
#include <vector>

#include "hamsq/graph.h"

namespace hamsq {

// Vertex bitsets for the exponential searches, which are limited to 64
// vertices.
using Mask = std::uint64_t;

inline constexpr int kMaxSearchOrder = 64;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline constexpr Mask all_vertices(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

// Row v holds the (simple) neighbourhood of v. Throws kTooLarge if n > 64.
std::vector<Mask> adjacency_masks(const Graph& g);

// Vertices reachable from `start` inside `within` (start must be in within).
Mask reachable_within(const std::vector<Mask>& adj, Vertex start, Mask within);

}  // namespace hamsq

#endif  // HAMSQ_MASK_H_
