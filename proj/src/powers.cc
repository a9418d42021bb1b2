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

#include "hamsq/powers.h"

#include <algorithm>

#include "hamsq/error.h"

namespace hamsq {

Graph square(const Graph& g) {
  const int n = g.order();
  std::vector<EndpointPair> edges;
  std::vector<int> stamp(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    stamp[x] = x;
    std::vector<Vertex> reach;
    for (Vertex a : g.neighbors(x)) {
      if (stamp[a] != x) {
        stamp[a] = x;
        reach.push_back(a);
      }
      for (Vertex b : g.neighbors(a)) {
        if (stamp[b] != x) {
          stamp[b] = x;
          reach.push_back(b);
        }
      }
    }
    std::sort(reach.begin(), reach.end());
    for (Vertex y : reach) {
      if (x < y) edges.emplace_back(x, y);
    }
  }
  return Graph::build(n, edges);
}

Graph power(const Graph& g, int k) {
  if (k < 1) throw HamsqError(ErrorCode::kInvalidK, "power needs k >= 1");
  const int n = g.order();
  std::vector<EndpointPair> edges;
  for (Vertex x = 0; x < n; ++x) {
    const auto dist = distances_from(g, x);
    for (Vertex y = x + 1; y < n; ++y) {
      if (dist[y] <= k) edges.emplace_back(x, y);
    }
  }
  return Graph::build(n, edges);
}

Graph square_by_distance(const Graph& g) { return power(g, 2); }

int diameter(const Graph& g) {
  int best = g.order() > 0 ? 0 : -1;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (int d : distances_from(g, x)) {
      if (d != kUnreachable) best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace hamsq
