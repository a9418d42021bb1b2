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

#include "hamsq/decomposition.h"

#include <algorithm>

#include "hamsq/error.h"

namespace hamsq {

int BlockForest::bc_node_of_cutvertex(Vertex c) const {
  const auto& m = cutvertices.members();
  const auto it = std::lower_bound(m.begin(), m.end(), c);
  if (it == m.end() || *it != c) return -1;
  return static_cast<int>(blocks.size() + (it - m.begin()));
}

std::vector<int> BlockForest::blocks_containing(Vertex v) const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (std::binary_search(blocks[b].vertices.begin(), blocks[b].vertices.end(), v)) {
      out.push_back(b);
    }
  }
  return out;
}

BlockForest block_forest(const Graph& g) {
  const int n = g.order();
  BlockForest forest;
  forest.block_of_edge.assign(g.size(), -1);

  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<EdgeId> stack;
  std::vector<bool> is_cut(n, false);

  auto close_block = [&](EdgeId until) {
    Block block;
    while (true) {
      const EdgeId e = stack.back();
      stack.pop_back();
      block.edges.push_back(e);
      if (e == until) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    for (EdgeId e : block.edges) {
      block.vertices.push_back(g.edge(e).u);
      block.vertices.push_back(g.edge(e).v);
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()),
                         block.vertices.end());
    block.kind = block.edges.size() == 1 ? BlockKind::kBridge : BlockKind::kTwoConnected;
    forest.blocks.push_back(std::move(block));
  };

  auto dfs = [&](auto& self, Vertex u, EdgeId via) -> void {
    int children = 0;
    for (EdgeId e : g.incident(u)) {
      if (e == via) continue;
      const Vertex w = g.edge(e).other(u);
      if (depth[w] == -1) {
        stack.push_back(e);
        depth[w] = depth[u] + 1;
        low[w] = depth[w];
        ++children;
        self(self, w, e);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= depth[u]) {
          if (via != -1 || children > 1) is_cut[u] = true;
          close_block(e);
        }
      } else if (depth[w] < depth[u]) {
        stack.push_back(e);
        low[u] = std::min(low[u], depth[w]);
      }
    }
  };

  for (Vertex r = 0; r < n; ++r) {
    if (depth[r] != -1) continue;
    depth[r] = 0;
    low[r] = 0;
    if (g.degree(r) == 0) {
      Block lone;
      lone.vertices = {r};
      forest.blocks.push_back(std::move(lone));
      continue;
    }
    dfs(dfs, r, -1);
  }
  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) cuts.push_back(v);
  }
  forest.cutvertices = VertexSet(std::move(cuts));

  // Deterministic block order: by smallest edge id (isolated by vertex).
  std::sort(forest.blocks.begin(), forest.blocks.end(), [](const Block& a, const Block& b) {
    const bool ea = a.edges.empty(), eb = b.edges.empty();
    if (ea != eb) return !ea;
    if (ea) return a.vertices < b.vertices;
    return a.edges.front() < b.edges.front();
  });

  std::vector<EndpointPair> bc_edges;
  const int nb = static_cast<int>(forest.blocks.size());
  for (int b = 0; b < nb; ++b) {
    Block& block = forest.blocks[b];
    for (EdgeId e : block.edges) forest.block_of_edge[e] = b;
    for (Vertex v : block.vertices) {
      if (forest.cutvertices.contains(v)) {
        block.cutvertices.push_back(v);
        bc_edges.emplace_back(b, forest.bc_node_of_cutvertex(v));
      }
    }
    block.endblock = block.cutvertices.size() <= 1;
  }
  forest.bc = Graph::build(nb + static_cast<int>(forest.cutvertices.size()), bc_edges);
  return forest;
}

bool is_two_connected(const Graph& g) {
  if (g.order() == 2) return g.multiplicity(0, 1) >= 2;
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_forest(g).cutvertices.empty();
}

ChainKind is_block_chain(const Graph& g) {
  if (!is_connected(g)) {
    throw HamsqError(ErrorCode::kDisconnected, "block chain test needs a connected graph");
  }
  const BlockForest forest = block_forest(g);
  const Graph& bc = forest.bc;
  if (bc.size() == 0) return ChainKind::kTrivial;
  // bc(G) is a tree; it is a path iff every node has degree <= 2.
  for (Vertex x = 0; x < bc.order(); ++x) {
    if (bc.degree(x) > 2) return ChainKind::kNotAChain;
  }
  return ChainKind::kNonTrivial;
}

VertexSet v2(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool is_dt_graph(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != 2 && g.degree(e.v) != 2) return false;
  }
  return true;
}

std::vector<SuspendedPath> suspended_paths(const Graph& g) {
  const int n = g.order();
  std::vector<bool> used(n, false);
  std::vector<SuspendedPath> out;

  // Walk from `start` along edge `e` until reaching a vertex that is not
  // 2-valent (or coming back to `origin`). Returns the visited vertices.
  auto walk = [&](Vertex origin, Vertex start, EdgeId e, bool& closed) {
    std::vector<Vertex> seq;
    Vertex at = start;
    EdgeId via = e;
    closed = false;
    while (true) {
      const Vertex next = g.edge(via).other(at);
      seq.push_back(next);
      if (next == origin) {
        closed = true;
        break;
      }
      if (g.degree(next) != 2) break;
      const auto inc = g.incident(next);
      via = inc[0] == via ? inc[1] : inc[0];
      at = next;
    }
    return seq;
  };

  for (Vertex x = 0; x < n; ++x) {
    if (used[x] || g.degree(x) != 2) continue;
    const auto inc = g.incident(x);
    bool closed = false;
    auto forward = walk(x, x, inc[0], closed);
    if (closed) {
      for (Vertex v : forward) used[v] = true;
      continue;
    }
    auto backward = walk(x, x, inc[1], closed);
    std::vector<Vertex> seq(backward.rbegin(), backward.rend());
    seq.push_back(x);
    seq.insert(seq.end(), forward.begin(), forward.end());
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) used[seq[i]] = true;
    if (seq.front() == seq.back()) continue;
    if (seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
    out.push_back({std::move(seq)});
  }
  std::sort(out.begin(), out.end(), [](const SuspendedPath& a, const SuspendedPath& b) {
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace hamsq
