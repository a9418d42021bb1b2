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

#ifndef HAMSQ_DECOMPOSITION_H_
#define HAMSQ_DECOMPOSITION_H_

#include <vector>

#include "hamsq/graph.h"

namespace hamsq {

enum class BlockKind {
  kIsolated,      // a lone vertex, no edges
  kBridge,        // a single edge
  kTwoConnected,  // a cycle, a digon, or anything larger without cutvertex
};

struct Block {
  BlockKind kind = BlockKind::kIsolated;
  std::vector<EdgeId> edges;     // ascending
  std::vector<Vertex> vertices;  // ascending
  std::vector<Vertex> cutvertices;
  bool endblock = false;  // at most one cutvertex of G
};

// Blocks and cutvertices of G plus the bipartite block-cutvertex graph.
// bc node b < blocks.size() is block b; node blocks.size() + i is
// cutvertices.members()[i].
struct BlockForest {
  std::vector<Block> blocks;
  VertexSet cutvertices;
  Graph bc;
  // block_of_edge[e] is the block index holding edge e.
  std::vector<int> block_of_edge;

  int bc_node_of_cutvertex(Vertex c) const;
  // Indices of blocks containing v.
  std::vector<int> blocks_containing(Vertex v) const;
};

BlockForest block_forest(const Graph& g);

bool is_two_connected(const Graph& g);

enum class ChainKind { kTrivial, kNonTrivial, kNotAChain };

// Throws kDisconnected if G is not connected.
ChainKind is_block_chain(const Graph& g);

// Degree-2 vertices.
VertexSet v2(const Graph& g);

bool is_dt_graph(const Graph& g);

struct SuspendedPath {
  std::vector<Vertex> vertices;  // from one endpoint to the other
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
};

// Maximal paths with at least one internal vertex whose internal vertices
// are 2-valent and whose endpoints are not. Closed chains (cycles hanging at
// one vertex, or a whole cycle component) are not paths and are skipped.
// Each path is reported once, oriented from its smaller endpoint.
std::vector<SuspendedPath> suspended_paths(const Graph& g);

}  // namespace hamsq

#endif  // HAMSQ_DECOMPOSITION_H_
