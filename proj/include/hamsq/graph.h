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

#ifndef HAMSQ_GRAPH_H_
#define HAMSQ_GRAPH_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamsq {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

using EndpointPair = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free list of vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

// Finite loopless multigraph on vertices 0..n-1. Edge ids are 0..m-1 in
// construction order. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws HamsqError(kLoopRejected / kVertexOutOfRange).
  static Graph build(int n, std::span<const EndpointPair> edges);
  static Graph build(int n, std::initializer_list<EndpointPair> edges) {
    return build(n, std::span<const EndpointPair>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool is_simple() const { return simple_; }

  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const;
  int degree(Vertex v) const;

  // Distinct neighbours of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  // Number of parallel edges joining u and v.
  int multiplicity(Vertex u, Vertex v) const;

  void check_vertex(Vertex v) const;
  void check_edge(EdgeId e) const;

  std::vector<EndpointPair> endpoint_list() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  bool simple_ = true;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::vector<Vertex>> neighbors_;
};

// A graph produced by deleting vertices, with new label -> old label.
struct RelabeledGraph {
  Graph graph;
  std::vector<Vertex> original;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

int degree(const Graph& g, Vertex v);

// BFS distances on the underlying simple graph; kUnreachable if no path.
std::vector<int> distances_from(const Graph& g, Vertex s);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
Graph underlying_simple(const Graph& g);
RelabeledGraph induced_subgraph(const Graph& g, const VertexSet& keep);
// Keeps all vertices; surviving edges are renumbered in their original order.
Graph delete_edges(const Graph& g, std::span<const EdgeId> doomed);
RelabeledGraph delete_vertex(const Graph& g, Vertex v);

// Stable 64-bit FNV-1a digest over (n, edge list), rendered as 16 hex digits.
std::string host_hash(const Graph& g);

// Handy constructors used by tests, generators and the CLI.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace hamsq

#endif  // HAMSQ_GRAPH_H_
