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

#include "hamsq/graph.h"

#include <algorithm>
#include <cstdio>
#include <deque>

#include "hamsq/error.h"
#include "hamsq/mask.h"

namespace hamsq {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopRejected: return "LoopRejected";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kUnknownEdgeId: return "UnknownEdgeId";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kSameVertex: return "SameVertex";
    case ErrorCode::kNotTwoConnected: return "NotTwoConnected";
    case ErrorCode::kAcyclic: return "Acyclic";
    case ErrorCode::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::kInvalidQuery: return "InvalidQuery";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kNotATree: return "NotATree";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::build(int n, std::span<const EndpointPair> edges) {
  if (n < 0) {
    throw HamsqError(ErrorCode::kInvalidInput, "negative vertex count");
  }
  Graph g;
  g.n_ = n;
  g.incidence_.resize(n);
  g.neighbors_.resize(n);
  g.edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw HamsqError(ErrorCode::kVertexOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") with n=" + std::to_string(n));
    }
    if (u == v) {
      throw HamsqError(ErrorCode::kLoopRejected, "loop at " + std::to_string(u));
    }
    const EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({u, v});
    g.incidence_[u].push_back(id);
    g.incidence_[v].push_back(id);
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
  }
  for (auto& nbrs : g.neighbors_) {
    std::sort(nbrs.begin(), nbrs.end());
    const auto last = std::unique(nbrs.begin(), nbrs.end());
    if (last != nbrs.end()) g.simple_ = false;
    nbrs.erase(last, nbrs.end());
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw HamsqError(ErrorCode::kVertexOutOfRange,
                     "vertex " + std::to_string(v) + " with n=" + std::to_string(n_));
  }
}

void Graph::check_edge(EdgeId e) const {
  if (e < 0 || e >= size()) {
    throw HamsqError(ErrorCode::kUnknownEdgeId, "edge id " + std::to_string(e));
  }
}

const Edge& Graph::edge(EdgeId e) const {
  check_edge(e);
  return edges_[e];
}

std::span<const EdgeId> Graph::incident(Vertex v) const {
  check_vertex(v);
  return incidence_[v];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(incidence_[v].size());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return neighbors_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v);
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  check_vertex(v);
  int count = 0;
  for (EdgeId e : incident(u)) {
    if (edges_[e].other(u) == v) ++count;
  }
  return count;
}

std::vector<EndpointPair> Graph::endpoint_list() const {
  std::vector<EndpointPair> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

int degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<int> distances_from(const Graph& g, Vertex s) {
  g.check_vertex(s);
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph underlying_simple(const Graph& g) {
  std::vector<EndpointPair> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::build(g.order(), edges);
}

RelabeledGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> fresh(g.order(), -1);
  RelabeledGraph out;
  for (Vertex v : keep) {
    g.check_vertex(v);
    fresh[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<EndpointPair> edges;
  for (const Edge& e : g.edges()) {
    if (fresh[e.u] >= 0 && fresh[e.v] >= 0) edges.emplace_back(fresh[e.u], fresh[e.v]);
  }
  out.graph = Graph::build(static_cast<int>(out.original.size()), edges);
  return out;
}

Graph delete_edges(const Graph& g, std::span<const EdgeId> doomed) {
  std::vector<bool> gone(g.size(), false);
  for (EdgeId e : doomed) {
    g.check_edge(e);
    gone[e] = true;
  }
  std::vector<EndpointPair> edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (!gone[e]) edges.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  return Graph::build(g.order(), edges);
}

RelabeledGraph delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

std::string host_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      h ^= (value >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  mix(static_cast<std::uint64_t>(g.size()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Graph cycle_graph(int n) {
  if (n < 3) throw HamsqError(ErrorCode::kInvalidInput, "cycle needs n >= 3");
  std::vector<EndpointPair> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, edges);
}

Graph path_graph(int n) {
  std::vector<EndpointPair> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, edges);
}

Graph complete_graph(int n) {
  std::vector<EndpointPair> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::build(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<EndpointPair> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::build(leaves + 1, edges);
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.order() > kMaxSearchOrder) {
    throw HamsqError(ErrorCode::kTooLarge,
                     "search supports at most 64 vertices, got " +
                         std::to_string(g.order()));
  }
  std::vector<Mask> rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= bit(e.v);
    rows[e.v] |= bit(e.u);
  }
  return rows;
}

Mask reachable_within(const std::vector<Mask>& adj, Vertex start, Mask within) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace hamsq
