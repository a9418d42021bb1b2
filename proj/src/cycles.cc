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

#include "hamsq/cycles.h"

#include <algorithm>

#include "hamsq/decomposition.h"
#include "hamsq/error.h"
#include "hamsq/mask.h"

namespace hamsq {

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNone: return "none";
    case SearchStatus::kUnknown: return "unknown";
  }
  return "?";
}

int CycleWitness::intersection(const VertexSet& w) const {
  int count = 0;
  for (Vertex v : vertices) {
    if (w.contains(v)) ++count;
  }
  return count;
}

bool CycleWitness::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
  const std::size_t len = c.edges.size();
  if (len < 2 || c.vertices.size() != len) return false;
  std::vector<bool> seen_v(g.order(), false), seen_e(g.size(), false);
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex a = c.vertices[i], b = c.vertices[(i + 1) % len];
    const EdgeId e = c.edges[i];
    if (a < 0 || a >= g.order() || e < 0 || e >= g.size()) return false;
    if (seen_v[a] || seen_e[e]) return false;
    seen_v[a] = seen_e[e] = true;
    const Edge& edge = g.edge(e);
    if (!((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a))) return false;
  }
  return true;
}

EnumerationEnd for_each_cycle(const Graph& g, std::uint64_t cap,
                              const std::function<bool(const CycleWitness&)>& visit) {
  const int n = g.order();
  std::vector<bool> on_path(n, false);
  CycleWitness path;
  std::uint64_t emitted = 0;
  bool halt = false;
  EnumerationEnd end = EnumerationEnd::kCompleted;

  auto dfs = [&](auto& self, Vertex s, Vertex u) -> void {
    for (EdgeId e : g.incident(u)) {
      if (halt) return;
      const Vertex w = g.edge(e).other(u);
      if (w == s) {
        // Each cycle is met once per direction; keep the one whose first
        // edge id is smaller than its closing edge id.
        if (!path.edges.empty() && e != path.edges.front() && path.edges.front() < e) {
          if (emitted == cap) {
            halt = true;
            end = EnumerationEnd::kCapped;
            return;
          }
          ++emitted;
          path.edges.push_back(e);
          const bool go_on = visit(path);
          path.edges.pop_back();
          if (!go_on) {
            halt = true;
            end = EnumerationEnd::kStopped;
            return;
          }
        }
      } else if (w > s && !on_path[w]) {
        on_path[w] = true;
        path.vertices.push_back(w);
        path.edges.push_back(e);
        self(self, s, w);
        path.edges.pop_back();
        path.vertices.pop_back();
        on_path[w] = false;
      }
    }
  };

  for (Vertex s = 0; s < n && !halt; ++s) {
    path.vertices.assign(1, s);
    path.edges.clear();
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  return end;
}

SearchResult<CycleWitness> find_cycle_through(const Graph& g, const VertexSet& required,
                                              std::uint64_t budget) {
  for (Vertex v : required) g.check_vertex(v);
  SearchResult<CycleWitness> result;
  if (required.empty()) {
    const auto end = for_each_cycle(g, budget, [&](const CycleWitness& c) {
      result.witness = c;
      return false;
    });
    result.status = result.witness ? SearchStatus::kFound
                    : end == EnumerationEnd::kCapped ? SearchStatus::kUnknown
                                                     : SearchStatus::kNone;
    return result;
  }

  const auto adj = adjacency_masks(g);
  Mask need = 0;
  for (Vertex v : required) need |= bit(v);
  const Vertex s = required.members().front();
  const Mask everything = all_vertices(g.order());

  NodeBudget nodes(budget);
  CycleWitness path;
  path.vertices.push_back(s);
  Mask on_path = bit(s);
  bool found = false;

  auto dfs = [&](auto& self, Vertex u) -> void {
    if (!nodes.spend()) return;
    for (EdgeId e : g.incident(u)) {
      if (found || nodes.exhausted()) return;
      const Vertex w = g.edge(e).other(u);
      if (w == s) {
        if (!path.edges.empty() && e != path.edges.front() && (need & ~on_path) == 0) {
          path.edges.push_back(e);
          found = true;
          return;
        }
        continue;
      }
      if (on_path & bit(w)) continue;
      const Mask free_after = everything & ~(on_path | bit(w));
      const Mask reach = reachable_within(adj, w, free_after | bit(w));
      const Mask missing = need & ~(on_path | bit(w));
      if ((missing & ~reach) != 0) continue;
      if ((adj[s] & reach) == 0) continue;
      on_path |= bit(w);
      path.vertices.push_back(w);
      path.edges.push_back(e);
      self(self, w);
      if (found) return;
      path.edges.pop_back();
      path.vertices.pop_back();
      on_path &= ~bit(w);
    }
  };
  dfs(dfs, s);

  result.nodes = nodes.used();
  if (found) {
    result.status = SearchStatus::kFound;
    result.witness = std::move(path);
  } else {
    result.status = nodes.exhausted() ? SearchStatus::kUnknown : SearchStatus::kNone;
  }
  return result;
}

WCycle best_w_cycle(const Graph& g, const VertexSet& w, std::uint64_t cap) {
  int ceiling = 0;
  for (Vertex v : w) {
    g.check_vertex(v);
    ++ceiling;
  }
  WCycle best;
  bool any = false;
  const auto end = for_each_cycle(g, cap, [&](const CycleWitness& c) {
    const int count = c.intersection(w);
    if (!any || count > best.count) {
      any = true;
      best.cycle = c;
      best.count = count;
    }
    return best.count < ceiling;
  });
  if (!any) throw HamsqError(ErrorCode::kAcyclic, "graph has no cycle");
  best.sound = best.count >= 4;
  best.certified = end == EnumerationEnd::kCompleted || best.count == ceiling;
  return best;
}

CycleWitness find_vw1w2_maximal_cycle(const Graph& g, Vertex v, Vertex w1, Vertex w2,
                                      std::uint64_t budget) {
  if (!is_two_connected(g)) {
    throw HamsqError(ErrorCode::kNotTwoConnected, "[v;w1,w2]-maximal cycle needs a block");
  }
  if (v == w1 || v == w2 || w1 == w2) {
    throw HamsqError(ErrorCode::kSameVertex, "v, w1, w2 must be distinct");
  }
  auto all_three = find_cycle_through(g, VertexSet{v, w1, w2}, budget);
  if (all_three.found()) return *all_three.witness;
  if (all_three.status == SearchStatus::kNone) {
    auto two = find_cycle_through(g, VertexSet{v, w1}, budget);
    if (two.found()) return *two.witness;
  }
  throw HamsqError(ErrorCode::kTooLarge, "cycle search budget exhausted");
}

}  // namespace hamsq
