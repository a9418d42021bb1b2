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

#include "hamsq/hamilton.h"

#include <algorithm>
#include <set>

#include "hamsq/error.h"
#include "hamsq/powers.h"

namespace hamsq {

namespace {

class HamEngine {
 public:
  HamEngine(const HamProblem& p, std::uint64_t budget)
      : p_(p), budget_(budget), closed_(p.end < 0) {}

  SearchStatus run() {
    const Mask cover = p_.cover;
    if (!(cover & bit(p_.start))) return SearchStatus::kNone;
    if (!closed_ && !(cover & bit(p_.end))) return SearchStatus::kNone;
    if (closed_ && popcount(cover) < 3) return SearchStatus::kNone;
    if (!closed_ && popcount(cover) == 1) return SearchStatus::kNone;
    order_.assign(1, p_.start);
    if (dfs(p_.start, bit(p_.start), false)) return SearchStatus::kFound;
    return budget_.exhausted() ? SearchStatus::kUnknown : SearchStatus::kNone;
  }

  HamOrder take_order() { return std::move(order_); }
  std::uint64_t nodes() const { return budget_.used(); }

 private:
  int demand(Vertex v) const { return p_.demand.empty() ? 0 : p_.demand[v]; }

  bool dfs(Vertex cur, Mask visited, bool pred_base) {
    if (!budget_.spend()) return false;
    const Mask unvisited = p_.cover & ~visited;
    if (unvisited == 0) {
      if (closed_ && !(p_.route[cur] & bit(p_.start))) return false;
      return match_demands(p_, order_).has_value();
    }
    int need;
    if (cur == p_.start) {
      // A cycle's start gets a second edge when the cycle closes.
      need = closed_ ? std::max(0, demand(cur) - 1) : demand(cur);
    } else {
      need = demand(cur) - (pred_base ? 1 : 0);
    }
    if (need >= 2) return false;

    Mask candidates = p_.route[cur] & unvisited;
    if (!closed_ && popcount(unvisited) > 1) candidates &= ~bit(p_.end);
    if (need == 1) candidates &= p_.base[cur];

    for (Mask c = candidates; c; c &= c - 1) {
      const Vertex w = lowest(c);
      const bool base_edge = (p_.base[cur] & bit(w)) != 0;
      if (!closed_ && w == p_.end) {
        if (demand(w) > (base_edge ? 1 : 0)) continue;
      } else if (demand(w) == 2 && !base_edge) {
        continue;
      }
      const Mask rest = unvisited & ~bit(w);
      if (rest != 0 && !viable(w, rest)) continue;
      order_.push_back(w);
      if (dfs(w, visited | bit(w), base_edge)) return true;
      order_.pop_back();
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  // Can the vertices in `rest` still be threaded after standing at w?
  bool viable(Vertex w, Mask rest) const {
    const Mask reach = reachable_within(p_.route, w, rest | bit(w));
    if ((rest & ~reach) != 0) return false;
    if (closed_ && !(p_.route[p_.start] & rest)) return false;
    const Mask pool = rest | bit(w) | (closed_ ? bit(p_.start) : 0);
    for (Mask r = rest; r; r &= r - 1) {
      const Vertex x = lowest(r);
      const int degree_needed = (!closed_ && x == p_.end) ? 1 : 2;
      if (popcount(p_.route[x] & pool) < degree_needed) return false;
    }
    return true;
  }

  const HamProblem& p_;
  NodeBudget budget_;
  bool closed_;
  HamOrder order_;
};

HamProblem square_problem(const Graph& g) {
  HamProblem p;
  p.route = adjacency_masks(square(g));
  p.base = adjacency_masks(g);
  p.cover = all_vertices(g.order());
  p.demand.assign(g.order(), 0);
  return p;
}

EdgeId smallest_edge_between(const Graph& g, Vertex u, Vertex v) {
  EdgeId best = -1;
  for (EdgeId e : g.incident(u)) {
    if (g.edge(e).other(u) == v && (best < 0 || e < best)) best = e;
  }
  return best;
}

}  // namespace

std::optional<std::vector<std::pair<Vertex, Vertex>>> match_demands(const HamProblem& p,
                                                                    const HamOrder& order) {
  const bool closed = p.end < 0;
  const std::size_t len = order.size();
  // Path edge i joins order[i] and order[(i + 1) % len].
  const std::size_t edge_count = closed ? len : len - 1;
  std::vector<Vertex> pos_vertex;
  std::vector<std::vector<int>> options;
  std::vector<int> needs;

  for (std::size_t i = 0; i < len; ++i) {
    const Vertex x = order[i];
    const int need = p.demand.empty() ? 0 : p.demand[x];
    if (need == 0) continue;
    std::vector<int> opts;
    // Edge to the predecessor has index i-1, to the successor index i.
    if (i > 0 || closed) {
      const std::size_t prev = (i + len - 1) % len;
      if (p.base[x] & bit(order[prev])) opts.push_back(static_cast<int>(prev));
    }
    if (i < edge_count) {
      const std::size_t next = (i + 1) % len;
      if (p.base[x] & bit(order[next])) opts.push_back(static_cast<int>(i));
    }
    if (static_cast<int>(opts.size()) < need) return std::nullopt;
    pos_vertex.push_back(x);
    options.push_back(std::move(opts));
    needs.push_back(need);
  }

  std::vector<bool> taken(edge_count, false);
  std::vector<std::pair<Vertex, Vertex>> chosen;
  auto partner = [&](Vertex x, int edge_index) {
    const Vertex a = order[edge_index], b = order[(edge_index + 1) % len];
    return a == x ? b : a;
  };
  auto place = [&](auto& self, std::size_t idx) -> bool {
    if (idx == pos_vertex.size()) return true;
    const Vertex x = pos_vertex[idx];
    const auto& opts = options[idx];
    if (needs[idx] == 2) {
      if (taken[opts[0]] || taken[opts[1]]) return false;
      taken[opts[0]] = taken[opts[1]] = true;
      chosen.emplace_back(x, partner(x, opts[0]));
      chosen.emplace_back(x, partner(x, opts[1]));
      if (self(self, idx + 1)) return true;
      chosen.pop_back();
      chosen.pop_back();
      taken[opts[0]] = taken[opts[1]] = false;
      return false;
    }
    for (int e : opts) {
      if (taken[e]) continue;
      taken[e] = true;
      chosen.emplace_back(x, partner(x, e));
      if (self(self, idx + 1)) return true;
      chosen.pop_back();
      taken[e] = false;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return chosen;
}

SearchResult<HamOrder> search_hamiltonian(const HamProblem& p, std::uint64_t budget) {
  HamEngine engine(p, budget);
  SearchResult<HamOrder> result;
  result.status = engine.run();
  result.nodes = engine.nodes();
  if (result.found()) result.witness = engine.take_order();
  return result;
}

SearchResult<HamOrder> ham_path_in_square(const Graph& g, Vertex s, Vertex t,
                                          const EdgeDemand& demand, std::uint64_t budget) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw HamsqError(ErrorCode::kSameVertex, "path endpoints must differ");
  HamProblem p = square_problem(g);
  p.start = s;
  p.end = t;
  for (const auto& [v, count] : demand.at) {
    g.check_vertex(v);
    if (count < 0 || count > 2) {
      throw HamsqError(ErrorCode::kInvalidInput, "edge demand must be 0, 1 or 2");
    }
    p.demand[v] = static_cast<std::uint8_t>(std::max<int>(p.demand[v], count));
  }
  return search_hamiltonian(p, budget);
}

SearchResult<HamOrder> ham_path_in(const Graph& route, Vertex s, Vertex t,
                                   std::uint64_t budget) {
  route.check_vertex(s);
  route.check_vertex(t);
  if (s == t) throw HamsqError(ErrorCode::kSameVertex, "path endpoints must differ");
  HamProblem p;
  p.route = adjacency_masks(route);
  p.base = p.route;
  p.cover = all_vertices(route.order());
  p.start = s;
  p.end = t;
  return search_hamiltonian(p, budget);
}

SearchResult<HamCycle> ham_cycle_in_square(const Graph& g, const HamCycleConstraint& c,
                                           std::uint64_t budget) {
  if (g.order() < 3) throw HamsqError(ErrorCode::kTooSmall, "hamiltonian cycle needs n >= 3");
  HamProblem p = square_problem(g);
  if (c.v >= 0) {
    g.check_vertex(c.v);
    p.demand[c.v] = 2;
  }
  for (Vertex w : c.ws) {
    g.check_vertex(w);
    if (w == c.v) throw HamsqError(ErrorCode::kSameVertex, "w must differ from v");
    p.demand[w] = std::max<std::uint8_t>(p.demand[w], 1);
  }
  p.start = c.v >= 0 ? c.v : (c.ws.empty() ? 0 : c.ws.front());
  p.end = -1;
  auto raw = search_hamiltonian(p, budget);
  SearchResult<HamCycle> result;
  result.status = raw.status;
  result.nodes = raw.nodes;
  if (raw.found()) result.witness = HamCycle{std::move(*raw.witness)};
  return result;
}

namespace {

// Pairs at distance <= 2 by BFS; used by the verifiers only.
std::vector<std::vector<bool>> within_two(const Graph& g) {
  std::vector<std::vector<bool>> near(g.order(), std::vector<bool>(g.order(), false));
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto dist = distances_from(g, x);
    for (Vertex y = 0; y < g.order(); ++y) near[x][y] = x != y && dist[y] <= 2;
  }
  return near;
}

// Demanded units: (vertex, how many). Route edges given as vertex pairs.
// Brute-force injective assignment of base edges to demands.
bool demands_met(const Graph& g, const std::vector<std::pair<Vertex, int>>& units,
                 const std::vector<std::pair<Vertex, Vertex>>& route_edges) {
  std::vector<bool> used(route_edges.size(), false);
  auto go = [&](auto& self, std::size_t idx, int left) -> bool {
    if (idx == units.size()) return true;
    const auto [x, _] = units[idx];
    if (left == 0) {
      const std::size_t next = idx + 1;
      return self(self, next, next < units.size() ? units[next].second : 0);
    }
    for (std::size_t i = 0; i < route_edges.size(); ++i) {
      const auto [a, b] = route_edges[i];
      if (used[i] || (a != x && b != x)) continue;
      if (!g.adjacent(a, b)) continue;
      used[i] = true;
      if (self(self, idx, left - 1)) return true;
      used[i] = false;
    }
    return false;
  };
  return go(go, 0, units.empty() ? 0 : units.front().second);
}

}  // namespace

VerifyReport verify_ham_cycle(const Graph& g, const HamCycleConstraint& c,
                              const HamCycle& cycle) {
  const int n = g.order();
  const auto& order = cycle.vertices;
  if (static_cast<int>(order.size()) != n || n < 3) return {false, "not a spanning cycle"};
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) return {false, "vertex repeated or out of range"};
    seen[v] = true;
  }
  const auto near = within_two(g);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    const Vertex a = order[i], b = order[(i + 1) % n];
    if (!near[a][b]) return {false, "consecutive vertices not adjacent in G^2"};
    edges.emplace_back(a, b);
  }
  std::vector<std::pair<Vertex, int>> units;
  if (c.v >= 0) units.emplace_back(c.v, 2);
  for (Vertex w : c.ws) units.emplace_back(w, 1);
  if (!demands_met(g, units, edges)) return {false, "required G-edges missing or shared"};
  return {};
}

VerifyReport verify_ham_path(const Graph& g, Vertex s, Vertex t, const EdgeDemand& demand,
                             const HamOrder& path) {
  const int n = g.order();
  if (static_cast<int>(path.size()) != n || n < 2) return {false, "not a spanning path"};
  std::vector<bool> seen(n, false);
  for (Vertex v : path) {
    if (v < 0 || v >= n || seen[v]) return {false, "vertex repeated or out of range"};
    seen[v] = true;
  }
  if (path.front() != s || path.back() != t) return {false, "wrong end vertices"};
  const auto near = within_two(g);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    if (!near[path[i]][path[i + 1]]) return {false, "consecutive vertices not adjacent in G^2"};
    edges.emplace_back(path[i], path[i + 1]);
  }
  if (!demands_met(g, demand.at, edges)) return {false, "required G-edges missing or shared"};
  return {};
}

void validate_query(const FkQuery& q) {
  const int n = q.host.order();
  if (q.k < 3) throw HamsqError(ErrorCode::kInvalidQuery, "k must be at least 3");
  if (q.k > n) throw HamsqError(ErrorCode::kInvalidQuery, "k exceeds vertex count");
  if (static_cast<int>(q.a.size()) != q.k) {
    throw HamsqError(ErrorCode::kInvalidQuery, "A must list exactly k vertices");
  }
  std::set<Vertex> distinct;
  for (Vertex x : q.a) {
    if (x < 0 || x >= n) throw HamsqError(ErrorCode::kInvalidQuery, "vertex out of range");
    distinct.insert(x);
  }
  if (static_cast<int>(distinct.size()) != q.k) {
    throw HamsqError(ErrorCode::kInvalidQuery, "A has repeated vertices");
  }
}

SearchResult<FkCertificate> check_fk(const FkQuery& q, std::uint64_t budget) {
  validate_query(q);
  HamProblem p = square_problem(q.host);
  p.start = q.a[0];
  p.end = q.a[1];
  for (int i = 2; i < q.k; ++i) p.demand[q.a[i]] = 1;
  auto raw = search_hamiltonian(p, budget);
  SearchResult<FkCertificate> result;
  result.status = raw.status;
  result.nodes = raw.nodes;
  if (!raw.found()) return result;
  FkCertificate cert;
  cert.path = *raw.witness;
  const auto matched = match_demands(p, cert.path);
  for (const auto& [x, y] : *matched) {
    const int index = static_cast<int>(std::find(q.a.begin(), q.a.end(), x) - q.a.begin());
    cert.witnesses[index + 1] = smallest_edge_between(q.host, x, y);
  }
  result.witness = std::move(cert);
  return result;
}

VerifyReport verify_certificate(const FkQuery& q, const FkCertificate& cert) {
  const Graph& g = q.host;
  const int n = g.order();
  if (q.k < 3 || static_cast<int>(q.a.size()) != q.k) return {false, "malformed query"};
  const auto& path = cert.path;
  if (static_cast<int>(path.size()) != n) return {false, "path is not hamiltonian"};
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= n || position[v] >= 0) return {false, "path repeats a vertex"};
    position[v] = i;
  }
  if (path.front() != q.a[0] || path.back() != q.a[1]) {
    return {false, "path does not run from x1 to x2"};
  }
  const auto near = within_two(g);
  for (int i = 0; i + 1 < n; ++i) {
    if (!near[path[i]][path[i + 1]]) return {false, "path step not an edge of G^2"};
  }
  std::set<EdgeId> used;
  for (int i = 3; i <= q.k; ++i) {
    const auto it = cert.witnesses.find(i);
    if (it == cert.witnesses.end()) return {false, "missing witness for x" + std::to_string(i)};
    const EdgeId e = it->second;
    if (e < 0 || e >= g.size()) return {false, "witness edge not in G"};
    const Vertex x = q.a[i - 1];
    const Edge& edge = g.edge(e);
    if (edge.u != x && edge.v != x) return {false, "witness edge not incident to x_i"};
    const Vertex y = edge.other(x);
    if (std::abs(position[x] - position[y]) != 1) return {false, "witness edge not on path"};
    if (!used.insert(e).second) return {false, "witness edge used twice"};
  }
  if (static_cast<int>(cert.witnesses.size()) != q.k - 2) return {false, "extra witnesses"};
  return {};
}

bool witness_touches_terminal(const FkQuery& q, const FkCertificate& cert) {
  for (const auto& [i, e] : cert.witnesses) {
    const Edge& edge = q.host.edge(e);
    const Vertex y = edge.other(q.a[i - 1]);
    if (y == q.a[0] || y == q.a[1]) return true;
  }
  return false;
}

GPlus g_plus(const Graph& g, Vertex x1, Vertex x2) {
  g.check_vertex(x1);
  g.check_vertex(x2);
  if (x1 == x2) throw HamsqError(ErrorCode::kSameVertex, "G+ needs two distinct vertices");
  auto edges = g.endpoint_list();
  const Vertex y = g.order();
  edges.emplace_back(y, x1);
  edges.emplace_back(y, x2);
  return {Graph::build(g.order() + 1, edges), y};
}

}  // namespace hamsq
