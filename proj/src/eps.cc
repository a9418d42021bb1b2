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

#include "hamsq/eps.h"

#include <algorithm>
#include <numeric>

#include "hamsq/error.h"

namespace hamsq {

namespace {

std::vector<int> degrees_of(const Graph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> deg(g.order(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.size()) continue;
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

struct PlainDsu {
  std::vector<int> parent;
  explicit PlainDsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

VerifyReport fail(std::string why) { return {false, std::move(why)}; }

// Shared part of the EPS and JEPS checks. `trail` may be empty.
VerifyReport verify_parts(const Graph& g, const std::vector<EdgeId>& e_edges,
                          const std::vector<EdgeId>& p_edges,
                          const std::vector<EdgeId>& j_edges) {
  std::vector<int> owner(g.size(), 0);
  for (const auto* part : {&e_edges, &p_edges, &j_edges}) {
    for (EdgeId e : *part) {
      if (e < 0 || e >= g.size()) return fail("edge id " + std::to_string(e) + " not in host");
      if (owner[e]++ != 0) return fail("edge " + std::to_string(e) + " used twice");
    }
  }
  const auto de = degrees_of(g, e_edges);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (de[v] % 2 != 0) return fail("E has odd degree at vertex " + std::to_string(v));
  }
  const auto dp = degrees_of(g, p_edges);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dp[v] > 2) return fail("P has degree > 2 at vertex " + std::to_string(v));
  }
  PlainDsu forest(g.order());
  for (EdgeId e : p_edges) {
    if (!forest.unite(g.edge(e).u, g.edge(e).v)) return fail("P contains a cycle");
  }
  PlainDsu spanning(g.order());
  for (const auto* part : {&e_edges, &p_edges, &j_edges}) {
    for (EdgeId e : *part) spanning.unite(g.edge(e).u, g.edge(e).v);
  }
  for (Vertex v = 1; v < g.order(); ++v) {
    if (spanning.find(v) != spanning.find(0)) {
      return fail("S is not spanning connected (vertex " + std::to_string(v) + ")");
    }
  }
  return {};
}

}  // namespace

std::vector<int> EpsDecomposition::e_degrees() const { return degrees_of(host, e_edges); }
std::vector<int> EpsDecomposition::p_degrees() const { return degrees_of(host, p_edges); }
int EpsDecomposition::d_e(Vertex v) const { return e_degrees().at(v); }
int EpsDecomposition::d_p(Vertex v) const { return p_degrees().at(v); }
int JepsDecomposition::d_j(Vertex v) const { return degrees_of(host, j_edges).at(v); }

void DegreeConstraint::set_cap(Vertex v, PCap c) {
  if (v >= static_cast<Vertex>(caps.size())) caps.resize(v + 1, PCap::kFree);
  caps[v] = c;
}

DegreeConstraint DegreeConstraint::bracket(Vertex v, const std::vector<Vertex>& ws) {
  DegreeConstraint c;
  for (Vertex w : ws) c.set_cap(w, PCap::kAtMostOne);
  c.set_cap(v, PCap::kZero);
  return c;
}

DegreeConstraint DegreeConstraint::at_most_one(const std::vector<Vertex>& ws) {
  DegreeConstraint c;
  for (Vertex w : ws) c.set_cap(w, PCap::kAtMostOne);
  return c;
}

VerifyReport verify_eps(const EpsDecomposition& d) {
  return verify_parts(d.host, d.e_edges, d.p_edges, {});
}

VerifyReport verify_eps(const JepsDecomposition& d) {
  const Graph& g = d.host;
  if (d.j_edges.empty()) return fail("J is empty");
  if (auto base = verify_parts(g, d.e_edges, d.p_edges, d.j_edges); !base) return base;
  if (d.trail_start == d.trail_end || d.trail_start < 0 || d.trail_end < 0 ||
      d.trail_start >= g.order() || d.trail_end >= g.order()) {
    return fail("J needs two distinct end vertices");
  }
  const auto dj = degrees_of(g, d.j_edges);
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool want_odd = v == d.trail_start || v == d.trail_end;
    if ((dj[v] % 2 == 1) != want_odd) {
      return fail("J parity wrong at vertex " + std::to_string(v));
    }
  }
  PlainDsu trail(g.order());
  for (EdgeId e : d.j_edges) trail.unite(g.edge(e).u, g.edge(e).v);
  const int root = trail.find(d.trail_start);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dj[v] > 0 && trail.find(v) != root) return fail("J is not connected");
  }
  return {};
}

VerifyReport verify_constraint(const EpsDecomposition& d, const DegreeConstraint& c) {
  const auto dp = d.p_degrees();
  for (Vertex v = 0; v < d.host.order(); ++v) {
    const PCap cap = c.cap(v);
    if (cap == PCap::kZero && dp[v] != 0) return fail("d_P(" + std::to_string(v) + ") != 0");
    if (cap == PCap::kAtMostOne && dp[v] > 1) {
      return fail("d_P(" + std::to_string(v) + ") > 1");
    }
  }
  if (c.required_cycle) {
    for (EdgeId e : c.required_cycle->edges) {
      if (!std::binary_search(d.e_edges.begin(), d.e_edges.end(), e)) {
        return fail("required cycle edge " + std::to_string(e) + " not in E");
      }
    }
  }
  if (c.nonempty_e && d.e_edges.empty()) return fail("E is empty");
  if (c.full_p_limit >= 0) {
    int full = 0;
    for (Vertex v : c.full_p_watch) {
      if (v < d.host.order() && dp[v] == 2) ++full;
    }
    if (full > c.full_p_limit) return fail("too many watched vertices with d_P = 2");
  }
  return {};
}

EpsDecomposition normalize_eps(const EpsDecomposition& d) {
  if (auto report = verify_eps(d); !report) {
    throw HamsqError(ErrorCode::kInvalidInput, "normalize_eps: " + report.violation);
  }
  const Graph& g = d.host;
  EpsDecomposition out = d;
  auto connected_without = [&](EdgeId skip) {
    PlainDsu dsu(g.order());
    for (EdgeId e : out.e_edges) dsu.unite(g.edge(e).u, g.edge(e).v);
    for (EdgeId e : out.p_edges) {
      if (e != skip) dsu.unite(g.edge(e).u, g.edge(e).v);
    }
    for (Vertex v = 1; v < g.order(); ++v) {
      if (dsu.find(v) != dsu.find(0)) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e : out.p_edges) {
      if (connected_without(e)) {
        out.p_edges.erase(std::find(out.p_edges.begin(), out.p_edges.end(), e));
        changed = true;
        break;
      }
    }
  }
  return out;
}

namespace {

enum Label : std::uint8_t { kE, kP, kJ, kUnused, kOpen };

// Union-find without path compression so unions can be undone in LIFO order.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Returns false (and records nothing) if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] > rank_[b]) std::swap(a, b);
    history_.push_back({a, rank_[b]});
    parent_[a] = b;
    if (rank_[a] == rank_[b]) ++rank_[b];
    return true;
  }
  void undo() {
    const auto [child, old_rank] = history_.back();
    history_.pop_back();
    const int root = parent_[child];
    rank_[root] = old_rank;
    parent_[child] = child;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<std::pair<int, int>> history_;
};

class LabelSearch {
 public:
  LabelSearch(const Graph& g, const DegreeConstraint& c, bool trail, Vertex a, Vertex b,
              std::uint64_t budget)
      : g_(g),
        c_(c),
        trail_(trail),
        a_(a),
        b_(b),
        budget_(budget),
        label_(g.size(), kOpen),
        open_(g.order(), 0),
        e_par_(g.order(), 0),
        j_par_(g.order(), 0),
        dp_(g.order(), 0),
        ds_(g.order(), 0),
        pcap_(g.order(), 2),
        watched_(g.order(), false),
        p_forest_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      open_[v] = g.degree(v);
      const PCap cap = c.cap(v);
      pcap_[v] = cap == PCap::kZero ? 0 : cap == PCap::kAtMostOne ? 1 : 2;
    }
    if (c.full_p_limit >= 0) {
      for (Vertex v : c.full_p_watch) {
        if (v < g.order()) watched_[v] = true;
      }
    }
  }

  SearchStatus run() {
    if (c_.required_cycle) {
      if (!is_valid_cycle(g_, *c_.required_cycle)) {
        throw HamsqError(ErrorCode::kInvalidInput, "required cycle is not a cycle of the host");
      }
      for (EdgeId e : c_.required_cycle->edges) assign(e, kE);
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (!vertex_ok(v)) return SearchStatus::kNone;
      }
      if (!available_connected()) return SearchStatus::kNone;
    }
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (label_[e] == kOpen) order_.push_back(e);
    }
    const bool hit = descend(0);
    if (hit) return SearchStatus::kFound;
    return budget_.exhausted() ? SearchStatus::kUnknown : SearchStatus::kNone;
  }

  std::uint64_t nodes() const { return budget_.used(); }

  void collect(EpsDecomposition& out, std::vector<EdgeId>* j_out) const {
    out.host = g_;
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (label_[e] == kE) out.e_edges.push_back(e);
      if (label_[e] == kP) out.p_edges.push_back(e);
      if (label_[e] == kJ && j_out) j_out->push_back(e);
    }
  }

 private:
  bool descend(std::size_t idx) {
    if (idx == order_.size()) return leaf_ok();
    const EdgeId e = order_[idx];
    const Vertex u = g_.edge(e).u, v = g_.edge(e).v;
    for (Label l : {kE, kP, kJ, kUnused}) {
      if (l == kJ && !trail_) continue;
      if (!budget_.spend()) return false;
      if (l == kP) {
        if (dp_[u] >= pcap_[u] || dp_[v] >= pcap_[v]) continue;
        if (p_forest_.find(u) == p_forest_.find(v)) continue;
      }
      assign(e, l);
      bool ok = vertex_ok(u) && vertex_ok(v) && full_ok();
      if (ok && l == kUnused) ok = available_connected();
      if (ok && descend(idx + 1)) return true;
      unassign(e);
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  void assign(EdgeId e, Label l) {
    const Vertex u = g_.edge(e).u, v = g_.edge(e).v;
    label_[e] = l;
    --open_[u];
    --open_[v];
    if (l == kE) {
      e_par_[u] ^= 1;
      e_par_[v] ^= 1;
    } else if (l == kJ) {
      j_par_[u] ^= 1;
      j_par_[v] ^= 1;
    } else if (l == kP) {
      ++dp_[u];
      ++dp_[v];
      if (dp_[u] == 2 && watched_[u]) ++full_;
      if (dp_[v] == 2 && watched_[v]) ++full_;
      p_forest_.unite(u, v);
    }
    if (l != kUnused) {
      ++ds_[u];
      ++ds_[v];
    }
  }

  void unassign(EdgeId e) {
    const Vertex u = g_.edge(e).u, v = g_.edge(e).v;
    const Label l = static_cast<Label>(label_[e]);
    label_[e] = kOpen;
    ++open_[u];
    ++open_[v];
    if (l == kE) {
      e_par_[u] ^= 1;
      e_par_[v] ^= 1;
    } else if (l == kJ) {
      j_par_[u] ^= 1;
      j_par_[v] ^= 1;
    } else if (l == kP) {
      if (dp_[u] == 2 && watched_[u]) --full_;
      if (dp_[v] == 2 && watched_[v]) --full_;
      --dp_[u];
      --dp_[v];
      p_forest_.undo();
    }
    if (l != kUnused) {
      --ds_[u];
      --ds_[v];
    }
  }

  // Checks the clauses that become final once every edge at v is decided.
  bool vertex_ok(Vertex v) const {
    if (open_[v] != 0) return true;
    if (e_par_[v] != 0) return false;
    const int want_j = trail_ && (v == a_ || v == b_) ? 1 : 0;
    if (j_par_[v] != want_j) return false;
    return ds_[v] > 0 || g_.order() == 1;
  }

  bool full_ok() const { return c_.full_p_limit < 0 || full_ <= c_.full_p_limit; }

  // Every vertex must stay connected through edges not labelled unused.
  bool available_connected() const {
    std::vector<int> parent(g_.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = g_.order();
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (label_[e] == kUnused) continue;
      const int ru = find(g_.edge(e).u), rv = find(g_.edge(e).v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
    return components <= 1;
  }

  bool leaf_ok() const {
    if (c_.nonempty_e &&
        std::none_of(label_.begin(), label_.end(), [](std::uint8_t l) { return l == kE; })) {
      return false;
    }
    if (!trail_) return true;
    // J must be one connected trail through a_ and b_.
    std::vector<int> parent(g_.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<bool> touched(g_.order(), false);
    for (EdgeId e = 0; e < g_.size(); ++e) {
      if (label_[e] != kJ) continue;
      const Vertex u = g_.edge(e).u, v = g_.edge(e).v;
      touched[u] = touched[v] = true;
      parent[find(u)] = find(v);
    }
    const int root = find(a_);
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (touched[v] && find(v) != root) return false;
    }
    return touched[a_];
  }

  const Graph& g_;
  const DegreeConstraint& c_;
  bool trail_;
  Vertex a_, b_;
  NodeBudget budget_;
  std::vector<std::uint8_t> label_;
  std::vector<int> open_, e_par_, j_par_, dp_, ds_, pcap_;
  std::vector<bool> watched_;
  int full_ = 0;
  RollbackDsu p_forest_;
  std::vector<EdgeId> order_;
};

}  // namespace

SearchResult<EpsDecomposition> find_eps(const Graph& g, const DegreeConstraint& c,
                                        std::uint64_t budget) {
  if (!is_connected(g)) {
    throw HamsqError(ErrorCode::kDisconnected, "EPS search needs a connected graph");
  }
  LabelSearch search(g, c, false, -1, -1, budget);
  SearchResult<EpsDecomposition> result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::kFound) {
    EpsDecomposition d;
    search.collect(d, nullptr);
    result.witness = std::move(d);
  }
  return result;
}

SearchResult<JepsDecomposition> find_jeps(const Graph& g, Vertex v, Vertex w,
                                          const DegreeConstraint& c, std::uint64_t budget) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) throw HamsqError(ErrorCode::kSameVertex, "JEPS trail ends must differ");
  if (!is_connected(g)) {
    throw HamsqError(ErrorCode::kDisconnected, "JEPS search needs a connected graph");
  }
  LabelSearch search(g, c, true, v, w, budget);
  SearchResult<JepsDecomposition> result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::kFound) {
    JepsDecomposition d;
    search.collect(d, &d.j_edges);
    d.trail_start = v;
    d.trail_end = w;
    result.witness = std::move(d);
  }
  return result;
}

}  // namespace hamsq
