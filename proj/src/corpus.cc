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

#include "hamsq/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hamsq/decomposition.h"
#include "hamsq/error.h"

namespace hamsq {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, long n) {
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
    return;
  }
  const int groups = n <= 258047 ? 3 : 6;
  out += groups == 3 ? "~" : "~~";
  for (int i = groups - 1; i >= 0; --i) {
    out += static_cast<char>(((n >> (6 * i)) & 63) + kBias);
  }
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

GraphFormat format_for_path(const std::string& path) {
  if (ends_with(path, ".g6")) return GraphFormat::kGraph6;
  if (ends_with(path, ".el") || ends_with(path, ".edges")) return GraphFormat::kEdgeList;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    return line.find(' ') != std::string::npos ? GraphFormat::kEdgeList : GraphFormat::kGraph6;
  }
  return GraphFormat::kGraph6;
}

std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) {
    throw HamsqError(ErrorCode::kInvalidInput, "graph6 cannot hold parallel edges");
  }
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kBias);
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
  return out;
}

Graph from_graph6(std::string_view record, long line) {
  if (record.substr(0, kHeader.size()) == kHeader) record.remove_prefix(kHeader.size());
  for (char ch : record) {
    if (ch < 63 || ch > 126) throw MalformedRecord(line, "byte outside graph6 range");
  }
  if (record.empty()) throw MalformedRecord(line, "empty record");
  std::size_t pos = 0;
  long n = 0;
  auto take = [&](int groups) {
    if (record.size() < pos + groups) throw MalformedRecord(line, "truncated size field");
    long value = 0;
    for (int i = 0; i < groups; ++i) value = (value << 6) | (record[pos++] - kBias);
    return value;
  };
  if (record[0] != '~') {
    n = take(1);
  } else if (record.size() > 1 && record[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > 1'000'000) throw MalformedRecord(line, "vertex count too large");
  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(record.size() - pos) != bytes) {
    throw MalformedRecord(line, "expected " + std::to_string(bytes) + " adjacency bytes, got " +
                                    std::to_string(record.size() - pos));
  }
  std::vector<EndpointPair> edges;
  long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = record[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = record.back() - kBias;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw MalformedRecord(line, "nonzero padding bits");
    }
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

bool GraphReader::next_line(std::string& out) {
  while (std::getline(in_, out)) {
    ++line_;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    if (out.empty() || out[0] == '#') continue;
    return true;
  }
  return false;
}

std::optional<Graph> GraphReader::next() {
  if (format_ == GraphFormat::kEdgeList) return next_edge_list();
  std::string record;
  if (!next_line(record)) return std::nullopt;
  return from_graph6(record, line_);
}

std::optional<Graph> GraphReader::next_edge_list() {
  std::string text;
  if (!next_line(text)) return std::nullopt;
  const long header_line = line_;
  long n = -1, m = -1;
  {
    std::istringstream head(text);
    std::string extra;
    if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0) {
      throw MalformedRecord(header_line, "expected \"n m\"");
    }
  }
  std::vector<EndpointPair> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    if (!next_line(text)) throw MalformedRecord(line_ + 1, "missing edge line");
    std::istringstream row(text);
    long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw MalformedRecord(line_, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedRecord(line_, "vertex out of range");
    if (u == v) throw MalformedRecord(line_, "loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::build(static_cast<int>(n), edges);
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  GraphReader reader(in, format);
  std::vector<Graph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HamsqError(ErrorCode::kInvalidInput, "cannot open " + path);
  return read_graphs(in, format_for_path(path));
}

Graph full_subdivision(const Graph& g) {
  const int n = g.order();
  std::vector<EndpointPair> edges;
  edges.reserve(2 * g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    edges.emplace_back(g.edge(e).u, n + e);
    edges.emplace_back(n + e, g.edge(e).v);
  }
  return Graph::build(n + g.size(), edges);
}

bool is_caterpillar(const Graph& t) {
  if (!is_tree(t)) throw HamsqError(ErrorCode::kNotATree, "caterpillar test needs a tree");
  std::vector<Vertex> spine;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 2) spine.push_back(v);
  }
  const VertexSet inner(spine);
  for (Vertex v : spine) {
    int inner_degree = 0;
    for (Vertex u : t.neighbors(v)) {
      if (inner.contains(u)) ++inner_degree;
    }
    if (inner_degree > 2) return false;
  }
  // A subtree of a tree with maximum degree 2 is a path.
  return true;
}

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (Predicate p : {Predicate::kConnected, Predicate::kTwoConnected, Predicate::kDt,
                      Predicate::kBlockChain, Predicate::kTree}) {
    if (predicate_name(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view predicate_name(Predicate p) {
  switch (p) {
    case Predicate::kConnected: return "connected";
    case Predicate::kTwoConnected: return "two-connected";
    case Predicate::kDt: return "dt";
    case Predicate::kBlockChain: return "block-chain";
    case Predicate::kTree: return "tree";
  }
  return "?";
}

bool CorpusFilter::accepts(const Graph& g) const {
  if (g.order() < min_n || g.order() > max_n || g.size() > max_size) return false;
  for (Predicate p : predicates) {
    bool ok = false;
    switch (p) {
      case Predicate::kConnected: ok = is_connected(g); break;
      case Predicate::kTwoConnected: ok = is_two_connected(g); break;
      case Predicate::kDt: ok = is_dt_graph(g); break;
      case Predicate::kBlockChain:
        ok = is_connected(g) && is_block_chain(g) == ChainKind::kNonTrivial;
        break;
      case Predicate::kTree: ok = is_tree(g); break;
    }
    if (!ok) return false;
  }
  if (max_block_order < INT_MAX) {
    for (const auto& b : block_forest(g).blocks) {
      if (static_cast<int>(b.vertices.size()) > max_block_order) return false;
    }
  }
  return true;
}

std::vector<Graph> filter(const std::vector<Graph>& graphs, const CorpusFilter& f) {
  std::vector<Graph> out;
  std::copy_if(graphs.begin(), graphs.end(), std::back_inserter(out),
               [&](const Graph& g) { return f.accepts(g); });
  return out;
}

}  // namespace hamsq
