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

#ifndef HAMSQ_CORPUS_H_
#define HAMSQ_CORPUS_H_

#include <climits>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamsq/graph.h"

namespace hamsq {

// graph6 covers simple graphs only; the edge-list format ("n m" then m lines
// "u v") carries multigraphs.
enum class GraphFormat { kGraph6, kEdgeList };

// ".g6" is graph6 and ".el"/".edges" is edge list. Anything else is decided
// by the first non-empty line: a space means edge list.
GraphFormat format_for_path(const std::string& path);

// Throws kInvalidInput for graphs with parallel edges.
std::string to_graph6(const Graph& g);
// One record without its newline. Throws MalformedRecord.
Graph from_graph6(std::string_view record, long line = 1);

std::string to_edge_list(const Graph& g);

// Pulls one graph at a time. A leading ">>graph6<<" header is skipped.
class GraphReader {
 public:
  GraphReader(std::istream& in, GraphFormat format) : in_(in), format_(format) {}

  // Throws MalformedRecord with the 1-based line of the offending record.
  std::optional<Graph> next();
  long line() const { return line_; }

 private:
  bool next_line(std::string& out);
  std::optional<Graph> next_edge_list();

  std::istream& in_;
  GraphFormat format_;
  long line_ = 0;
};

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);
// Format from format_for_path. Throws kInvalidInput if the file is missing.
std::vector<Graph> read_graph_file(const std::string& path);

// Every edge uv becomes u - (n + id) - v; new edge ids 2 id and 2 id + 1.
Graph full_subdivision(const Graph& g);

// Throws kNotATree.
bool is_caterpillar(const Graph& t);

enum class Predicate { kConnected, kTwoConnected, kDt, kBlockChain, kTree };

// Parses "connected", "two-connected", "dt", "block-chain", "tree".
std::optional<Predicate> parse_predicate(std::string_view name);
std::string_view predicate_name(Predicate p);

// "block-chain" means a non-trivial chain. Predicates run in order after the
// order and size ranges.
struct CorpusFilter {
  std::vector<Predicate> predicates;
  int min_n = 0;
  int max_n = INT_MAX;
  int max_size = INT_MAX;        // edge count
  int max_block_order = INT_MAX;  // largest block, in vertices

  bool accepts(const Graph& g) const;
};

std::vector<Graph> filter(const std::vector<Graph>& graphs, const CorpusFilter& f);

}  // namespace hamsq

#endif  // HAMSQ_CORPUS_H_
