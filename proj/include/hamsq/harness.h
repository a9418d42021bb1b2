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

#ifndef HAMSQ_HARNESS_H_
#define HAMSQ_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamsq/graph.h"
#include "hamsq/tally.h"

namespace hamsq {

// One statement checkable graph by graph. `applies` is its precondition;
// graphs failing it are skipped, not counted as violations.
struct VerifyTarget {
  std::string name;
  std::string hypothesis;
  std::function<bool(const Graph&)> applies;
  std::function<Tally(const Graph&, std::uint64_t budget)> check;
};

// theorem1, theoremA..theoremD, theoremF, theoremG, theorem2, lemma1, cor1,
// cor2, caterpillar, sekanina, observation.
const std::vector<VerifyTarget>& verify_targets();
const VerifyTarget* find_target(std::string_view name);

// graph6 for simple graphs, the edge-list text otherwise.
std::string graph_label(const Graph& g);

struct GraphReport {
  std::size_t index = 0;  // position in the input stream
  std::string graph;
  Tally tally;
  std::string error;  // an exception escaped the check
};

struct SweepReport {
  std::string target;
  std::int64_t graphs = 0;
  std::int64_t skipped = 0;
  std::int64_t errors = 0;
  Tally total;
  // Graphs with findings or errors, in input order.
  std::vector<GraphReport> flagged;

  bool clean() const { return total.clean() && errors == 0; }
};

// Runs `check` on every graph accepted by `applies` with `jobs` threads.
// The result does not depend on `jobs`.
SweepReport run_sweep(const std::vector<Graph>& graphs, std::string name,
                      const std::function<bool(const Graph&)>& applies,
                      const std::function<Tally(const Graph&)>& check, int jobs);

SweepReport run_target(const std::vector<Graph>& graphs, const VerifyTarget& target,
                       std::uint64_t budget, int jobs);

// `count` random instances of theorem A..D ("theoremA" etc.) drawn from the
// 2-connected graphs of the stream on which the statement is not vacuous.
// Graph picks and instance seeds come from one generator seeded with `seed`.
SweepReport sample_target(const std::vector<Graph>& graphs, std::string_view name,
                          int count, std::uint64_t seed, std::uint64_t budget, int jobs);

// F_k over every 2-connected graph. None results are refutations of F_k for
// that graph; they are listed, never hidden.
SweepReport hunt_fk_failures(const std::vector<Graph>& graphs, int k, std::uint64_t budget,
                             int jobs, bool canonical = true);

}  // namespace hamsq

#endif  // HAMSQ_HARNESS_H_
