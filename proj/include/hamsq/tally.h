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

#ifndef HAMSQ_TALLY_H_
#define HAMSQ_TALLY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "hamsq/search.h"

namespace hamsq {

enum class Outcome { kHolds, kViolated, kUnknown };

std::string_view outcome_name(Outcome o);

// One instance that did not simply hold.
struct Finding {
  std::string query;
  Outcome outcome = Outcome::kViolated;
  std::string detail;
};

// Counts over many instances of one statement. Only violations and unknowns
// are kept as findings.
struct Tally {
  std::int64_t checked = 0;
  std::int64_t violated = 0;
  std::int64_t unknown = 0;
  std::int64_t flagged = 0;  // held, but with a noteworthy witness
  std::vector<Finding> findings;

  void record(std::string query, Outcome o, std::string detail = {});
  // Maps kFound -> holds, kNone -> violated, kUnknown -> unknown.
  void record(std::string query, SearchStatus s, std::string detail = {});
  void merge(const Tally& other);
  bool clean() const { return violated == 0 && unknown == 0; }
};

}  // namespace hamsq

#endif  // HAMSQ_TALLY_H_
