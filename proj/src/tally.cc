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

#include "hamsq/tally.h"

namespace hamsq {

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kHolds: return "holds";
    case Outcome::kViolated: return "violated";
    case Outcome::kUnknown: return "unknown";
  }
  return "?";
}

void Tally::record(std::string query, Outcome o, std::string detail) {
  ++checked;
  if (o == Outcome::kHolds) return;
  if (o == Outcome::kViolated) ++violated;
  if (o == Outcome::kUnknown) ++unknown;
  findings.push_back({std::move(query), o, std::move(detail)});
}

void Tally::record(std::string query, SearchStatus s, std::string detail) {
  const Outcome o = s == SearchStatus::kFound  ? Outcome::kHolds
                    : s == SearchStatus::kNone ? Outcome::kViolated
                                               : Outcome::kUnknown;
  record(std::move(query), o, std::move(detail));
}

void Tally::merge(const Tally& other) {
  checked += other.checked;
  violated += other.violated;
  unknown += other.unknown;
  flagged += other.flagged;
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

}  // namespace hamsq
