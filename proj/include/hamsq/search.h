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

#ifndef HAMSQ_SEARCH_H_
#define HAMSQ_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace hamsq {

// Found: witness present and checked. None: the search space was exhausted.
// Unknown: the node budget ran out first; never evidence of absence.
enum class SearchStatus { kFound, kNone, kUnknown };

std::string_view status_name(SearchStatus s);

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

// Counts search-tree nodes against a fixed cap.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  // False once the cap is exceeded; stays false afterwards.
  bool spend() { return ++used_ <= limit_; }
  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<T> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::kFound; }
};

}  // namespace hamsq

#endif  // HAMSQ_SEARCH_H_
