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

#ifndef HAMSQ_ERROR_H_
#define HAMSQ_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamsq {

enum class ErrorCode {
  kLoopRejected,
  kVertexOutOfRange,
  kUnknownEdgeId,
  kInvalidK,
  kDisconnected,
  kSameVertex,
  kNotTwoConnected,
  kAcyclic,
  kPreconditionUnmet,
  kInvalidQuery,
  kInvalidInput,
  kTooSmall,
  kTooLarge,
  kMalformedRecord,
  kNotATree,
};

std::string_view error_code_name(ErrorCode code);

// Every precondition failure in the library surfaces as this exception.
class HamsqError : public std::runtime_error {
 public:
  HamsqError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the graph6 / edge-list readers; carries the 1-based line number.
class MalformedRecord : public HamsqError {
 public:
  MalformedRecord(long line, const std::string& what)
      : HamsqError(ErrorCode::kMalformedRecord,
                   "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

}  // namespace hamsq

#endif  // HAMSQ_ERROR_H_
