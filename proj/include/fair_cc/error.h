// Copyright 2026 The Fair CC Authors.
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

#ifndef FAIR_CC_ERROR_H_
#define FAIR_CC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fair_cc {

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kColorArityMismatch,
  kVertexSetMismatch,
  kDegenerateGraph,
  kEmptyCluster,
  kUnknownVertex,
  kEmptyFairlet,
  kOverlappingFairlets,
  kSingleColor,
  kInfeasible,
  kUnequalColorCounts,
  kUnfairInput,
  kTooSmall,
  kTooLarge,
  kInvalidDecomposition,
  kNodeSetMismatch,
  kParseError,
  kUnknownVertexId,
  kDuplicateId,
  kDimensionMismatch,
  kIndivisibleSizes,
  kInvalidArgument,
  kInvariantViolation,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure surfaced by the library carries one of the codes above so
// callers (the CLI in particular) can map them to stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fair_cc

#endif  // FAIR_CC_ERROR_H_
