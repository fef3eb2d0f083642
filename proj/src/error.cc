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

#include "fair_cc/error.h"

namespace fair_cc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kColorArityMismatch: return "ColorArityMismatch";
    case ErrorCode::kVertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::kDegenerateGraph: return "DegenerateGraph";
    case ErrorCode::kEmptyCluster: return "EmptyCluster";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kEmptyFairlet: return "EmptyFairlet";
    case ErrorCode::kOverlappingFairlets: return "OverlappingFairlets";
    case ErrorCode::kSingleColor: return "SingleColor";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnequalColorCounts: return "UnequalColorCounts";
    case ErrorCode::kUnfairInput: return "UnfairInput";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kNodeSetMismatch: return "NodeSetMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownVertexId: return "UnknownVertexId";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndivisibleSizes: return "IndivisibleSizes";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace fair_cc
