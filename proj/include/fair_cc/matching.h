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

#ifndef FAIR_CC_MATCHING_H_
#define FAIR_CC_MATCHING_H_

#include <cstdint>
#include <optional>
#include <vector>

namespace fair_cc {

// Dense symmetric cost matrix. Entries equal to kNoEdge are not usable.
class EdgeCostMatrix {
 public:
  static constexpr int64_t kNoEdge = -1;

  explicit EdgeCostMatrix(int n)
      : n_(n), cost_(static_cast<size_t>(n) * n, kNoEdge) {}

  int size() const { return n_; }
  int64_t at(int u, int v) const { return cost_[static_cast<size_t>(u) * n_ + v]; }
  bool has_edge(int u, int v) const { return at(u, v) != kNoEdge; }
  // Sets both orientations; cost must be non-negative.
  void set(int u, int v, int64_t cost);

 private:
  int n_;
  std::vector<int64_t> cost_;
};

// Exact minimum-cost perfect matching on a general graph (weighted blossom,
// O(n^3)). Returns mate[v] for every vertex, or nullopt if the graph has no
// perfect matching.
std::optional<std::vector<int>> MinCostPerfectMatching(const EdgeCostMatrix& costs);

// Exact minimum-cost assignment for a square matrix (Hungarian method with
// potentials). Returns the column assigned to each row.
std::vector<int> MinCostAssignment(const std::vector<std::vector<int64_t>>& cost);

}  // namespace fair_cc

#endif  // FAIR_CC_MATCHING_H_
