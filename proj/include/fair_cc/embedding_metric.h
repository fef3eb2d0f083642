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

#ifndef FAIR_CC_EMBEDDING_METRIC_H_
#define FAIR_CC_EMBEDDING_METRIC_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fair_cc/fairlet.h"
#include "fair_cc/signed_graph.h"

namespace fair_cc {

// Row u of the positive adjacency matrix with a 1 on the diagonal.
struct HammingPoint {
  std::vector<uint8_t> bits;

  bool operator==(const HammingPoint&) const = default;
};

HammingPoint Phi(const SignedGraph& g, Vertex u);

// Size of the symmetric difference of the closed positive neighborhoods of
// u and v; equal to the Hamming distance between Phi(u) and Phi(v).
int64_t HammingDistance(const SignedGraph& g, Vertex u, Vertex v);

// Coordinate-wise majority of the embedded members; a tied coordinate is 1.
HammingPoint MajorityCenter(const SignedGraph& g, std::span<const Vertex> fairlet);

// Minimum over centers in [0,1]^n of the summed distance to the members,
// attained at MajorityCenter.
int64_t FairletMcost(const SignedGraph& g, std::span<const Vertex> fairlet);
int64_t DecompositionMcost(const SignedGraph& g, const FairletDecomposition& p);

// Same objective with the center restricted to a member of the fairlet.
int64_t FairletMemberMcost(const SignedGraph& g, std::span<const Vertex> fairlet);
int64_t DecompositionMemberMcost(const SignedGraph& g,
                                 const FairletDecomposition& p);

// Pairwise distances, materialized as a dense matrix when n <= cap and
// computed on demand otherwise. Read-only after construction.
class DistanceOracle {
 public:
  static constexpr Vertex kDefaultCacheCap = 4096;

  explicit DistanceOracle(const SignedGraph& g, Vertex cache_cap = kDefaultCacheCap);

  int64_t operator()(Vertex u, Vertex v) const {
    if (!cache_.empty()) return cache_[static_cast<size_t>(u) * n_ + v];
    return HammingDistance(*g_, u, v);
  }
  bool cached() const { return !cache_.empty(); }

 private:
  const SignedGraph* g_;
  Vertex n_;
  std::vector<int32_t> cache_;
};

}  // namespace fair_cc

#endif  // FAIR_CC_EMBEDDING_METRIC_H_
