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

#include "fair_cc/embedding_metric.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "fair_cc/error.h"

namespace fair_cc {
namespace {

void CheckVertex(const SignedGraph& g, Vertex u) {
  if (u < 0 || u >= g.num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex, std::to_string(u));
  }
}

void CheckFairlet(const SignedGraph& g, std::span<const Vertex> fairlet) {
  if (fairlet.empty()) throw Error(ErrorCode::kEmptyFairlet, "median of {}");
  for (Vertex v : fairlet) CheckVertex(g, v);
}

// For every coordinate, the number of members whose embedding has a 1 there.
std::vector<int64_t> CoordinateCounts(const SignedGraph& g,
                                      std::span<const Vertex> fairlet) {
  std::vector<int64_t> counts(g.num_vertices(), 0);
  for (Vertex v : fairlet) {
    ++counts[v];
    for (Vertex w : g.PositiveNeighbors(v)) ++counts[w];
  }
  return counts;
}

}  // namespace

HammingPoint Phi(const SignedGraph& g, Vertex u) {
  CheckVertex(g, u);
  HammingPoint p;
  p.bits.assign(g.num_vertices(), 0);
  p.bits[u] = 1;
  for (Vertex v : g.PositiveNeighbors(u)) p.bits[v] = 1;
  return p;
}

int64_t HammingDistance(const SignedGraph& g, Vertex u, Vertex v) {
  CheckVertex(g, u);
  CheckVertex(g, v);
  if (u == v) return 0;
  if (g.has_bit_rows()) {
    auto a = g.ClosedRow(u);
    auto b = g.ClosedRow(v);
    int64_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
    return d;
  }
  // Symmetric difference of N[u] and N[v] by merging the sorted lists with
  // the diagonal entries spliced in.
  auto closed = [&](Vertex x) {
    auto nbrs = g.PositiveNeighbors(x);
    std::vector<Vertex> out(nbrs.begin(), nbrs.end());
    out.insert(std::lower_bound(out.begin(), out.end(), x), x);
    return out;
  };
  const auto a = closed(u);
  const auto b = closed(v);
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return static_cast<int64_t>(a.size() + b.size() - 2 * common.size());
}

HammingPoint MajorityCenter(const SignedGraph& g, std::span<const Vertex> fairlet) {
  CheckFairlet(g, fairlet);
  const auto counts = CoordinateCounts(g, fairlet);
  const auto size = static_cast<int64_t>(fairlet.size());
  HammingPoint mu;
  mu.bits.resize(g.num_vertices());
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    mu.bits[w] = 2 * counts[w] >= size ? 1 : 0;
  }
  return mu;
}

int64_t FairletMcost(const SignedGraph& g, std::span<const Vertex> fairlet) {
  CheckFairlet(g, fairlet);
  const auto counts = CoordinateCounts(g, fairlet);
  const auto size = static_cast<int64_t>(fairlet.size());
  int64_t cost = 0;
  for (int64_t k : counts) cost += std::min(k, size - k);
  return cost;
}

int64_t DecompositionMcost(const SignedGraph& g, const FairletDecomposition& p) {
  int64_t total = 0;
  for (const auto& fl : p.fairlets) total += FairletMcost(g, fl.members);
  return total;
}

int64_t FairletMemberMcost(const SignedGraph& g, std::span<const Vertex> fairlet) {
  CheckFairlet(g, fairlet);
  int64_t best = std::numeric_limits<int64_t>::max();
  for (Vertex c : fairlet) {
    int64_t sum = 0;
    for (Vertex v : fairlet) sum += HammingDistance(g, c, v);
    best = std::min(best, sum);
  }
  return best;
}

int64_t DecompositionMemberMcost(const SignedGraph& g,
                                 const FairletDecomposition& p) {
  int64_t total = 0;
  for (const auto& fl : p.fairlets) total += FairletMemberMcost(g, fl.members);
  return total;
}

DistanceOracle::DistanceOracle(const SignedGraph& g, Vertex cache_cap)
    : g_(&g), n_(g.num_vertices()) {
  if (n_ > cache_cap) return;
  cache_.assign(static_cast<size_t>(n_) * n_, 0);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      const auto d = static_cast<int32_t>(HammingDistance(g, u, v));
      cache_[static_cast<size_t>(u) * n_ + v] = d;
      cache_[static_cast<size_t>(v) * n_ + u] = d;
    }
  }
}

}  // namespace fair_cc
