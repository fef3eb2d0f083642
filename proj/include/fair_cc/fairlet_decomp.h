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

#ifndef FAIR_CC_FAIRLET_DECOMP_H_
#define FAIR_CC_FAIRLET_DECOMP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fair_cc/fairlet.h"
#include "fair_cc/fairness.h"
#include "fair_cc/matching.h"
#include "fair_cc/signed_graph.h"

namespace fair_cc {

// Negative pairs inside `fairlet`.
int64_t FcostIn(const SignedGraph& g, std::span<const Vertex> fairlet);

// Minority-sign count between two disjoint vertex sets.
// Throws kOverlappingFairlets when they share a vertex.
int64_t FcostOut(const SignedGraph& g, std::span<const Vertex> a,
                 std::span<const Vertex> b);

// FcostIn summed over fairlets plus FcostOut summed over unordered pairs.
int64_t Fcost(const SignedGraph& g, const FairletDecomposition& p);

// Vertices of G joined when their colors differ, weighted by the Hamming
// distance of their embeddings.
struct AuxiliaryGraph {
  std::vector<ColorId> colors;
  EdgeCostMatrix costs{0};

  Vertex num_vertices() const { return static_cast<Vertex>(colors.size()); }
  int64_t NumEdges() const;
};

// Throws kSingleColor when G has fewer than two colors.
AuxiliaryGraph BuildAuxGraph(const SignedGraph& g);

// Exact minimum-cost perfect matching of H. Two-colored graphs go through
// the assignment solver, others through general weighted matching. Returns
// the partner of each vertex. Throws kInfeasible for odd n, a color holding
// more than half the vertices, or no perfect matching.
std::vector<Vertex> MinCostFairMatching(const AuxiliaryGraph& h);

// Total distance of a pairing produced by MinCostFairMatching.
int64_t MatchingCost(const AuxiliaryGraph& h, std::span<const Vertex> partner);

// alpha = 1/2 fairlets from a minimum-cost perfect matching. For odd n with
// at least three colors, the vertex left over by the matching joins the pair
// of two other colors that is closest to it, giving one fairlet of size 3.
// Throws kInfeasible if a color exceeds floor(n/2), or n is odd with C = 2,
// or no three-color fairlet can absorb the leftover vertex.
FairletDecomposition FairletsHalf(const SignedGraph& g);

// alpha = 1/C fairlets: paths through the color classes 0, 1, ..., C-1
// built from C-1 minimum-cost bipartite matchings between consecutive
// classes. The center is the middle vertex of each path.
// Throws kUnequalColorCounts unless all color classes have the same size.
FairletDecomposition FairletsEqual(const SignedGraph& g);

// Splits a fair set (alpha = 1/t) of at least t vertices into floor(|P|/t)
// fair parts of size in [t, 2t) by dealing members sorted by (color, id)
// round robin. Throws kUnfairInput or kTooSmall.
std::vector<Fairlet> RefineRoundRobin(std::span<const Vertex> fairlet,
                                      const SignedGraph& g, int t);

// RefineRoundRobin applied to every fairlet.
FairletDecomposition RefineDecomposition(const FairletDecomposition& p,
                                         const SignedGraph& g, int t);

// Random decomposition with the shapes of FairletsHalf / FairletsEqual:
// each color class is shuffled and the classes are zipped positionally.
// Deterministic for a given seed. kOneOverT is rejected.
FairletDecomposition FairletsRandom(const SignedGraph& g,
                                    const FairnessConstraint& constraint,
                                    uint64_t seed);

enum class FairletObjective { kFcost, kMcost };

// Exhaustive optimum over partitions of V into fair parts. Part sizes are
// {2, 3} for kHalf, {C} for kEqual and [t, 2t) for kOneOverT.
// Throws kTooLarge for n > max_n and kInfeasible if no such partition exists.
FairletDecomposition BruteForceOptimalFairlets(const SignedGraph& g,
                                               const FairnessConstraint& constraint,
                                               FairletObjective objective,
                                               Vertex max_n = 8);

}  // namespace fair_cc

#endif  // FAIR_CC_FAIRLET_DECOMP_H_
