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

#ifndef FAIR_CC_REDUCTION_H_
#define FAIR_CC_REDUCTION_H_

#include <cstdint>
#include <optional>

#include "fair_cc/cc_solvers.h"
#include "fair_cc/fairlet.h"
#include "fair_cc/fairness.h"
#include "fair_cc/signed_graph.h"

namespace fair_cc {

// Weighted instance over fairlets. Node i stands for fairlets.fairlets[i];
// the pair (i, j) carries the majority sign of the pairs between the two
// fairlets times the majority count, ties resolved as positive.
struct ReducedInstance {
  WeightedSignedGraph graph;
  FairletDecomposition fairlets;

  const Fairlet& fairlet_of(Vertex node) const { return fairlets.fairlets[node]; }
};

// Throws kInvalidDecomposition unless the fairlets partition V. Fairness of
// the fairlets is the caller's concern.
ReducedInstance Reduce(const SignedGraph& g, const FairletDecomposition& p);

// Clusters of the result are unions of the fairlets grouped together by
// `reduced`. Throws kNodeSetMismatch if `reduced` does not cover the
// fairlet nodes.
Clustering Expand(const FairletDecomposition& p, const Clustering& reduced, Vertex n);

struct PipelineOptions {
  enum class Solver { kLocal, kPivot };

  Solver solver = Solver::kLocal;
  // Check cost(G, expanded) <= cost(G^P, reduced) + fcost(P) and zero
  // imbalance on every run; throws kInvariantViolation otherwise.
  bool check_bounds = false;
  // Required for the 1/t constraint, optional otherwise. Must be fair under
  // the constraint.
  std::optional<FairletDecomposition> decomposition;
};

struct FairCcResult {
  Clustering clustering;
  FairletDecomposition fairlets;
  Clustering reduced_clustering;
  int64_t fcost = 0;
  int64_t reduced_cost = 0;
  int64_t cost = 0;

  bool operator==(const FairCcResult&) const = default;
};

// Fairlet decomposition, reduction, unconstrained solve, expansion.
FairCcResult FairCc(const SignedGraph& g, const FairnessConstraint& constraint,
                    const SolverConfig& cfg, const PipelineOptions& options = {});

}  // namespace fair_cc

#endif  // FAIR_CC_REDUCTION_H_
