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

#ifndef FAIR_CC_CC_SOLVERS_H_
#define FAIR_CC_CC_SOLVERS_H_

#include <cstdint>
#include <optional>
#include <random>

#include "fair_cc/fairness.h"
#include "fair_cc/signed_graph.h"

namespace fair_cc {

using Rng = std::mt19937_64;

struct SolverConfig {
  enum class Init { kSingletons, kFromPivot };

  int pivot_repeats = 10;
  int local_max_passes = 100;
  Init init = Init::kSingletons;
  uint64_t rng_seed = 0;
  // Recompute the full cost after every local search move and throw
  // kInvariantViolation if it did not drop by the predicted amount.
  bool check_monotone = false;

  // Throws kInvalidArgument when a count is below 1.
  void Validate() const;
};

// Randomized pivoting on edge signs only; weights are ignored.
Clustering Pivot(const WeightedSignedGraph& g, Rng& rng);
Clustering Pivot(const SignedGraph& g, Rng& rng);

// Lowest-cost clustering over k pivot runs drawn from one generator stream.
Clustering BestOfPivot(const WeightedSignedGraph& g, int k, Rng& rng);

// Single-vertex relocation local search with best-improvement moves,
// including moves into a fresh singleton. Uses the weights natively.
Clustering LocalSearch(const WeightedSignedGraph& g, const SolverConfig& cfg,
                       Rng& rng);
Clustering LocalSearch(const WeightedSignedGraph& g, const SolverConfig& cfg,
                       Rng& rng, const Clustering& initial);

inline Clustering SingleCluster(Vertex n) { return Clustering::OneCluster(n); }

struct BruteForceResult {
  Clustering clustering;
  int64_t cost = 0;
};

// Exact optimum over all set partitions, optionally restricted to
// clusterings whose clusters are all fair. max_n defaults to 10 without a
// constraint and 12 with one. Throws kTooLarge, or kInfeasible when no
// clustering satisfies the constraint.
BruteForceResult BruteForceCc(const SignedGraph& g,
                              const std::optional<FairnessConstraint>& constraint,
                              std::optional<Vertex> max_n = std::nullopt);
BruteForceResult BruteForceCc(const WeightedSignedGraph& g, Vertex max_n = 10);

}  // namespace fair_cc

#endif  // FAIR_CC_CC_SOLVERS_H_
