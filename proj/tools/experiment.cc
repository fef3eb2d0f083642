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

#include "experiment.h"

#include <chrono>

#include "fair_cc/cc_solvers.h"
#include "fair_cc/error.h"
#include "fair_cc/fairlet_decomp.h"
#include "fair_cc/fairness.h"
#include "fair_cc/reduction.h"

namespace fair_cc {

namespace {

constexpr std::pair<Algorithm, std::string_view> kAlgorithms[] = {
    {Algorithm::kLocal, "local"},
    {Algorithm::kPivot, "pivot"},
    {Algorithm::kSingle, "single"},
    {Algorithm::kRand, "rand"},
    {Algorithm::kMatchLocal, "match-local"},
    {Algorithm::kRepMatchLocal, "repmatch-local"},
};

FairnessConstraint ConstraintOf(AlphaMode mode) {
  return mode == AlphaMode::kHalf ? FairnessConstraint::Half() : FairnessConstraint::Equal();
}

}  // namespace

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& [algo, text] : kAlgorithms) {
    if (text == name) return algo;
  }
  return std::nullopt;
}

std::string AlgorithmName(Algorithm algo) {
  for (const auto& [a, text] : kAlgorithms) {
    if (a == algo) return std::string(text);
  }
  return "?";
}

std::optional<AlphaMode> ParseAlphaMode(std::string_view name) {
  if (name == "half") return AlphaMode::kHalf;
  if (name == "equal") return AlphaMode::kEqual;
  return std::nullopt;
}

std::string AlphaModeName(AlphaMode mode) {
  return mode == AlphaMode::kHalf ? "half" : "equal";
}

std::optional<AlphaMode> RequiredAlpha(Algorithm algo) {
  switch (algo) {
    case Algorithm::kMatchLocal:
      return AlphaMode::kHalf;
    case Algorithm::kRepMatchLocal:
      return AlphaMode::kEqual;
    default:
      return std::nullopt;
  }
}

Clustering RunAlgorithm(const SignedGraph& g, const RunSettings& settings) {
  if (const auto required = RequiredAlpha(settings.algo);
      required && *required != settings.alpha) {
    throw Error(ErrorCode::kInvalidArgument,
                AlgorithmName(settings.algo) + " requires --alpha " + AlphaModeName(*required));
  }
  SolverConfig cfg;
  cfg.pivot_repeats = settings.pivot_repeats;
  cfg.local_max_passes = settings.local_max_passes;
  cfg.rng_seed = settings.seed;
  cfg.Validate();
  Rng rng(settings.seed);

  switch (settings.algo) {
    case Algorithm::kLocal:
      return LocalSearch(WeightedSignedGraph::FromSigned(g), cfg, rng);
    case Algorithm::kPivot:
      return BestOfPivot(WeightedSignedGraph::FromSigned(g), cfg.pivot_repeats, rng);
    case Algorithm::kSingle:
      return SingleCluster(g.num_vertices());
    case Algorithm::kRand:
      return FairletsRandom(g, ConstraintOf(settings.alpha), settings.seed)
          .AsClustering(g.num_vertices());
    case Algorithm::kMatchLocal:
    case Algorithm::kRepMatchLocal: {
      PipelineOptions options;
      options.check_bounds = settings.check_bounds;
      return FairCc(g, ConstraintOf(settings.alpha), cfg, options).clustering;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

RunMeasures Measure(const SignedGraph& g, const Clustering& c) {
  RunMeasures m;
  m.error = ErrorRate(g, c);
  m.imbalance_half = Imbalance(c, g, FairnessConstraint::Half().Alpha(g));
  if (g.num_colors() >= 2) {
    m.imbalance_equal = Imbalance(c, g, FairnessConstraint::Equal().Alpha(g));
  }
  m.n_clusters = c.num_clusters();
  return m;
}

RunMeasures TimedRun(const SignedGraph& g, const RunSettings& settings) {
  const auto start = std::chrono::steady_clock::now();
  const Clustering c = RunAlgorithm(g, settings);
  const auto stop = std::chrono::steady_clock::now();
  RunMeasures m = Measure(g, c);
  m.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return m;
}

}  // namespace fair_cc
