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

#ifndef FAIR_CC_TOOLS_EXPERIMENT_H_
#define FAIR_CC_TOOLS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fair_cc/signed_graph.h"

namespace fair_cc {

enum class Algorithm { kLocal, kPivot, kSingle, kRand, kMatchLocal, kRepMatchLocal };

// Names as used on the command line: local, pivot, single, rand,
// match-local, repmatch-local.
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::string AlgorithmName(Algorithm algo);

enum class AlphaMode { kHalf, kEqual };

std::optional<AlphaMode> ParseAlphaMode(std::string_view name);
std::string AlphaModeName(AlphaMode mode);

// The alpha a fair algorithm is tied to, or nullopt for the unconstrained
// ones (whose alpha only matters for rand).
std::optional<AlphaMode> RequiredAlpha(Algorithm algo);

struct RunSettings {
  Algorithm algo = Algorithm::kLocal;
  AlphaMode alpha = AlphaMode::kHalf;
  uint64_t seed = 0;
  int pivot_repeats = 10;
  int local_max_passes = 100;
  // Forwarded to the fair pipeline.
  bool check_bounds = false;
};

struct RunMeasures {
  double error = 0;
  double imbalance_half = 0;
  double imbalance_equal = 0;
  int64_t n_clusters = 0;
  double wall_time_ms = 0;
};

// Runs one algorithm. Throws kInvalidArgument when a fair algorithm is paired
// with the other alpha, and propagates decomposition errors.
Clustering RunAlgorithm(const SignedGraph& g, const RunSettings& settings);

// Error and both imbalances; with a single color the equal-representation
// imbalance is 0.
RunMeasures Measure(const SignedGraph& g, const Clustering& c);

// RunAlgorithm plus Measure, with the algorithm's wall time.
RunMeasures TimedRun(const SignedGraph& g, const RunSettings& settings);

}  // namespace fair_cc

#endif  // FAIR_CC_TOOLS_EXPERIMENT_H_
