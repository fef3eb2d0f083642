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

#include "fair_cc/reduction.h"

#include <string>
#include <vector>

#include "fair_cc/error.h"
#include "fair_cc/fairlet_decomp.h"

namespace fair_cc {

ReducedInstance Reduce(const SignedGraph& g, const FairletDecomposition& p) {
  const Vertex n = g.num_vertices();
  std::vector<int64_t> idx(n, -1);
  for (size_t i = 0; i < p.fairlets.size(); ++i) {
    if (p.fairlets[i].members.empty()) {
      throw Error(ErrorCode::kInvalidDecomposition, "empty fairlet " + std::to_string(i));
    }
    for (Vertex v : p.fairlets[i].members) {
      if (v < 0 || v >= n || idx[v] != -1) {
        throw Error(ErrorCode::kInvalidDecomposition,
                    "vertex " + std::to_string(v) + " is unknown or repeated");
      }
      idx[v] = static_cast<int64_t>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (idx[v] == -1) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "vertex " + std::to_string(v) + " not in any fairlet");
    }
  }

  const auto m = static_cast<Vertex>(p.fairlets.size());
  std::vector<int64_t> positive(static_cast<size_t>(m) * m, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.PositiveNeighbors(u)) {
      if (u < v && idx[u] != idx[v]) {
        ++positive[static_cast<size_t>(idx[u]) * m + idx[v]];
        ++positive[static_cast<size_t>(idx[v]) * m + idx[u]];
      }
    }
  }
  ReducedInstance r{WeightedSignedGraph(m), p};
  for (Vertex i = 0; i < m; ++i) {
    const auto si = static_cast<int64_t>(p.fairlets[i].members.size());
    for (Vertex j = i + 1; j < m; ++j) {
      const auto sj = static_cast<int64_t>(p.fairlets[j].members.size());
      const int64_t pos = positive[static_cast<size_t>(i) * m + j];
      const int64_t neg = si * sj - pos;
      r.graph.set_weight(i, j, pos >= neg ? pos : -neg);
    }
  }
  return r;
}

Clustering Expand(const FairletDecomposition& p, const Clustering& reduced, Vertex n) {
  if (reduced.num_vertices() != static_cast<Vertex>(p.fairlets.size())) {
    throw Error(ErrorCode::kNodeSetMismatch,
                "reduced clustering covers " + std::to_string(reduced.num_vertices()) +
                    " nodes, decomposition has " + std::to_string(p.fairlets.size()));
  }
  std::vector<ClusterId> label(n, -1);
  for (size_t i = 0; i < p.fairlets.size(); ++i) {
    for (Vertex v : p.fairlets[i].members) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kInvalidDecomposition, "vertex " + std::to_string(v));
      }
      label[v] = reduced.cluster_of(static_cast<Vertex>(i));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == -1) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "vertex " + std::to_string(v) + " not in any fairlet");
    }
  }
  return Clustering::FromLabels(std::span<const ClusterId>(label));
}

namespace {

FairletDecomposition Decompose(const SignedGraph& g,
                               const FairnessConstraint& constraint,
                               const PipelineOptions& options) {
  const Fraction alpha = constraint.Alpha(g);
  if (options.decomposition) {
    const auto violations = ValidateDecomposition(*options.decomposition, g, alpha);
    if (!violations.empty()) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "supplied decomposition: " + ToString(violations.front()));
    }
    if (constraint.mode() == FairnessConstraint::Mode::kOneOverT) {
      return RefineDecomposition(*options.decomposition, g, constraint.t());
    }
    return *options.decomposition;
  }
  switch (constraint.mode()) {
    case FairnessConstraint::Mode::kHalf:
      return FairletsHalf(g);
    case FairnessConstraint::Mode::kEqual:
      return FairletsEqual(g);
    case FairnessConstraint::Mode::kOneOverT:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "the 1/t constraint needs a supplied fair decomposition");
}

}  // namespace

FairCcResult FairCc(const SignedGraph& g, const FairnessConstraint& constraint,
                    const SolverConfig& cfg, const PipelineOptions& options) {
  cfg.Validate();
  FairCcResult result;
  result.fairlets = Decompose(g, constraint, options);
  const ReducedInstance reduced = Reduce(g, result.fairlets);

  Rng rng(cfg.rng_seed);
  switch (options.solver) {
    case PipelineOptions::Solver::kLocal:
      result.reduced_clustering = LocalSearch(reduced.graph, cfg, rng);
      break;
    case PipelineOptions::Solver::kPivot:
      result.reduced_clustering = BestOfPivot(reduced.graph, cfg.pivot_repeats, rng);
      break;
  }
  result.clustering =
      Expand(result.fairlets, result.reduced_clustering, g.num_vertices());
  result.cost = CcCost(g, result.clustering);
  result.reduced_cost = WeightedCcCost(reduced.graph, result.reduced_clustering);
  result.fcost = Fcost(g, result.fairlets);

  if (options.check_bounds) {
    if (result.cost > result.reduced_cost + result.fcost) {
      throw Error(ErrorCode::kInvariantViolation,
                  "expanded cost " + std::to_string(result.cost) +
                      " exceeds reduced cost " + std::to_string(result.reduced_cost) +
                      " + fcost " + std::to_string(result.fcost));
    }
    if (Imbalance(result.clustering, g, constraint.Alpha(g)) != 0.0) {
      throw Error(ErrorCode::kInvariantViolation, "fair pipeline output is imbalanced");
    }
  }
  return result;
}

}  // namespace fair_cc
