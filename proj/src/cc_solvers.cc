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

#include "fair_cc/cc_solvers.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fair_cc/error.h"

namespace fair_cc {
namespace {

template <typename IsPositiveFn>
Clustering PivotImpl(Vertex n, IsPositiveFn&& neighbors_of, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<ClusterId> label(n, -1);
  ClusterId next = 0;
  for (Vertex pivot : order) {
    if (label[pivot] != -1) continue;
    label[pivot] = next;
    neighbors_of(pivot, [&](Vertex u) {
      if (label[u] == -1) label[u] = next;
    });
    ++next;
  }
  return Clustering::FromLabels(std::span<const ClusterId>(label));
}

// Depth-first enumeration of restricted growth strings with incremental
// cost and bound pruning. `accept` filters complete clusterings.
BruteForceResult Enumerate(const WeightedSignedGraph& g,
                           const std::function<bool(std::span<const ClusterId>)>& accept) {
  const Vertex n = g.num_nodes();
  std::vector<ClusterId> label(n, 0);
  std::vector<ClusterId> best_label;
  int64_t best = std::numeric_limits<int64_t>::max();

  std::function<void(Vertex, ClusterId, int64_t)> dfs = [&](Vertex v, ClusterId k,
                                                            int64_t cost) {
    if (cost >= best) return;
    if (v == n) {
      if (accept(label)) {
        best = cost;
        best_label = label;
      }
      return;
    }
    auto row = g.Row(v);
    for (ClusterId c = 0; c <= k; ++c) {
      int64_t add = 0;
      for (Vertex u = 0; u < v; ++u) {
        const bool together = label[u] == c;
        if (together && row[u] < 0) add -= row[u];
        if (!together && row[u] > 0) add += row[u];
      }
      label[v] = c;
      dfs(v + 1, c == k ? k + 1 : k, cost + add);
    }
  };
  if (n == 0) return {Clustering(), 0};
  dfs(0, 0, 0);
  if (best_label.empty()) {
    throw Error(ErrorCode::kInfeasible, "no clustering satisfies the constraint");
  }
  return {Clustering::FromLabels(std::span<const ClusterId>(best_label)), best};
}

}  // namespace

void SolverConfig::Validate() const {
  if (pivot_repeats < 1) {
    throw Error(ErrorCode::kInvalidArgument, "pivot_repeats must be >= 1");
  }
  if (local_max_passes < 1) {
    throw Error(ErrorCode::kInvalidArgument, "local_max_passes must be >= 1");
  }
}

Clustering Pivot(const WeightedSignedGraph& g, Rng& rng) {
  return PivotImpl(
      g.num_nodes(),
      [&](Vertex p, auto&& visit) {
        auto row = g.Row(p);
        for (Vertex u = 0; u < g.num_nodes(); ++u) {
          if (u != p && row[u] > 0) visit(u);
        }
      },
      rng);
}

Clustering Pivot(const SignedGraph& g, Rng& rng) {
  return PivotImpl(
      g.num_vertices(),
      [&](Vertex p, auto&& visit) {
        for (Vertex u : g.PositiveNeighbors(p)) visit(u);
      },
      rng);
}

Clustering BestOfPivot(const WeightedSignedGraph& g, int k, Rng& rng) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  Clustering best = Pivot(g, rng);
  int64_t best_cost = WeightedCcCost(g, best);
  for (int i = 1; i < k; ++i) {
    Clustering c = Pivot(g, rng);
    const int64_t cost = WeightedCcCost(g, c);
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(c);
    }
  }
  return best;
}

Clustering LocalSearch(const WeightedSignedGraph& g, const SolverConfig& cfg,
                       Rng& rng) {
  if (cfg.init == SolverConfig::Init::kFromPivot) {
    Clustering start = Pivot(g, rng);
    return LocalSearch(g, cfg, rng, start);
  }
  return LocalSearch(g, cfg, rng, Clustering::Singletons(g.num_nodes()));
}

Clustering LocalSearch(const WeightedSignedGraph& g, const SolverConfig& cfg,
                       Rng& rng, const Clustering& initial) {
  cfg.Validate();
  const Vertex n = g.num_nodes();
  if (initial.num_vertices() != n) {
    throw Error(ErrorCode::kVertexSetMismatch, "initial clustering does not cover graph");
  }
  std::vector<ClusterId> label(initial.assignment().begin(),
                               initial.assignment().end());
  // Cluster ids stay below n: there are at most n nonempty clusters and a
  // fresh singleton reuses the lowest empty id.
  std::vector<Vertex> size(std::max<Vertex>(n, 1), 0);
  for (ClusterId c : label) ++size[c];

  // affinity[c] = sum of w(v, u) over u in cluster c, u != v. Moving v from
  // A to B changes the cost by affinity[A] - affinity[B]; a fresh singleton
  // has affinity 0 and takes the lowest empty cluster id.
  std::vector<int64_t> affinity(size.size(), 0);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  int64_t tracked_cost = 0;
  if (cfg.check_monotone) {
    tracked_cost =
        WeightedCcCost(g, Clustering::FromLabels(std::span<const ClusterId>(label)));
  }

  for (int pass = 0; pass < cfg.local_max_passes; ++pass) {
    std::shuffle(order.begin(), order.end(), rng);
    bool moved = false;
    for (Vertex v : order) {
      auto row = g.Row(v);
      std::fill(affinity.begin(), affinity.end(), 0);
      for (Vertex u = 0; u < n; ++u) {
        if (u != v) affinity[label[u]] += row[u];
      }
      const ClusterId own = label[v];
      const int64_t own_affinity = affinity[own];
      ClusterId target = -1;
      int64_t target_affinity = own_affinity;
      bool fresh_seen = false;
      for (ClusterId c = 0; c < static_cast<ClusterId>(size.size()); ++c) {
        if (c == own) continue;
        if (size[c] == 0) {
          // Only the lowest empty id stands for the fresh singleton, and only
          // if v is not already alone.
          if (fresh_seen || size[own] == 1) continue;
          fresh_seen = true;
        }
        if (affinity[c] > target_affinity) {
          target_affinity = affinity[c];
          target = c;
        }
      }
      if (target == -1) continue;

      --size[own];
      ++size[target];
      label[v] = target;
      moved = true;
      if (cfg.check_monotone) {
        const int64_t expected = tracked_cost - (target_affinity - own_affinity);
        const int64_t actual = WeightedCcCost(
            g, Clustering::FromLabels(std::span<const ClusterId>(label)));
        if (actual != expected || actual >= tracked_cost) {
          throw Error(ErrorCode::kInvariantViolation,
                      "local search move changed cost " +
                          std::to_string(tracked_cost) + " -> " +
                          std::to_string(actual) + " (expected " +
                          std::to_string(expected) + ")");
        }
        tracked_cost = actual;
      }
    }
    if (!moved) break;
  }
  return Clustering::FromLabels(std::span<const ClusterId>(label));
}

BruteForceResult BruteForceCc(const SignedGraph& g,
                              const std::optional<FairnessConstraint>& constraint,
                              std::optional<Vertex> max_n) {
  const Vertex limit = max_n.value_or(constraint ? 12 : 10);
  if (g.num_vertices() > limit) {
    throw Error(ErrorCode::kTooLarge,
                "brute force over " + std::to_string(g.num_vertices()) + " > " +
                    std::to_string(limit) + " vertices");
  }
  const auto w = WeightedSignedGraph::FromSigned(g);
  if (!constraint) {
    return Enumerate(w, [](std::span<const ClusterId>) { return true; });
  }
  const Fraction alpha = constraint->Alpha(g);
  return Enumerate(w, [&](std::span<const ClusterId> labels) {
    const auto c = Clustering::FromLabels(labels);
    return Imbalance(c, g, alpha) == 0.0;
  });
}

BruteForceResult BruteForceCc(const WeightedSignedGraph& g, Vertex max_n) {
  if (g.num_nodes() > max_n) {
    throw Error(ErrorCode::kTooLarge,
                "brute force over " + std::to_string(g.num_nodes()) + " > " +
                    std::to_string(max_n) + " nodes");
  }
  return Enumerate(g, [](std::span<const ClusterId>) { return true; });
}

}  // namespace fair_cc
