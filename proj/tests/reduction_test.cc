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

#include <random>
#include <vector>

#include "fair_cc/error.h"
#include "fair_cc/fairlet_decomp.h"
#include "fair_cc/ingestion.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace fair_cc {
namespace {

using testing::CodeOf;

FairletDecomposition Pairs(Vertex n) {
  FairletDecomposition p;
  for (Vertex v = 0; v + 1 < n; v += 2) p.fairlets.push_back({{v, v + 1}, v});
  return p;
}

FairletDecomposition RandomDecomposition(Vertex n, std::mt19937_64& rng) {
  std::vector<ClusterId> label(n);
  for (auto& l : label) l = static_cast<ClusterId>(rng() % std::max<Vertex>(1, n / 2));
  return FairletDecomposition::FromClustering(
      Clustering::FromLabels(std::span<const ClusterId>(label)));
}

TEST(ReduceTest, MajorityWeights) {
  const std::vector<ColorId> colors = {0, 1, 0, 1};
  const std::vector<VertexPair> all = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(Reduce(SignedGraph::Build(4, all, colors), Pairs(4)).graph.weight(0, 1), 4);
  const std::vector<VertexPair> three = {{0, 2}, {0, 3}, {1, 2}};
  EXPECT_EQ(Reduce(SignedGraph::Build(4, three, colors), Pairs(4)).graph.weight(0, 1), 3);
  const std::vector<VertexPair> two = {{0, 2}, {1, 3}};
  EXPECT_EQ(Reduce(SignedGraph::Build(4, two, colors), Pairs(4)).graph.weight(0, 1), 2);
  const std::vector<VertexPair> one = {{0, 2}};
  EXPECT_EQ(Reduce(SignedGraph::Build(4, one, colors), Pairs(4)).graph.weight(0, 1), -3);
}

TEST(ReduceTest, RejectsNonPartitions) {
  const std::vector<ColorId> colors = {0, 1, 0, 1};
  const auto g = SignedGraph::Build(4, {}, colors);
  FairletDecomposition missing{{{{0, 1}, 0}}};
  EXPECT_EQ(CodeOf([&] { Reduce(g, missing); }), ErrorCode::kInvalidDecomposition);
  FairletDecomposition dup{{{{0, 1}, 0}, {{1, 2, 3}, 1}}};
  EXPECT_EQ(CodeOf([&] { Reduce(g, dup); }), ErrorCode::kInvalidDecomposition);
}

TEST(ReduceTest, WeightMagnitudeBounds) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 20);
    const auto g = testing::RandomGraph(n, 2, 0.1 * (1 + rng() % 9), rng);
    const auto p = RandomDecomposition(n, rng);
    const auto r = Reduce(g, p);
    ASSERT_EQ(static_cast<size_t>(r.graph.num_nodes()), p.size());
    for (Vertex i = 0; i < r.graph.num_nodes(); ++i) {
      for (Vertex j = i + 1; j < r.graph.num_nodes(); ++j) {
        const int64_t prod = static_cast<int64_t>(r.fairlet_of(i).members.size() *
                                                  r.fairlet_of(j).members.size());
        const int64_t w = r.graph.weight(i, j);
        EXPECT_LE(std::abs(w), prod);
        EXPECT_GE(2 * std::abs(w), prod);
        EXPECT_NE(w, 0);
      }
    }
  }
}

TEST(ExpandTest, Examples) {
  const auto p = Pairs(6);
  EXPECT_EQ(Expand(p, Clustering::Singletons(3), 6),
            Clustering::FromClusters({{0, 1}, {2, 3}, {4, 5}}, 6));
  EXPECT_EQ(Expand(p, Clustering::OneCluster(3), 6), Clustering::OneCluster(6));
  EXPECT_EQ(CodeOf([&] { Expand(p, Clustering::Singletons(2), 6); }),
            ErrorCode::kNodeSetMismatch);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ClusterId> label(3);
    for (auto& l : label) l = static_cast<ClusterId>(rng() % 3);
    const auto reduced = Clustering::FromLabels(std::span<const ClusterId>(label));
    EXPECT_EQ(Expand(p, reduced, 6).num_clusters(), reduced.num_clusters());
  }
}

// cost(G, expanded) <= cost(G^P, reduced) + fcost(P).
TEST(ReductionBoundsTest, ExpansionCostBound) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 25);
    const auto g = testing::RandomGraph(n, 2, 0.1 * (1 + rng() % 9), rng);
    const auto p = RandomDecomposition(n, rng);
    const auto r = Reduce(g, p);
    std::vector<ClusterId> label(r.graph.num_nodes());
    for (auto& l : label) l = static_cast<ClusterId>(rng() % 4);
    const auto reduced = Clustering::FromLabels(std::span<const ClusterId>(label));
    EXPECT_LE(CcCost(g, Expand(p, reduced, n)),
              WeightedCcCost(r.graph, reduced) + Fcost(g, p));
  }
}

// For every clustering C of G some clustering of G^P costs at most
// cost(G, C) + fcost_out(P).
TEST(ReductionBoundsTest, ReducedOptimumBoundedByAnyClustering) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 7);
    const auto g = testing::RandomGraph(n, 2, 0.1 * (1 + rng() % 9), rng);
    const auto p = RandomDecomposition(n, rng);
    int64_t fcost_out = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      for (size_t j = i + 1; j < p.size(); ++j) {
        fcost_out += FcostOut(g, p.fairlets[i].members, p.fairlets[j].members);
      }
    }
    const int64_t reduced_opt = BruteForceCc(Reduce(g, p).graph).cost;
    testing::ForEachSetPartition(n, [&](const std::vector<ClusterId>& labels) {
      EXPECT_LE(reduced_opt, testing::NaiveCcCost(g, labels) + fcost_out);
    });
  }
}

// Some fair decomposition has fcost no larger than the fair optimum.
TEST(ReductionBoundsTest, FairOptimumBoundsOptimalFcost) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = 2 * (1 + static_cast<Vertex>(rng() % 4));
    const auto g = testing::RandomGraph(n, 2, 0.1 * (1 + rng() % 9), rng);
    const auto fair = BruteForceCc(g, FairnessConstraint::Half());
    const auto best = BruteForceOptimalFairlets(g, FairnessConstraint::Half(),
                                                FairletObjective::kFcost);
    EXPECT_LE(Fcost(g, best), fair.cost);
  }
}

TEST(FairCcTest, RecoversFairPositiveCliques) {
  for (ColorId c : {2, 3, 4}) {
    const auto planted = SynthPlanted(12 * c, c, 3, 1.0, 0.0, 7, ColorLayout::kBalanced);
    for (auto constraint : {FairnessConstraint::Half(), FairnessConstraint::Equal()}) {
      if (c == 3 && constraint.mode() == FairnessConstraint::Mode::kHalf) continue;
      PipelineOptions options;
      options.check_bounds = true;
      const auto r = FairCc(planted.graph, constraint, {}, options);
      EXPECT_EQ(r.cost, 0);
      EXPECT_EQ(r.fcost, 0);
      EXPECT_EQ(r.clustering, planted.truth);
    }
  }
}

TEST(FairCcTest, OutputIsFairAndWithinBounds) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const ColorId c = 2 + static_cast<ColorId>(rng() % 3);
    const Vertex k = 2 + static_cast<Vertex>(rng() % 8);
    std::vector<ColorId> colors;
    for (Vertex i = 0; i < k; ++i) {
      for (ColorId j = 0; j < c; ++j) colors.push_back(j);
    }
    std::shuffle(colors.begin(), colors.end(), rng);
    const auto g = testing::RandomGraphWithColors(colors, 0.1 * (1 + rng() % 9), rng);
    SolverConfig cfg;
    cfg.rng_seed = rng();
    PipelineOptions options;
    options.check_bounds = true;
    options.solver = trial % 2 ? PipelineOptions::Solver::kPivot : PipelineOptions::Solver::kLocal;
    for (auto constraint : {FairnessConstraint::Half(), FairnessConstraint::Equal()}) {
      if (constraint.mode() == FairnessConstraint::Mode::kHalf && c * k % 2 == 1 && c == 2) {
        continue;
      }
      FairCcResult r;
      try {
        r = FairCc(g, constraint, cfg, options);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
        continue;
      }
      const auto alpha = constraint.Alpha(g);
      EXPECT_EQ(Imbalance(r.clustering, g, alpha), 0.0);
      EXPECT_EQ(r.cost, CcCost(g, r.clustering));
      EXPECT_EQ(r.fcost, Fcost(g, r.fairlets));
      EXPECT_LE(r.cost, r.reduced_cost + r.fcost);
      EXPECT_EQ(r, FairCc(g, constraint, cfg, options));
    }
  }
}

TEST(FairCcTest, OneOverTRefinesSuppliedDecomposition) {
  const auto planted = SynthPlanted(48, 4, 2, 1.0, 0.0, 3, ColorLayout::kBalanced);
  PipelineOptions options;
  options.check_bounds = true;
  EXPECT_EQ(CodeOf([&] { FairCc(planted.graph, FairnessConstraint::OneOverT(3), {}, options); }),
            ErrorCode::kInvalidArgument);
  options.decomposition = FairletDecomposition::FromClustering(planted.truth);
  const auto r = FairCc(planted.graph, FairnessConstraint::OneOverT(3), {}, options);
  for (const auto& fl : r.fairlets.fairlets) {
    EXPECT_GE(fl.members.size(), 3u);
    EXPECT_LT(fl.members.size(), 6u);
  }
  EXPECT_EQ(Imbalance(r.clustering, planted.graph, {1, 3}), 0.0);
  EXPECT_EQ(r.cost, 0);

  options.decomposition = FairletDecomposition::FromClustering(Clustering::Singletons(48));
  EXPECT_EQ(CodeOf([&] { FairCc(planted.graph, FairnessConstraint::OneOverT(3), {}, options); }),
            ErrorCode::kInvalidDecomposition);
}

TEST(FairCcTest, SuppliedDecompositionIsUsed) {
  const auto planted = SynthPlanted(40, 2, 4, 0.9, 0.1, 1, ColorLayout::kBalanced);
  PipelineOptions options;
  options.decomposition = FairletsRandom(planted.graph, FairnessConstraint::Half(), 9);
  const auto r = FairCc(planted.graph, FairnessConstraint::Half(), {}, options);
  EXPECT_EQ(r.fairlets, *options.decomposition);
}

}  // namespace
}  // namespace fair_cc
