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

#include "fair_cc/signed_graph.h"

#include <random>
#include <vector>

#include "fair_cc/error.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace fair_cc {
namespace {

using testing::NaiveCcCost;
using testing::NaiveWeightedCost;
using testing::RandomGraph;
using testing::CodeOf;

SignedGraph TwoPairs() {
  const std::vector<VertexPair> pos = {{0, 1}, {2, 3}};
  const std::vector<ColorId> colors = {0, 1, 0, 1};
  return SignedGraph::Build(4, pos, colors);
}

TEST(BuildGraphTest, SmallestNonemptyGraph) {
  const std::vector<VertexPair> pos = {{0, 1}};
  const std::vector<ColorId> colors = {0, 1};
  const auto g = SignedGraph::Build(2, pos, colors);
  EXPECT_EQ(g.num_positive_edges(), 1);
  EXPECT_EQ(g.num_negative_edges(), 0);
  EXPECT_EQ(g.num_colors(), 2);
}

TEST(BuildGraphTest, EmptyPositiveSet) {
  const std::vector<ColorId> colors = {0, 0, 1};
  const auto g = SignedGraph::Build(3, {}, colors);
  EXPECT_EQ(g.num_positive_edges(), 0);
  EXPECT_EQ(g.num_negative_edges(), 3);
}

TEST(BuildGraphTest, CountsPairs) {
  const auto g = TwoPairs();
  EXPECT_EQ(g.num_edges(), 6);
  EXPECT_EQ(g.num_positive_edges(), 2);
  EXPECT_EQ(g.num_negative_edges(), 4);
  EXPECT_TRUE(g.IsPositive(1, 0));
  EXPECT_FALSE(g.IsPositive(0, 2));
}

TEST(BuildGraphTest, CanonicalizesOrientation) {
  const std::vector<VertexPair> pos = {{3, 1}, {2, 0}};
  const std::vector<ColorId> colors = {0, 1, 0, 1};
  const auto g = SignedGraph::Build(4, pos, colors);
  EXPECT_EQ(g.PositivePairs(), (std::vector<VertexPair>{{0, 2}, {1, 3}}));
}

TEST(BuildGraphTest, Errors) {
  const std::vector<ColorId> colors = {0, 1, 0};
  EXPECT_EQ(CodeOf([&] {
              const std::vector<VertexPair> pos = {{0, 1}, {1, 0}};
              SignedGraph::Build(3, pos, colors);
            }),
            ErrorCode::kDuplicateEdge);
  EXPECT_EQ(CodeOf([&] {
              const std::vector<VertexPair> pos = {{2, 2}};
              SignedGraph::Build(3, pos, colors);
            }),
            ErrorCode::kSelfLoop);
  EXPECT_EQ(CodeOf([&] { SignedGraph::Build(4, {}, colors); }),
            ErrorCode::kColorArityMismatch);
  EXPECT_EQ(CodeOf([&] {
              const std::vector<ColorId> gap = {0, 2, 0};
              SignedGraph::Build(3, {}, gap);
            }),
            ErrorCode::kColorArityMismatch);
  EXPECT_EQ(CodeOf([&] {
              const std::vector<VertexPair> pos = {{0, 3}};
              SignedGraph::Build(3, pos, colors);
            }),
            ErrorCode::kUnknownVertex);
}

TEST(ClusteringTest, RenumbersByFirstAppearance) {
  const std::vector<ClusterId> labels = {7, 3, 7, 9};
  const auto c = Clustering::FromLabels(std::span<const ClusterId>(labels));
  EXPECT_EQ(c.num_clusters(), 3);
  EXPECT_EQ(c.cluster_of(0), 0);
  EXPECT_EQ(c.cluster_of(1), 1);
  EXPECT_EQ(c.cluster_of(3), 2);
  EXPECT_EQ(c, Clustering::FromClusters({{0, 2}, {1}, {3}}, 4));
}

TEST(ClusteringTest, FromClustersRejectsBadCover) {
  EXPECT_EQ(CodeOf([] { Clustering::FromClusters({{0, 1}}, 3); }),
            ErrorCode::kVertexSetMismatch);
  EXPECT_EQ(CodeOf([] { Clustering::FromClusters({{0, 1}, {1, 2}}, 3); }),
            ErrorCode::kVertexSetMismatch);
}

TEST(CcCostTest, AllPositiveTriangleOneCluster) {
  const std::vector<VertexPair> pos = {{0, 1}, {0, 2}, {1, 2}};
  const std::vector<ColorId> colors = {0, 1, 2};
  const auto g = SignedGraph::Build(3, pos, colors);
  EXPECT_EQ(CcCost(g, Clustering::OneCluster(3)), 0);
}

TEST(CcCostTest, TwoPairsExamples) {
  const auto g = TwoPairs();
  EXPECT_EQ(CcCost(g, Clustering::FromClusters({{0, 1}, {2, 3}}, 4)), 0);
  EXPECT_EQ(CcCost(g, Clustering::OneCluster(4)), 4);
  EXPECT_EQ(CcCost(g, Clustering::Singletons(4)), 2);
}

TEST(CcCostTest, VertexSetMismatch) {
  EXPECT_EQ(CodeOf([] { CcCost(TwoPairs(), Clustering::OneCluster(3)); }),
            ErrorCode::kVertexSetMismatch);
}

TEST(WeightedCcCostTest, SingleEdge) {
  WeightedSignedGraph w(2);
  w.set_weight(0, 1, 5);
  EXPECT_EQ(WeightedCcCost(w, Clustering::OneCluster(2)), 0);
  EXPECT_EQ(WeightedCcCost(w, Clustering::Singletons(2)), 5);
}

TEST(WeightedCcCostTest, ThreeNodeReducedGraph) {
  WeightedSignedGraph w(3);
  w.set_weight(0, 1, 3);
  w.set_weight(0, 2, -4);
  w.set_weight(1, 2, -3);
  EXPECT_EQ(WeightedCcCost(w, Clustering::FromClusters({{0, 1}, {2}}, 3)), 0);
}

TEST(WeightedCcCostTest, ZeroWeightContributesNothing) {
  WeightedSignedGraph w(2);
  EXPECT_EQ(WeightedCcCost(w, Clustering::OneCluster(2)), 0);
  EXPECT_EQ(WeightedCcCost(w, Clustering::Singletons(2)), 0);
}

TEST(ErrorRateTest, Examples) {
  const auto g = TwoPairs();
  EXPECT_EQ(ErrorRate(g, Clustering::FromClusters({{0, 1}, {2, 3}}, 4)), 0.0);
  EXPECT_DOUBLE_EQ(ErrorRate(g, Clustering::OneCluster(4)), 4.0 / 6.0);
  const std::vector<ColorId> one = {0};
  EXPECT_EQ(CodeOf([&] {
              ErrorRate(SignedGraph::Build(1, {}, one), Clustering::OneCluster(1));
            }),
            ErrorCode::kDegenerateGraph);
}

TEST(CcCostPropertyTest, MatchesPairwiseDefinitionAndIdentities) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 12);
    const auto g = RandomGraph(n, 1 + static_cast<ColorId>(rng() % 3) % n, 0.4, rng);
    std::vector<ClusterId> label(n);
    for (auto& l : label) l = static_cast<ClusterId>(rng() % 4);
    const auto c = Clustering::FromLabels(std::span<const ClusterId>(label));
    EXPECT_EQ(CcCost(g, c), NaiveCcCost(g, c.assignment()));

    EXPECT_EQ(CcCost(g, Clustering::Singletons(n)), g.num_positive_edges());
    EXPECT_EQ(CcCost(g, Clustering::OneCluster(n)), g.num_negative_edges());
    const double positive_fraction =
        static_cast<double>(g.num_positive_edges()) / g.num_edges();
    EXPECT_DOUBLE_EQ(ErrorRate(g, Clustering::OneCluster(n)) + positive_fraction, 1.0);

    // Unit weights reproduce the unweighted cost.
    const auto w = WeightedSignedGraph::FromSigned(g);
    EXPECT_EQ(WeightedCcCost(w, c), CcCost(g, c));

    // Consistent vertex permutation.
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexPair> pos;
    for (auto [u, v] : g.PositivePairs()) pos.emplace_back(perm[u], perm[v]);
    std::vector<ColorId> colors(n);
    std::vector<ClusterId> permuted(n);
    for (Vertex v = 0; v < n; ++v) {
      colors[perm[v]] = g.color(v);
      permuted[perm[v]] = label[v] + 17;  // relabelled ids too
    }
    const auto h = SignedGraph::Build(n, pos, colors);
    EXPECT_EQ(CcCost(h, Clustering::FromLabels(std::span<const ClusterId>(permuted))),
              CcCost(g, c));
  }
}

TEST(WeightedCcCostPropertyTest, MatchesPairwiseDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex m = 1 + static_cast<Vertex>(rng() % 9);
    WeightedSignedGraph w(m);
    for (Vertex u = 0; u < m; ++u) {
      for (Vertex v = u + 1; v < m; ++v) {
        w.set_weight(u, v, static_cast<int64_t>(rng() % 11) - 5);
      }
    }
    std::vector<ClusterId> label(m);
    for (auto& l : label) l = static_cast<ClusterId>(rng() % 3);
    const auto c = Clustering::FromLabels(std::span<const ClusterId>(label));
    EXPECT_EQ(WeightedCcCost(w, c), NaiveWeightedCost(w, c.assignment()));
  }
}

}  // namespace
}  // namespace fair_cc
