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

#include "fair_cc/matching.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"

namespace fair_cc {
namespace {

int64_t CostOf(const EdgeCostMatrix& m, const std::vector<int>& mate) {
  int64_t total = 0;
  for (int u = 0; u < m.size(); ++u) {
    EXPECT_EQ(mate[mate[u]], u);
    EXPECT_NE(mate[u], u);
    EXPECT_TRUE(m.has_edge(u, mate[u]));
    if (u < mate[u]) total += m.at(u, mate[u]);
  }
  return total;
}

TEST(MinCostPerfectMatchingTest, TrivialCases) {
  EdgeCostMatrix empty(0);
  EXPECT_TRUE(MinCostPerfectMatching(empty)->empty());
  EdgeCostMatrix odd(3);
  odd.set(0, 1, 1);
  odd.set(1, 2, 1);
  odd.set(0, 2, 1);
  EXPECT_FALSE(MinCostPerfectMatching(odd).has_value());
  EdgeCostMatrix pair(2);
  pair.set(0, 1, 7);
  EXPECT_EQ(*MinCostPerfectMatching(pair), (std::vector<int>{1, 0}));
  EdgeCostMatrix disconnected(4);
  disconnected.set(0, 1, 1);
  disconnected.set(0, 2, 1);
  EXPECT_FALSE(MinCostPerfectMatching(disconnected).has_value());
}

TEST(MinCostPerfectMatchingTest, MatchesBruteForce) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    const double density = 0.3 + 0.7 * (rng() % 8) / 7.0;
    const int64_t max_cost = 1 + static_cast<int64_t>(rng() % 30);
    EdgeCostMatrix m(n);
    std::bernoulli_distribution keep(density);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (keep(rng)) m.set(u, v, static_cast<int64_t>(rng() % (max_cost + 1)));
      }
    }
    const auto expected = testing::BruteForceMatchingCost(m);
    const auto mate = MinCostPerfectMatching(m);
    ASSERT_EQ(expected.has_value(), mate.has_value()) << "trial " << trial;
    if (mate) EXPECT_EQ(CostOf(m, *mate), *expected) << "trial " << trial;
  }
}

TEST(MinCostAssignmentTest, MatchesPermutationSearch) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int64_t>> cost(k, std::vector<int64_t>(k));
    for (auto& row : cost) {
      for (auto& c : row) c = static_cast<int64_t>(rng() % 50);
    }
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    int64_t best = std::numeric_limits<int64_t>::max();
    do {
      int64_t s = 0;
      for (int i = 0; i < k; ++i) s += cost[i][perm[i]];
      best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto a = MinCostAssignment(cost);
    int64_t got = 0;
    std::vector<bool> used(k, false);
    for (int i = 0; i < k; ++i) {
      ASSERT_FALSE(used[a[i]]);
      used[a[i]] = true;
      got += cost[i][a[i]];
    }
    EXPECT_EQ(got, best);
  }
}

// On bipartite inputs the general solver and the assignment solver are two
// independent exact routes to the same optimum.
TEST(MinCostPerfectMatchingTest, AgreesWithAssignmentOnBipartiteGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 5 + static_cast<int>(rng() % 60);
    std::vector<std::vector<int64_t>> cost(k, std::vector<int64_t>(k));
    EdgeCostMatrix m(2 * k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        cost[i][j] = static_cast<int64_t>(rng() % 200);
        m.set(i, k + j, cost[i][j]);
      }
    }
    const auto a = MinCostAssignment(cost);
    int64_t assignment_cost = 0;
    for (int i = 0; i < k; ++i) assignment_cost += cost[i][a[i]];
    const auto mate = MinCostPerfectMatching(m);
    ASSERT_TRUE(mate.has_value());
    EXPECT_EQ(CostOf(m, *mate), assignment_cost);
  }
}

TEST(MinCostPerfectMatchingTest, LargeCompleteGraphIsPerfect) {
  std::mt19937_64 rng(5);
  const int n = 400;
  EdgeCostMatrix m(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) m.set(u, v, static_cast<int64_t>(rng() % n));
  }
  const auto mate = MinCostPerfectMatching(m);
  ASSERT_TRUE(mate.has_value());
  CostOf(m, *mate);
}

}  // namespace
}  // namespace fair_cc
