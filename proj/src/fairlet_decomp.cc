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

#include "fair_cc/fairlet_decomp.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "fair_cc/embedding_metric.h"
#include "fair_cc/error.h"

namespace fair_cc {
namespace {

void CheckVertices(const SignedGraph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= g.num_vertices()) {
      throw Error(ErrorCode::kUnknownVertex, std::to_string(v));
    }
  }
}

std::vector<std::vector<Vertex>> ColorClasses(const SignedGraph& g) {
  std::vector<std::vector<Vertex>> classes(g.num_colors());
  for (Vertex v = 0; v < g.num_vertices(); ++v) classes[g.color(v)].push_back(v);
  return classes;
}

Fairlet PairFairlet(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return {{a, b}, a};
}

// Fairlet index of every vertex, -1 if uncovered.
std::vector<int64_t> FairletIndex(const SignedGraph& g,
                                  const FairletDecomposition& p) {
  std::vector<int64_t> idx(g.num_vertices(), -1);
  for (size_t i = 0; i < p.fairlets.size(); ++i) {
    for (Vertex v : p.fairlets[i].members) {
      if (v < 0 || v >= g.num_vertices()) {
        throw Error(ErrorCode::kInvalidDecomposition,
                    "unknown vertex " + std::to_string(v));
      }
      if (idx[v] != -1) {
        throw Error(ErrorCode::kOverlappingFairlets,
                    "vertex " + std::to_string(v) + " in two fairlets");
      }
      idx[v] = static_cast<int64_t>(i);
    }
  }
  return idx;
}

// Merges the leftover vertex `x` into the pair of two other colors with the
// least added distance. Returns false if there is no such pair.
bool AbsorbLeftover(const SignedGraph& g, const DistanceOracle& dist, Vertex x,
                    std::vector<Fairlet>& pairs) {
  size_t best = pairs.size();
  int64_t best_cost = std::numeric_limits<int64_t>::max();
  for (size_t i = 0; i < pairs.size(); ++i) {
    const Vertex a = pairs[i].members[0];
    const Vertex b = pairs[i].members[1];
    if (g.color(a) == g.color(x) || g.color(b) == g.color(x)) continue;
    const int64_t cost = dist(x, a) + dist(x, b);
    if (cost < best_cost) {
      best_cost = cost;
      best = i;
    }
  }
  if (best == pairs.size()) return false;
  auto& members = pairs[best].members;
  members.push_back(x);
  std::sort(members.begin(), members.end());
  pairs[best].center = members.front();
  return true;
}

void CheckHalfFeasible(const SignedGraph& g) {
  const Vertex n = g.num_vertices();
  const auto counts = g.ColorCounts();
  const Vertex largest = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  if (largest > n / 2) {
    throw Error(ErrorCode::kInfeasible,
                "a color holds " + std::to_string(largest) + " of " +
                    std::to_string(n) + " vertices (alpha = 1/2)");
  }
  if (n % 2 == 1 && g.num_colors() == 2) {
    throw Error(ErrorCode::kInfeasible,
                "odd vertex count with two colors has no alpha = 1/2 partition");
  }
}

void CheckEqualCounts(const SignedGraph& g) {
  if (g.num_colors() < 2) {
    throw Error(ErrorCode::kSingleColor, "equal representation needs C >= 2");
  }
  const auto counts = g.ColorCounts();
  for (Vertex k : counts) {
    if (k != counts.front()) {
      throw Error(ErrorCode::kUnequalColorCounts,
                  "color classes of size " + std::to_string(counts.front()) +
                      " and " + std::to_string(k));
    }
  }
}

}  // namespace

int64_t FcostIn(const SignedGraph& g, std::span<const Vertex> fairlet) {
  CheckVertices(g, fairlet);
  const auto size = static_cast<int64_t>(fairlet.size());
  int64_t positive = 0;
  for (size_t i = 0; i < fairlet.size(); ++i) {
    for (size_t j = i + 1; j < fairlet.size(); ++j) {
      if (g.IsPositive(fairlet[i], fairlet[j])) ++positive;
    }
  }
  return size * (size - 1) / 2 - positive;
}

int64_t FcostOut(const SignedGraph& g, std::span<const Vertex> a,
                 std::span<const Vertex> b) {
  CheckVertices(g, a);
  CheckVertices(g, b);
  int64_t positive = 0;
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (u == v) {
        throw Error(ErrorCode::kOverlappingFairlets,
                    "vertex " + std::to_string(u) + " in both sets");
      }
      if (g.IsPositive(u, v)) ++positive;
    }
  }
  const auto total = static_cast<int64_t>(a.size() * b.size());
  return std::min(positive, total - positive);
}

int64_t Fcost(const SignedGraph& g, const FairletDecomposition& p) {
  const auto idx = FairletIndex(g, p);
  const size_t m = p.fairlets.size();
  // Positive pair counts between (and inside) fairlets.
  std::vector<int64_t> positive(m * m, 0);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.PositiveNeighbors(u)) {
      if (u < v && idx[u] >= 0 && idx[v] >= 0) {
        ++positive[static_cast<size_t>(idx[u]) * m + idx[v]];
      }
    }
  }
  int64_t cost = 0;
  for (size_t i = 0; i < m; ++i) {
    const auto si = static_cast<int64_t>(p.fairlets[i].members.size());
    cost += si * (si - 1) / 2 - positive[i * m + i];
    for (size_t j = i + 1; j < m; ++j) {
      const auto sj = static_cast<int64_t>(p.fairlets[j].members.size());
      const int64_t pos = positive[i * m + j] + positive[j * m + i];
      cost += std::min(pos, si * sj - pos);
    }
  }
  return cost;
}

int64_t AuxiliaryGraph::NumEdges() const {
  int64_t e = 0;
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v = u + 1; v < num_vertices(); ++v) {
      if (costs.has_edge(u, v)) ++e;
    }
  }
  return e;
}

AuxiliaryGraph BuildAuxGraph(const SignedGraph& g) {
  if (g.num_colors() < 2) {
    throw Error(ErrorCode::kSingleColor, "auxiliary graph needs C >= 2");
  }
  const Vertex n = g.num_vertices();
  const DistanceOracle dist(g);
  AuxiliaryGraph h;
  h.colors.assign(g.colors().begin(), g.colors().end());
  h.costs = EdgeCostMatrix(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.color(u) != g.color(v)) h.costs.set(u, v, dist(u, v));
    }
  }
  return h;
}

std::vector<Vertex> MinCostFairMatching(const AuxiliaryGraph& h) {
  const Vertex n = h.num_vertices();
  if (n % 2 == 1) {
    throw Error(ErrorCode::kInfeasible, "odd vertex count has no perfect matching");
  }
  ColorId num_colors = 0;
  for (ColorId c : h.colors) num_colors = std::max(num_colors, c + 1);
  std::vector<std::vector<Vertex>> classes(num_colors);
  for (Vertex v = 0; v < n; ++v) classes[h.colors[v]].push_back(v);
  for (const auto& cls : classes) {
    if (static_cast<Vertex>(cls.size()) > n / 2) {
      throw Error(ErrorCode::kInfeasible,
                  "a color holds " + std::to_string(cls.size()) + " of " +
                      std::to_string(n) + " vertices");
    }
  }
  std::vector<Vertex> partner(n, -1);
  std::vector<const std::vector<Vertex>*> nonempty;
  for (const auto& cls : classes) {
    if (!cls.empty()) nonempty.push_back(&cls);
  }
  if (nonempty.size() == 2) {
    // Bipartite: both sides hold n/2 vertices.
    const auto& left = *nonempty[0];
    const auto& right = *nonempty[1];
    std::vector<std::vector<int64_t>> cost(left.size(),
                                           std::vector<int64_t>(right.size()));
    for (size_t i = 0; i < left.size(); ++i) {
      for (size_t j = 0; j < right.size(); ++j) {
        cost[i][j] = h.costs.at(left[i], right[j]);
      }
    }
    const auto assignment = MinCostAssignment(cost);
    for (size_t i = 0; i < left.size(); ++i) {
      partner[left[i]] = right[assignment[i]];
      partner[right[assignment[i]]] = left[i];
    }
    return partner;
  }
  auto mate = MinCostPerfectMatching(h.costs);
  if (!mate) throw Error(ErrorCode::kInfeasible, "no cross-color perfect matching");
  for (Vertex v = 0; v < n; ++v) partner[v] = (*mate)[v];
  return partner;
}

int64_t MatchingCost(const AuxiliaryGraph& h, std::span<const Vertex> partner) {
  int64_t total = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(partner.size()); ++v) {
    if (v < partner[v]) total += h.costs.at(v, partner[v]);
  }
  return total;
}

FairletDecomposition FairletsHalf(const SignedGraph& g) {
  const Vertex n = g.num_vertices();
  FairletDecomposition p;
  if (n == 0) return p;
  CheckHalfFeasible(g);

  const DistanceOracle dist(g);
  const bool odd = n % 2 == 1;
  const Vertex m = odd ? n + 1 : n;
  // With odd n a dummy vertex of its own color, at distance 0 from everyone,
  // absorbs the leftover vertex.
  AuxiliaryGraph h;
  h.colors.assign(g.colors().begin(), g.colors().end());
  if (odd) h.colors.push_back(g.num_colors());
  h.costs = EdgeCostMatrix(m);
  for (Vertex u = 0; u < m; ++u) {
    for (Vertex v = u + 1; v < m; ++v) {
      if (h.colors[u] == h.colors[v]) continue;
      h.costs.set(u, v, v == n ? 0 : dist(u, v));
    }
  }
  const auto partner = MinCostFairMatching(h);

  Vertex leftover = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (partner[v] == n) {
      leftover = v;
    } else if (v < partner[v]) {
      p.fairlets.push_back(PairFairlet(v, partner[v]));
    }
  }
  if (leftover >= 0 && !AbsorbLeftover(g, dist, leftover, p.fairlets)) {
    throw Error(ErrorCode::kInfeasible,
                "no pair of two other colors can absorb vertex " +
                    std::to_string(leftover));
  }
  return p;
}

FairletDecomposition FairletsEqual(const SignedGraph& g) {
  CheckEqualCounts(g);
  const auto classes = ColorClasses(g);
  const DistanceOracle dist(g);
  const size_t k = classes.front().size();
  std::vector<std::vector<Vertex>> paths(k);
  for (size_t i = 0; i < k; ++i) paths[i].push_back(classes[0][i]);
  for (ColorId c = 0; c + 1 < g.num_colors(); ++c) {
    // Path ends all carry color c, so this matches class c to class c+1.
    const auto& next = classes[c + 1];
    std::vector<std::vector<int64_t>> cost(k, std::vector<int64_t>(k));
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) cost[i][j] = dist(paths[i].back(), next[j]);
    }
    const auto assignment = MinCostAssignment(cost);
    for (size_t i = 0; i < k; ++i) paths[i].push_back(next[assignment[i]]);
  }
  FairletDecomposition p;
  for (auto& path : paths) {
    const Vertex center = path[path.size() / 2];
    p.fairlets.push_back({std::move(path), center});
  }
  return p;
}

std::vector<Fairlet> RefineRoundRobin(std::span<const Vertex> fairlet,
                                      const SignedGraph& g, int t) {
  if (t < 2) throw Error(ErrorCode::kInvalidArgument, "t must be >= 2");
  CheckVertices(g, fairlet);
  const auto size = static_cast<int64_t>(fairlet.size());
  if (size < t) {
    throw Error(ErrorCode::kTooSmall,
                "fairlet of size " + std::to_string(size) + " < t = " +
                    std::to_string(t));
  }
  if (!IsFair(fairlet, g, Fraction{1, t})) {
    throw Error(ErrorCode::kUnfairInput, "fairlet is not fair under 1/" +
                                             std::to_string(t));
  }
  std::vector<Vertex> order(fairlet.begin(), fairlet.end());
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::pair(g.color(a), a) < std::pair(g.color(b), b);
  });
  const size_t m = static_cast<size_t>(size / t);
  std::vector<Fairlet> parts(m);
  for (size_t i = 0; i < order.size(); ++i) parts[i % m].members.push_back(order[i]);
  for (auto& part : parts) part.center = part.members.front();
  return parts;
}

FairletDecomposition RefineDecomposition(const FairletDecomposition& p,
                                         const SignedGraph& g, int t) {
  FairletDecomposition out;
  for (const auto& fl : p.fairlets) {
    for (auto& part : RefineRoundRobin(fl.members, g, t)) {
      out.fairlets.push_back(std::move(part));
    }
  }
  return out;
}

FairletDecomposition FairletsRandom(const SignedGraph& g,
                                    const FairnessConstraint& constraint,
                                    uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto classes = ColorClasses(g);
  for (auto& cls : classes) std::shuffle(cls.begin(), cls.end(), rng);
  FairletDecomposition p;

  switch (constraint.mode()) {
    case FairnessConstraint::Mode::kEqual: {
      CheckEqualCounts(g);
      for (size_t i = 0; i < classes.front().size(); ++i) {
        Fairlet fl;
        for (const auto& cls : classes) fl.members.push_back(cls[i]);
        fl.center = fl.members[fl.members.size() / 2];
        p.fairlets.push_back(std::move(fl));
      }
      return p;
    }
    case FairnessConstraint::Mode::kHalf: {
      const Vertex n = g.num_vertices();
      if (n == 0) return p;
      CheckHalfFeasible(g);
      // Concatenate the shuffled classes and zip the two halves. No class
      // spans more than half the sequence, so zipped vertices never share a
      // color. A trailing dummy (-1) stands in for the leftover of odd n.
      std::vector<Vertex> order;
      for (const auto& cls : classes) order.insert(order.end(), cls.begin(), cls.end());
      if (n % 2 == 1) order.push_back(-1);
      const size_t half = order.size() / 2;
      Vertex leftover = -1;
      for (size_t i = 0; i < half; ++i) {
        const Vertex a = order[i];
        const Vertex b = order[i + half];
        if (b == -1) {
          leftover = a;
        } else {
          p.fairlets.push_back(PairFairlet(a, b));
        }
      }
      if (leftover >= 0) {
        std::vector<size_t> hosts;
        for (size_t i = 0; i < p.fairlets.size(); ++i) {
          const auto& mem = p.fairlets[i].members;
          if (g.color(mem[0]) != g.color(leftover) &&
              g.color(mem[1]) != g.color(leftover)) {
            hosts.push_back(i);
          }
        }
        if (hosts.empty()) {
          throw Error(ErrorCode::kInfeasible,
                      "no pair of two other colors can absorb vertex " +
                          std::to_string(leftover));
        }
        std::uniform_int_distribution<size_t> pick(0, hosts.size() - 1);
        auto& mem = p.fairlets[hosts[pick(rng)]].members;
        mem.push_back(leftover);
        std::sort(mem.begin(), mem.end());
      }
      for (auto& fl : p.fairlets) fl.center = fl.members.front();
      return p;
    }
    case FairnessConstraint::Mode::kOneOverT:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "random decomposition supports the half and equal constraints");
}

FairletDecomposition BruteForceOptimalFairlets(const SignedGraph& g,
                                               const FairnessConstraint& constraint,
                                               FairletObjective objective,
                                               Vertex max_n) {
  const Vertex n = g.num_vertices();
  if (n > max_n) {
    throw Error(ErrorCode::kTooLarge,
                "brute force over " + std::to_string(n) + " > " +
                    std::to_string(max_n) + " vertices");
  }
  const Fraction alpha = constraint.Alpha(g);
  std::vector<size_t> sizes;
  switch (constraint.mode()) {
    case FairnessConstraint::Mode::kHalf: sizes = {2, 3}; break;
    case FairnessConstraint::Mode::kEqual:
      sizes = {static_cast<size_t>(g.num_colors())};
      break;
    case FairnessConstraint::Mode::kOneOverT:
      for (int s = constraint.t(); s < 2 * constraint.t(); ++s) sizes.push_back(s);
      break;
  }

  FairletDecomposition current, best;
  int64_t best_cost = std::numeric_limits<int64_t>::max();
  std::vector<bool> used(n, false);

  auto evaluate = [&]() {
    const int64_t cost = objective == FairletObjective::kFcost
                             ? Fcost(g, current)
                             : DecompositionMcost(g, current);
    if (cost < best_cost) {
      best_cost = cost;
      best = current;
    }
  };

  // Each part contains the lowest unused vertex plus a combination of later
  // unused vertices, so every partition is generated once.
  std::function<void()> recurse = [&]() {
    Vertex first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      evaluate();
      return;
    }
    used[first] = true;
    std::vector<Vertex> part{first};
    std::function<void(Vertex, size_t)> extend = [&](Vertex from, size_t target) {
      if (part.size() == target) {
        if (!IsFair(part, g, alpha)) return;
        current.fairlets.push_back({part, part.front()});
        recurse();
        current.fairlets.pop_back();
        return;
      }
      for (Vertex v = from; v < n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        part.push_back(v);
        extend(v + 1, target);
        part.pop_back();
        used[v] = false;
      }
    };
    for (size_t s : sizes) extend(first + 1, s);
    used[first] = false;
  };
  recurse();

  if (best_cost == std::numeric_limits<int64_t>::max()) {
    throw Error(ErrorCode::kInfeasible, "no partition into fair parts of the allowed sizes");
  }
  return best;
}

}  // namespace fair_cc
