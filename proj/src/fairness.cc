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

#include "fair_cc/fairness.h"

#include <algorithm>

#include "fair_cc/error.h"

namespace fair_cc {

size_t FairletDecomposition::MaxFairletSize() const {
  size_t f = 0;
  for (const auto& fl : fairlets) f = std::max(f, fl.members.size());
  return f;
}

Clustering FairletDecomposition::AsClustering(Vertex n) const {
  std::vector<std::vector<Vertex>> clusters;
  clusters.reserve(fairlets.size());
  for (const auto& fl : fairlets) clusters.push_back(fl.members);
  return Clustering::FromClusters(clusters, n);
}

FairletDecomposition FairletDecomposition::FromClustering(const Clustering& c) {
  FairletDecomposition p;
  for (auto& members : c.Clusters()) {
    Vertex center = members.front();
    p.fairlets.push_back({std::move(members), center});
  }
  return p;
}

FairnessConstraint FairnessConstraint::OneOverT(int t) {
  if (t < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "1/t constraint needs t >= 2, got " + std::to_string(t));
  }
  return FairnessConstraint(Mode::kOneOverT, t);
}

Fraction FairnessConstraint::Alpha(const SignedGraph& g) const {
  switch (mode_) {
    case Mode::kHalf:
      return {1, 2};
    case Mode::kEqual:
      if (g.num_colors() < 2) {
        throw Error(ErrorCode::kSingleColor, "equal representation needs C >= 2");
      }
      return {1, g.num_colors()};
    case Mode::kOneOverT:
      return {1, t_};
  }
  return {1, 2};
}

std::string FairnessConstraint::Name() const {
  switch (mode_) {
    case Mode::kHalf: return "half";
    case Mode::kEqual: return "equal";
    case Mode::kOneOverT: return "1/" + std::to_string(t_);
  }
  return "";
}

namespace {

// Violating vertices of one cluster; `counts` is scratch sized to C.
int64_t ClusterExcess(std::span<const Vertex> cluster, const SignedGraph& g,
                      Fraction alpha, std::vector<int64_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  for (Vertex v : cluster) ++counts[g.color(v)];
  const int64_t allowed = alpha.FloorTimes(static_cast<int64_t>(cluster.size()));
  int64_t excess = 0;
  for (int64_t k : counts) excess += std::max<int64_t>(k - allowed, 0);
  return excess;
}

}  // namespace

bool IsFair(std::span<const Vertex> cluster, const SignedGraph& g,
            Fraction alpha) {
  if (cluster.empty()) throw Error(ErrorCode::kEmptyCluster, "fairness of {}");
  for (Vertex v : cluster) {
    if (v < 0 || v >= g.num_vertices()) {
      throw Error(ErrorCode::kUnknownVertex, std::to_string(v));
    }
  }
  std::vector<int64_t> counts(g.num_colors());
  return ClusterExcess(cluster, g, alpha, counts) == 0;
}

double Imbalance(const Clustering& c, const SignedGraph& g, Fraction alpha) {
  if (c.num_vertices() != g.num_vertices()) {
    throw Error(ErrorCode::kVertexSetMismatch, "clustering does not cover graph");
  }
  if (g.num_vertices() == 0) return 0.0;
  std::vector<int64_t> counts(g.num_colors());
  int64_t excess = 0;
  for (const auto& cluster : c.Clusters()) {
    excess += ClusterExcess(cluster, g, alpha, counts);
  }
  return static_cast<double>(excess) / g.num_vertices();
}

std::string ToString(const DecompositionViolation& v) {
  const std::string idx = std::to_string(v.index);
  switch (v.kind) {
    case DecompositionViolation::Kind::kMissing: return "missing vertex " + idx;
    case DecompositionViolation::Kind::kDuplicate: return "duplicate vertex " + idx;
    case DecompositionViolation::Kind::kUnknownVertex: return "unknown vertex " + idx;
    case DecompositionViolation::Kind::kEmpty: return "empty fairlet " + idx;
    case DecompositionViolation::Kind::kUnfair: return "unfair fairlet " + idx;
    case DecompositionViolation::Kind::kBadCenter: return "center outside fairlet " + idx;
  }
  return "";
}

std::vector<DecompositionViolation> ValidateDecomposition(
    const FairletDecomposition& p, const SignedGraph& g, Fraction alpha) {
  using Kind = DecompositionViolation::Kind;
  std::vector<DecompositionViolation> out;
  const Vertex n = g.num_vertices();
  std::vector<int> hits(n, 0);
  std::vector<int64_t> counts(g.num_colors());
  for (size_t i = 0; i < p.fairlets.size(); ++i) {
    const auto& fl = p.fairlets[i];
    const auto idx = static_cast<int64_t>(i);
    if (fl.members.empty()) {
      out.push_back({Kind::kEmpty, idx});
      continue;
    }
    bool in_range = true;
    for (Vertex v : fl.members) {
      if (v < 0 || v >= n) {
        out.push_back({Kind::kUnknownVertex, v});
        in_range = false;
      } else if (++hits[v] == 2) {
        out.push_back({Kind::kDuplicate, v});
      }
    }
    if (std::find(fl.members.begin(), fl.members.end(), fl.center) ==
        fl.members.end()) {
      out.push_back({Kind::kBadCenter, idx});
    }
    if (in_range && ClusterExcess(fl.members, g, alpha, counts) > 0) {
      out.push_back({Kind::kUnfair, idx});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hits[v] == 0) out.push_back({Kind::kMissing, v});
  }
  return out;
}

}  // namespace fair_cc
