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

#ifndef FAIR_CC_SIGNED_GRAPH_H_
#define FAIR_CC_SIGNED_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fair_cc {

using Vertex = int32_t;
using ColorId = int32_t;
using ClusterId = int32_t;
using VertexPair = std::pair<Vertex, Vertex>;

// Complete signed graph over colored vertices. Only the positive pairs are
// stored; every other pair of distinct vertices is negative.
//
// For graphs up to kBitRowCap vertices the positive adjacency is also kept as
// packed bit rows with the diagonal set, i.e. the closed positive
// neighborhood of each vertex. Those rows double as the Hamming embedding.
class SignedGraph {
 public:
  static constexpr Vertex kBitRowCap = 16384;

  SignedGraph() = default;

  // Validates and canonicalizes the input. Pairs may be given in either
  // orientation but each unordered pair at most once.
  static SignedGraph Build(Vertex n, std::span<const VertexPair> positive_pairs,
                           std::span<const ColorId> colors);

  Vertex num_vertices() const { return n_; }
  ColorId num_colors() const { return num_colors_; }
  ColorId color(Vertex v) const { return colors_[v]; }
  std::span<const ColorId> colors() const { return colors_; }

  // Number of vertices carrying each color.
  std::vector<Vertex> ColorCounts() const;

  bool IsPositive(Vertex u, Vertex v) const;
  // Sorted ascending.
  std::span<const Vertex> PositiveNeighbors(Vertex v) const {
    return adjacency_[v];
  }

  int64_t num_edges() const {
    return static_cast<int64_t>(n_) * (n_ - 1) / 2;
  }
  int64_t num_positive_edges() const { return num_positive_; }
  int64_t num_negative_edges() const { return num_edges() - num_positive_; }

  // All positive pairs as (min, max), sorted lexicographically.
  std::vector<VertexPair> PositivePairs() const;

  bool has_bit_rows() const { return !bits_.empty(); }
  size_t words_per_row() const { return words_per_row_; }
  // Closed positive neighborhood of `v` as packed bits. Only valid when
  // has_bit_rows().
  std::span<const uint64_t> ClosedRow(Vertex v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_per_row_,
            words_per_row_};
  }

  bool operator==(const SignedGraph& other) const {
    return n_ == other.n_ && colors_ == other.colors_ &&
           adjacency_ == other.adjacency_;
  }

 private:
  Vertex n_ = 0;
  ColorId num_colors_ = 0;
  int64_t num_positive_ = 0;
  std::vector<ColorId> colors_;
  std::vector<std::vector<Vertex>> adjacency_;
  size_t words_per_row_ = 0;
  std::vector<uint64_t> bits_;
};

// Complete graph with integer edge weights. The sign is the label, the
// magnitude the weight; zero-weight pairs never contribute to a cost.
class WeightedSignedGraph {
 public:
  WeightedSignedGraph() = default;
  explicit WeightedSignedGraph(Vertex m)
      : m_(m), weight_(static_cast<size_t>(m) * m, 0) {}

  // Unit weights: +1 for positive pairs, -1 otherwise.
  static WeightedSignedGraph FromSigned(const SignedGraph& g);

  Vertex num_nodes() const { return m_; }
  int64_t weight(Vertex u, Vertex v) const {
    return weight_[static_cast<size_t>(u) * m_ + v];
  }
  void set_weight(Vertex u, Vertex v, int64_t w);

  std::span<const int64_t> Row(Vertex u) const {
    return {weight_.data() + static_cast<size_t>(u) * m_,
            static_cast<size_t>(m_)};
  }

 private:
  Vertex m_ = 0;
  std::vector<int64_t> weight_;
};

// A partition of {0, ..., n-1}. Cluster ids are always renumbered to
// 0..k-1 in order of first appearance, so two Clusterings compare equal
// exactly when they describe the same partition.
class Clustering {
 public:
  Clustering() = default;

  // Any non-negative labels; they are renumbered.
  static Clustering FromLabels(std::span<const int64_t> labels);
  static Clustering FromLabels(std::span<const ClusterId> labels);
  // Throws kVertexSetMismatch unless `clusters` cover 0..n-1 exactly once.
  static Clustering FromClusters(const std::vector<std::vector<Vertex>>& clusters,
                                 Vertex n);
  static Clustering Singletons(Vertex n);
  static Clustering OneCluster(Vertex n);

  Vertex num_vertices() const { return static_cast<Vertex>(assign_.size()); }
  ClusterId num_clusters() const { return num_clusters_; }
  ClusterId cluster_of(Vertex v) const { return assign_[v]; }
  std::span<const ClusterId> assignment() const { return assign_; }

  // Members of each cluster, ascending.
  std::vector<std::vector<Vertex>> Clusters() const;
  std::vector<Vertex> ClusterSizes() const;

  bool operator==(const Clustering& other) const = default;

 private:
  std::vector<ClusterId> assign_;
  ClusterId num_clusters_ = 0;
};

// Disagreements: negative pairs inside clusters plus positive pairs across.
int64_t CcCost(const SignedGraph& g, const Clustering& c);

// Sum of |weight| over disagreeing pairs.
int64_t WeightedCcCost(const WeightedSignedGraph& g, const Clustering& c);

// CcCost over n(n-1)/2. Throws kDegenerateGraph for n < 2.
double ErrorRate(const SignedGraph& g, const Clustering& c);

}  // namespace fair_cc

#endif  // FAIR_CC_SIGNED_GRAPH_H_
