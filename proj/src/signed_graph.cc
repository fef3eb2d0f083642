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

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "fair_cc/error.h"

namespace fair_cc {

SignedGraph SignedGraph::Build(Vertex n,
                               std::span<const VertexPair> positive_pairs,
                               std::span<const ColorId> colors) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  if (static_cast<Vertex>(colors.size()) != n) {
    throw Error(ErrorCode::kColorArityMismatch,
                "expected " + std::to_string(n) + " colors, got " +
                    std::to_string(colors.size()));
  }
  SignedGraph g;
  g.n_ = n;
  g.colors_.assign(colors.begin(), colors.end());
  ColorId max_color = -1;
  for (ColorId c : g.colors_) {
    if (c < 0) throw Error(ErrorCode::kColorArityMismatch, "negative color id");
    max_color = std::max(max_color, c);
  }
  g.num_colors_ = max_color + 1;
  std::vector<bool> seen(g.num_colors_, false);
  for (ColorId c : g.colors_) seen[c] = true;
  for (ColorId c = 0; c < g.num_colors_; ++c) {
    if (!seen[c]) {
      throw Error(ErrorCode::kColorArityMismatch,
                  "color id " + std::to_string(c) + " has no vertex");
    }
  }

  g.adjacency_.assign(n, {});
  for (auto [u, v] : positive_pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kUnknownVertex,
                  "pair (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "pair (" + std::to_string(std::min(v, *dup)) + "," +
                      std::to_string(std::max(v, *dup)) + ")");
    }
  }
  g.num_positive_ = static_cast<int64_t>(positive_pairs.size());

  if (n <= kBitRowCap) {
    g.words_per_row_ = (static_cast<size_t>(n) + 63) / 64;
    g.bits_.assign(g.words_per_row_ * n, 0);
    for (Vertex v = 0; v < n; ++v) {
      uint64_t* row = g.bits_.data() + static_cast<size_t>(v) * g.words_per_row_;
      row[v / 64] |= uint64_t{1} << (v % 64);
      for (Vertex u : g.adjacency_[v]) row[u / 64] |= uint64_t{1} << (u % 64);
    }
  }
  return g;
}

std::vector<Vertex> SignedGraph::ColorCounts() const {
  std::vector<Vertex> counts(num_colors_, 0);
  for (ColorId c : colors_) ++counts[c];
  return counts;
}

bool SignedGraph::IsPositive(Vertex u, Vertex v) const {
  if (u == v) return false;
  if (has_bit_rows()) {
    return (ClosedRow(u)[v / 64] >> (v % 64)) & 1;
  }
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::vector<VertexPair> SignedGraph::PositivePairs() const {
  std::vector<VertexPair> pairs;
  pairs.reserve(num_positive_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

WeightedSignedGraph WeightedSignedGraph::FromSigned(const SignedGraph& g) {
  const Vertex n = g.num_vertices();
  WeightedSignedGraph w(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) w.weight_[static_cast<size_t>(u) * n + v] = -1;
    }
    for (Vertex v : g.PositiveNeighbors(u)) {
      w.weight_[static_cast<size_t>(u) * n + v] = 1;
    }
  }
  return w;
}

void WeightedSignedGraph::set_weight(Vertex u, Vertex v, int64_t w) {
  if (u < 0 || v < 0 || u >= m_ || v >= m_) {
    throw Error(ErrorCode::kUnknownVertex, "weighted pair out of range");
  }
  if (u == v) throw Error(ErrorCode::kSelfLoop, "node " + std::to_string(u));
  weight_[static_cast<size_t>(u) * m_ + v] = w;
  weight_[static_cast<size_t>(v) * m_ + u] = w;
}

namespace {

template <typename Label>
void Renumber(std::span<const Label> labels, std::vector<ClusterId>& assign,
              ClusterId& k) {
  std::unordered_map<Label, ClusterId> remap;
  assign.resize(labels.size());
  k = 0;
  for (size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative cluster label for vertex " + std::to_string(v));
    }
    auto [it, inserted] = remap.emplace(labels[v], k);
    if (inserted) ++k;
    assign[v] = it->second;
  }
}

}  // namespace

Clustering Clustering::FromLabels(std::span<const int64_t> labels) {
  Clustering c;
  Renumber(labels, c.assign_, c.num_clusters_);
  return c;
}

Clustering Clustering::FromLabels(std::span<const ClusterId> labels) {
  Clustering c;
  Renumber(labels, c.assign_, c.num_clusters_);
  return c;
}

Clustering Clustering::FromClusters(
    const std::vector<std::vector<Vertex>>& clusters, Vertex n) {
  std::vector<ClusterId> labels(n, -1);
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].empty()) {
      throw Error(ErrorCode::kEmptyCluster, "cluster " + std::to_string(i));
    }
    for (Vertex v : clusters[i]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kVertexSetMismatch,
                    "vertex " + std::to_string(v) + " outside the graph");
      }
      if (labels[v] != -1) {
        throw Error(ErrorCode::kVertexSetMismatch,
                    "vertex " + std::to_string(v) + " assigned twice");
      }
      labels[v] = static_cast<ClusterId>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (labels[v] == -1) {
      throw Error(ErrorCode::kVertexSetMismatch,
                  "vertex " + std::to_string(v) + " not assigned");
    }
  }
  return FromLabels(std::span<const ClusterId>(labels));
}

Clustering Clustering::Singletons(Vertex n) {
  Clustering c;
  c.assign_.resize(n);
  for (Vertex v = 0; v < n; ++v) c.assign_[v] = v;
  c.num_clusters_ = n;
  return c;
}

Clustering Clustering::OneCluster(Vertex n) {
  Clustering c;
  c.assign_.assign(n, 0);
  c.num_clusters_ = n > 0 ? 1 : 0;
  return c;
}

std::vector<std::vector<Vertex>> Clustering::Clusters() const {
  std::vector<std::vector<Vertex>> out(num_clusters_);
  for (Vertex v = 0; v < num_vertices(); ++v) out[assign_[v]].push_back(v);
  return out;
}

std::vector<Vertex> Clustering::ClusterSizes() const {
  std::vector<Vertex> sizes(num_clusters_, 0);
  for (ClusterId c : assign_) ++sizes[c];
  return sizes;
}

int64_t CcCost(const SignedGraph& g, const Clustering& c) {
  if (c.num_vertices() != g.num_vertices()) {
    throw Error(ErrorCode::kVertexSetMismatch,
                "clustering covers " + std::to_string(c.num_vertices()) +
                    " vertices, graph has " +
                    std::to_string(g.num_vertices()));
  }
  int64_t intra_pairs = 0;
  for (Vertex s : c.ClusterSizes()) {
    intra_pairs += static_cast<int64_t>(s) * (s - 1) / 2;
  }
  int64_t intra_positive = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.PositiveNeighbors(u)) {
      if (u < v && c.cluster_of(u) == c.cluster_of(v)) ++intra_positive;
    }
  }
  const int64_t intra_negative = intra_pairs - intra_positive;
  const int64_t inter_positive = g.num_positive_edges() - intra_positive;
  return intra_negative + inter_positive;
}

int64_t WeightedCcCost(const WeightedSignedGraph& g, const Clustering& c) {
  if (c.num_vertices() != g.num_nodes()) {
    throw Error(ErrorCode::kVertexSetMismatch,
                "clustering covers " + std::to_string(c.num_vertices()) +
                    " nodes, graph has " + std::to_string(g.num_nodes()));
  }
  int64_t cost = 0;
  for (Vertex u = 0; u < g.num_nodes(); ++u) {
    auto row = g.Row(u);
    for (Vertex v = u + 1; v < g.num_nodes(); ++v) {
      const bool together = c.cluster_of(u) == c.cluster_of(v);
      if (together && row[v] < 0) cost -= row[v];
      if (!together && row[v] > 0) cost += row[v];
    }
  }
  return cost;
}

double ErrorRate(const SignedGraph& g, const Clustering& c) {
  if (g.num_vertices() < 2) {
    throw Error(ErrorCode::kDegenerateGraph, "error rate needs n >= 2");
  }
  return static_cast<double>(CcCost(g, c)) /
         static_cast<double>(g.num_edges());
}

}  // namespace fair_cc
