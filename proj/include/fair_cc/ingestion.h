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

#ifndef FAIR_CC_INGESTION_H_
#define FAIR_CC_INGESTION_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fair_cc/signed_graph.h"

namespace fair_cc {

// A graph read from labelled files. Vertex i is ids[i]; color labels are
// numbered in order of first appearance.
struct LabeledGraph {
  SignedGraph graph;
  std::vector<std::string> ids;
  std::vector<std::string> color_labels;
};

// colors: `id<TAB>color_label` per line, vertex index = line order.
// edges:  `id<TAB>id` per line, each a positive pair.
LabeledGraph ParseEdgeGraph(std::istream& colors, std::istream& edges);
LabeledGraph LoadEdgeGraph(const std::string& colors_path,
                           const std::string& edges_path);

struct EmbeddingTable {
  std::vector<std::string> ids;
  std::vector<ColorId> colors;
  std::vector<std::string> color_labels;
  size_t dim = 0;
  // Row-major, ids.size() * dim.
  std::vector<double> values;

  size_t size() const { return ids.size(); }
  std::span<const double> row(size_t i) const {
    return {values.data() + i * dim, dim};
  }
};

// CSV with header `id,color,x0,...,x{d-1}`.
EmbeddingTable ParseEmbeddings(std::istream& in);
EmbeddingTable LoadEmbeddings(const std::string& path);
void WriteEmbeddings(const EmbeddingTable& t, std::ostream& out);

// floor(theta * n(n-1)/2), the number of positive pairs ThresholdGraph keeps.
int64_t ThresholdPositiveCount(Vertex n, double theta);

// Ranks all pairs by dot product, descending, ties by (min index, max index)
// ascending, and labels the top floor(theta * |E|) positive.
SignedGraph ThresholdGraph(const EmbeddingTable& t, double theta);

// Graph file: header `n<TAB>C`, then n lines holding each vertex's color id,
// then one `u<TAB>v` line per positive pair with u < v.
void WriteGraph(const SignedGraph& g, std::ostream& out);
SignedGraph ReadGraph(std::istream& in);
void SaveGraph(const SignedGraph& g, const std::string& path);
SignedGraph LoadGraph(const std::string& path);

// Clustering file: `vertex<TAB>cluster` per line, each vertex exactly once.
void WriteClustering(const Clustering& c, std::ostream& out);
Clustering ReadClustering(std::istream& in, Vertex n);
Clustering LoadClustering(const std::string& path, Vertex n);

struct PlantedGraph {
  SignedGraph graph;
  Clustering truth;
};

enum class ColorLayout {
  // Every planted cluster holds each color equally often.
  kBalanced,
  // Colors fill contiguous blocks of the planted order, so clusters are
  // dominated by few colors.
  kAligned,
};

// n vertices in k planted clusters of equal size. Pairs inside a planted
// cluster are positive with probability p_in, across with p_out. Vertex ids
// are shuffled. Throws kIndivisibleSizes when the layout cannot be met.
PlantedGraph SynthPlanted(Vertex n, ColorId num_colors, Vertex k, double p_in,
                          double p_out, uint64_t seed,
                          ColorLayout layout = ColorLayout::kBalanced);

// Gaussian embeddings, `num_colors` equal classes around random per-color
// means. Test and demo input for ThresholdGraph.
EmbeddingTable SynthEmbeddings(Vertex n, ColorId num_colors, size_t dim,
                               uint64_t seed);

}  // namespace fair_cc

#endif  // FAIR_CC_INGESTION_H_
