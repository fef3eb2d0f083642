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

#include "fair_cc/ingestion.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <string_view>
#include <unordered_map>

#include "fair_cc/error.h"

namespace fair_cc {
namespace {

std::vector<std::string_view> Split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (;;) {
    const size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void ParseFail(const std::string& where, int64_t line,
                            const std::string& what) {
  throw Error(ErrorCode::kParseError,
              where + ":" + std::to_string(line) + ": " + what);
}

// Reads lines, strips a trailing CR and skips blank lines. `fn` receives the
// 1-based line number.
template <typename Fn>
void ForEachLine(std::istream& in, Fn&& fn) {
  std::string line;
  int64_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fn(std::string_view(line), number);
  }
}

template <typename T>
bool ParseNumber(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return in;
}

ColorId InternLabel(std::string_view label, std::vector<std::string>& labels,
                    std::unordered_map<std::string, ColorId>& index) {
  auto [it, inserted] =
      index.emplace(std::string(label), static_cast<ColorId>(labels.size()));
  if (inserted) labels.emplace_back(label);
  return it->second;
}

}  // namespace

LabeledGraph ParseEdgeGraph(std::istream& colors, std::istream& edges) {
  LabeledGraph out;
  std::unordered_map<std::string, Vertex> vertex_of;
  std::unordered_map<std::string, ColorId> color_of;
  std::vector<ColorId> color_ids;
  ForEachLine(colors, [&](std::string_view line, int64_t number) {
    const auto fields = Split(line, '\t');
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      ParseFail("colors", number, "expected id<TAB>color_label");
    }
    const auto v = static_cast<Vertex>(out.ids.size());
    if (!vertex_of.emplace(std::string(fields[0]), v).second) {
      throw Error(ErrorCode::kDuplicateId, "colors:" + std::to_string(number) +
                                               ": id " + std::string(fields[0]));
    }
    out.ids.emplace_back(fields[0]);
    color_ids.push_back(InternLabel(fields[1], out.color_labels, color_of));
  });
  std::vector<VertexPair> pairs;
  ForEachLine(edges, [&](std::string_view line, int64_t number) {
    const auto fields = Split(line, '\t');
    if (fields.size() != 2) ParseFail("edges", number, "expected id<TAB>id");
    Vertex ends[2];
    for (int i = 0; i < 2; ++i) {
      auto it = vertex_of.find(std::string(fields[i]));
      if (it == vertex_of.end()) {
        throw Error(ErrorCode::kUnknownVertexId,
                    "edges:" + std::to_string(number) + ": id " + std::string(fields[i]));
      }
      ends[i] = it->second;
    }
    if (ends[0] == ends[1]) {
      throw Error(ErrorCode::kSelfLoop, "edges:" + std::to_string(number));
    }
    pairs.emplace_back(ends[0], ends[1]);
  });
  out.graph = SignedGraph::Build(static_cast<Vertex>(out.ids.size()), pairs, color_ids);
  return out;
}

LabeledGraph LoadEdgeGraph(const std::string& colors_path,
                           const std::string& edges_path) {
  auto colors = OpenOrThrow(colors_path);
  auto edges = OpenOrThrow(edges_path);
  return ParseEdgeGraph(colors, edges);
}

EmbeddingTable ParseEmbeddings(std::istream& in) {
  EmbeddingTable t;
  std::unordered_map<std::string, ColorId> color_of;
  std::unordered_map<std::string, size_t> seen_ids;
  bool header = true;
  ForEachLine(in, [&](std::string_view line, int64_t number) {
    const auto fields = Split(line, ',');
    if (header) {
      if (fields.size() < 3 || fields[0] != "id" || fields[1] != "color") {
        ParseFail("embeddings", number, "expected header id,color,x0,...");
      }
      t.dim = fields.size() - 2;
      header = false;
      return;
    }
    if (fields.size() != t.dim + 2) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embeddings:" + std::to_string(number) + ": expected " +
                      std::to_string(t.dim) + " coordinates, got " +
                      std::to_string(fields.size() >= 2 ? fields.size() - 2 : 0));
    }
    if (fields[0].empty() || fields[1].empty()) {
      ParseFail("embeddings", number, "empty id or color");
    }
    if (!seen_ids.emplace(std::string(fields[0]), t.ids.size()).second) {
      throw Error(ErrorCode::kDuplicateId, "embeddings:" + std::to_string(number) +
                                               ": id " + std::string(fields[0]));
    }
    t.ids.emplace_back(fields[0]);
    t.colors.push_back(InternLabel(fields[1], t.color_labels, color_of));
    for (size_t i = 0; i < t.dim; ++i) {
      double x;
      if (!ParseNumber(fields[i + 2], x)) {
        ParseFail("embeddings", number, "bad number '" + std::string(fields[i + 2]) + "'");
      }
      t.values.push_back(x);
    }
  });
  if (header) ParseFail("embeddings", 1, "missing header");
  return t;
}

EmbeddingTable LoadEmbeddings(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ParseEmbeddings(in);
}

void WriteEmbeddings(const EmbeddingTable& t, std::ostream& out) {
  out << "id,color";
  for (size_t i = 0; i < t.dim; ++i) out << ",x" << i;
  out << '\n';
  char buf[32];
  for (size_t r = 0; r < t.size(); ++r) {
    out << t.ids[r] << ',' << t.color_labels[t.colors[r]];
    for (double x : t.row(r)) {
      // Shortest representation that round-trips.
      auto res = std::to_chars(buf, buf + sizeof(buf), x);
      out << ',' << std::string_view(buf, res.ptr - buf);
    }
    out << '\n';
  }
}

int64_t ThresholdPositiveCount(Vertex n, double theta) {
  const int64_t pairs = static_cast<int64_t>(n) * (n - 1) / 2;
  return static_cast<int64_t>(
      std::floor(static_cast<long double>(theta) * static_cast<long double>(pairs)));
}

SignedGraph ThresholdGraph(const EmbeddingTable& t, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "theta must lie in (0, 1)");
  }
  const auto n = static_cast<Vertex>(t.size());
  if (n < 2) throw Error(ErrorCode::kDegenerateGraph, "threshold graph needs n >= 2");
  if (t.values.size() != t.size() * t.dim || t.colors.size() != t.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "embedding table is ragged");
  }
  struct Scored {
    double dot;
    Vertex u, v;
  };
  std::vector<Scored> scored;
  scored.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    const auto a = t.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      const auto b = t.row(v);
      double dot = 0.0;
      for (size_t i = 0; i < t.dim; ++i) dot += a[i] * b[i];
      scored.push_back({dot, u, v});
    }
  }
  const auto keep = static_cast<size_t>(ThresholdPositiveCount(n, theta));
  auto before = [](const Scored& a, const Scored& b) {
    if (a.dot != b.dot) return a.dot > b.dot;
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  };
  if (keep < scored.size()) {
    std::nth_element(scored.begin(), scored.begin() + keep, scored.end(), before);
  }
  std::vector<VertexPair> positive;
  positive.reserve(keep);
  for (size_t i = 0; i < keep; ++i) positive.emplace_back(scored[i].u, scored[i].v);
  return SignedGraph::Build(n, positive, t.colors);
}

void WriteGraph(const SignedGraph& g, std::ostream& out) {
  out << g.num_vertices() << '\t' << g.num_colors() << '\n';
  for (ColorId c : g.colors()) out << c << '\n';
  for (auto [u, v] : g.PositivePairs()) out << u << '\t' << v << '\n';
}

SignedGraph ReadGraph(std::istream& in) {
  Vertex n = -1;
  ColorId num_colors = 0;
  std::vector<ColorId> colors;
  std::vector<VertexPair> pairs;
  ForEachLine(in, [&](std::string_view line, int64_t number) {
    const auto fields = Split(line, '\t');
    if (n < 0) {
      if (fields.size() != 2 || !ParseNumber(fields[0], n) ||
          !ParseNumber(fields[1], num_colors) || n < 0) {
        ParseFail("graph", number, "expected header n<TAB>C");
      }
      colors.reserve(n);
      return;
    }
    if (static_cast<Vertex>(colors.size()) < n) {
      ColorId c;
      if (fields.size() != 1 || !ParseNumber(fields[0], c)) {
        ParseFail("graph", number, "expected a color id");
      }
      if (c < 0 || c >= num_colors) ParseFail("graph", number, "color id out of range");
      colors.push_back(c);
      return;
    }
    Vertex u, v;
    if (fields.size() != 2 || !ParseNumber(fields[0], u) || !ParseNumber(fields[1], v)) {
      ParseFail("graph", number, "expected u<TAB>v");
    }
    pairs.emplace_back(u, v);
  });
  if (n < 0) ParseFail("graph", 1, "missing header");
  if (static_cast<Vertex>(colors.size()) != n) {
    throw Error(ErrorCode::kColorArityMismatch,
                "graph lists " + std::to_string(colors.size()) + " colors for " +
                    std::to_string(n) + " vertices");
  }
  SignedGraph g = SignedGraph::Build(n, pairs, colors);
  if (g.num_colors() != num_colors) {
    throw Error(ErrorCode::kColorArityMismatch, "header C disagrees with the color lines");
  }
  return g;
}

void SaveGraph(const SignedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  WriteGraph(g, out);
}

SignedGraph LoadGraph(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadGraph(in);
}

void WriteClustering(const Clustering& c, std::ostream& out) {
  for (Vertex v = 0; v < c.num_vertices(); ++v) {
    out << v << '\t' << c.cluster_of(v) << '\n';
  }
}

Clustering ReadClustering(std::istream& in, Vertex n) {
  std::vector<int64_t> label(n, -1);
  ForEachLine(in, [&](std::string_view line, int64_t number) {
    const auto fields = Split(line, '\t');
    Vertex v;
    int64_t c;
    if (fields.size() != 2 || !ParseNumber(fields[0], v) || !ParseNumber(fields[1], c) ||
        c < 0) {
      ParseFail("clustering", number, "expected vertex<TAB>cluster");
    }
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::kVertexSetMismatch,
                  "clustering:" + std::to_string(number) + ": vertex " +
                      std::to_string(v) + " outside the graph");
    }
    if (label[v] != -1) {
      throw Error(ErrorCode::kVertexSetMismatch,
                  "clustering:" + std::to_string(number) + ": vertex " +
                      std::to_string(v) + " listed twice");
    }
    label[v] = c;
  });
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == -1) {
      throw Error(ErrorCode::kVertexSetMismatch,
                  "clustering: vertex " + std::to_string(v) + " missing");
    }
  }
  return Clustering::FromLabels(std::span<const int64_t>(label));
}

Clustering LoadClustering(const std::string& path, Vertex n) {
  auto in = OpenOrThrow(path);
  return ReadClustering(in, n);
}

PlantedGraph SynthPlanted(Vertex n, ColorId num_colors, Vertex k, double p_in,
                          double p_out, uint64_t seed, ColorLayout layout) {
  if (n <= 0 || k <= 0 || num_colors <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "n, C and k must be positive");
  }
  if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "probabilities must lie in [0, 1]");
  }
  if (n % k != 0) {
    throw Error(ErrorCode::kIndivisibleSizes,
                std::to_string(n) + " vertices into " + std::to_string(k) + " clusters");
  }
  const Vertex cluster_size = n / k;
  if (layout == ColorLayout::kBalanced && cluster_size % num_colors != 0) {
    throw Error(ErrorCode::kIndivisibleSizes,
                "cluster size " + std::to_string(cluster_size) + " is not a multiple of C = " +
                    std::to_string(num_colors));
  }
  if (layout == ColorLayout::kAligned && n % num_colors != 0) {
    throw Error(ErrorCode::kIndivisibleSizes,
                std::to_string(n) + " vertices into " + std::to_string(num_colors) +
                    " equal color classes");
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<ColorId> colors(n);
  std::vector<ClusterId> truth(n);
  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = perm[i];
    truth[v] = i / cluster_size;
    colors[v] = layout == ColorLayout::kBalanced
                    ? i % num_colors
                    : static_cast<ColorId>(static_cast<int64_t>(i) * num_colors / n);
  }
  std::bernoulli_distribution inside(p_in), across(p_out);
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool positive = truth[u] == truth[v] ? inside(rng) : across(rng);
      if (positive) pairs.emplace_back(u, v);
    }
  }
  return {SignedGraph::Build(n, pairs, colors),
          Clustering::FromLabels(std::span<const ClusterId>(truth))};
}

EmbeddingTable SynthEmbeddings(Vertex n, ColorId num_colors, size_t dim,
                               uint64_t seed) {
  if (n <= 0 || num_colors <= 0 || dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n, C and dim must be positive");
  }
  if (n % num_colors != 0) {
    throw Error(ErrorCode::kIndivisibleSizes,
                std::to_string(n) + " rows into " + std::to_string(num_colors) + " colors");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> means(static_cast<size_t>(num_colors) * dim);
  for (double& m : means) m = normal(rng);
  EmbeddingTable t;
  t.dim = dim;
  for (ColorId c = 0; c < num_colors; ++c) t.color_labels.push_back("c" + std::to_string(c));
  for (Vertex i = 0; i < n; ++i) {
    const ColorId c = i % num_colors;
    t.ids.push_back("v" + std::to_string(i));
    t.colors.push_back(c);
    for (size_t j = 0; j < dim; ++j) {
      t.values.push_back(means[static_cast<size_t>(c) * dim + j] + normal(rng));
    }
  }
  return t;
}

}  // namespace fair_cc
