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

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>

#include "fair_cc/cc_solvers.h"
#include "fair_cc/error.h"
#include "fair_cc/fairness.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace fair_cc {
namespace {

using testing::CodeOf;

std::string MessageOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(EdgeGraphTest, ParsesTrivialGraph) {
  std::istringstream colors("x\tbooks\ny\tmusic\n");
  std::istringstream edges("y\tx\n");
  const auto lg = ParseEdgeGraph(colors, edges);
  EXPECT_EQ(lg.graph.num_vertices(), 2);
  EXPECT_TRUE(lg.graph.IsPositive(0, 1));
  EXPECT_EQ(lg.ids, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(lg.color_labels, (std::vector<std::string>{"books", "music"}));
  EXPECT_EQ(lg.graph.color(1), 1);
}

TEST(EdgeGraphTest, CrlfAndBlankLines) {
  std::istringstream colors("a\tr\r\n\r\nb\tb\r\nc\tr\r\n");
  std::istringstream edges("\na\tc\r\n");
  const auto lg = ParseEdgeGraph(colors, edges);
  EXPECT_EQ(lg.graph.num_vertices(), 3);
  EXPECT_TRUE(lg.graph.IsPositive(0, 2));
  EXPECT_EQ(lg.graph.num_positive_edges(), 1);
}

TEST(EdgeGraphTest, ErrorsCarryLineNumbers) {
  {
    std::istringstream colors("a\tr\nb\tb\n");
    std::istringstream edges("a\tb\nb\tzz\n");
    const auto msg = MessageOf([&] { ParseEdgeGraph(colors, edges); });
    EXPECT_NE(msg.find("UnknownVertexId"), std::string::npos);
    EXPECT_NE(msg.find("edges:2"), std::string::npos) << msg;
  }
  {
    std::istringstream colors("a\tr\nb\tb\na\tb\n");
    std::istringstream edges("");
    const auto msg = MessageOf([&] { ParseEdgeGraph(colors, edges); });
    EXPECT_NE(msg.find("DuplicateId"), std::string::npos);
    EXPECT_NE(msg.find("colors:3"), std::string::npos) << msg;
  }
  {
    std::istringstream colors("a\tr\nb b\n");
    std::istringstream edges("");
    EXPECT_EQ(CodeOf([&] { ParseEdgeGraph(colors, edges); }), ErrorCode::kParseError);
  }
  {
    std::istringstream colors("a\tr\nb\tb\n");
    std::istringstream edges("a\ta\n");
    EXPECT_EQ(CodeOf([&] { ParseEdgeGraph(colors, edges); }), ErrorCode::kSelfLoop);
  }
  EXPECT_EQ(CodeOf([&] { LoadEdgeGraph("/nonexistent/c.tsv", "/nonexistent/e.tsv"); }),
            ErrorCode::kParseError);
}

TEST(EdgeGraphTest, ThousandVerticesTwoColors) {
  std::ostringstream colors, edges;
  for (int i = 0; i < 1000; ++i) colors << "item" << i << '\t' << (i < 500 ? "A" : "B") << '\n';
  for (int i = 0; i + 1 < 1000; i += 3) edges << "item" << i << "\titem" << i + 1 << '\n';
  std::istringstream cin(colors.str()), ein(edges.str());
  const auto lg = ParseEdgeGraph(cin, ein);
  EXPECT_EQ(lg.graph.num_vertices(), 1000);
  EXPECT_EQ(lg.graph.ColorCounts(), (std::vector<Vertex>{500, 500}));
  EXPECT_EQ(lg.graph.num_positive_edges(), 333);
}

TEST(EmbeddingsTest, ParseAndRoundTrip) {
  std::istringstream in("id,color,x0,x1\np,red,1.5,-2\nq,blue,0,0.25\n");
  const auto t = ParseEmbeddings(in);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.dim, 2u);
  EXPECT_EQ(t.row(0)[1], -2.0);
  EXPECT_EQ(t.colors, (std::vector<ColorId>{0, 1}));
  std::ostringstream out;
  WriteEmbeddings(t, out);
  std::istringstream back(out.str());
  const auto u = ParseEmbeddings(back);
  EXPECT_EQ(u.values, t.values);
  EXPECT_EQ(u.ids, t.ids);

  std::istringstream ragged("id,color,x0,x1\np,red,1.5\n");
  EXPECT_EQ(CodeOf([&] { ParseEmbeddings(ragged); }), ErrorCode::kDimensionMismatch);
  std::istringstream bad("id,color,x0\np,red,abc\n");
  EXPECT_EQ(CodeOf([&] { ParseEmbeddings(bad); }), ErrorCode::kParseError);
  std::istringstream dup("id,color,x0\np,red,1\np,red,2\n");
  EXPECT_EQ(CodeOf([&] { ParseEmbeddings(dup); }), ErrorCode::kDuplicateId);
}

TEST(ThresholdGraphTest, PositiveCountIsExactFloor) {
  for (Vertex n : {2, 3, 7, 40, 101}) {
    const auto t = SynthEmbeddings(n, 1, 4, static_cast<uint64_t>(n));
    const int64_t pairs = static_cast<int64_t>(n) * (n - 1) / 2;
    for (double theta : {0.001, 0.1, 0.25, 0.5, 0.75, 0.999}) {
      const auto g = ThresholdGraph(t, theta);
      const auto expected = static_cast<int64_t>(std::floor(theta * static_cast<double>(pairs)));
      EXPECT_EQ(g.num_positive_edges(), expected) << n << " " << theta;
      EXPECT_EQ(ThresholdPositiveCount(n, theta), expected);
      EXPECT_DOUBLE_EQ(ErrorRate(g, SingleCluster(n)),
                       static_cast<double>(pairs - expected) / static_cast<double>(pairs));
    }
  }
  const auto t = SynthEmbeddings(4, 1, 2, 1);
  EXPECT_EQ(CodeOf([&] { ThresholdGraph(t, 0.0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { ThresholdGraph(t, 1.0); }), ErrorCode::kInvalidArgument);
}

TEST(ThresholdGraphTest, TopPairsByDotProduct) {
  // Dot products: (0,1)=2, (0,2)=(1,2)=1, pairs with d are 0. The tie at 1
  // goes to the smaller pair.
  std::istringstream in("id,color,x0,x1\na,r,1,1\nb,b,1,1\nc,r,0,1\nd,b,0,0\n");
  const auto t = ParseEmbeddings(in);
  const auto g = ThresholdGraph(t, 2.0 / 6.0 + 1e-9);
  EXPECT_EQ(g.num_positive_edges(), 2);
  EXPECT_TRUE(g.IsPositive(0, 1));
  EXPECT_TRUE(g.IsPositive(0, 2));
  EXPECT_FALSE(g.IsPositive(1, 2));
  EXPECT_EQ(ThresholdGraph(t, 0.5 + 1e-9).num_positive_edges(), 3);
  EXPECT_TRUE(ThresholdGraph(t, 0.5 + 1e-9).IsPositive(1, 2));
}

TEST(ThresholdGraphTest, Deterministic) {
  const auto t = SynthEmbeddings(60, 2, 10, 5);
  EXPECT_EQ(ThresholdGraph(t, 0.5), ThresholdGraph(t, 0.5));
  std::ostringstream out;
  WriteEmbeddings(t, out);
  std::istringstream back(out.str());
  EXPECT_EQ(ThresholdGraph(ParseEmbeddings(back), 0.5), ThresholdGraph(t, 0.5));
}

TEST(GraphFileTest, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testing::RandomGraph(1 + static_cast<Vertex>(rng() % 30), 3, 0.3, rng);
    std::stringstream s;
    WriteGraph(g, s);
    EXPECT_EQ(ReadGraph(s), g);
  }
  const auto path = std::filesystem::temp_directory_path() / "fair_cc_graph_test.tsv";
  const auto g = testing::RandomGraph(12, 2, 0.5, rng);
  SaveGraph(g, path.string());
  EXPECT_EQ(LoadGraph(path.string()), g);
  std::filesystem::remove(path);

  std::istringstream bad("2\t2\n0\n1\n0\tx\n");
  const auto msg = MessageOf([&] { ReadGraph(bad); });
  EXPECT_NE(msg.find("graph:4"), std::string::npos) << msg;
}

TEST(ClusteringFileTest, RoundTripAndErrors) {
  const auto c = Clustering::FromClusters({{0, 3}, {1}, {2, 4}}, 5);
  std::stringstream s;
  WriteClustering(c, s);
  EXPECT_EQ(ReadClustering(s, 5), c);
  std::istringstream missing("0\t0\n1\t0\n");
  EXPECT_EQ(CodeOf([&] { ReadClustering(missing, 3); }), ErrorCode::kVertexSetMismatch);
  std::istringstream dup("0\t0\n0\t1\n");
  EXPECT_EQ(CodeOf([&] { ReadClustering(dup, 2); }), ErrorCode::kVertexSetMismatch);
  std::istringstream bad("0\tq\n");
  EXPECT_EQ(CodeOf([&] { ReadClustering(bad, 1); }), ErrorCode::kParseError);
}

TEST(SynthPlantedTest, Trivial) {
  const auto perfect = SynthPlanted(40, 2, 4, 1.0, 0.0, 1);
  EXPECT_EQ(CcCost(perfect.graph, perfect.truth), 0);
  EXPECT_EQ(perfect.truth.num_clusters(), 4);
  EXPECT_EQ(Imbalance(perfect.truth, perfect.graph, {1, 2}), 0.0);
  const auto full = SynthPlanted(20, 2, 2, 1.0, 1.0, 1);
  EXPECT_EQ(full.graph.num_negative_edges(), 0);
  EXPECT_EQ(SynthPlanted(40, 2, 4, 0.9, 0.1, 5).graph, SynthPlanted(40, 2, 4, 0.9, 0.1, 5).graph);
  EXPECT_EQ(CodeOf([&] { SynthPlanted(41, 2, 4, 0.9, 0.1, 1); }), ErrorCode::kIndivisibleSizes);
  EXPECT_EQ(CodeOf([&] { SynthPlanted(30, 4, 5, 0.9, 0.1, 1); }), ErrorCode::kIndivisibleSizes);
}

TEST(SynthPlantedTest, AlignedLayoutConcentratesColors) {
  const auto p = SynthPlanted(64, 4, 4, 1.0, 0.0, 2, ColorLayout::kAligned);
  EXPECT_EQ(p.graph.ColorCounts(), (std::vector<Vertex>{16, 16, 16, 16}));
  for (const auto& cluster : p.truth.Clusters()) {
    for (Vertex v : cluster) EXPECT_EQ(p.graph.color(v), p.graph.color(cluster.front()));
  }
}

TEST(SynthPlantedTest, LocalSearchErrorOnNoisyPlantedGraphs) {
  constexpr double kMaxError = 0.15;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = SynthPlanted(200, 2, 4, 0.9, 0.1, seed);
    const auto wg = WeightedSignedGraph::FromSigned(p.graph);
    Rng rng(seed);
    EXPECT_LT(ErrorRate(p.graph, LocalSearch(wg, {}, rng)), kMaxError) << seed;
  }
}

}  // namespace
}  // namespace fair_cc
