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

#include "cli.h"

#include <glob.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "experiment.h"
#include "fair_cc/cc_solvers.h"
#include "fair_cc/error.h"
#include "fair_cc/fairness.h"
#include "fair_cc/ingestion.h"
#include "json.hpp"

namespace fair_cc {
namespace {

using Json = nlohmann::ordered_json;

bool IsInfeasible(ErrorCode code) {
  return code == ErrorCode::kInfeasible || code == ErrorCode::kTooLarge ||
         code == ErrorCode::kUnequalColorCounts || code == ErrorCode::kSingleColor;
}

int ExitCodeOf(const Error& e) {
  return IsInfeasible(e.code()) ? kExitInfeasible : kExitUsage;
}

[[noreturn]] void Usage(const std::string& msg) {
  throw Error(ErrorCode::kInvalidArgument, msg);
}

// Shortest round-trip decimal.
std::string Num(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string Fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + path);
  return out;
}

double PositiveFraction(const SignedGraph& g) {
  return g.num_edges() == 0 ? 0.0
                            : static_cast<double>(g.num_positive_edges()) /
                                  static_cast<double>(g.num_edges());
}

// ---- build ----

struct BuildArgs {
  std::string embeddings, colors, edges, out;
  std::optional<double> theta;
};

int CmdBuild(const BuildArgs& a, std::ostream& out) {
  const bool from_embeddings = !a.embeddings.empty();
  const bool from_edges = !a.colors.empty() || !a.edges.empty();
  if (from_embeddings == from_edges) {
    Usage("give either --embeddings with --theta, or --colors with --edges");
  }
  SignedGraph g;
  if (from_embeddings) {
    if (!a.theta) Usage("--embeddings needs --theta");
    g = ThresholdGraph(LoadEmbeddings(a.embeddings), *a.theta);
  } else {
    if (a.colors.empty() || a.edges.empty()) Usage("--colors and --edges go together");
    if (a.theta) Usage("--theta applies to --embeddings only");
    g = LoadEdgeGraph(a.colors, a.edges).graph;
  }
  SaveGraph(g, a.out);
  out << "n=" << g.num_vertices() << " C=" << g.num_colors()
      << " positive_fraction=" << Num(PositiveFraction(g)) << "\n";
  return kExitOk;
}

// ---- synth ----

struct SynthArgs {
  Vertex n = 200;
  ColorId colors = 2;
  Vertex clusters = 4;
  double p_in = 0.9, p_out = 0.1;
  uint64_t seed = 0;
  std::string layout = "balanced";
  size_t dim = 10;
  std::string out, truth;
};

int CmdSynthPlanted(const SynthArgs& a, std::ostream& out) {
  const ColorLayout layout = a.layout == "aligned" ? ColorLayout::kAligned : ColorLayout::kBalanced;
  const auto planted = SynthPlanted(a.n, a.colors, a.clusters, a.p_in, a.p_out, a.seed, layout);
  SaveGraph(planted.graph, a.out);
  if (!a.truth.empty()) {
    auto f = OpenOut(a.truth);
    WriteClustering(planted.truth, f);
  }
  out << "n=" << planted.graph.num_vertices() << " C=" << planted.graph.num_colors()
      << " positive_fraction=" << Num(PositiveFraction(planted.graph)) << "\n";
  return kExitOk;
}

int CmdSynthEmbeddings(const SynthArgs& a, std::ostream& out) {
  const auto table = SynthEmbeddings(a.n, a.colors, a.dim, a.seed);
  auto f = OpenOut(a.out);
  WriteEmbeddings(table, f);
  out << "rows=" << table.size() << " dim=" << table.dim << "\n";
  return kExitOk;
}

// ---- run ----

struct RunArgs {
  std::string graph, algo, alpha, dataset;
  std::optional<double> theta;
  uint64_t seed = 0;
  int repeats = 10;
  int pivot_repeats = 10;
  bool json = false;
  bool no_timing = false;
  bool check_bounds = false;
};

RunSettings SettingsFor(Algorithm algo, const std::string& alpha_flag, uint64_t seed,
                        int pivot_repeats) {
  RunSettings s;
  s.algo = algo;
  s.seed = seed;
  s.pivot_repeats = pivot_repeats;
  if (!alpha_flag.empty()) {
    const auto mode = ParseAlphaMode(alpha_flag);
    if (!mode) Usage("--alpha must be half or equal");
    s.alpha = *mode;
  } else {
    s.alpha = RequiredAlpha(algo).value_or(AlphaMode::kHalf);
  }
  return s;
}

Json ReportJson(const std::string& dataset, const RunSettings& s,
                const std::optional<double>& theta, const SignedGraph& g,
                const RunMeasures& m, bool timing) {
  Json j;
  j["dataset"] = dataset;
  j["algorithm"] = AlgorithmName(s.algo);
  j["alpha"] = AlphaModeName(s.alpha);
  j["theta"] = theta ? Json(*theta) : Json(nullptr);
  j["C"] = g.num_colors();
  j["error"] = m.error;
  j["imbalance_half"] = m.imbalance_half;
  j["imbalance_equal"] = m.imbalance_equal;
  j["n_clusters"] = m.n_clusters;
  j["seed"] = s.seed;
  j["wall_time_ms"] = timing ? Json(m.wall_time_ms) : Json(nullptr);
  return j;
}

RunMeasures Mean(const std::vector<RunMeasures>& runs) {
  RunMeasures mean;
  for (const auto& r : runs) {
    mean.error += r.error;
    mean.imbalance_half += r.imbalance_half;
    mean.imbalance_equal += r.imbalance_equal;
    mean.wall_time_ms += r.wall_time_ms;
  }
  const auto k = static_cast<double>(runs.size());
  mean.error /= k;
  mean.imbalance_half /= k;
  mean.imbalance_equal /= k;
  mean.wall_time_ms /= k;
  return mean;
}

double MeanClusters(const std::vector<RunMeasures>& runs) {
  double sum = 0;
  for (const auto& r : runs) sum += static_cast<double>(r.n_clusters);
  return sum / static_cast<double>(runs.size());
}

int CmdRun(const RunArgs& a, std::ostream& out) {
  const auto algo = ParseAlgorithm(a.algo);
  if (!algo) Usage("unknown --algo " + a.algo);
  if (a.repeats < 1) Usage("--repeats must be >= 1");
  const SignedGraph g = LoadGraph(a.graph);
  const std::string dataset =
      a.dataset.empty() ? std::filesystem::path(a.graph).stem().string() : a.dataset;

  std::vector<RunSettings> settings;
  std::vector<RunMeasures> runs;
  for (int i = 0; i < a.repeats; ++i) {
    RunSettings s = SettingsFor(*algo, a.alpha, a.seed + static_cast<uint64_t>(i),
                                a.pivot_repeats);
    s.check_bounds = a.check_bounds;
    runs.push_back(TimedRun(g, s));
    settings.push_back(s);
  }
  const RunMeasures mean = Mean(runs);
  const bool timing = !a.no_timing;

  if (a.json) {
    Json report;
    report["runs"] = Json::array();
    for (size_t i = 0; i < runs.size(); ++i) {
      report["runs"].push_back(ReportJson(dataset, settings[i], a.theta, g, runs[i], timing));
    }
    Json m = ReportJson(dataset, settings.front(), a.theta, g, mean, timing);
    m["n_clusters"] = MeanClusters(runs);
    m["repeats"] = a.repeats;
    report["mean"] = std::move(m);
    out << report.dump(2) << "\n";
    return kExitOk;
  }

  char line[160];
  const auto row = [&](const std::string& label, const RunMeasures& m, const std::string& clusters) {
    std::snprintf(line, sizeof line, "%-8s %9s %15s %16s %11s %12s\n", label.c_str(),
                  Fixed(m.error, 6).c_str(), Fixed(m.imbalance_half, 6).c_str(),
                  Fixed(m.imbalance_equal, 6).c_str(), clusters.c_str(),
                  timing ? Fixed(m.wall_time_ms, 2).c_str() : "-");
    out << line;
  };
  out << "dataset=" << dataset << " algorithm=" << AlgorithmName(*algo)
      << " alpha=" << AlphaModeName(settings.front().alpha) << " C=" << g.num_colors()
      << " n=" << g.num_vertices() << "\n";
  std::snprintf(line, sizeof line, "%-8s %9s %15s %16s %11s %12s\n", "seed", "error",
                "imbalance_half", "imbalance_equal", "n_clusters", "wall_time_ms");
  out << line;
  for (size_t i = 0; i < runs.size(); ++i) {
    row(std::to_string(settings[i].seed), runs[i], std::to_string(runs[i].n_clusters));
  }
  row("mean", mean, Fixed(MeanClusters(runs), 1));
  return kExitOk;
}

// ---- bench ----

struct BenchArgs {
  std::vector<std::string> graphs;
  std::string algos = "local,pivot,single,rand,match-local";
  std::string alpha;
  std::string out;
  uint64_t seed = 0;
  int repeats = 10;
  int pivot_repeats = 10;
};

std::vector<std::string> ExpandGlobs(const std::vector<std::string>& patterns) {
  std::vector<std::string> paths;
  for (const auto& pattern : patterns) {
    glob_t result{};
    if (glob(pattern.c_str(), GLOB_NOCHECK, nullptr, &result) == 0) {
      std::vector<std::string> matched(result.gl_pathv, result.gl_pathv + result.gl_pathc);
      std::sort(matched.begin(), matched.end());
      paths.insert(paths.end(), matched.begin(), matched.end());
    }
    globfree(&result);
  }
  return paths;
}

std::vector<Algorithm> ParseAlgorithmList(const std::string& list) {
  std::vector<Algorithm> algos;
  size_t start = 0;
  while (start <= list.size()) {
    size_t comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    const std::string name = list.substr(start, comma - start);
    const auto algo = ParseAlgorithm(name);
    if (!algo) Usage("unknown algorithm '" + name + "' in --algos");
    algos.push_back(*algo);
    start = comma + 1;
  }
  return algos;
}

struct BenchCell {
  std::string graph;
  Algorithm algo;
  Vertex n;
  ColorId colors;
  RunMeasures mean;
  double n_clusters;
};

int CmdBench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  if (a.repeats < 1) Usage("--repeats must be >= 1");
  const auto algos = ParseAlgorithmList(a.algos);
  const auto paths = ExpandGlobs(a.graphs);
  if (paths.empty()) Usage("--graphs matched nothing");

  std::vector<BenchCell> cells;
  int failure_code = kExitOk;
  for (const auto& path : paths) {
    SignedGraph g;
    try {
      g = LoadGraph(path);
    } catch (const Error& e) {
      err << "warning: skipping " << path << ": " << e.what() << "\n";
      failure_code = std::max(failure_code, ExitCodeOf(e));
      continue;
    }
    for (Algorithm algo : algos) {
      try {
        std::vector<RunMeasures> runs;
        for (int i = 0; i < a.repeats; ++i) {
          runs.push_back(TimedRun(
              g, SettingsFor(algo, a.alpha, a.seed + static_cast<uint64_t>(i), a.pivot_repeats)));
        }
        cells.push_back({path, algo, g.num_vertices(), g.num_colors(), Mean(runs),
                         MeanClusters(runs)});
      } catch (const Error& e) {
        err << "warning: skipping " << path << " / " << AlgorithmName(algo) << ": " << e.what()
            << "\n";
        failure_code = std::max(failure_code, ExitCodeOf(e));
      }
    }
  }
  if (cells.empty()) return failure_code == kExitOk ? kExitUsage : failure_code;

  std::map<std::string, double> local_error;
  for (const auto& c : cells) {
    if (c.algo == Algorithm::kLocal) local_error[c.graph] = c.mean.error;
  }
  std::ofstream file;
  if (!a.out.empty()) file = OpenOut(a.out);
  std::ostream& csv = a.out.empty() ? out : file;
  csv << "graph,algorithm,n,C,repeats,error,imbalance_half,imbalance_equal,n_clusters,"
         "wall_time_ms,error_ratio_local\n";
  for (const auto& c : cells) {
    std::string ratio;
    if (auto it = local_error.find(c.graph); it != local_error.end() && it->second > 0) {
      ratio = Num(c.mean.error / it->second);
    }
    csv << c.graph << ',' << AlgorithmName(c.algo) << ',' << c.n << ',' << c.colors << ','
        << a.repeats << ',' << Num(c.mean.error) << ',' << Num(c.mean.imbalance_half) << ','
        << Num(c.mean.imbalance_equal) << ',' << Num(c.n_clusters) << ','
        << Fixed(c.mean.wall_time_ms, 3) << ',' << ratio << '\n';
  }
  return kExitOk;
}

// ---- eval ----

struct EvalArgs {
  std::string graph, clustering;
  std::string alpha = "both";
  bool json = false;
};

int CmdEval(const EvalArgs& a, std::ostream& out) {
  if (a.alpha != "both" && !ParseAlphaMode(a.alpha)) Usage("--alpha must be half, equal or both");
  const SignedGraph g = LoadGraph(a.graph);
  const Clustering c = LoadClustering(a.clustering, g.num_vertices());
  const RunMeasures m = Measure(g, c);
  Json j;
  j["C"] = g.num_colors();
  j["cost"] = CcCost(g, c);
  j["error"] = m.error;
  if (a.alpha != "equal") j["imbalance_half"] = m.imbalance_half;
  if (a.alpha != "half") j["imbalance_equal"] = m.imbalance_equal;
  j["n_clusters"] = m.n_clusters;
  if (a.json) {
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items()) out << key << "=" << value.dump() << "\n";
  }
  return kExitOk;
}

// ---- oracle ----

struct OracleArgs {
  std::string graph, alpha, out;
  bool json = false;
};

constexpr Vertex kOracleLimit = 12;

int CmdOracle(const OracleArgs& a, std::ostream& out) {
  std::optional<FairnessConstraint> constraint;
  if (!a.alpha.empty()) {
    const auto mode = ParseAlphaMode(a.alpha);
    if (!mode) Usage("--alpha must be half or equal");
    constraint = *mode == AlphaMode::kHalf ? FairnessConstraint::Half() : FairnessConstraint::Equal();
  }
  const SignedGraph g = LoadGraph(a.graph);
  const BruteForceResult r = BruteForceCc(g, constraint, kOracleLimit);
  if (!a.out.empty()) {
    auto f = OpenOut(a.out);
    WriteClustering(r.clustering, f);
  }
  Json j;
  j["alpha"] = a.alpha.empty() ? Json(nullptr) : Json(a.alpha);
  j["cost"] = r.cost;
  j["error"] = g.num_vertices() >= 2 ? Json(ErrorRate(g, r.clustering)) : Json(nullptr);
  j["n_clusters"] = r.clustering.num_clusters();
  j["assignment"] = std::vector<ClusterId>(r.clustering.assignment().begin(),
                                           r.clustering.assignment().end());
  if (a.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "cost=" << r.cost << " n_clusters=" << r.clustering.num_clusters() << "\n";
    WriteClustering(r.clustering, out);
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair correlation clustering via fairlet decomposition.", "fair_cc"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Build a signed graph file from raw inputs");
  build->add_option("--embeddings", build_args.embeddings, "CSV id,color,x0,...");
  build->add_option("--theta", build_args.theta, "Fraction of top dot-product pairs made positive");
  build->add_option("--colors", build_args.colors, "TSV id<TAB>color_label");
  build->add_option("--edges", build_args.edges, "TSV id<TAB>id of positive pairs");
  build->add_option("--out", build_args.out, "Output graph file")->required();

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Generate synthetic inputs");
  synth->require_subcommand(1);
  auto* planted = synth->add_subcommand("planted", "Planted-cluster signed graph");
  planted->add_option("--n", synth_args.n, "Vertex count");
  planted->add_option("--colors", synth_args.colors, "Color count");
  planted->add_option("--clusters", synth_args.clusters, "Planted cluster count");
  planted->add_option("--p-in", synth_args.p_in, "Positive probability inside a cluster");
  planted->add_option("--p-out", synth_args.p_out, "Positive probability across clusters");
  planted->add_option("--seed", synth_args.seed);
  planted->add_option("--layout", synth_args.layout, "balanced or aligned")
      ->check(CLI::IsMember({"balanced", "aligned"}));
  planted->add_option("--out", synth_args.out, "Output graph file")->required();
  planted->add_option("--truth", synth_args.truth, "Output ground-truth clustering file");
  auto* embeddings = synth->add_subcommand("embeddings", "Gaussian embedding table");
  embeddings->add_option("--n", synth_args.n, "Row count");
  embeddings->add_option("--colors", synth_args.colors, "Color count");
  embeddings->add_option("--dim", synth_args.dim, "Dimension");
  embeddings->add_option("--seed", synth_args.seed);
  embeddings->add_option("--out", synth_args.out, "Output CSV")->required();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run one algorithm for several seeds");
  run->add_option("--graph", run_args.graph, "Graph file")->required();
  run->add_option("--algo", run_args.algo,
                  "local, pivot, single, rand, match-local or repmatch-local")
      ->required();
  run->add_option("--alpha", run_args.alpha, "half or equal");
  run->add_option("--seed", run_args.seed, "Seed of the first run; run i uses seed + i");
  run->add_option("--repeats", run_args.repeats, "Number of runs");
  run->add_option("--pivot-repeats", run_args.pivot_repeats, "Pivot runs per best-of");
  run->add_option("--dataset", run_args.dataset, "Dataset name in reports");
  run->add_option("--theta", run_args.theta, "Threshold recorded in reports");
  run->add_flag("--json", run_args.json, "Print a JSON report");
  run->add_flag("--no-timing", run_args.no_timing, "Report wall_time_ms as null");
  run->add_flag("--check-bounds", run_args.check_bounds, "Assert the pipeline cost bound");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Mean measures over graphs and algorithms");
  bench->add_option("--graphs", bench_args.graphs, "Graph files or glob patterns")->required();
  bench->add_option("--algos", bench_args.algos, "Comma-separated algorithm list");
  bench->add_option("--alpha", bench_args.alpha, "Alpha for rand: half or equal");
  bench->add_option("--repeats", bench_args.repeats, "Runs per cell");
  bench->add_option("--pivot-repeats", bench_args.pivot_repeats, "Pivot runs per best-of");
  bench->add_option("--seed", bench_args.seed, "Seed of the first run");
  bench->add_option("--out", bench_args.out, "CSV path (default stdout)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Score a clustering file");
  eval->add_option("--graph", eval_args.graph, "Graph file")->required();
  eval->add_option("--clustering", eval_args.clustering, "TSV vertex<TAB>cluster")->required();
  eval->add_option("--alpha", eval_args.alpha, "half, equal or both");
  eval->add_flag("--json", eval_args.json, "Print JSON");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration (n <= 12)");
  oracle->add_option("--graph", oracle_args.graph, "Graph file")->required();
  oracle->add_option("--alpha", oracle_args.alpha, "Restrict to fair clusterings: half or equal");
  oracle->add_option("--out", oracle_args.out, "Write the optimal clustering here");
  oracle->add_flag("--json", oracle_args.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return CmdBuild(build_args, out);
    if (*planted) return CmdSynthPlanted(synth_args, out);
    if (*embeddings) return CmdSynthEmbeddings(synth_args, out);
    if (*run) return CmdRun(run_args, out);
    if (*bench) return CmdBench(bench_args, out, err);
    if (*eval) return CmdEval(eval_args, out);
    if (*oracle) return CmdOracle(oracle_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeOf(e);
  }
  return kExitUsage;
}

}  // namespace fair_cc
