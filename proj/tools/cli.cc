// Copyright 2026 The kmedian-fpt Authors
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

#include "tools/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <thread>

#include <CLI11.hpp>

#include "kmedian/bounds.h"
#include "kmedian/errors.h"
#include "kmedian/gadgets.h"
#include "kmedian/io.h"
#include "kmedian/oracle.h"
#include "kmedian/rounding.h"

namespace kmedian::cli {
namespace {

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return kExitInput;
    case ErrorKind::kBudget:
      return kExitBudget;
    default:
      return kExitInternal;
  }
}

int RequireK(const RunConfig& config) {
  if (!config.k) throw InputError(config.command + " requires -k");
  if (*config.k < 1) throw InputError("k must be at least 1");
  return *config.k;
}

void WriteFile(const std::string& path, const Json& json) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << Dump(json);
}

Json Solve(const RunConfig& config) {
  const MetricInstance instance = InstanceFromJson(ParseJsonFile(config.instance));
  SolveOptions options;
  options.k = RequireK(config);
  options.epsilon = config.epsilon;
  if (config.p != "auto") {
    try {
      size_t used = 0;
      options.p = std::stod(config.p, &used);
      if (used != config.p.size()) throw std::invalid_argument(config.p);
    } catch (const std::exception&) {
      throw InputError("--p must be a number in [0, 1] or \"auto\"");
    }
  }
  options.trials = config.trials;
  if (config.mode == "full") {
    options.mode = SolveMode::kFull;
  } else if (config.mode == "planted") {
    options.mode = SolveMode::kPlanted;
  } else {
    throw InputError("--mode must be full or planted");
  }
  if (config.coreset == "identity") {
    options.coreset = CoresetMode::kIdentity;
  } else if (config.coreset == "sampling") {
    options.coreset = CoresetMode::kSampling;
  } else {
    throw InputError("--coreset must be identity or sampling");
  }
  options.seed = config.seed;
  options.planted_centers = config.centers;
  options.threads = config.threads;
  if (config.guess_budget > 0) options.guess_budget = config.guess_budget;
  if (config.oracle_budget > 0) options.oracle_budget = config.oracle_budget;
  SolveStats stats;
  const SolutionReport report = kmedian::Solve(instance, options, &stats);
  return ReportToJson(report, &stats);
}

Json Oracle(const RunConfig& config) {
  const int k = RequireK(config);
  const int64_t budget = config.oracle_budget > 0 ? config.oracle_budget : kDefaultOracleBudget;
  const Json input = ParseJsonFile(config.instance);
  if (config.coverage) {
    const Hypergraph graph = HypergraphFromJson(input);
    const OracleResult result =
        config.greedy ? GreedyCoverage(graph, k) : BruteForceCoverage(graph, k, budget);
    Json j = OracleToJson(result);
    j["total_weight"] = graph.total_weight();
    return j;
  }
  const MetricInstance instance = InstanceFromJson(input);
  return OracleToJson(BruteForceKMedian(instance, k, budget));
}

Json Bounds(const RunConfig& config) {
  Json j;
  j["format"] = kJsonFormat;
  j["constants"] = ConstantsToJson(ComputeConstants());
  j["minmax"] = MinMaxToJson(MinMaxG(200));
  j["hardness"] = HardnessToJson(MaxMinH(3, 200));
  if (config.verify) {
    std::optional<Real> p;
    if (config.envelope_p) p = static_cast<Real>(*config.envelope_p);
    j["envelope"] = EnvelopeToJson(VerifyEnvelope(config.resolution, p, config.d_max,
                                                  config.threads));
  }
  return j;
}

Json Gen(const RunConfig& config) {
  if (config.type == "planted") {
    const PlantedHypergraph planted =
        PlantedCoverHypergraph(config.n, config.d, config.m, config.seed);
    Json j = HypergraphToJson(planted.graph);
    j["planted_cover"] = planted.cover;
    return j;
  }
  if (config.type == "random") {
    return HypergraphToJson(RandomHypergraph(config.n, config.d, config.m, config.seed));
  }
  throw InputError("--type must be planted or random");
}

Json Reduce(const RunConfig& config) {
  const Hypergraph graph = HypergraphFromJson(ParseJsonFile(config.instance));
  ReductionOptions options;
  options.copies = config.copies;
  options.complete_triples = config.complete_triples;
  const Reduction reduction = IncidenceReduction(graph, options);
  Json j = InstanceToJson(reduction.instance);
  j["reduction"] = ReductionSidecar(reduction);
  if (!config.sidecar.empty()) WriteFile(config.sidecar, ReductionSidecar(reduction));
  return j;
}

Json Coverage(const RunConfig& config) {
  const Hypergraph graph = HypergraphFromJson(ParseJsonFile(config.instance));
  Json j;
  j["format"] = kJsonFormat;
  j["total_weight"] = graph.total_weight();
  if (!config.vertices.empty()) {
    for (int v : config.vertices) {
      if (v < 0 || v >= graph.n) throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    const double covered = CoveredWeight(graph, config.vertices);
    j["vertices"] = config.vertices;
    j["covered_weight"] = covered;
    j["fraction"] = graph.total_weight() > 0 ? covered / graph.total_weight() : 0.0;
  }
  if (!config.alphas.empty()) {
    Json random = Json::array();
    for (double alpha : config.alphas) {
      const std::vector<double> fractions =
          RandomSubsetCoverage(graph, alpha, config.draws, config.seed);
      Json r;
      r["alpha"] = alpha;
      r["draws"] = config.draws;
      r["mean_fraction"] =
          fractions.empty() ? 0.0
                            : std::accumulate(fractions.begin(), fractions.end(), 0.0) /
                                  static_cast<double>(fractions.size());
      r["random_hypergraph_expectation"] = 1 - std::pow(1 - alpha, graph.d);
      r["fractions"] = fractions;
      random.push_back(std::move(r));
    }
    j["random_sets"] = std::move(random);
  }
  if (config.vertices.empty() && config.alphas.empty()) {
    throw InputError("coverage needs --vertices or --alpha");
  }
  return j;
}

}  // namespace

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Json result;
    if (config.command == "solve") {
      result = Solve(config);
    } else if (config.command == "oracle") {
      result = Oracle(config);
    } else if (config.command == "bounds") {
      result = Bounds(config);
    } else if (config.command == "gen") {
      result = Gen(config);
    } else if (config.command == "reduce") {
      result = Reduce(config);
    } else if (config.command == "coverage") {
      result = Coverage(config);
    } else {
      throw InputError("unknown command \"" + config.command + "\"");
    }
    if (config.output.empty()) {
      out << Dump(result);
    } else {
      WriteFile(config.output, result);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << Dump(ErrorToJson(e.kind(), e.what()));
    return ExitCode(e.kind());
  } catch (const std::exception& e) {
    err << Dump(ErrorToJson(ErrorKind::kInternal, e.what()));
    return kExitInternal;
  }
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  CLI::App app{"Parameterized k-median approximation toolkit"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--instance,-i", config.instance, "Input JSON file, - for stdin");
    sub->add_option("--output,-o", config.output, "Output JSON file (default stdout)");
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "Run the approximation pipeline");
  common(solve);
  solve->add_option("-k", config.k, "Number of centers")->required();
  solve->add_option("--epsilon,-e", config.epsilon, "Accuracy parameter")
      ->check(CLI::PositiveNumber);
  solve->add_option("--p", config.p, "Leader probability or auto");
  solve->add_option("--trials", config.trials, "Rounding repetitions per guess")
      ->check(CLI::PositiveNumber);
  solve->add_option("--mode", config.mode, "full or planted");
  solve->add_option("--coreset", config.coreset, "identity or sampling");
  solve->add_option("--centers", config.centers, "Planted centers (point indices)");
  solve->add_option("--guess-budget", config.guess_budget, "Maximum number of guesses");
  solve->add_option("--oracle-budget", config.oracle_budget, "Maximum oracle subsets");

  CLI::App* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration");
  common(oracle);
  oracle->add_option("-k", config.k, "Subset size")->required();
  oracle->add_flag("--coverage", config.coverage, "Maximum k-coverage on a hypergraph");
  oracle->add_flag("--greedy", config.greedy, "Greedy coverage instead of enumeration");
  oracle->add_option("--oracle-budget", config.oracle_budget, "Maximum subsets");

  CLI::App* bounds = app.add_subcommand("bounds", "Analysis constants and envelope checks");
  common(bounds);
  bounds->add_flag("--verify", config.verify, "Run the envelope grid verification");
  bounds->add_option("--resolution", config.resolution, "Grid steps per unit of mu")
      ->check(CLI::Range(100, 10000));
  bounds->add_option("--d-max", config.d_max, "Largest d_A on the grid")
      ->check(CLI::PositiveNumber);
  bounds->add_option("--p", config.envelope_p, "Override p for the grid check")
      ->check(CLI::Range(0.0, 1.0));

  CLI::App* gen = app.add_subcommand("gen", "Generate a hypergraph");
  common(gen);
  gen->add_option("--type", config.type, "planted or random");
  gen->add_option("-n", config.n, "Vertices")->required();
  gen->add_option("-d", config.d, "Edge size");
  gen->add_option("-m", config.m, "Edges")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "Hypergraph to k-median incidence instance");
  common(reduce);
  reduce->add_option("--copies,-M", config.copies, "Copies per hyperedge")
      ->check(CLI::PositiveNumber);
  reduce->add_flag("--complete-triples", config.complete_triples, "Add every absent d-subset");
  reduce->add_option("--sidecar", config.sidecar, "Also write the reduction sidecar here");

  CLI::App* coverage = app.add_subcommand("coverage", "Coverage of given or random vertex sets");
  common(coverage);
  coverage->add_option("--vertices", config.vertices, "Vertex set");
  coverage->add_option("--alpha", config.alphas, "Random set fractions")
      ->check(CLI::Range(0.0, 1.0));
  coverage->add_option("--draws", config.draws, "Random sets per alpha")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << Dump(ErrorToJson(ErrorKind::kInput, e.what()));
    return kExitInput;
  }
  config.command = app.get_subcommands().front()->get_name();
  return Run(config, out, err);
}

}  // namespace kmedian::cli
