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

#include "kmedian/io.h"

#include <fstream>
#include <iostream>

#include "kmedian/errors.h"

namespace kmedian {
namespace {

template <typename T>
T Field(const Json& json, const char* key) {
  try {
    return json.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T OptionalField(const Json& json, const char* key, T fallback) {
  if (!json.contains(key) || json.at(key).is_null()) return fallback;
  return Field<T>(json, key);
}

void RequireObject(const Json& json, const char* what) {
  if (!json.is_object()) throw InputError(std::string(what) + " must be a JSON object");
}

Json Witness(const EnvelopeWitness& w) {
  Json j;
  j["check"] = w.check;
  j["d_a"] = w.d_a;
  j["mu_a"] = static_cast<double>(w.mu_a);
  j["mu_b"] = static_cast<double>(w.mu_b);
  j["mu_c"] = static_cast<double>(w.mu_c);
  j["value"] = static_cast<double>(w.value);
  j["limit"] = static_cast<double>(w.limit);
  return j;
}

}  // namespace

Json ParseJson(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json ParseJsonFile(const std::string& path) {
  if (path == "-") return ParseJson(std::cin);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  return ParseJson(file);
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

MetricInstance InstanceFromJson(const Json& json) {
  RequireObject(json, "instance");
  const auto metric = OptionalField<std::string>(json, "metric", "matrix");
  const auto weights = OptionalField<std::vector<double>>(json, "weights", {});
  const auto labels = OptionalField<std::vector<std::string>>(json, "labels", {});
  MetricInstance instance;
  if (metric == "matrix") {
    instance = MetricInstance::FromMatrix(Field<std::vector<std::vector<double>>>(json, "matrix"),
                                          weights, labels);
  } else if (metric == "euclidean") {
    instance = MetricInstance::FromPoints(Field<std::vector<std::vector<double>>>(json, "points"),
                                          weights, labels);
  } else {
    throw InputError("unknown metric \"" + metric + "\"");
  }
  instance.set_semi_metric(OptionalField<bool>(json, "semi_metric", false));
  return instance;
}

Json InstanceToJson(const MetricInstance& instance) {
  Json j;
  j["format"] = kJsonFormat;
  const int n = instance.size();
  if (instance.coordinates()) {
    j["metric"] = "euclidean";
    j["points"] = *instance.coordinates();
  } else {
    j["metric"] = "matrix";
    Json rows = Json::array();
    for (int u = 0; u < n; ++u) {
      const auto row = instance.row(u);
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    j["matrix"] = std::move(rows);
  }
  j["weights"] = instance.weights();
  if (!instance.labels().empty()) j["labels"] = instance.labels();
  if (instance.semi_metric()) j["semi_metric"] = true;
  return j;
}

Hypergraph HypergraphFromJson(const Json& json) {
  RequireObject(json, "hypergraph");
  Hypergraph graph;
  graph.n = Field<int>(json, "n");
  graph.d = Field<int>(json, "d");
  graph.edges = Field<std::vector<std::vector<int>>>(json, "edges");
  graph.weights = OptionalField<std::vector<double>>(json, "weights", {});
  graph.tuple_edges = OptionalField<bool>(json, "tuple_edges", false);
  graph.Validate();
  return graph;
}

Json HypergraphToJson(const Hypergraph& graph) {
  Json j;
  j["format"] = kJsonFormat;
  j["n"] = graph.n;
  j["d"] = graph.d;
  j["edges"] = graph.edges;
  if (!graph.weights.empty()) j["weights"] = graph.weights;
  if (graph.tuple_edges) j["tuple_edges"] = true;
  return j;
}

Json ReportToJson(const SolutionReport& report, const SolveStats* stats) {
  Json j;
  j["format"] = kJsonFormat;
  j["centers"] = report.centers;
  j["cost"] = report.cost;
  j["lp_objective"] = report.lp_objective ? Json(*report.lp_objective) : Json(nullptr);
  j["trials_used"] = report.trials_used;
  j["seed"] = report.seed;
  if (stats != nullptr) {
    Json s;
    s["guesses_enumerated"] = stats->guesses_enumerated;
    s["lps_solved"] = stats->lps_solved;
    s["infeasible_guesses"] = stats->infeasible_guesses;
    s["p"] = stats->p;
    s["coreset_size"] = stats->coreset_size;
    s["rescale_factor"] = stats->rescale_factor;
    j["stats"] = std::move(s);
  }
  return j;
}

Json OracleToJson(const OracleResult& result) {
  Json j;
  j["format"] = kJsonFormat;
  j["best_set"] = result.best_set;
  j["best_value"] = result.best_value;
  j["enumerated"] = result.enumerated;
  return j;
}

Json ViolationsToJson(const std::vector<MetricViolation>& violations) {
  Json list = Json::array();
  for (const MetricViolation& v : violations) {
    Json j;
    j["kind"] = ViolationKindName(v.kind);
    j["u"] = v.u;
    j["v"] = v.v;
    j["w"] = v.w;
    j["excess"] = v.excess;
    list.push_back(std::move(j));
  }
  return list;
}

Json ReductionSidecar(const Reduction& reduction) {
  Json j;
  j["k"] = reduction.k;
  j["vertex_side"] = reduction.vertex_side;
  j["edge_side"] = reduction.edge_side;
  return j;
}

Json DistributionToJson(const Distribution& mu) {
  Json j;
  j["format"] = kJsonFormat;
  j["d"] = mu.d;
  j["support"] = mu.support;
  j["probabilities"] = mu.probabilities;
  return j;
}

Json MinMaxToJson(const MinMaxGReport& r) {
  Json j;
  j["p_closed_form"] = static_cast<double>(r.p_closed_form);
  j["p_minimizer"] = static_cast<double>(r.p_minimizer);
  j["min_max"] = static_cast<double>(r.min_max);
  j["max_min"] = static_cast<double>(r.max_min);
  j["gap"] = static_cast<double>(r.gap);
  j["d_star"] = r.d_star;
  j["d_max"] = r.d_max;
  j["alpha"] = static_cast<double>(r.alpha);
  j["tail_bound"] = static_cast<double>(r.tail_bound);
  j["limit"] = static_cast<double>(r.limit);
  return j;
}

Json HardnessToJson(const MaxMinHReport& r) {
  Json j;
  j["value"] = static_cast<double>(r.value);
  j["d"] = r.d;
  j["p"] = static_cast<double>(r.p);
  j["d_range"] = {r.d_lo, r.d_lo + static_cast<int>(r.inner_min.size()) - 1};
  return j;
}

Json EnvelopeToJson(const EnvelopeReport& r) {
  Json j;
  j["p"] = static_cast<double>(r.p);
  j["resolution"] = r.resolution;
  j["d_max"] = r.d_max;
  j["alpha"] = static_cast<double>(r.alpha);
  j["grid_points"] = r.grid_points;
  j["violations"] = r.violations;
  j["max_psi"] = static_cast<double>(r.max_psi);
  j["max_violation"] = static_cast<double>(std::max<Real>(0, r.max_psi - r.alpha));
  j["argmax"] = Witness(r.argmax);
  j["convexity_violations"] = r.convexity_violations;
  j["monotonicity_violations"] = r.monotonicity_violations;
  j["face_d1_max"] = static_cast<double>(r.face_d1_max);
  j["face_d2_max"] = static_cast<double>(r.face_d2_max);
  j["corner_c_max"] = static_cast<double>(r.corner_c_max);
  j["corner_d3"] = static_cast<double>(r.corner_d3);
  Json witnesses = Json::array();
  for (const EnvelopeWitness& w : r.witnesses) witnesses.push_back(Witness(w));
  j["witnesses"] = std::move(witnesses);
  j["ok"] = r.ok();
  return j;
}

Json ConstantsToJson(const AnalysisConstants& c) {
  Json j;
  j["p_star"] = static_cast<double>(c.p_star);
  j["d_star"] = c.d_star;
  j["alpha_alg"] = static_cast<double>(c.alpha_alg);
  j["hardness_value"] = static_cast<double>(c.hardness_value);
  j["hardness_d"] = c.hardness_d;
  j["hardness_p"] = static_cast<double>(c.hardness_p);
  return j;
}

Json ErrorToJson(ErrorKind kind, const std::string& message) {
  Json j;
  j["format"] = kJsonFormat;
  j["error"] = {{"kind", ErrorKindName(kind)}, {"message", message}};
  return j;
}

}  // namespace kmedian
