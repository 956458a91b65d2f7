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

#ifndef KMEDIAN_IO_H_
#define KMEDIAN_IO_H_

#include <istream>
#include <string>

#include <nlohmann/json.hpp>

#include "kmedian/bounds.h"
#include "kmedian/errors.h"
#include "kmedian/gadgets.h"
#include "kmedian/hypergraph.h"
#include "kmedian/metric.h"
#include "kmedian/oracle.h"
#include "kmedian/rounding.h"

namespace kmedian {

// Insertion-ordered so that identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

inline constexpr int kJsonFormat = 1;

// Parse errors surface as InputError.
Json ParseJson(std::istream& in);
Json ParseJsonFile(const std::string& path);  // "-" reads stdin
std::string Dump(const Json& json);           // two-space indent, trailing newline

MetricInstance InstanceFromJson(const Json& json);
Json InstanceToJson(const MetricInstance& instance);

Hypergraph HypergraphFromJson(const Json& json);
Json HypergraphToJson(const Hypergraph& graph);

Json ReportToJson(const SolutionReport& report, const SolveStats* stats = nullptr);
Json OracleToJson(const OracleResult& result);
Json ViolationsToJson(const std::vector<MetricViolation>& violations);
Json ReductionSidecar(const Reduction& reduction);
Json DistributionToJson(const Distribution& mu);

Json MinMaxToJson(const MinMaxGReport& report);
Json HardnessToJson(const MaxMinHReport& report);
Json EnvelopeToJson(const EnvelopeReport& report);
Json ConstantsToJson(const AnalysisConstants& constants);

Json ErrorToJson(ErrorKind kind, const std::string& message);

}  // namespace kmedian

#endif  // KMEDIAN_IO_H_
