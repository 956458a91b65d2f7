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

#ifndef KMEDIAN_TOOLS_CLI_H_
#define KMEDIAN_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kmedian::cli {

struct RunConfig {
  std::string command;  // solve | oracle | bounds | gen | reduce | coverage
  std::string instance = "-";
  std::string output;  // empty writes to the `out` stream
  std::optional<int> k;
  double epsilon = 0.5;
  std::string p = "auto";
  int trials = 50;
  std::string mode = "full";
  std::string coreset = "identity";
  uint64_t seed = 0;
  int threads = 1;
  std::vector<int> centers;  // planted centers for solve
  int64_t guess_budget = 0;  // 0 keeps the library default
  int64_t oracle_budget = 0;

  // oracle
  bool coverage = false;
  bool greedy = false;

  // bounds
  bool verify = false;
  int resolution = 100;
  int d_max = 50;
  std::optional<double> envelope_p;

  // gen
  std::string type = "planted";
  int n = 0;
  int d = 3;
  int m = 0;

  // reduce
  int copies = 10;
  bool complete_triples = false;
  std::string sidecar;

  // coverage
  std::vector<int> vertices;
  std::vector<double> alphas;
  int draws = 20;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

// Executes one command. The JSON artifact goes to config.output or `out`;
// failures print an error object to `err` and return a nonzero code.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with CLI11 and runs it.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kmedian::cli

#endif  // KMEDIAN_TOOLS_CLI_H_
