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

#ifndef KMEDIAN_ERRORS_H_
#define KMEDIAN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kmedian {

// Coarse error classes. The command-line tool maps them onto exit codes.
enum class ErrorKind {
  kInput,       // malformed or out-of-contract input
  kBudget,      // an enumeration budget would be exceeded
  kInfeasible,  // an LP for one guess has no feasible point
  kInternal,    // an invariant the library relies on was violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& message)
      : Error(ErrorKind::kInput, message) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& message)
      : Error(ErrorKind::kBudget, message) {}
};

class InfeasibleGuess : public Error {
 public:
  explicit InfeasibleGuess(const std::string& message = "infeasible guess")
      : Error(ErrorKind::kInfeasible, message) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::kInternal, message) {}
};

const char* ErrorKindName(ErrorKind kind);

}  // namespace kmedian

#endif  // KMEDIAN_ERRORS_H_
