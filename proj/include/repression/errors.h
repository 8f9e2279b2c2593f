// Copyright 2026 The Repression Lab Authors. All rights reserved.
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

#ifndef REPRESSION_ERRORS_H_
#define REPRESSION_ERRORS_H_

#include <stdexcept>
#include <string>

namespace repression {

// Argument outside an operation's mathematical domain (probability outside
// [0,1], grid too small, q' >= q in an estimator, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters that are type-invalid (e.g. gamma outside (0,1)) or that fail
// an equilibrium assumption a solver requires.
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Root finder could not bracket or converge.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Estimator undefined on the given sample (e.g. no revealed repression).
class UndefinedEstimator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unknown configuration content.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace repression

#endif  // REPRESSION_ERRORS_H_
