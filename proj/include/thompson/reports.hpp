// Copyright 2026 The thompson-density Authors
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


// Command-level runs that reproduce the tables and claims, as plain data
// that the C API and the command-line tool render.

#ifndef THOMPSON_REPORTS_HPP_
#define THOMPSON_REPORTS_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thompson::reports {

inline constexpr const char* kVersion = "1.0.0";

// Values double as process exit codes.
enum class Status {
  ok = 0,
  not_certified = 2,
  invalid_config = 3,
  invariant_violation = 4,
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  // echoed in meta
  std::vector<Table> tables;  // the first one is the primary table
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::string> provenance;
  Status status = Status::ok;
  std::string message;
};

enum class RunMode { enumerate, dp, both };

struct RunConfig {
  std::string command;
  std::optional<std::size_t> n;
  std::optional<std::size_t> nmax;
  std::optional<unsigned> k;
  std::optional<unsigned> kmax;
  std::string genset = "standard";
  RunMode mode = RunMode::dp;
  double tol = 1e-30;
  std::size_t truncation = 512;
  double cap = 1e8;
  unsigned threads = 1;
  int digits = 20;
  unsigned mn = 3;                  // group-verify: m, n range
  std::vector<std::string> checks;  // group-verify: extra "lhs = rhs"
  bool outer = false;               // density: exact outer boundary
  bool perturb = false;             // embed-verify: negative control
  bool list = false;                // embed-verify: list the embedding
};

const std::vector<std::string>& commands();

// Throws Error(invalid_argument) naming the offending option.
void validate(const RunConfig& config);

// Validates, runs and never throws for domain failures: those become the
// report status and message.
Report run(const RunConfig& config);

std::string render_csv(const Report& report);
std::string render_json(const Report& report);
// "key: value" lines, then provenance and the status message.
std::string render_summary(const Report& report);

// Decimal rendering of an exact rational, rounded to nearest.
std::string decimal(const mpq_class& q, int digits);

}  // namespace thompson::reports

#endif  // THOMPSON_REPORTS_HPP_
