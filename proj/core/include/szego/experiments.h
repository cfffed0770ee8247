// Copyright 2026 The szego Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment drivers behind the szego command-line tool. Each run_* function
// sweeps k and returns a table that write_csv turns into a self-describing CSV
// file.

#ifndef SZEGO_EXPERIMENTS_H_
#define SZEGO_EXPERIMENTS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "szego/asymptotics.h"
#include "szego/geometry.h"

namespace szego {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kVersion = "szego 0.1.0";

struct ExperimentConfig {
  ModelSpace model = ModelSpace::P1xP1(2);
  int nu = 1;
  int kmin = 1;
  int kmax = 20;
  int kstep = 1;
  // "generic", "orthonormal-ZW", "parallel-ZW" or "Z0,Z1,W0,W1".
  std::string point = "generic";
  std::uint64_t seed = 1;
  // Overrides the default tolerance of the --assert check when set.
  std::optional<double> tol;
  FiberNorm fiber = FiberNorm::kUnit;
  Bracket bracket = Bracket::kTheorem;
  std::string out;  // empty: standard output
  double time_budget_seconds = 60.0;
  // Worker threads for k sweeps; 0 picks the hardware concurrency.
  int threads = 0;
  // Random point pairs in run_oracle.
  int oracle_pairs = 20;

  // Throws ConfigError with a message naming the bad field.
  void validate() const;
  std::vector<int> k_values() const;
};

// Parses "1", "-0.5", "0.3+0.2i", "2i" and similar.
Complex parse_complex(const std::string& text);

// The base point named by config.point. Throws ConfigError.
BundlePoint resolve_point(const ExperimentConfig& config);

struct ResultRow {
  std::string experiment;
  int k = 0;
  double exact = 0.0;
  std::optional<double> predicted;
  // exact / predicted when predicted is nonzero, else unset.
  std::optional<double> ratio;
  std::vector<std::pair<std::string, std::string>> meta;
};

struct Table {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<ResultRow> rows;
  bool truncated = false;
  // Verdict of the subcommand's acceptance check, with a one-line reason.
  bool check_passed = true;
  std::string check_message;
};

void write_csv(const Table& table, std::ostream& out);

Table run_dim(const ExperimentConfig& config);
Table run_diag(const ExperimentConfig& config);
Table run_neardiag(const ExperimentConfig& config);
Table run_decay(const ExperimentConfig& config);
Table run_oracle(const ExperimentConfig& config);

}  // namespace szego

#endif  // SZEGO_EXPERIMENTS_H_
