// Copyright 2026 The dampsearch Authors
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

#ifndef DAMPSEARCH_TOOLS_CLI_HPP
#define DAMPSEARCH_TOOLS_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dampsearch::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitBadArguments = 2,
};

// Inclusive uniform grid written as "min:max:points".
struct Grid {
  double min = 0.0;
  double max = 0.0;
  int points = 0;

  std::vector<double> values() const;
};

// Throws std::invalid_argument unless min < max, points >= 2 and both bounds
// are finite.
Grid parse_grid(std::string_view text);

struct RunConfig {
  // eigencurve | cost-surface | trajectory | ratio | validate | lindblad
  std::string command;
  std::int64_t n = 0;
  std::int64_t m = 0;
  // A number in radians, "critical" (for n, m), "critical-m1" (for n, m = 1)
  // or "schedule" (decreasing damping, one value per iteration).
  std::string phi = "0";
  std::optional<Grid> grid;
  std::vector<std::int64_t> n_list;
  std::vector<std::int64_t> m_list;
  std::int64_t steps = 100;
  double eps = 1e-12;
  std::string out;  // empty: write to the output stream
  std::uint64_t seed = 1;
  // lindblad
  double c = 0.0;
  double total_time = 10.0;
  double dt = 1e-3;
  bool critical = false;
  double c_max = 10.0;
};

// Runs one command and writes exactly one CSV (to config.out when set,
// otherwise to out). Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs.
int execute(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dampsearch::cli

#endif  // DAMPSEARCH_TOOLS_CLI_HPP
