// Copyright 2026 The roundosc Authors
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

// Table-producing subcommands of the roundosc CLI.

#ifndef ROUNDOSC_TOOLS_CLI_COMMANDS_H_
#define ROUNDOSC_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "table.h"

namespace roundosc::cli {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr int kDefaultGrid = 64;
inline constexpr const char* kOutputDirEnv = "ROUNDOSC_OUTPUT_DIR";

struct RunConfig {
  std::string command;
  std::string dist;
  std::string process;
  std::vector<double> alphas;  // explicit values; empty means midpoint grid
  int grid = kDefaultGrid;
  int m = 1;
  std::vector<double> t_values{1.0};
  std::string n_spec = "16..16384";
  std::string spacing = "geometric";
  double tol = 1e-12;
  std::int64_t fejer_n = 4096;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  Format format = Format::kCsv;
  std::vector<std::string> only;
  std::vector<std::string> tamper;
};

// Explicit alphas, else (k + 1/2)/grid for k < grid.
std::vector<double> AlphaGrid(const RunConfig& config);

// "a..b" (doubling when geometric, unit steps when linear) or "a,b,c".
std::vector<double> ParseNRange(const std::string& range,
                                const std::string& spacing);

Table CmdBeta(const RunConfig& config);
Table CmdMoments(const RunConfig& config);
Table CmdVarianceProfile(const RunConfig& config);
Table CmdCharfn(const RunConfig& config);

struct ConvergeResult {
  Table table;
  bool decreasing = false;  // strictly decreasing tv column
  std::string summary;
};
ConvergeResult CmdConverge(const RunConfig& config);

}  // namespace roundosc::cli

#endif  // ROUNDOSC_TOOLS_CLI_COMMANDS_H_
