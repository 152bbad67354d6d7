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

// roundosc: tables of oscillation terms, rounded moments, variance profiles,
// characteristic functions, convergence diagnostics and the identity checks.
//
// Exit codes: 0 success, 1 check failure, 2 unknown name, 3 unsupported
// request, 4 I/O error.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "checks.h"
#include "commands.h"
#include "roundosc/error.h"

namespace {

using roundosc::Error;
using roundosc::ErrorCode;
namespace cli = roundosc::cli;

constexpr int kExitChecksFailed = 1;
constexpr int kExitBadName = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitIo = 4;

void AddCommon(CLI::App* sub, cli::RunConfig* config) {
  sub->add_option("--out", config->out, "Output file (default: stdout or $" +
                                            std::string(cli::kOutputDirEnv) +
                                            "/<command>.<format>)");
  sub->add_option("--format", config->format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::Format>{{"csv", cli::Format::kCsv},
                                             {"json", cli::Format::kJson}}));
  sub->add_option("--tol", config->tol, "Series tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", config->seed, "Random seed")
      ->capture_default_str();
}

void AddGrid(CLI::App* sub, cli::RunConfig* config) {
  sub->add_option("--alpha", config->alphas, "Explicit alpha values");
  sub->add_option("--grid", config->grid, "Midpoint alpha grid size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

// Empty path means stdout.
std::string OutputPath(const cli::RunConfig& config) {
  if (!config.out.empty()) return config.out;
  if (const char* dir = std::getenv(cli::kOutputDirEnv); dir && *dir) {
    const char* ext = config.format == cli::Format::kJson ? ".json" : ".csv";
    return (std::filesystem::path(dir) / (config.command + ext)).string();
  }
  return "";
}

int Emit(const cli::RunConfig& config, const cli::Table& table) {
  const std::string text = cli::Render(table, config.format);
  const std::string path = OutputPath(config);
  if (path.empty()) {
    std::cout << text;
    return std::cout.good() ? 0 : kExitIo;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) {
    std::cerr << "roundosc: cannot write " << path << "\n";
    return kExitIo;
  }
  return 0;
}

int ExitCodeFor(ErrorCode code) {
  return code == ErrorCode::kUnknownName ? kExitBadName : kExitUnsupported;
}

int Run(const cli::RunConfig& config) {
  if (config.command == "checks") {
    std::vector<std::string> names =
        config.only.empty() ? cli::CheckNames() : config.only;
    for (const auto& n : config.tamper) {
      const auto& all = cli::CheckNames();
      if (std::find(all.begin(), all.end(), n) == all.end()) {
        throw Error(ErrorCode::kUnknownName, "unknown check '" + n + "'");
      }
    }
    std::vector<cli::CheckResult> results;
    for (const auto& n : names) {
      const bool tamper = std::find(config.tamper.begin(), config.tamper.end(),
                                    n) != config.tamper.end();
      results.push_back(cli::RunCheck(n, tamper));
    }
    const int rc = Emit(config, cli::ChecksTable(results));
    if (rc != 0) return rc;
    bool ok = true;
    for (const auto& r : results) {
      if (!r.pass) {
        std::cerr << "check failed: " << r.check << "\n";
        ok = false;
      }
    }
    return ok ? 0 : kExitChecksFailed;
  }
  if (config.command == "converge") {
    const cli::ConvergeResult r = cli::CmdConverge(config);
    const int rc = Emit(config, r.table);
    std::cerr << r.summary << "\n";
    return rc;
  }
  if (config.command == "beta") return Emit(config, cli::CmdBeta(config));
  if (config.command == "moments") return Emit(config, cli::CmdMoments(config));
  if (config.command == "variance-profile") {
    return Emit(config, cli::CmdVarianceProfile(config));
  }
  return Emit(config, cli::CmdCharfn(config));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oscillation terms and rounded moments of lattice-rounded "
               "random variables"};
  app.require_subcommand(1);
  cli::RunConfig config;

  auto* beta = app.add_subcommand("beta", "beta_m on an alpha grid");
  beta->add_option("--dist", config.dist, "Catalog name")->required();
  beta->add_option("--m", config.m, "Order")->check(CLI::PositiveNumber);
  AddGrid(beta, &config);

  auto* moments = app.add_subcommand("moments", "E X_a^m on an alpha grid");
  moments->add_option("--dist", config.dist, "Catalog name")->required();
  moments->add_option("--m", config.m, "Order")->check(CLI::NonNegativeNumber);
  AddGrid(moments, &config);

  auto* variance = app.add_subcommand("variance-profile",
                                      "Var X_a and its decomposition");
  variance->add_option("--dist", config.dist, "Catalog name")->required();
  AddGrid(variance, &config);

  auto* charfn = app.add_subcommand("charfn", "E exp(i t X_a)");
  charfn->add_option("--dist", config.dist, "Catalog name")->required();
  charfn->add_option("--t", config.t_values, "Arguments t");
  charfn->add_option("--alpha", config.alphas, "Alpha values (default 0)");
  charfn->add_option("--fejer-n", config.fejer_n, "Fejer order for cesaro rows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* converge = app.add_subcommand("converge",
                                      "d_TV(Y_n, ceil(X + a_n)) over n");
  converge->add_option("--process", config.process, "Process name")
      ->required();
  converge->add_option("--n", config.n_spec, "a..b or a,b,c")
      ->capture_default_str();
  converge->add_option("--spacing", config.spacing, "geometric or linear")
      ->check(CLI::IsMember({"geometric", "linear"}))
      ->capture_default_str();

  auto* checks = app.add_subcommand("checks", "Run the identity suite");
  checks->add_option("--only", config.only, "Run only these checks")
      ->delimiter(',');
  checks->add_option("--tamper", config.tamper, "Corrupt these checks")
      ->delimiter(',');

  for (auto* sub : {beta, moments, variance, charfn, converge, checks}) {
    AddCommon(sub, &config);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUnsupported;
  }
  config.command = app.get_subcommands().front()->get_name();
  // The check report is JSON unless asked otherwise.
  if (config.command == "checks" && checks->count("--format") == 0) {
    config.format = cli::Format::kJson;
  }

  try {
    return Run(config);
  } catch (const Error& e) {
    std::cerr << "roundosc: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "roundosc: " << e.what() << "\n";
    return kExitUnsupported;
  }
}
