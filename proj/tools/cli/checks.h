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

// Identity suite behind `roundosc checks`. Every check has a tamper hook that
// corrupts one ingredient so the suite can be shown to fail.

#ifndef ROUNDOSC_TOOLS_CLI_CHECKS_H_
#define ROUNDOSC_TOOLS_CLI_CHECKS_H_

#include <string>
#include <string_view>
#include <vector>

#include "table.h"

namespace roundosc::cli {

struct CheckResult {
  std::string check;
  bool pass = false;
  // Single-tolerance checks report the measured deviation; checks with
  // several tolerances report max(deviation / tolerance) against 1.
  double value = 0.0;
  double tolerance = 0.0;
};

const std::vector<std::string>& CheckNames();

// Throws Error(kUnknownName) for names not in CheckNames().
CheckResult RunCheck(std::string_view name, bool tamper = false);

Table ChecksTable(const std::vector<CheckResult>& results);

}  // namespace roundosc::cli

#endif  // ROUNDOSC_TOOLS_CLI_CHECKS_H_
