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

// Row tables emitted by the CLI as CSV or JSON.

#ifndef ROUNDOSC_TOOLS_CLI_TABLE_H_
#define ROUNDOSC_TOOLS_CLI_TABLE_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace roundosc::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { kCsv, kJson };

// 17 significant digits; parses back to the same double.
std::string FormatDouble(double v);

// CSV has a header row; JSON is an array of row objects.
std::string Render(const Table& table, Format format);

}  // namespace roundosc::cli

#endif  // ROUNDOSC_TOOLS_CLI_TABLE_H_
