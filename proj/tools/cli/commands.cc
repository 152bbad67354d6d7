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

#include "commands.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "roundosc/catalog.h"
#include "roundosc/error.h"
#include "roundosc/processes.h"
#include "roundosc/rounded.h"

namespace roundosc::cli {
namespace {

SeriesControl Control(const RunConfig& config) {
  SeriesControl ctrl;
  ctrl.tol = config.tol;
  ctrl.fejer_n = config.fejer_n;
  ctrl.Validate();
  return ctrl;
}

Cell Count(double n) {
  if (n == std::floor(n) && std::fabs(n) < 9e15) {
    return static_cast<std::int64_t>(n);
  }
  return n;
}

}  // namespace

std::vector<double> AlphaGrid(const RunConfig& config) {
  if (!config.alphas.empty()) return config.alphas;
  if (config.grid < 1) {
    throw Error(ErrorCode::kInvalidArgument, "--grid must be positive");
  }
  return MidpointGrid(config.grid);
}

std::vector<double> ParseNRange(const std::string& range,
                                const std::string& spacing) {
  std::vector<double> out;
  const auto dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      std::stringstream ss(range);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    } else {
      const double lo = std::stod(range.substr(0, dots));
      const double hi = std::stod(range.substr(dots + 2));
      if (!(lo > 0.0) || hi < lo) throw std::invalid_argument(range);
      if (spacing == "geometric") {
        for (double n = lo; n <= hi * (1 + 1e-12); n *= 2.0) out.push_back(n);
      } else if (spacing == "linear") {
        for (double n = lo; n <= hi; n += 1.0) out.push_back(n);
      } else {
        throw std::invalid_argument(spacing);
      }
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument, "bad n range '" + range + "'");
  }
  if (out.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty n range '" + range + "'");
  }
  return out;
}

Table CmdBeta(const RunConfig& config) {
  const CatalogEntry entry = CatalogByName(config.dist);
  const std::vector<double> alphas = AlphaGrid(config);
  const OscillationProfile p =
      BetaProfile(entry.model, config.m, alphas, Control(config));
  Table t{{"alpha", "beta_m", "truncation_n"}, {}};
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    t.rows.push_back({alphas[i], p.values[i], p.truncation_n});
  }
  return t;
}

Table CmdMoments(const RunConfig& config) {
  const CatalogEntry entry = CatalogByName(config.dist);
  const SeriesControl ctrl = Control(config);
  const std::vector<double> alphas = AlphaGrid(config);
  Table t{{"alpha", "value"}, {}};
  // E{X + a} = EX + 1 - E X_a
  if (config.m == 1) t.columns.push_back("frac_mean");
  for (double a : alphas) {
    const double v = MomentRounded(entry.model, config.m, a, ctrl);
    std::vector<Cell> row{a, v};
    if (config.m == 1) row.push_back(entry.model.Mean() + 1.0 - v);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table CmdVarianceProfile(const RunConfig& config) {
  const CatalogEntry entry = CatalogByName(config.dist);
  const SeriesControl ctrl = Control(config);
  Table t{{"alpha", "value", "var_x", "sheppard", "parseval", "beta1",
           "beta2", "beta2_tilde"},
          {}};
  for (double a : AlphaGrid(config)) {
    const VarianceDecomposition v = VarRoundedDetailed(entry.model, a, ctrl);
    t.rows.push_back({a, v.value, v.var_x, v.sheppard, v.parseval, v.beta1,
                      v.beta2, v.beta2_tilde});
  }
  return t;
}

Table CmdCharfn(const RunConfig& config) {
  const CatalogEntry entry = CatalogByName(config.dist);
  SeriesControl ctrl = Control(config);
  const std::vector<double> alphas =
      config.alphas.empty() ? std::vector<double>{0.0} : config.alphas;
  Table t{{"t", "alpha", "mode", "re", "im"}, {}};
  for (double tv : config.t_values) {
    for (double a : alphas) {
      ctrl.mode = SummationMode::kAdaptive;
      try {
        const Complex z = CharRounded(entry.model, tv, a, ctrl);
        t.rows.push_back({tv, a, std::string("adaptive"), z.real(), z.imag()});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNeedsCesaro) throw;
      }
      ctrl.mode = SummationMode::kCesaro;
      const Complex z = CharRounded(entry.model, tv, a, ctrl);
      t.rows.push_back({tv, a, std::string("cesaro"), z.real(), z.imag()});
    }
  }
  return t;
}

ConvergeResult CmdConverge(const RunConfig& config) {
  const ProcessSpec proc = ProcessByName(config.process, config.seed);
  const std::vector<double> ns = ParseNRange(config.n_spec, config.spacing);
  const std::vector<ConvergencePoint> pts = ConvergenceCheck(proc, ns);
  ConvergeResult r;
  r.table = Table{{"n", "a_n", "tv_distance", "log_tv"}, {}};
  r.decreasing = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    r.table.rows.push_back(
        {Count(pts[i].n), pts[i].a_n, pts[i].tv, pts[i].log_tv});
    if (i > 0 && !(pts[i].log_tv < pts[i - 1].log_tv)) r.decreasing = false;
  }
  std::ostringstream os;
  os << proc.name << ": ln tv " << FormatDouble(pts.front().log_tv) << " -> "
     << FormatDouble(pts.back().log_tv) << " over " << pts.size() << " points, "
     << (r.decreasing ? "strictly decreasing" : "not monotone");
  r.summary = os.str();
  return r;
}

}  // namespace roundosc::cli
