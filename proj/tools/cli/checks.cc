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

#include "checks.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "roundosc/catalog.h"
#include "roundosc/error.h"
#include "roundosc/processes.h"
#include "roundosc/rounded.h"
#include "roundosc/special_fn.h"

namespace roundosc::cli {
namespace {

const SeriesControl kCtrl{};

double Binom(double n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Collects (error, tolerance) pairs; reports the worst ratio.
class Parts {
 public:
  void Add(double err, double tol) {
    worst_ = std::max(worst_, std::isfinite(err) ? err / tol : HUGE_VAL);
  }
  CheckResult Result(std::string name) const {
    return {std::move(name), worst_ <= 1.0, worst_, 1.0};
  }

 private:
  double worst_ = 0.0;
};

CheckResult Single(std::string name, double err, double tol) {
  return {std::move(name), std::isfinite(err) && err <= tol, err, tol};
}

CheckResult Parseval(bool tamper) {
  // relative for Gumbel (the sum is ~1e-12), absolute for Aldous
  Parts parts;
  const std::vector<double> grid = MidpointGrid(4096);
  for (const auto& [name, relative] :
       {std::pair{"gumbel:1.4426950408889634", true},
        std::pair{"aldous", false}}) {
    const CharacteristicModel m = CatalogByName(name).model;
    const OscillationProfile p = BetaProfile(m, 1, grid, kCtrl);
    double quad = 0.0;
    for (double v : p.values) quad += v * v;
    quad /= static_cast<double>(grid.size());
    double sum = ParsevalSum(m, kCtrl).value.real();
    if (tamper) {
      // scale the n = +-1 coefficients by 1.01
      sum += (1.01 * 1.01 - 1.0) * 2.0 * std::norm(m.PhiLattice(1, 0)[0]) /
             (4.0 * kPi * kPi);
    }
    const double err = std::fabs(quad - sum);
    parts.Add(relative ? err / sum : err, 1e-8);
  }
  return parts.Result("parseval");
}

CheckResult Mixture(bool tamper) {
  const CharacteristicModel m = ScaledGumbel(1.0 / kLn2).model;
  const int k = tamper ? 1 : 1024;
  const std::vector<double> alphas = tamper ? std::vector<double>{0.0}
                                            : MidpointGrid(k);
  double worst = 0.0;
  for (double x = -4.0; x <= 10.0; x += 0.05) {
    double avg = 0.0;
    for (double a : alphas) avg += CdfRounded(m, x, a);
    avg /= static_cast<double>(alphas.size());
    // P(X + U <= x) = int_0^1 F(x - u) du, Simpson
    constexpr int kPanels = 2000;
    double s = m.cdf(x) + m.cdf(x - 1.0);
    for (int i = 1; i < kPanels; ++i) {
      s += (i % 2 ? 4.0 : 2.0) * m.cdf(x - static_cast<double>(i) / kPanels);
    }
    s /= 3.0 * kPanels;
    worst = std::max(worst, std::fabs(avg - s));
  }
  return Single("mixture", worst, 1e-3);
}

CheckResult Prodinger(bool tamper) {
  double worst = 0.0;
  for (int n : {1, 2}) {
    const ProdingerTerms terms = ProdingerCoefficientTerms(n, kCtrl);
    Complex total = terms.Total();
    if (tamper) total -= terms.g_series;
    worst = std::max(worst, std::abs(total));
  }
  return Single("prodinger", worst, 1e-10);
}

CheckResult EtaZeros(bool tamper) {
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const double z = std::ldexp(1.0, k) + (tamper ? 1e-3 : 0.0);
    worst = std::max(worst, std::abs(EtaProduct(z, kCtrl).value));
  }
  const double q = RqCoefficients(64).q;
  worst = std::max(worst, std::fabs(q - EtaProduct(1.0, kCtrl).value.real()));
  return Single("eta_zeros", worst, 1e-12);
}

CheckResult TelescopingVariance(bool tamper) {
  const CharacteristicModel m = PatriciaLimit().model;
  double worst = 0.0;
  for (double a : MidpointGrid(64)) {
    const VarianceDecomposition v = VarRoundedDetailed(m, a, kCtrl);
    const double value = tamper ? v.value - v.sheppard : v.value;
    worst = std::max(worst, std::fabs(value - 1.0));
  }
  return Single("telescoping_variance", worst, 1e-9);
}

CheckResult ExpMomentPolynomials(bool tamper) {
  Parts parts;
  for (std::int64_t n : {10, 100, 1000}) {
    const LatticeDistribution u = ApproxCounting(tamper ? n + 1 : n);
    const double nd = static_cast<double>(n);
    const double want[3] = {nd + 1.0, 3.0 * Binom(nd + 1.0, 2) + 1.0,
                            21.0 * Binom(nd + 1.0, 3) + 7.0 * nd + 1.0};
    for (int k = 1; k <= 3; ++k) {
      const double got =
          u.Expect([k](double x) { return std::exp2(k * x); });
      parts.Add(std::fabs(got / want[k - 1] - 1.0), 1e-9);
    }
  }
  // E 2^{2 S_n} is quadratic in n: constant second differences
  std::vector<double> e;
  for (std::int64_t n = 1; n <= 6; ++n) {
    e.push_back(SuccessfulSearch(n).Expect(
        [](double x) { return std::exp2(2.0 * x); }));
  }
  const double d0 = e[2] - 2.0 * e[1] + e[0];
  for (std::size_t i = 1; i + 2 < e.size(); ++i) {
    parts.Add(std::fabs(e[i + 2] - 2.0 * e[i + 1] + e[i] - d0) / d0, 1e-9);
  }
  return parts.Result("exp_moment_polynomials");
}

CheckResult MgfLattice(bool tamper) {
  // E 2^{k X_a}: {1, 3/2, 7/2} for approximate counting, {1, 2} for
  // successful search, for every a.
  Parts parts;
  const double shift = tamper ? 1e-6 : 0.0;
  const std::vector<double> grid = MidpointGrid(16);
  const std::pair<CatalogEntry, std::vector<double>> cases[] = {
      {ApproxCountingLimit(), {1.0, 1.5, 3.5}},
      {SuccessfulSearchLimit(), {1.0, 2.0}}};
  for (const auto& [entry, want] : cases) {
    for (std::size_t k = 1; k <= want.size(); ++k) {
      double lo = HUGE_VAL, hi = -HUGE_VAL;
      for (double a : grid) {
        const double v =
            MgfRounded(entry.model, k * kLn2 + shift, a, kCtrl).real();
        parts.Add(std::fabs(v - want[k - 1]), 1e-10);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      parts.Add(hi - lo, 1e-9);
    }
  }
  return parts.Result("mgf_lattice");
}

CheckResult MomentIndeterminacy(bool tamper) {
  const CharacteristicModel m = ApproxCountingLimit().model;
  const LatticeDistribution a = PmfRounded(m, 0.0);
  const LatticeDistribution b = PmfRounded(m, tamper ? 0.0 : 0.5);
  Parts parts;
  for (int k = 1; k <= 3; ++k) {
    const auto g = [k](double x) { return std::exp2(k * x); };
    parts.Add(std::fabs(a.Expect(g) - b.Expect(g)), 1e-9);
  }
  // x -> 2^x is injective, so the laws of 2^{X_a} are as far apart as X_a
  parts.Add(1.0 - TvDistance(a, b), 1e-12);
  return parts.Result("moment_indeterminacy");
}

CheckResult GumbelBound(bool tamper) {
  const CharacteristicModel m = ScaledGumbel(1.0 / kLn2).model;
  const OscillationProfile p = BetaProfile(m, 1, MidpointGrid(256), kCtrl);
  double worst = 0.0;
  for (double v : p.values) worst = std::max(worst, std::fabs(v));
  if (tamper) worst *= 1.1;
  return {"gumbel_bound", worst >= 1.0e-6 && worst <= 1.6e-6, worst, 1.6e-6};
}

CheckResult PatriciaConstants(bool tamper) {
  const CatalogEntry e = PatriciaLimit();
  const double g0 = e.analytic_extras.at("g0") + (tamper ? 1e-12 : 0.0);
  const double var = kPi * kPi / (6.0 * kLn2 * kLn2) - 2.0 * g0 / kLn2;
  double sinh_sum = 0.0;
  for (int n = 8; n >= 1; --n) {
    sinh_sum += 1.0 / (n * std::sinh(2.0 * kPi * kPi * n / kLn2));
  }
  sinh_sum /= kLn2;
  const double excess = var + 1.0 / 12.0 - 1.0;
  Parts parts;
  parts.Add(std::fabs(e.model.Mean() - (-0.16725382272)), 1e-10);
  parts.Add(std::fabs(var - 0.916666666667904), 1e-12);
  parts.Add(std::fabs(excess - 1.237e-12), 2e-14);
  parts.Add(std::fabs(excess - sinh_sum), 2e-14);
  return parts.Result("patricia_constants");
}

CheckResult PatriciaPoissonCheck(bool tamper) {
  Parts parts;
  for (double s : {1.0, kLn2, 10.0}) {
    const LatticeDistribution d = PatriciaPoisson(s);
    parts.Add(std::fabs(d.Variance() - (-std::expm1(-s))), 1e-12);
    parts.Add(std::fabs(d.Mean() - PatriciaMean(s)), 1e-12);
  }
  // P(Y_s <= k) = sum_{m <= k} B_m(s / 2^{k+1-m}) e^{-s / 2^{k+1-m}}
  const double s = 8.0;
  const int k = 5;
  double rhs = 0.0;
  for (int m = 0; m <= k; ++m) {
    const double r = std::ldexp(s, -(k + 1 - m));
    const LatticeDistribution b = BernoulliSum(PatriciaProfile(r));
    rhs += b.probs[m] * std::exp(tamper ? r : -r);
  }
  parts.Add(std::fabs(rhs - PatriciaPoisson(s).Cdf(k)), 1e-9);
  return parts.Result("patricia_poisson");
}

CheckResult AldousFraction(bool tamper) {
  const CharacteristicModel m = AldousAssignment().model;
  const double ex0 = tamper ? SheppardShift(m.raw_moments, 1)
                            : MomentRounded(m, 1, 0.0, kCtrl);
  const double frac = m.Mean() + 1.0 - ex0;
  return Single("aldous_fraction", std::fabs(frac - 11.0 / 24.0), 1e-12);
}

CheckResult GTwoRoute(bool tamper) {
  SeriesControl loose;
  loose.tol = 1e-4;
  const double a = GSeries(0.0, kCtrl).value.real();
  const double b = GLogSeries(0.0, tamper ? loose : kCtrl).value.real();
  Parts parts;
  parts.Add(std::fabs(a - b), 1e-12);
  parts.Add(std::fabs(a - 0.86887665), 5e-9);
  return parts.Result("g_two_route");
}

CheckResult UniformExactness(bool tamper) {
  Parts parts;
  const std::vector<double> grid = MidpointGrid(16);
  for (double v : BetaProfile(UniformN(3).model, 1, grid, kCtrl).values) {
    parts.Add(std::fabs(v), 1e-12);
  }
  const CharacteristicModel u2 = UniformN(2).model;
  for (double a : {0.1, 0.5, 0.9}) {
    const double want = u2.Variance() - 1.0 / 12.0 +
                        (tamper ? 0.0 : a * (1.0 - a));
    parts.Add(std::fabs(VarRounded(u2, a, kCtrl) - want), 1e-10);
  }
  const CharacteristicModel w = UniformNPlus2U(2).model;
  for (int order : {1, 2}) {
    for (double v : BetaProfile(w, order, grid, kCtrl).values) {
      parts.Add(std::fabs(v), 1e-12);
    }
  }
  double b3 = 0.0;
  for (double v : BetaProfile(w, 3, grid, kCtrl).values) {
    b3 = std::max(b3, std::fabs(v));
  }
  parts.Add(b3 > 1e-4 ? 0.0 : 2.0, 1.0);
  return parts.Result("uniform_exactness");
}

using CheckFn = CheckResult (*)(bool);

const std::map<std::string, CheckFn, std::less<>>& Registry() {
  static const std::map<std::string, CheckFn, std::less<>> r = {
      {"parseval", Parseval},
      {"mixture", Mixture},
      {"prodinger", Prodinger},
      {"eta_zeros", EtaZeros},
      {"telescoping_variance", TelescopingVariance},
      {"exp_moment_polynomials", ExpMomentPolynomials},
      {"mgf_lattice", MgfLattice},
      {"moment_indeterminacy", MomentIndeterminacy},
      {"gumbel_bound", GumbelBound},
      {"patricia_constants", PatriciaConstants},
      {"patricia_poisson", PatriciaPoissonCheck},
      {"aldous_fraction", AldousFraction},
      {"g_two_route", GTwoRoute},
      {"uniform_exactness", UniformExactness},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& CheckNames() {
  static const std::vector<std::string> names = {
      "parseval",           "mixture",
      "prodinger",          "eta_zeros",
      "telescoping_variance", "exp_moment_polynomials",
      "mgf_lattice",        "moment_indeterminacy",
      "gumbel_bound",       "patricia_constants",
      "patricia_poisson",   "aldous_fraction",
      "g_two_route",        "uniform_exactness"};
  return names;
}

CheckResult RunCheck(std::string_view name, bool tamper) {
  const auto it = Registry().find(name);
  if (it == Registry().end()) {
    throw Error(ErrorCode::kUnknownName,
                "unknown check '" + std::string(name) + "'");
  }
  return it->second(tamper);
}

Table ChecksTable(const std::vector<CheckResult>& results) {
  Table t{{"check", "status", "value", "tolerance"}, {}};
  for (const auto& r : results) {
    t.rows.push_back({r.check, std::string(r.pass ? "pass" : "fail"), r.value,
                      r.tolerance});
  }
  return t;
}

}  // namespace roundosc::cli
