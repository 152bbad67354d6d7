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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "checks.h"
#include "roundosc/catalog.h"
#include "roundosc/oracle.h"
#include "roundosc/processes.h"
#include "roundosc/rounded.h"
#include "roundosc/special_fn.h"

namespace roundosc {
namespace {

const SeriesControl kCtrl{};

// Accumulates named sub-results; the criterion passes when all of them do.
class Criterion {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  // |got - want| <= tol
  void Near(double got, double want, double tol, const std::string& what) {
    const double err = std::fabs(got - want);
    worst_ = std::max(worst_, std::isfinite(err) ? err / tol : HUGE_VAL);
    if (!(err <= tol)) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s: got %.17g want %.17g tol %.3g",
                    what.c_str(), got, want, tol);
      failures_.push_back(buf);
    }
  }
  bool ok() const { return failures_.empty(); }
  double worst() const { return worst_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
  double worst_ = 0.0;
};

double Binom(double n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

void GumbelBound(Criterion& c) {
  const CharacteristicModel m = ScaledGumbel(1.0 / kLn2).model;
  double worst = 0.0;
  for (double v : BetaProfile(m, 1, MidpointGrid(256), kCtrl).values) {
    worst = std::max(worst, std::fabs(v));
  }
  std::printf("  max |beta_1| = %.6g\n", worst);
  c.Expect(worst >= 1.0e-6 && worst <= 1.6e-6, "max |beta_1| in [1e-6, 1.6e-6]");
}

void PatriciaConstants(Criterion& c) {
  const CharacteristicModel m = PatriciaLimit().model;
  const double var = m.Variance();
  c.Near(m.Mean(), -0.16725382272, 1e-10, "EX");
  c.Near(var, 0.916666666667904, 1e-12, "Var X");
  const double excess = var + 1.0 / 12.0 - 1.0;
  c.Near(excess, 1.237e-12, 2e-14, "Var X + 1/12 - 1");
  double sinh_sum = 0.0;
  for (int n = 8; n >= 1; --n) {
    sinh_sum += 1.0 / (n * std::sinh(2.0 * kPi * kPi * n / kLn2));
  }
  c.Near(1.0 + sinh_sum / kLn2, var + 1.0 / 12.0, 2e-14, "sinh series");
}

void PatriciaCancellation(Criterion& c) {
  const CharacteristicModel m = PatriciaLimit().model;
  for (double a : MidpointGrid(64)) {
    c.Near(VarRounded(m, a, kCtrl), 1.0, 1e-9, "Var X_a");
  }
  for (int n : {1, 2}) {
    c.Near(std::abs(ProdingerCoefficient(n, kCtrl)), 0.0, 1e-10,
           "Prodinger n=" + std::to_string(n));
  }
}

// E 2^{k X_a} on a 16-point grid: each value within 1e-10, spread < 1e-9.
void MgfLatticeValues(Criterion& c, const CharacteristicModel& m,
                      const std::vector<double>& want) {
  for (std::size_t k = 1; k <= want.size(); ++k) {
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (double a : MidpointGrid(16)) {
      const double v = MgfRounded(m, k * kLn2, a, kCtrl).real();
      c.Near(v, want[k - 1], 1e-10, m.name + " k=" + std::to_string(k));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    c.Near(hi - lo, 0.0, 1e-9, m.name + " spread k=" + std::to_string(k));
  }
}

void ApproxCountingMoments(Criterion& c) {
  MgfLatticeValues(c, ApproxCountingLimit().model, {1.0, 1.5, 3.5});
  for (std::int64_t n : {10, 100, 1000}) {
    const LatticeDistribution u = ApproxCounting(n);
    const double nd = static_cast<double>(n);
    const double want[3] = {nd + 1.0, 3.0 * Binom(nd + 1.0, 2) + 1.0,
                            21.0 * Binom(nd + 1.0, 3) + 7.0 * nd + 1.0};
    for (int k = 1; k <= 3; ++k) {
      const double got = u.Expect([k](double x) { return std::exp2(k * x); });
      c.Near(got / want[k - 1], 1.0, 1e-9,
             "E2^{" + std::to_string(k) + "U_" + std::to_string(n) + "}");
    }
  }
}

void SuccessfulSearchMoments(Criterion& c) {
  MgfLatticeValues(c, SuccessfulSearchLimit().model, {1.0, 2.0});
}

void AldousFraction(Criterion& c) {
  const CharacteristicModel m = AldousAssignment().model;
  const double frac = m.Mean() + 1.0 - MomentRounded(m, 1, 0.0, kCtrl);
  std::printf("  EX + 1 - EX_0 = %.17g\n", frac);
  c.Near(frac, 11.0 / 24.0, 1e-12, "fractional mean");
}

void UniformExactness(Criterion& c) {
  const std::vector<double> grid = MidpointGrid(16);
  for (int n : {1, 2, 3}) {
    const CharacteristicModel u = UniformN(n).model;
    for (double v : BetaProfile(u, 1, grid, kCtrl).values) {
      c.Near(v, 0.0, 1e-12, u.name + " beta_1");
    }
    for (double a : {0.1, 0.5, 0.9}) {
      c.Near(VarRounded(u, a, kCtrl),
             u.Variance() - 1.0 / 12.0 + a * (1.0 - a), 1e-10,
             u.name + " Var X_a");
    }
  }
  for (int n : {1, 2}) {
    const CharacteristicModel w = UniformNPlus2U(n).model;
    for (int order : {1, 2}) {
      for (double v : BetaProfile(w, order, grid, kCtrl).values) {
        c.Near(v, 0.0, 1e-12, w.name + " beta_" + std::to_string(order));
      }
    }
    double b3 = 0.0;
    for (double v : BetaProfile(w, 3, grid, kCtrl).values) {
      b3 = std::max(b3, std::fabs(v));
    }
    std::printf("  %s max |beta_3| = %.6g\n", w.name.c_str(), b3);
    c.Expect(b3 > 1e-4, w.name + " max |beta_3| > 1e-4");
  }
}

void PoissonizedPatricia(Criterion& c) {
  for (double s : {1.0, kLn2, 10.0}) {
    const LatticeDistribution d = PatriciaPoisson(s);
    c.Near(d.Variance(), -std::expm1(-s), 1e-12, "variance");
    c.Near(d.Mean(), PatriciaMean(s), 1e-12, "mean");
  }
  const double s = 8.0;
  const int k = 5;
  double rhs = 0.0;
  for (int m = 0; m <= k; ++m) {
    const double r = std::ldexp(s, -(k + 1 - m));
    rhs += BernoulliSum(PatriciaProfile(r)).probs[m] * std::exp(-r);
  }
  c.Near(rhs, PatriciaPoisson(s).Cdf(k), 1e-9, "CDF identity (8, 5)");
}

void SpecialFunctions(Criterion& c) {
  double worst_rec = 0.0, worst_mod = 0.0;
  for (int i = -20; i <= 20; ++i) {
    for (int j = -12; j <= 12; ++j) {
      const Complex z(0.37 + 0.5 * i, 0.83 * j);
      const Complex lhs = GammaComplex(z + 1.0);
      const Complex rhs = z * GammaComplex(z);
      worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  for (double y = 0.25; y <= 40.0; y += 0.25) {
    const double g = std::norm(GammaComplex(Complex(0.0, y)));
    const double want = kPi / (y * std::sinh(kPi * y));
    worst_mod = std::max(worst_mod, std::fabs(g / want - 1.0));
  }
  c.Near(worst_rec, 0.0, 1e-11, "Gamma recurrence (relative)");
  c.Near(worst_mod, 0.0, 1e-11, "|Gamma(iy)|^2 (relative)");
  for (int k = 1; k <= 3; ++k) {
    const SeriesTail e = EtaProduct(std::ldexp(1.0, k), kCtrl);
    c.Near(std::abs(e.value), 0.0, std::max(e.tail_bound, kCtrl.tol),
           "eta(2^" + std::to_string(k) + ")");
  }
  c.Near(RqCoefficients(64).q, EtaProduct(1.0, kCtrl).value.real(), 1e-12,
         "Q = eta(1)");
  const double g0 = GSeries(0.0, kCtrl).value.real();
  c.Near(GLogSeries(0.0, kCtrl).value.real(), g0, 1e-12, "g(0) two routes");
  c.Near(g0, 0.86887665, 5e-9, "g(0) seven digits");
}

void CrossEngine(Criterion& c) {
  const std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75};
  constexpr std::int64_t kTrials = 1'000'000;
  std::uint64_t seed = 20260101;
  for (const char* name :
       {"gumbel:1.4426950408889634", "aldous", "uniform:2", "uniform2u:2",
        "approx-counting", "successful-search", "patricia"}) {
    const CharacteristicModel m = CatalogByName(name).model;
    std::vector<double> mean(alphas.size()), var(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      mean[i] = MomentRounded(m, 1, alphas[i], kCtrl);
      var[i] = VarRounded(m, alphas[i], kCtrl);
    }
    const std::string tag = std::string(name);
    double worst_z = 0.0, worst_quad = 0.0;
    if (m.has_sampler()) {
      const std::vector<McSummary> mc =
          McRoundedSummaries(m.sampler, alphas, kTrials, ++seed);
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        const std::string at = tag + " a=" + std::to_string(alphas[i]);
        c.Near(mc[i].mean.value, mean[i], 4.0 * mc[i].mean.std_error,
               at + " MC mean");
        c.Near(mc[i].variance.value, var[i], 4.0 * mc[i].variance.std_error,
               at + " MC variance");
        worst_z = std::max(
            {worst_z,
             std::fabs(mc[i].mean.value - mean[i]) / mc[i].mean.std_error,
             std::fabs(mc[i].variance.value - var[i]) /
                 mc[i].variance.std_error});
      }
    }
    if (m.has_cdf()) {
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        const std::string at = tag + " a=" + std::to_string(alphas[i]);
        const double qm =
            QuadRoundedMoment(m.cdf, 1, alphas[i], -60.0, 80.0).value;
        const double qv = QuadRoundedVariance(m.cdf, alphas[i], -60.0, 80.0).value;
        c.Near(qm, mean[i], 1e-6, at + " quadrature mean");
        c.Near(qv, var[i], 1e-6, at + " quadrature variance");
        worst_quad = std::max(
            {worst_quad, std::fabs(qm - mean[i]), std::fabs(qv - var[i])});
      }
    }
    std::printf("  %-26s MC max |z| %s, quadrature max err %.3g\n", name,
                m.has_sampler() ? std::to_string(worst_z).c_str() : "n/a",
                worst_quad);
    c.Expect(m.has_sampler() || m.has_cdf(), tag + " has no oracle");
  }

  // mixture over a 1024-point alpha grid against P(X + U <= x)
  const CharacteristicModel g = ScaledGumbel(1.0 / kLn2).model;
  const std::vector<double> grid = MidpointGrid(1024);
  double sup = 0.0;
  for (double x = -4.0; x <= 10.0; x += 0.05) {
    double avg = 0.0;
    for (double a : grid) avg += CdfRounded(g, x, a);
    avg /= static_cast<double>(grid.size());
    constexpr int kPanels = 2000;
    double s = g.cdf(x) + g.cdf(x - 1.0);
    for (int i = 1; i < kPanels; ++i) {
      s += (i % 2 ? 4.0 : 2.0) * g.cdf(x - static_cast<double>(i) / kPanels);
    }
    sup = std::max(sup, std::fabs(avg - s / (3.0 * kPanels)));
  }
  std::printf("  mixture sup-norm (K = 1024) = %.3g\n", sup);
  c.Near(sup, 0.0, 1e-3, "mixture sup-norm");

  std::vector<double> ns;
  for (int k = 4; k <= 14; ++k) ns.push_back(std::ldexp(1.0, k));
  for (const char* name : {"approx-counting", "trie-depth:2", "patricia"}) {
    const std::vector<ConvergencePoint> pts =
        ConvergenceCheck(ProcessByName(name), ns);
    bool decreasing = true;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      decreasing = decreasing && pts[i].log_tv < pts[i - 1].log_tv;
    }
    std::printf("  %s: tv %.4g -> %.4g (ln %.6g -> %.6g)\n", name,
                pts.front().tv, pts.back().tv, pts.front().log_tv,
                pts.back().log_tv);
    c.Expect(decreasing, std::string(name) + " strictly decreasing");
    c.Expect(pts.back().log_tv < pts.front().log_tv - kLn2,
             std::string(name) + " final < half initial");
  }
}

void MomentIndeterminacy(Criterion& c) {
  const CharacteristicModel m = ApproxCountingLimit().model;
  const LatticeDistribution a = PmfRounded(m, 0.0);
  const LatticeDistribution b = PmfRounded(m, 0.5);
  for (int k = 1; k <= 3; ++k) {
    const auto f = [k](double x) { return std::exp2(k * x); };
    c.Near(a.Expect(f), b.Expect(f), 1e-9,
           "E 2^{" + std::to_string(k) + "X_a}");
  }
  c.Near(TvDistance(a, b), 1.0, 1e-12, "total variation");
}

void FaultInjection(Criterion& c) {
  for (const std::string& name : cli::CheckNames()) {
    const bool clean = cli::RunCheck(name, false).pass;
    const bool tampered = cli::RunCheck(name, true).pass;
    std::printf("  %-24s clean=%s tampered=%s\n", name.c_str(),
                clean ? "pass" : "fail", tampered ? "pass" : "fail");
    c.Expect(clean, name + " passes untampered");
    c.Expect(!tampered, name + " fails when tampered");
  }
}

struct Entry {
  int id;
  const char* title;
  std::function<void(Criterion&)> run;
};

}  // namespace
}  // namespace roundosc

int main() {
  using roundosc::Criterion;
  const roundosc::Entry entries[] = {
      {1, "gumbel oscillation bound", roundosc::GumbelBound},
      {2, "patricia constants", roundosc::PatriciaConstants},
      {3, "patricia cancellation", roundosc::PatriciaCancellation},
      {4, "approx-counting exponential moments",
       roundosc::ApproxCountingMoments},
      {5, "successful-search exponential moments",
       roundosc::SuccessfulSearchMoments},
      {6, "aldous fractional-part mean", roundosc::AldousFraction},
      {7, "uniform family exactness", roundosc::UniformExactness},
      {8, "poissonized patricia", roundosc::PoissonizedPatricia},
      {9, "special-function identities", roundosc::SpecialFunctions},
      {10, "cross-engine agreement", roundosc::CrossEngine},
      {11, "moment indeterminacy", roundosc::MomentIndeterminacy},
      {12, "fault injection", roundosc::FaultInjection},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.Expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    for (const auto& f : c.failures()) std::printf("  failed: %s\n", f.c_str());
    std::printf("%s %d %s (worst err/tol %.3g, %.1f s)\n",
                c.ok() ? "PASS" : "FAIL", e.id, e.title, c.worst(), secs);
    std::fflush(stdout);
    if (!c.ok()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(entries)) - failed,
              std::size(entries));
  return failed == 0 ? 0 : 1;
}
