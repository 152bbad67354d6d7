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

#include "roundosc/catalog.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "roundosc/error.h"
#include "roundosc/oracle.h"
#include "roundosc/processes.h"
#include "roundosc/special_fn.h"

namespace roundosc {
namespace {

constexpr int kRqTerms = 64;
constexpr double kTableLo = -6.0;
constexpr double kTableHi = 14.0;
constexpr int kTablePoints = 1 << 14;
// psi of the approximate-counting limit is 0 * inf at t = k ln 2; inside this
// radius the value is taken from the closed-form limit plus a first-order
// correction.
constexpr double kPoleGuard = 1e-6;

const RqTable& Rq() {
  static const RqTable table = RqCoefficients(kRqTerms);
  return table;
}

double Eta1() {
  static const double v = EtaProduct(1.0, SeriesControl{}).value.real();
  return v;
}

double Factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<Complex> JetProduct(const std::vector<Complex>& a,
                                const std::vector<Complex>& b) {
  std::vector<Complex> c(std::min(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) c[k] += a[j] * b[k - j];
  }
  return c;
}

// phi^(k)(2 pi n) = i^k k! [h^k] psi(2 pi n i + h)
std::vector<Complex> PsiJetToPhiDerivatives(const std::vector<Complex>& jet) {
  std::vector<Complex> out(jet.size());
  Complex ik = 1.0;
  for (std::size_t k = 0; k < jet.size(); ++k) {
    out[k] = ik * Factorial(static_cast<int>(k)) * jet[k];
    ik *= Complex(0.0, 1.0);
  }
  return out;
}

// Taylor coefficients of Gamma(1 - (t0 + h) c) in h.
std::vector<Complex> ScaledGammaJet(Complex t0, double c, int order) {
  std::vector<Complex> jet = GammaJet(1.0 - c * t0, order);
  double scale = 1.0;
  for (auto& v : jet) {
    v *= scale;
    scale *= -c;
  }
  return jet;
}

std::vector<double> GumbelCumulants(double c, int order) {
  std::vector<double> k(order);
  k[0] = c * kEulerGamma;
  for (int r = 2; r <= order; ++r) {
    k[r - 1] = std::pow(c, r) * Factorial(r - 1) * ZetaInt(r);
  }
  return k;
}

// Cumulants of W with E e^{tW} = eta(e^t)/eta(1):
// kappa_r = -sum_j j^{r-1} / (2^j - 1).
std::vector<double> EtaCumulants(int order) {
  std::vector<double> k(order, 0.0);
  for (int r = 1; r <= order; ++r) {
    double s = 0.0;
    for (int j = 200; j >= 1; --j) {
      s += std::pow(j, r - 1) / (std::ldexp(1.0, j) - 1.0);
    }
    k[r - 1] = -s;
  }
  return k;
}

std::vector<Complex> EtaJetAtZero(int order) {
  const std::vector<double> mu = CumulantsToMoments(EtaCumulants(order));
  std::vector<Complex> jet(order + 1);
  jet[0] = 1.0;
  for (int k = 1; k <= order; ++k) jet[k] = mu[k - 1] / Factorial(k);
  return jet;
}

std::vector<double> ApproxCountingCumulants(int order) {
  std::vector<double> k = EtaCumulants(order);
  const std::vector<double> g = GumbelCumulants(1.0 / kLn2, order);
  for (int r = 0; r < order; ++r) k[r] += g[r];
  return k;
}

Complex ApproxPsiRaw(Complex t) {
  const SeriesTail eta = EtaOfExp(t, SeriesControl{});
  return eta.value / Eta1() * GammaComplex(1.0 - t / kLn2);
}

// ln 2/(k-1)! prod_{j<k} (2^j - 1)
double ApproxPsiAtPole(int k) {
  double v = kLn2;
  for (int j = 1; j < k; ++j) v *= (std::ldexp(1.0, j) - 1.0) / j;
  return v;
}

Complex ApproxPsi(Complex t) {
  const double k = std::nearbyint(t.real() / kLn2);
  if (k >= 1.0) {
    const Complex pole(k * kLn2, 0.0);
    if (std::abs(t - pole) < kPoleGuard) {
      const double h = 1e-3;
      const Complex d =
          (ApproxPsiRaw(pole + h) - ApproxPsiRaw(pole - h)) / (2.0 * h);
      return ApproxPsiAtPole(static_cast<int>(k)) + (t - pole) * d;
    }
  }
  return ApproxPsiRaw(t);
}

std::vector<Complex> ApproxPsiJet(std::int64_t n, int order) {
  const Complex t0(0.0, 2.0 * kPi * static_cast<double>(n));
  // eta(e^{t0 + h}) = eta(e^h)
  return JetProduct(EtaJetAtZero(order), ScaledGammaJet(t0, 1.0 / kLn2, order));
}

double SurvivalTerm(double y) {
  // (1 - e^-y)/y
  return y == 0.0 ? 1.0 : -std::expm1(-y) / y;
}

// Patricia psi for Re t < ln 2 after one integration by parts of the Mellin
// form: psi(t) = e^{-t} int s^{-t/ln 2} e^{-s} (D(s, e^t) - dD/ds) ds, taken
// as a trapezoid sum over v = ln s. The integrand depends on t only through
// u = e^t, so it is cached per u on nested grids; lattice sums over
// t + 2 pi n i then reuse it.
constexpr double kMellinLo = -38.0;
constexpr double kMellinHi = 4.0;
constexpr int kMellinBaseIntervals = 42 * 32;

// e^{v - e^v} (D - D_s) at s = e^v.
Complex MellinIntegrand(double v, Complex u) {
  const double s = std::exp(v);
  const Complex w = 1.0 - u;
  // factors f_k = 1 - p_k w and their s-derivatives
  std::vector<Complex> f, df;
  for (int k = 1; k < 1100; ++k) {
    const double x = std::ldexp(s, -k);
    if (x < 1e-18) break;
    const double e = std::exp(-x);
    f.push_back(1.0 + std::expm1(-x) * w);
    df.push_back(-w * std::ldexp(e, -k));
  }
  Complex d = 1.0, ds = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    ds = ds * f[k] + d * df[k];
    d *= f[k];
  }
  return std::exp(v - s) * (d - ds);
}

struct MellinCache {
  bool valid = false;
  Complex u;
  int level = 0;  // step = base / 2^level
  std::vector<Complex> values;
};

// u = e^t agrees with the cached one up to the rounding of t.
const std::vector<Complex>& MellinValues(Complex t, int level,
                                         int* cached_level) {
  thread_local MellinCache cache;
  const Complex u = std::exp(t);
  const double same =
      64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(t));
  if (!cache.valid || std::abs(u - cache.u) > same * std::abs(u)) {
    cache.valid = true;
    cache.u = u;
    cache.level = 0;
    cache.values.resize(kMellinBaseIntervals + 1);
    const double h = (kMellinHi - kMellinLo) / kMellinBaseIntervals;
    for (int i = 0; i <= kMellinBaseIntervals; ++i) {
      cache.values[i] = MellinIntegrand(kMellinLo + i * h, u);
    }
  }
  while (cache.level < level) {
    const std::size_t n = cache.values.size() - 1;
    std::vector<Complex> finer(2 * n + 1);
    const double h = (kMellinHi - kMellinLo) / (2 * n);
    for (std::size_t i = 0; i <= 2 * n; ++i) {
      finer[i] = (i % 2 == 0) ? cache.values[i / 2]
                              : MellinIntegrand(kMellinLo + i * h, cache.u);
    }
    cache.values = std::move(finer);
    ++cache.level;
  }
  *cached_level = cache.level;
  return cache.values;
}

Complex PatriciaPsi(Complex t) {
  if (!(t.real() < kLn2)) {
    throw Error(ErrorCode::kStripViolation,
                "patricia: Re t must stay below ln 2");
  }
  if (t == Complex(0.0)) return 1.0;
  const Complex c = t / kLn2;
  // trapezoid error ~ exp(-(2 pi / h - |c|) d) for a strip of half-width d
  const double base = (kMellinHi - kMellinLo) / kMellinBaseIntervals;
  const double want = 2.0 * kPi / (std::abs(c) + 160.0);
  int level = 0;
  while (base / std::ldexp(1.0, level) > want) ++level;
  int cached_level = 0;
  const std::vector<Complex>& values = MellinValues(t, level, &cached_level);
  const std::size_t stride = std::size_t{1} << (cached_level - level);
  const double h = base / std::ldexp(1.0, level);
  const Complex step = std::exp(-c * h);
  Complex sum = 0.0, phase = 0.0;
  const std::size_t last = values.size() - 1;
  for (std::size_t i = 0, j = 0; i <= last; i += stride, ++j) {
    // exact phase every 32 points, recurrence in between
    phase = (j % 32 == 0) ? std::exp(-c * (kMellinLo + j * h)) : phase * step;
    const double w = (i == 0 || i == last) ? 0.5 : 1.0;
    sum += w * values[i] * phase;
  }
  return std::exp(-t) * h * sum;
}

std::shared_ptr<const InverseCdfTable> ApproxTable() {
  static const auto table = std::make_shared<const InverseCdfTable>(
      ApproxCountingCdf, kTableLo, kTableHi, kTablePoints);
  return table;
}

double ApproxSample(Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return ApproxTable()->Quantile(unif(rng));
}

// Aldous distribution function 1 - x/(e^x - 1) and density.
double AldousSurvival(double x) {
  if (x <= 0.0) return 1.0;
  return x / std::expm1(x);
}

double AldousDensity(double x) {
  if (x < 0.0) return 0.0;
  if (x < 1e-3) return 0.5 - x / 6.0 + x * x * x / 180.0;
  const double e = std::exp(-x);
  const double d = -std::expm1(-x);
  return e * (std::expm1(-x) + x) / (d * d);
}

double AldousSample(Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double v = 1.0 - unif(rng);  // survival level in (0, 1]
  if (v >= 1.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (AldousSurvival(hi) > v) hi *= 2.0;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double g = AldousSurvival(x) - v;
    if (g > 0.0) lo = x; else hi = x;
    const double dens = AldousDensity(x);
    double next = dens > 0.0 ? x + g / dens : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 1e-15 * (1.0 + x)) return next;
    x = next;
  }
  return x;
}

double Clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// int_{-inf}^{y} clamp(v/N, 0, 1) dv
double RampIntegral(double y, double n) {
  if (y <= 0.0) return 0.0;
  if (y <= n) return y * y / (2.0 * n);
  return 0.5 * n + (y - n);
}

}  // namespace

double AlphaConstant() {
  double s = 0.0;
  for (int n = 200; n >= 1; --n) s += 1.0 / (std::ldexp(1.0, n) - 1.0);
  return s;
}

namespace {

// F(x) = sum_j R_j e^{-2^{j-x}} / Q.
double ApproxCountingCdfDirect(double x) {
  const RqTable& rq = Rq();
  double s = 0.0;
  for (int j = kRqTerms; j >= 0; --j) {
    s += rq.r[j] * std::exp(-std::exp2(j - x));
  }
  return s / rq.q;
}

// e^{-y} - sum_{r<M} (-y)^r / r!, y >= 0.
double ExpRemainder(int order, double y) {
  if (y <= order) {
    double term = std::exp(order * std::log(y) - std::lgamma(order + 1.0));
    if (order % 2 == 1) term = -term;
    double s = 0.0;
    for (int r = order; r < order + 400; ++r) {
      s += term;
      if (std::fabs(term) <= 1e-18 * std::fabs(s)) break;
      term *= -y / (r + 1);
    }
    return s;
  }
  double poly = 0.0, term = 1.0;
  for (int r = 0; r < order; ++r) {
    poly += term;
    term *= -y / (r + 1);
  }
  return std::exp(-y) - poly;
}

// sum_j R_j T_M(y_j) / y_j^p with T_M the exponential remainder. The
// polynomial parts of order >= 1 sum to zero because eta(2^r) = 0 for r >= 1,
// so any M >= min_order gives the same value; M is chosen to minimise the
// largest term.
double RemainderSum(const std::vector<double>& y, int min_order, int p) {
  constexpr int kMaxOrder = 64;
  static const std::vector<double> log_r = [] {
    std::vector<double> v;
    for (double r : Rq().r) v.push_back(std::log(std::fabs(r)));
    return v;
  }();
  static const std::vector<double> log_fact = [] {
    std::vector<double> v(kMaxOrder + 1);
    for (int k = 0; k <= kMaxOrder; ++k) v[k] = std::lgamma(k + 1.0);
    return v;
  }();
  std::vector<double> log_y(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) log_y[j] = std::log(y[j]);
  int best = min_order;
  double best_size = std::numeric_limits<double>::infinity();
  for (int order = min_order; order < kMaxOrder; ++order) {
    double size = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < y.size(); ++j) {
      const double lb =
          y[j] <= order
              ? order * log_y[j] - log_fact[order]
              : std::max((order - 1) * log_y[j] - log_fact[order - 1], 0.0);
      size = std::max(size, log_r[j] + lb - p * log_y[j]);
    }
    if (size < best_size) {
      best_size = size;
      best = order;
    } else if (order > best + 4) {
      break;  // the bound has turned upward
    }
  }
  double s = 0.0;
  for (std::size_t j = y.size(); j-- > 0;) {
    s += Rq().r[j] * ExpRemainder(best, y[j]) / std::pow(y[j], p);
  }
  return s;
}

// Number of R_j before they underflow to zero.
std::size_t RqNonzero() {
  const RqTable& rq = Rq();
  std::size_t n = 0;
  while (n <= static_cast<std::size_t>(kRqTerms) && rq.r[n] != 0.0) ++n;
  return n;
}

// Direct sum for F(x) = sum_i R_i (1 - e^{-y})/y / Q, y = 2^{i+1-x}.
double SuccessfulSearchCdfDirect(double x) {
  const RqTable& rq = Rq();
  double s = 0.0;
  for (int i = kRqTerms; i >= 0; --i) {
    s += rq.r[i] * SurvivalTerm(std::exp2(i + 1 - x));
  }
  return s / rq.q;
}

}  // namespace

double ApproxCountingSurvival(double x) {
  if (x < 1.0) return 1.0 - ApproxCountingCdfDirect(x);
  std::vector<double> y(RqNonzero());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = std::exp2(j - x);
  return std::max(0.0, -RemainderSum(y, 1, 0) / Rq().q);
}

double SuccessfulSearchSurvival(double x) {
  if (x < 1.0) return 1.0 - SuccessfulSearchCdfDirect(x);
  std::vector<double> y(RqNonzero());
  for (std::size_t j = 0; j < y.size(); ++j) y[j] = std::exp2(j + 1.0 - x);
  return std::max(0.0, RemainderSum(y, 2, 1) / Rq().q);
}

double ApproxCountingCdf(double x) {
  return x < 1.0 ? ApproxCountingCdfDirect(x)
                 : 1.0 - ApproxCountingSurvival(x);
}

double SuccessfulSearchCdf(double x) {
  return x < 1.0 ? SuccessfulSearchCdfDirect(x)
                 : 1.0 - SuccessfulSearchSurvival(x);
}

double PatriciaCdf(double x) {
  double f = 0.0;
  for (int m = 0; m < 2000; ++m) {
    const double s = std::exp2(m - 1 - x);
    if (s > 745.0) break;
    const LatticeDistribution b = BernoulliSum(PatriciaProfile(s));
    const double bm =
        m < static_cast<int>(b.probs.size()) ? b.probs[m] : 0.0;
    f += bm * std::exp(-s);
  }
  return std::min(1.0, f);
}

CatalogEntry ScaledGumbel(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::kInvalidArgument, "gumbel scale must be positive");
  }
  CatalogEntry e;
  CharacteristicModel& m = e.model;
  m.name = "gumbel:" + std::to_string(c);
  m.phi = [c](double t) { return GammaComplex(Complex(1.0, -c * t)); };
  m.phi_lattice = [c](std::int64_t n, int order) {
    const Complex t0(0.0, 2.0 * kPi * static_cast<double>(n));
    return PsiJetToPhiDerivatives(ScaledGammaJet(t0, c, order));
  };
  m.psi = [c](Complex t) { return GammaComplex(1.0 - c * t); };
  m.strip = Strip{-std::numeric_limits<double>::infinity(), 1.0 / c};
  m.decay_exponent = 6.0;  // exponential decay; any delta is valid
  m.max_moment_order = 4;
  m.raw_moments = CumulantsToMoments(GumbelCumulants(c, 4));
  m.cdf = [c](double x) { return std::exp(-std::exp(-x / c)); };
  m.density = [c](double x) {
    const double e = std::exp(-x / c);
    return e * std::exp(-e) / c;
  };
  m.sampler = [c](Rng& rng) {
    std::exponential_distribution<double> ex(1.0);
    return -c * std::log(ex(rng));
  };
  e.provenance = "c times a standard Gumbel variable";
  e.analytic_extras = {{"c", c}, {"euler_gamma", kEulerGamma}};
  return e;
}

CatalogEntry AldousAssignment() {
  CatalogEntry e;
  CharacteristicModel& m = e.model;
  m.name = "aldous";
  const auto psi = [](Complex t) {
    return 1.0 + t * Trigamma(1.0 - t);
  };
  m.psi = psi;
  m.phi = [psi](double t) { return psi(Complex(0.0, t)); };
  m.phi_lattice = [](std::int64_t n, int order) {
    // psi^(k)(s) = [k=0] + s (-1)^k psi_{k+1}(1-s) + k (-1)^{k-1} psi_k(1-s)
    const Complex s(0.0, 2.0 * kPi * static_cast<double>(n));
    std::vector<Complex> jet(order + 1);
    for (int k = 0; k <= order; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      Complex v = sign * s * Polygamma(k + 1, 1.0 - s);
      if (k == 0) v += 1.0;
      else v += -sign * static_cast<double>(k) * Polygamma(k, 1.0 - s);
      jet[k] = v / Factorial(k);
    }
    return PsiJetToPhiDerivatives(jet);
  };
  m.strip = Strip{-std::numeric_limits<double>::infinity(), 1.0};
  m.decay_exponent = 1.0;
  m.max_moment_order = 2;
  // EX^k = k k! zeta(k+1)
  m.raw_moments = {ZetaInt(2), 4.0 * ZetaInt(3)};
  m.cdf = [](double x) { return 1.0 - AldousSurvival(x); };
  m.density = AldousDensity;
  m.sampler = AldousSample;
  e.provenance = "limit law of the random assignment cost";
  e.analytic_extras = {{"mean", kPi * kPi / 6.0}};
  return e;
}

CatalogEntry UniformN(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "uniform needs N >= 1");
  const double nd = n;
  CatalogEntry e;
  CharacteristicModel& m = e.model;
  m.name = "uniform:" + std::to_string(n);
  m.phi = [nd](double t) { return FDerivatives(Complex(0.0, nd * t), 0)[0]; };
  m.phi_lattice = [n, nd](std::int64_t k, int order) {
    std::vector<Complex> f = FDerivativesAtLattice(n * k, order);
    Complex scale = 1.0;  // (iN)^j
    for (auto& v : f) {
      v *= scale;
      scale *= Complex(0.0, nd);
    }
    return f;
  };
  m.psi = [nd](Complex t) { return FDerivatives(nd * t, 0)[0]; };
  m.decay_exponent = 1.0;
  m.max_moment_order = 4;
  for (int k = 1; k <= 4; ++k) m.raw_moments.push_back(std::pow(nd, k) / (k + 1));
  m.cdf = [nd](double x) { return Clamp01(x / nd); };
  m.density = [nd](double x) { return (x > 0.0 && x < nd) ? 1.0 / nd : 0.0; };
  m.sampler = [nd](Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, nd);
    return unif(rng);
  };
  e.provenance = "uniform on (0, N)";
  e.analytic_extras = {{"N", nd}};
  return e;
}

CatalogEntry UniformNPlus2U(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "uniform2u needs N >= 1");
  const double nd = n;
  CatalogEntry e;
  CharacteristicModel& m = e.model;
  m.name = "uniform2u:" + std::to_string(n);
  m.phi = [nd](double t) {
    return FDerivatives(Complex(0.0, nd * t), 0)[0] *
           FDerivatives(Complex(0.0, t), 0)[0];
  };
  m.phi_lattice = [n, nd](std::int64_t k, int order) {
    const std::vector<Complex> a = FDerivativesAtLattice(n * k, order);
    const std::vector<Complex> b = FDerivativesAtLattice(k, order);
    // Leibniz on f(iNt) f(it)
    std::vector<Complex> out(order + 1, 0.0);
    for (int r = 0; r <= order; ++r) {
      double binom = 1.0;
      for (int j = 0; j <= r; ++j) {
        const Complex da = std::pow(Complex(0.0, nd), j) * a[j];
        const Complex db = std::pow(Complex(0.0, 1.0), r - j) * b[r - j];
        out[r] += binom * da * db;
        binom = binom * (r - j) / (j + 1);
      }
    }
    return out;
  };
  m.psi = [nd](Complex t) {
    return FDerivatives(nd * t, 0)[0] * FDerivatives(t, 0)[0];
  };
  m.decay_exponent = 2.0;
  m.max_moment_order = 4;
  for (int k = 1; k <= 4; ++k) {
    double s = 0.0, binom = 1.0;
    for (int j = 0; j <= k; ++j) {
      s += binom * std::pow(nd, j) / (j + 1) / (k - j + 1);
      binom = binom * (k - j) / (j + 1);
    }
    m.raw_moments.push_back(s);
  }
  m.cdf = [nd](double x) {
    return Clamp01(RampIntegral(x, nd) - RampIntegral(x - 1.0, nd));
  };
  m.density = [nd](double x) {
    return Clamp01(x / nd) - Clamp01((x - 1.0) / nd);
  };
  m.sampler = [nd](Rng& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double a = unif(rng);
    return nd * a + unif(rng);
  };
  e.provenance = "uniform on (0, N) plus an independent U(0, 1)";
  e.analytic_extras = {{"N", nd}};
  return e;
}

CatalogEntry ApproxCountingLimit() {
  CatalogEntry e;
  CharacteristicModel& m = e.model;
  m.name = "approx-counting";
  m.psi = ApproxPsi;
  m.phi = [](double t) { return ApproxPsi(Complex(0.0, t)); };
  m.phi_lattice = [](std::int64_t n, int order) {
    return PsiJetToPhiDerivatives(ApproxPsiJet(n, order));
  };
  m.decay_exponent = 6.0;
  m.max_moment_order = 4;
  m.raw_moments = CumulantsToMoments(ApproxCountingCumulants(4));
  m.cdf = ApproxCountingCdf;
  m.survival = ApproxCountingSurvival;
  m.sampler = ApproxSample;
  e.provenance = "limit of approximate counting U_n - log2 n";
  e.analytic_extras = {{"Q", Rq().q},
                       {"eta1", Eta1()},
                       {"alpha_const", AlphaConstant()},
                       {"euler_gamma", kEulerGamma}};
  return e;
}

CatalogEntry SuccessfulSearchLimit() {
  CatalogEntry e;
  CharacteristicModel& m = e.model;
  m.name = "successful-search";
  const auto psi = [](Complex t) {
    if (!(t.real() > -kLn2)) {
      throw Error(ErrorCode::kStripViolation,
                  "successful-search: Re t must exceed -ln 2");
    }
    return ApproxPsi(t) * std::exp(t) / (1.0 + t / kLn2);
  };
  m.psi = psi;
  m.phi = [psi](double t) { return psi(Complex(0.0, t)); };
  m.phi_lattice = [](std::int64_t n, int order) {
    const Complex t0(0.0, 2.0 * kPi * static_cast<double>(n));
    const Complex a = 1.0 + t0 / kLn2;
    // e^h / (a + h/ln2), using e^{t0} = 1
    std::vector<Complex> ex(order + 1), inv(order + 1);
    for (int k = 0; k <= order; ++k) {
      ex[k] = 1.0 / Factorial(k);
      inv[k] = std::pow(-1.0 / (kLn2 * a), k) / a;
    }
    return PsiJetToPhiDerivatives(
        JetProduct(ApproxPsiJet(n, order), JetProduct(ex, inv)));
  };
  m.strip = Strip{-kLn2, std::numeric_limits<double>::infinity()};
  m.decay_exponent = 6.0;
  m.max_moment_order = 4;
  std::vector<double> k = ApproxCountingCumulants(4);
  k[0] += 1.0 - 1.0 / kLn2;
  for (int r = 2; r <= 4; ++r) k[r - 1] += std::pow(-1.0 / kLn2, r) * Factorial(r - 1);
  m.raw_moments = CumulantsToMoments(k);
  m.cdf = SuccessfulSearchCdf;
  m.survival = SuccessfulSearchSurvival;
  m.sampler = [](Rng& rng) {
    const double xu = ApproxSample(rng);
    std::exponential_distribution<double> ex(1.0);
    return xu - ex(rng) / kLn2 + 1.0;
  };
  e.provenance = "limit of successful search S_n - log2 n";
  e.analytic_extras = {{"Q", Rq().q},
                       {"eta1", Eta1()},
                       {"alpha_const", AlphaConstant()},
                       {"euler_gamma", kEulerGamma}};
  return e;
}

CatalogEntry PatriciaLimit() {
  CatalogEntry e;
  CharacteristicModel& m = e.model;
  m.name = "patricia";
  m.psi = PatriciaPsi;
  m.phi = [](double t) {
    if (t == 0.0) return Complex(1.0);
    return PatriciaPsi(Complex(0.0, t));
  };
  m.phi_lattice = [](std::int64_t n, int order) {
    const Complex w(0.0, 2.0 * kPi * static_cast<double>(n) / kLn2);
    const Complex g1 = GammaComplex(1.0 - w);
    std::vector<Complex> out{g1};
    if (order >= 1) {
      const Complex dpsi = -g1 - g1 * Digamma(1.0 - w) / kLn2 -
                           w * GSeries(-w, SeriesControl{}).value;
      out.push_back(Complex(0.0, 1.0) * dpsi);
    }
    return out;  // higher orders have no closed form
  };
  m.strip = Strip{-std::numeric_limits<double>::infinity(), kLn2};
  m.decay_exponent = 6.0;
  m.max_moment_order = 2;
  const double g0 = GSeries(0.0, SeriesControl{}).value.real();
  const double mean = kEulerGamma / kLn2 - 1.0;
  const double gamma2 = kEulerGamma * kEulerGamma + kPi * kPi / 6.0;
  const double second = gamma2 / (kLn2 * kLn2) - 2.0 * kEulerGamma / kLn2 +
                        1.0 - 2.0 * g0 / kLn2;
  m.raw_moments = {mean, second};
  m.cdf = PatriciaCdf;
  e.provenance = "limit of Poissonized Patricia trie depth Y_s - log2 s";
  e.analytic_extras = {
      {"g0", g0},
      {"g0_log", GLogSeries(0.0, SeriesControl{}).value.real()},
      {"var_x", kPi * kPi / (6.0 * kLn2 * kLn2) - 2.0 * g0 / kLn2}};
  return e;
}

CatalogEntry CatalogByName(std::string_view name) {
  const auto parse_tail = [&](std::string_view prefix) -> std::string {
    return std::string(name.substr(prefix.size()));
  };
  try {
    if (name == "aldous") return AldousAssignment();
    if (name == "approx-counting") return ApproxCountingLimit();
    if (name == "successful-search") return SuccessfulSearchLimit();
    if (name == "patricia") return PatriciaLimit();
    if (name.starts_with("gumbel:")) {
      std::size_t used = 0;
      const std::string tail = parse_tail("gumbel:");
      const double c = std::stod(tail, &used);
      if (used == tail.size() && c > 0.0 && std::isfinite(c)) {
        return ScaledGumbel(c);
      }
    }
    for (std::string_view prefix : {"uniform:", "uniform2u:"}) {
      if (!name.starts_with(prefix)) continue;
      std::size_t used = 0;
      const std::string tail = parse_tail(prefix);
      const int n = std::stoi(tail, &used);
      if (used == tail.size() && n >= 1) {
        return prefix == "uniform:" ? UniformN(n) : UniformNPlus2U(n);
      }
    }
  } catch (const std::logic_error&) {
    // stod/stoi failures fall through to the unknown-name error
  }
  throw Error(ErrorCode::kUnknownName,
              "unknown distribution '" + std::string(name) + "'");
}

std::vector<std::string> CatalogNames() {
  return {"gumbel:c", "aldous", "uniform:N", "uniform2u:N",
          "approx-counting", "successful-search", "patricia"};
}

InverseCdfTable::InverseCdfTable(const std::function<double(double)>& cdf,
                                 double lo, double hi, int points)
    : lo_(lo), step_((hi - lo) / (points - 1)) {
  if (points < 3 || !(hi > lo)) {
    throw Error(ErrorCode::kInvalidArgument, "inverse-CDF table grid");
  }
  f_.resize(points);
  for (int i = 0; i < points; ++i) {
    // running max keeps the table monotone against rounding noise
    f_[i] = std::max(i > 0 ? f_[i - 1] : 0.0, Clamp01(cdf(lo + i * step_)));
  }
  // Fritsch-Carlson slopes
  std::vector<double> d(points - 1);
  for (int i = 0; i + 1 < points; ++i) d[i] = (f_[i + 1] - f_[i]) / step_;
  slope_.assign(points, 0.0);
  slope_[0] = d[0];
  slope_[points - 1] = d[points - 2];
  for (int i = 1; i + 1 < points; ++i) {
    if (d[i - 1] > 0.0 && d[i] > 0.0) {
      slope_[i] = 2.0 * d[i - 1] * d[i] / (d[i - 1] + d[i]);
    }
  }
}

double InverseCdfTable::HermiteAt(std::size_t i, double x) const {
  const double t = (x - (lo_ + i * step_)) / step_;
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * f_[i] + (t3 - 2 * t2 + t) * step_ * slope_[i] +
         (-2 * t3 + 3 * t2) * f_[i + 1] + (t3 - t2) * step_ * slope_[i + 1];
}

double InverseCdfTable::Cdf(double x) const {
  if (x <= lo_) return f_.front();
  const double pos = (x - lo_) / step_;
  if (pos >= static_cast<double>(f_.size() - 1)) return f_.back();
  return HermiteAt(static_cast<std::size_t>(pos), x);
}

double InverseCdfTable::Quantile(double u) const {
  if (u <= f_.front()) return lo_;
  if (u >= f_.back()) return lo_ + (f_.size() - 1) * step_;
  const auto it = std::upper_bound(f_.begin(), f_.end(), u);
  const std::size_t i = static_cast<std::size_t>(it - f_.begin()) - 1;
  double a = lo_ + i * step_, b = a + step_;
  for (int k = 0; k < 60 && b - a > 1e-15 * (1.0 + std::fabs(a)); ++k) {
    const double mid = 0.5 * (a + b);
    if (HermiteAt(i, mid) < u) a = mid; else b = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace roundosc
