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

#include "roundosc/rounded.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "roundosc/error.h"

namespace roundosc {
namespace {

// i^-m
Complex InversePowerOfI(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

void CheckOrder(const CharacteristicModel& model, int m) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "negative order m");
  if (m > model.max_moment_order) {
    throw Error(ErrorCode::kUnsupported,
                model.name + ": m = " + std::to_string(m) +
                    " exceeds max_moment_order " +
                    std::to_string(model.max_moment_order));
  }
  if (static_cast<int>(model.raw_moments.size()) < m) {
    throw Error(ErrorCode::kInsufficientOrder, model.name + ": raw moments");
  }
}

double Binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

bool IsMidpointGrid(std::span<const double> alphas) {
  const double k = static_cast<double>(alphas.size());
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (std::fabs(alphas[i] - (i + 0.5) / k) > 1e-15) return false;
  }
  return !alphas.empty();
}

}  // namespace

Complex TildePhi(const CharacteristicModel& model, double t) {
  // w(t) = f(it); the series branch of FDerivatives covers t near 0
  return FDerivatives(Complex(0.0, t), 0)[0] * model.phi(t);
}

SummationMode ResolveMode(const CharacteristicModel& model,
                          const SeriesControl& ctrl) {
  if (ctrl.mode != SummationMode::kAuto) return ctrl.mode;
  return model.decay_exponent >= 1.0 ? SummationMode::kAdaptive
                                     : SummationMode::kCesaro;
}

LatticeSum CharRoundedDetailed(const CharacteristicModel& model, double t,
                               double alpha, const SeriesControl& ctrl) {
  ctrl.Validate();
  alpha = FractionalPart(alpha);
  if (ResolveMode(model, ctrl) == SummationMode::kCesaro) {
    LatticeSum out;
    out.value = FejerSum(
        [&](std::int64_t n) {
          return TildePhi(model, t + 2.0 * kPi * static_cast<double>(n));
        },
        alpha, ctrl.fejer_n);
    out.truncation_n = ctrl.fejer_n;
    out.tail_bound = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (model.decay_exponent < 1.0) {
    throw Error(ErrorCode::kNeedsCesaro,
                model.name + ": decay exponent too small for adaptive mode");
  }
  const auto term = [&](std::int64_t n) {
    const double xp = t + 2.0 * kPi * static_cast<double>(n);
    const double xm = t - 2.0 * kPi * static_cast<double>(n);
    return LatticePair{TildePhi(model, xp), TildePhi(model, xm),
                       std::fabs(xp), std::fabs(xm)};
  };
  return SumLattice(term, TildePhi(model, t), alpha, model.decay_exponent,
                    std::fabs(t), ctrl);
}

Complex CharRounded(const CharacteristicModel& model, double t, double alpha,
                    const SeriesControl& ctrl) {
  return CharRoundedDetailed(model, t, alpha, ctrl).value;
}

LatticeSum MgfRoundedDetailed(const CharacteristicModel& model, Complex t,
                              double alpha, const SeriesControl& ctrl) {
  ctrl.Validate();
  if (!model.has_psi()) {
    throw Error(ErrorCode::kNoMgf, model.name + ": no moment generating function");
  }
  if (!model.strip.Contains(t.real())) {
    throw Error(ErrorCode::kStripViolation,
                model.name + ": Re t outside the strip of the mgf");
  }
  alpha = FractionalPart(alpha);
  const auto tilde = [&](Complex x) {
    return FDerivatives(x, 0)[0] * model.psi(x);
  };
  if (ResolveMode(model, ctrl) == SummationMode::kCesaro) {
    LatticeSum out;
    out.value = FejerSum(
        [&](std::int64_t n) {
          return tilde(t + Complex(0.0, 2.0 * kPi * static_cast<double>(n)));
        },
        alpha, ctrl.fejer_n);
    out.truncation_n = ctrl.fejer_n;
    out.tail_bound = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (model.decay_exponent < 1.0) {
    throw Error(ErrorCode::kNeedsCesaro,
                model.name + ": decay exponent too small for adaptive mode");
  }
  const auto term = [&](std::int64_t n) {
    const Complex step(0.0, 2.0 * kPi * static_cast<double>(n));
    const Complex xp = t + step, xm = t - step;
    return LatticePair{tilde(xp), tilde(xm), std::abs(xp), std::abs(xm)};
  };
  return SumLattice(term, tilde(t), alpha, model.decay_exponent,
                    std::abs(t), ctrl);
}

Complex MgfRounded(const CharacteristicModel& model, Complex t, double alpha,
                   const SeriesControl& ctrl) {
  return MgfRoundedDetailed(model, t, alpha, ctrl).value;
}

Complex DerivTildeAtLattice(const CharacteristicModel& model, int m,
                            std::int64_t n) {
  CheckOrder(model, m);
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "lattice index 0");
  if (m == 0) return 0.0;
  // w^(k)(t) = i^k f^(k)(it); f(2 pi n i) = 0 removes the phi^(m) term
  const std::vector<Complex> f = FDerivativesAtLattice(n, m);
  const std::vector<Complex> phi = model.PhiLattice(n, m - 1);
  Complex sum = 0.0;
  Complex ik(0.0, 1.0);
  for (int k = 1; k <= m; ++k) {
    sum += Binomial(m, k) * (ik * f[k]) * phi[m - k];
    ik *= Complex(0.0, 1.0);
  }
  return sum;
}

LatticeSum BetaMDetailed(const CharacteristicModel& model, int m, double alpha,
                         const SeriesControl& ctrl) {
  CheckOrder(model, m);
  if (model.decay_exponent <= 0.0) {
    throw Error(ErrorCode::kNeedsCesaro,
                model.name + ": oscillation terms need a declared decay");
  }
  const Complex c = InversePowerOfI(m);
  const auto term = [&](std::int64_t n) {
    // real X: the -n term is the conjugate of the +n term
    const Complex v = c * DerivTildeAtLattice(model, m, n);
    const double x = 2.0 * kPi * static_cast<double>(n);
    return LatticePair{v, std::conj(v), x, x};
  };
  LatticeSum s = SumLattice(term, 0.0, alpha, model.decay_exponent, 0.0, ctrl);
  s.value = s.value.real();
  return s;
}

double BetaM(const CharacteristicModel& model, int m, double alpha,
             const SeriesControl& ctrl) {
  return BetaMDetailed(model, m, alpha, ctrl).value.real();
}

std::vector<double> MidpointGrid(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "grid size < 1");
  std::vector<double> g(k);
  for (int i = 0; i < k; ++i) g[i] = (i + 0.5) / k;
  return g;
}

OscillationProfile BetaProfile(const CharacteristicModel& model, int m,
                               std::span<const double> alphas,
                               const SeriesControl& ctrl) {
  ctrl.Validate();
  CheckOrder(model, m);
  if (model.decay_exponent <= 0.0) {
    throw Error(ErrorCode::kNeedsCesaro,
                model.name + ": oscillation terms need a declared decay");
  }
  OscillationProfile out;
  out.order = m;
  out.alphas.assign(alphas.begin(), alphas.end());
  double gap = 2.0;
  for (double& a : out.alphas) {
    a = FractionalPart(a);
    gap = std::min(gap, 2.0 * std::fabs(std::sin(kPi * a)));
  }
  const double delta = model.decay_exponent;
  const Complex c = InversePowerOfI(m);

  std::vector<Complex> coef;
  double cmax = 0.0;
  std::int64_t n_target = std::min<std::int64_t>(64, ctrl.n_max);
  for (;;) {
    for (std::int64_t n = static_cast<std::int64_t>(coef.size()) + 1;
         n <= n_target; ++n) {
      coef.push_back(c * DerivTildeAtLattice(model, m, n));
      cmax = std::max(cmax, std::abs(coef.back()) *
                                std::pow(2.0 * kPi * n, 1.0 + delta));
    }
    const double x = 2.0 * kPi * static_cast<double>(n_target);
    double bound = 2.0 * cmax * std::pow(x, -delta) / (2.0 * kPi * delta);
    if (gap > 0.0) {
      bound = std::min(bound, 8.0 * cmax * std::pow(x, -1.0 - delta) / gap);
    }
    out.truncation_n = n_target;
    out.tail_bound = bound;
    if (bound <= ctrl.tol || n_target >= ctrl.n_max) break;
    n_target = std::min(2 * n_target, ctrl.n_max);
  }

  const std::size_t k = out.alphas.size();
  out.values.assign(k, 0.0);
  if (IsMidpointGrid(out.alphas) && coef.size() >= k) {
    // alpha_j = (j + 1/2)/K: fold n mod K, then a K-point DFT
    std::vector<Complex> folded(k, 0.0);
    for (std::size_t i = 0; i < coef.size(); ++i) {
      const auto n = static_cast<std::int64_t>(i + 1);
      folded[n % k] += coef[i] * LatticePhase(n, 0.5 / k);
    }
    std::vector<Complex> twiddle(k);
    for (std::size_t j = 0; j < k; ++j) {
      twiddle[j] = LatticePhase(static_cast<std::int64_t>(j), 1.0 / k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Complex s = 0.0;
      for (std::size_t r = 0; r < k; ++r) s += folded[r] * twiddle[(r * j) % k];
      out.values[j] = 2.0 * s.real();
    }
    return out;
  }
  for (std::size_t j = 0; j < k; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < coef.size(); ++i) {
      s += (coef[i] *
            LatticePhase(static_cast<std::int64_t>(i + 1), out.alphas[j]))
               .real();
    }
    out.values[j] = 2.0 * s;
  }
  return out;
}

double SheppardShift(std::span<const double> raw_moments, int m) {
  if (m < 0 || m > static_cast<int>(raw_moments.size())) {
    throw Error(ErrorCode::kInsufficientOrder, "SheppardShift: m too large");
  }
  // E(X+U)^m = sum_j C(m,j) EX^j EU^{m-j}, EU^i = 1/(i+1)
  double s = 1.0 / (m + 1);
  for (int j = 1; j <= m; ++j) {
    s += Binomial(m, j) * raw_moments[j - 1] / (m - j + 1);
  }
  return s;
}

double CumulantShift(std::span<const double> cumulants, int m) {
  if (m < 1 || m > static_cast<int>(cumulants.size())) {
    throw Error(ErrorCode::kInsufficientOrder, "CumulantShift: m out of range");
  }
  return cumulants[m - 1] + (m == 1 ? 0.5 : BernoulliNumber(m) / m);
}

double MomentRounded(const CharacteristicModel& model, int m, double alpha,
                     const SeriesControl& ctrl) {
  CheckOrder(model, m);
  if (m == 0) return 1.0;
  return SheppardShift(model.raw_moments, m) + BetaM(model, m, alpha, ctrl);
}

LatticeSum ParsevalSum(const CharacteristicModel& model,
                       const SeriesControl& ctrl) {
  if (model.decay_exponent <= 0.0) {
    throw Error(ErrorCode::kNeedsCesaro, model.name + ": no declared decay");
  }
  const auto term = [&](std::int64_t n) {
    const double x = 2.0 * kPi * static_cast<double>(n);
    const double v = std::norm(model.PhiLattice(n, 0)[0]) / (x * x);
    return LatticePair{v, v, x, x};
  };
  LatticeSum s =
      SumLattice(term, 0.0, 0.0, 1.0 + 2.0 * model.decay_exponent, 0.0, ctrl);
  s.value = s.value.real();
  return s;
}

VarianceDecomposition VarRoundedDetailed(const CharacteristicModel& model,
                                         double alpha,
                                         const SeriesControl& ctrl) {
  CheckOrder(model, 2);
  VarianceDecomposition d;
  d.var_x = model.Variance();
  d.parseval = ParsevalSum(model, ctrl).value.real();
  d.beta1 = BetaM(model, 1, alpha, ctrl);
  d.beta2 = BetaM(model, 2, alpha, ctrl);
  d.beta2_tilde = d.beta2 - (2.0 * model.Mean() + 1.0) * d.beta1 -
                  d.beta1 * d.beta1 + d.parseval;
  d.value = d.var_x + d.sheppard - d.parseval + d.beta2_tilde;
  return d;
}

double VarRounded(const CharacteristicModel& model, double alpha,
                  const SeriesControl& ctrl) {
  return VarRoundedDetailed(model, alpha, ctrl).value;
}

double CdfRounded(const CharacteristicModel& model, double x, double alpha) {
  if (!model.has_cdf()) {
    throw Error(ErrorCode::kNoCdf, model.name + ": no distribution function");
  }
  if (std::isnan(x)) throw Error(ErrorCode::kInvalidArgument, "x is NaN");
  if (x == std::numeric_limits<double>::infinity()) return 1.0;
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;
  alpha = FractionalPart(alpha);
  return model.cdf(std::floor(x + alpha) - alpha);
}

LatticeDistribution PmfRounded(const CharacteristicModel& model, double alpha,
                               double lo, double hi) {
  if (!model.has_cdf()) {
    throw Error(ErrorCode::kNoCdf, model.name + ": no distribution function");
  }
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "empty window");
  alpha = FractionalPart(alpha);
  // X_a = k + 1 - a with k = floor(X + a)
  const auto k_lo = static_cast<std::int64_t>(std::floor(lo + alpha)) - 1;
  const auto k_hi = static_cast<std::int64_t>(std::ceil(hi + alpha));
  LatticeDistribution d;
  d.offset = alpha == 0.0 ? 0.0 : 1.0 - alpha;
  d.j_min = alpha == 0.0 ? k_lo + 1 : k_lo;
  // Upper cells are differenced on the survival side so tail masses keep
  // their relative accuracy.
  const double f_lo = model.cdf(static_cast<double>(k_lo) - alpha);
  double f_prev = f_lo;
  double s_prev = 1.0 - f_lo;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const double x = static_cast<double>(k + 1) - alpha;
    double mass;
    if (f_prev < 0.5) {
      const double f = model.cdf(x);
      mass = f - f_prev;
      f_prev = f;
      s_prev = f < 0.5 ? 1.0 - f : model.Survival(x);
    } else {
      const double s = model.Survival(x);
      mass = s_prev - s;
      s_prev = s;
    }
    d.probs.push_back(std::max(0.0, mass));
  }
  const double outside = f_lo + s_prev;
  if (outside > 1e-9) {
    throw Error(ErrorCode::kWindowTooSmall,
                model.name + ": window leaves mass " + std::to_string(outside));
  }
  d.Trim(model.survival ? 0.0 : 1e-15);
  return d;
}

LatticeDistribution PmfRounded(const CharacteristicModel& model,
                               double alpha) {
  const double sd = std::sqrt(model.Variance());
  return PmfRounded(model, alpha, model.Mean() - 40.0 * sd,
                    model.Mean() + 40.0 * sd);
}

ProdingerTerms ProdingerCoefficientTerms(std::int64_t n,
                                         const SeriesControl& ctrl) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be nonzero");
  const double l = kLn2;
  const double y = 2.0 * kPi / l;  // Gamma(-i y n) etc.
  const Complex z(0.0, -y * static_cast<double>(n));
  const Complex gz = GammaComplex(z);
  ProdingerTerms t;
  t.gamma_prime = 2.0 / (l * l) * gz * Digamma(z);
  t.gamma = 2.0 * kEulerGamma / (l * l) * gz;
  const SeriesTail g = GSeries(z, ctrl);
  t.g_series = -2.0 / l * g.value;
  // sum over j != 0, n of Gamma(-2 pi j i / l) Gamma(2 pi (j - n) i / l);
  // each factor decays like exp(-pi y |.| / 2), so |j| <= n + 40 is plenty
  const std::int64_t reach = std::abs(n) + 40;
  Complex bil = 0.0;
  double last = 0.0;
  for (std::int64_t j = -reach; j <= reach + n; ++j) {
    if (j == 0 || j == n) continue;
    const Complex v =
        GammaComplex(Complex(0.0, -y * static_cast<double>(j))) *
        GammaComplex(Complex(0.0, y * static_cast<double>(j - n)));
    bil += v;
    if (j == -reach || j == reach + n) last = std::max(last, std::abs(v));
  }
  t.bilinear = -bil / (l * l);
  t.tail_bound = g.tail_bound * 2.0 / l + 4.0 * last / (l * l);
  return t;
}

Complex ProdingerCoefficient(std::int64_t n, const SeriesControl& ctrl) {
  return ProdingerCoefficientTerms(n, ctrl).Total();
}

}  // namespace roundosc
