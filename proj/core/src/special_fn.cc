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

#include "roundosc/special_fn.h"

#include <array>
#include <cmath>
#include <limits>

#include "roundosc/error.h"

namespace roundosc {
namespace {

constexpr double kLogMax = 709.78;  // log(DBL_MAX), rounded down
constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617639;
constexpr double kLogPi = 1.144729885849400174143427351353058712;
// Geometric series stop this far below the requested tolerance; the extra
// terms are cheap and keep downstream identities at tol.
constexpr double kTailSafety = 1e-4;

double Target(const SeriesControl& ctrl) {
  return std::max(ctrl.tol * kTailSafety, 1e-300);
}

// Godfrey's coefficients for g = 607/128.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

bool IsNonPositiveInteger(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

void CheckFinite(Complex z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(where) + ": non-finite argument");
  }
}

// sin(pi x), cos(pi x) for real x with exact reduction to [-1/2, 1/2].
void SinCosPiReal(double x, double* s, double* c) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double sign = std::fmod(std::fabs(n), 2.0) == 1.0 ? -1.0 : 1.0;
  *s = sign * std::sin(kPi * r);
  *c = sign * std::cos(kPi * r);
}

// log Gamma(z) for Re z >= 1/2.
Complex LogGammaLanczos(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int k = 1; k < static_cast<int>(kLanczos.size()); ++k) {
    x += kLanczos[k] / (z + static_cast<double>(k));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

double Factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

void SeriesControl::Validate() const {
  if (!(tol > 0.0) || n_max < 1 || fejer_n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "SeriesControl needs tol > 0, n_max >= 1, fejer_n >= 1");
  }
}

Complex SinPi(Complex z) {
  double s, c;
  SinCosPiReal(z.real(), &s, &c);
  const double y = kPi * z.imag();
  return {s * std::cosh(y), c * std::sinh(y)};
}

Complex CosPi(Complex z) {
  double s, c;
  SinCosPiReal(z.real(), &s, &c);
  const double y = kPi * z.imag();
  return {c * std::cosh(y), -s * std::sinh(y)};
}

Complex Expm1(Complex z) {
  // e^{x+iy} - 1 = expm1(x) cos y + (cos y - 1) + i e^x sin y
  const double x = z.real();
  const double y = z.imag();
  const double half = std::sin(0.5 * y);
  const double cosm1 = -2.0 * half * half;
  const double em1 = std::expm1(x);
  return {em1 * std::cos(y) + cosm1, std::exp(x) * std::sin(y)};
}

Complex Log1p(Complex z) {
  if (std::abs(z) < 1e-4) {
    // five terms give full precision at this radius
    Complex term = z, sum = 0.0;
    for (int k = 1; k <= 5; ++k) {
      sum += term / static_cast<double>(k);
      term *= -z;
    }
    return sum;
  }
  return std::log(1.0 + z);
}

namespace {

// log sin(pi z), any branch; stays finite where sin(pi z) itself overflows.
Complex LogSinPi(Complex z) {
  if (std::fabs(z.imag()) < 20.0) return std::log(SinPi(z));
  if (z.imag() < 0.0) return std::conj(LogSinPi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}) with |e^{2 pi i z}| tiny
  const double x = std::remainder(z.real(), 2.0);
  const double y = z.imag();
  const Complex e = std::exp(Complex(-2.0 * kPi * y, 2.0 * kPi * x));
  return Complex(kPi * y - kLn2, 0.5 * kPi - kPi * x) + Log1p(-e);
}

}  // namespace

Complex LogGamma(Complex z) {
  CheckFinite(z, "LogGamma");
  if (IsNonPositiveInteger(z)) {
    throw Error(ErrorCode::kPole, "Gamma has a pole at a nonpositive integer");
  }
  if (z.real() >= 0.5) return LogGammaLanczos(z);
  return kLogPi - LogSinPi(z) - LogGammaLanczos(1.0 - z);
}

Complex GammaComplex(Complex z) {
  const Complex lg = LogGamma(z);
  if (lg.real() > kLogMax) {
    throw Error(ErrorCode::kOverflow, "|Gamma(z)| exceeds double range");
  }
  return std::exp(lg);
}

Complex Polygamma(int k, Complex z) {
  CheckFinite(z, "Polygamma");
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative order");
  if (IsNonPositiveInteger(z)) {
    throw Error(ErrorCode::kPole, "polygamma pole at a nonpositive integer");
  }
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;  // (-1)^k
  const double kfact = Factorial(k);
  Complex acc = 0.0;
  // psi^(k)(z) = psi^(k)(z+1) - (-1)^k k! / z^(k+1)
  for (int guard = 0; z.real() < 1.0 || std::abs(z) < 16.0; ++guard) {
    if (guard > 1'000'000) {
      throw Error(ErrorCode::kUnsupported, "polygamma argument too far left");
    }
    acc -= sign * kfact / std::pow(z, k + 1);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex asym;
  if (k == 0) {
    asym = std::log(z) - 0.5 * inv;
    Complex p = inv2;
    for (int j = 1; j <= 10; ++j) {
      asym -= BernoulliNumber(2 * j) / (2.0 * j) * p;
      p *= inv2;
    }
  } else {
    const Complex zk = std::pow(inv, k);
    asym = Factorial(k - 1) * zk + 0.5 * kfact * zk * inv;
    Complex p = zk * inv2;
    for (int j = 1; j <= 10; ++j) {
      // B_2j (2j+k-1)! / (2j)!
      double c = BernoulliNumber(2 * j);
      for (int i = 2 * j + 1; i <= 2 * j + k - 1; ++i) c *= i;
      asym += c * p;
      p *= inv2;
    }
    if (k % 2 == 0) asym = -asym;  // leading sign (-1)^(k+1)
  }
  return acc + asym;
}

std::vector<Complex> GammaJet(Complex z, int order) {
  const Complex g = GammaComplex(z);
  // log Gamma(z+h) = log Gamma(z) + sum_k psi^(k-1)(z) h^k / k!
  std::vector<Complex> l(order + 1), e(order + 1);
  for (int k = 1; k <= order; ++k) l[k] = Polygamma(k - 1, z) / Factorial(k);
  e[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    Complex s = 0.0;
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * l[j] * e[k - j];
    e[k] = s / static_cast<double>(k);
  }
  for (auto& v : e) v *= g;
  return e;
}

SeriesTail EtaProduct(Complex z, const SeriesControl& ctrl) {
  CheckFinite(z, "EtaProduct");
  const double az = std::abs(z);
  SeriesTail out{1.0, 0, 0.0};
  for (int k = 1; k <= 1100; ++k) {
    out.value *= 1.0 - std::ldexp(1.0, -k) * z;
    out.terms_used = k;
    const double mag = std::abs(out.value);
    if (!std::isfinite(mag)) throw Error(ErrorCode::kOverflow, "eta product");
    out.tail_bound = mag * std::expm1(std::ldexp(az, -k));
    if (out.tail_bound <= Target(ctrl) * std::max(1.0, mag)) return out;
  }
  return out;
}

SeriesTail EtaOfExp(Complex t, const SeriesControl& ctrl) {
  CheckFinite(t, "EtaOfExp");
  const double az = std::exp(t.real());
  SeriesTail out{1.0, 0, 0.0};
  for (int k = 1; k <= 1100; ++k) {
    out.value *= -Expm1(t - static_cast<double>(k) * kLn2);
    out.terms_used = k;
    const double mag = std::abs(out.value);
    if (!std::isfinite(mag)) throw Error(ErrorCode::kOverflow, "eta product");
    out.tail_bound = mag * std::expm1(std::ldexp(az, -k));
    if (out.tail_bound <= Target(ctrl) * std::max(1.0, mag)) return out;
  }
  return out;
}

RqTable RqCoefficients(int j_max) {
  if (j_max < 0) throw Error(ErrorCode::kInvalidArgument, "j_max < 0");
  RqTable out;
  out.r.resize(j_max + 1);
  out.r[0] = 1.0;
  for (int j = 1; j <= j_max; ++j) {
    out.r[j] = -out.r[j - 1] / (std::ldexp(1.0, j) - 1.0);
  }
  // sum from the small end
  for (int j = j_max; j >= 0; --j) out.q += out.r[j];
  out.q_tail_bound =
      2.0 * std::fabs(out.r[j_max]) / (std::ldexp(1.0, j_max + 1) - 1.0);
  return out;
}

SeriesTail GSeries(Complex z, const SeriesControl& ctrl) {
  CheckFinite(z, "GSeries");
  if (IsNonPositiveInteger(z + 1.0)) {
    throw Error(ErrorCode::kPole, "g has poles at z = -1, -2, ...");
  }
  const double az = std::abs(z);
  Complex rho = GammaComplex(z + 1.0);  // Gamma(z+j)/j! at j = 1
  SeriesTail out{0.0, 0, 0.0};
  for (int j = 1; j < 100000; ++j) {
    const double denom = std::ldexp(1.0, j) - 1.0;
    const Complex term = rho / denom;
    out.value += (j % 2 == 1) ? term : -term;
    out.terms_used = j;
    rho *= (z + static_cast<double>(j)) / static_cast<double>(j + 1);
    if (j + 1 > az) {
      const double r =
          0.5 * std::max((az + j + 1.0) / (j + 2.0), 1.0) * (1.0 + 1e-12);
      if (r < 1.0) {
        out.tail_bound = std::abs(rho) / (std::ldexp(1.0, j + 1) - 1.0) /
                         (1.0 - r);
        if (out.tail_bound <= Target(ctrl) * std::max(1.0, std::abs(out.value)) ||
            out.tail_bound == 0.0) {
          return out;
        }
      }
    }
  }
  throw Error(ErrorCode::kResource, "g series did not converge");
}

SeriesTail GLogSeries(Complex z, const SeriesControl& ctrl) {
  CheckFinite(z, "GLogSeries");
  SeriesTail out{0.0, 0, 0.0};
  if (z == Complex(0.0)) {
    for (int k = 1; k <= 1100; ++k) {
      const double x = std::ldexp(1.0, -k);
      out.value += std::log1p(x);
      out.terms_used = k;
      out.tail_bound = x;  // sum_{j>k} log(1 + 2^-j) < 2^-k
      if (out.tail_bound <= Target(ctrl)) break;
    }
    return out;
  }
  if (IsNonPositiveInteger(z)) {
    throw Error(ErrorCode::kPole, "g has poles at z = -1, -2, ...");
  }
  const Complex g = GammaComplex(z);
  const double ag = std::abs(g);
  const double az = std::abs(z);
  Complex s = 0.0;
  for (int k = 1; k <= 1100; ++k) {
    const double x = std::ldexp(1.0, -k);
    s += -Expm1(-z * std::log1p(x));
    out.terms_used = k;
    // |1 - (1+x)^-z| <= |z| x e^{|z| x}; the remaining terms sum to twice that
    out.tail_bound = ag * 2.0 * az * x * std::exp(az * x);
    if (out.tail_bound <= Target(ctrl) * std::max(1.0, ag * std::abs(s)) &&
        az * x < 1.0) {
      break;
    }
  }
  out.value = g * s;
  return out;
}

double BernoulliNumber(int m) {
  static const std::array<double, 61> table = [] {
    std::array<double, 61> b{};
    // Tangent numbers by the Brent-Harvey recurrence use only additions of
    // positive terms, so B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)) is
    // accurate to a few ulps for every k <= 30.
    constexpr int kMax = 30;
    std::array<long double, kMax + 1> t{};
    t[1] = 1.0L;
    for (int k = 2; k <= kMax; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= kMax; ++k) {
      for (int j = k; j <= kMax; ++j) {
        t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
      }
    }
    b[0] = 1.0;
    b[1] = -0.5;
    for (int k = 1; k <= kMax; ++k) {
      const long double four_k = std::ldexp(1.0L, 2 * k);
      const long double v = 2.0L * k * t[k] / (four_k * (four_k - 1.0L));
      b[2 * k] = static_cast<double>(k % 2 == 1 ? v : -v);
    }
    return b;
  }();
  if (m < 0 || m > 60) {
    throw Error(ErrorCode::kUnsupported, "Bernoulli numbers for 0 <= m <= 60");
  }
  return table[m];
}

double BernoulliPolynomial(int m, double x) {
  double sum = 0.0;
  double binom = 1.0;  // C(m, k)
  for (int k = 0; k <= m; ++k) {
    sum += binom * BernoulliNumber(k) * std::pow(x, m - k);
    binom = binom * (m - k) / (k + 1);
  }
  return sum;
}

double FSeriesRadius(int k_max) { return std::max(1.0, k_max + 1.0); }

std::vector<Complex> FDerivatives(Complex u, int k_max) {
  CheckFinite(u, "FDerivatives");
  if (k_max < 0) throw Error(ErrorCode::kInvalidArgument, "k_max < 0");
  std::vector<Complex> out(k_max + 1);
  const double au = std::abs(u);
  if (au < FSeriesRadius(k_max)) {
    // f^(k)(u) = sum_i u^i / (i! (i + k + 1))
    for (int k = 0; k <= k_max; ++k) {
      Complex p = 1.0, sum = 0.0;
      for (int i = 0; i < 200; ++i) {
        const Complex term = p / static_cast<double>(i + k + 1);
        sum += term;
        if (i > au && std::abs(term) <= 1e-18 * std::abs(sum)) break;
        p *= u / static_cast<double>(i + 1);
      }
      out[k] = sum;
    }
    return out;
  }
  const Complex eu = std::exp(u);
  if (!std::isfinite(eu.real()) || !std::isfinite(eu.imag())) {
    throw Error(ErrorCode::kOverflow, "e^u overflows");
  }
  out[0] = Expm1(u) / u;
  for (int k = 1; k <= k_max; ++k) {
    out[k] = (eu - static_cast<double>(k) * out[k - 1]) / u;
  }
  return out;
}

std::vector<Complex> FDerivativesAtLattice(std::int64_t n, int k_max) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "lattice index 0");
  if (k_max < 0) throw Error(ErrorCode::kInvalidArgument, "k_max < 0");
  const Complex u(0.0, 2.0 * kPi * static_cast<double>(n));
  std::vector<Complex> out(k_max + 1);
  out[0] = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    out[k] = (1.0 - static_cast<double>(k) * out[k - 1]) / u;
  }
  return out;
}

double ZetaInt(int s) {
  static constexpr std::array<double, 7> kTable = {
      1.644934066848226436472415166646025189,   // zeta(2)
      1.202056903159594285399738161511449991,   // zeta(3)
      1.082323233711138191516003696541167903,   // zeta(4)
      1.036927755143369926331365486457034168,   // zeta(5)
      1.017343061984449139714517929790920528,   // zeta(6)
      1.008349277381922826839797549849796759,   // zeta(7)
      1.004077356197944339378685238508652465};  // zeta(8)
  if (s < 2) throw Error(ErrorCode::kPole, "zeta(s) needs s >= 2");
  if (s <= 8) return kTable[s - 2];
  double sum = 0.0;
  for (int n = 400; n >= 1; --n) sum += std::pow(n, -s);
  return sum;
}

}  // namespace roundosc
