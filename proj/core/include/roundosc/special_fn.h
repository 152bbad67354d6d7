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

// Special functions on the complex plane: Gamma, polygamma, the eta product
// prod_k (1 - z/2^k), the R_j/Q coefficients, the g-series, Bernoulli
// numbers and the window function f(u) = (e^u - 1)/u.
//
// All functions are pure. Poles and overflow raise roundosc::Error.

#ifndef ROUNDOSC_SPECIAL_FN_H_
#define ROUNDOSC_SPECIAL_FN_H_

#include <complex>
#include <cstdint>
#include <vector>

#include "roundosc/series_control.h"

namespace roundosc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// A truncated series or product together with a bound on what was dropped.
struct SeriesTail {
  Complex value;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
};

// sin(pi z) and cos(pi z) with exact argument reduction of Re z.
Complex SinPi(Complex z);
Complex CosPi(Complex z);

// e^z - 1 without cancellation near z = 0.
Complex Expm1(Complex z);
// log(1 + z) without cancellation near z = 0.
Complex Log1p(Complex z);

// Gamma(z). Lanczos approximation (g = 607/128, 15 terms) with reflection
// for Re z < 1/2. Relative error ~1e-14 for |Im z| <= 60.
Complex GammaComplex(Complex z);
// A branch of log Gamma(z), usable where Gamma itself would overflow.
Complex LogGamma(Complex z);

// Polygamma function psi^(k)(z), k >= 0. Digamma is k = 0.
Complex Polygamma(int k, Complex z);
inline Complex Digamma(Complex z) { return Polygamma(0, z); }
inline Complex Trigamma(Complex z) { return Polygamma(1, z); }

// Taylor coefficients Gamma^(k)(z)/k!, k = 0..order.
std::vector<Complex> GammaJet(Complex z, int order);

// eta(z) = prod_{k>=1} (1 - z/2^k), truncated when the multiplicative tail
// bound |P|(exp(|z|/2^K) - 1) drops below ctrl.tol * max(1, |P|).
SeriesTail EtaProduct(Complex z, const SeriesControl& ctrl);
// eta(e^t), with factors -expm1(t - k ln2) so that zeros at t = k ln2 + 2 pi i n
// are hit exactly.
SeriesTail EtaOfExp(Complex t, const SeriesControl& ctrl);

struct RqTable {
  std::vector<double> r;  // R_0..R_{j_max}
  double q = 0.0;         // partial sum of all R_j, j <= j_max
  double q_tail_bound = 0.0;
};
// R_j = (-1)^j prod_{k=1}^j (2^k - 1)^{-1}.
RqTable RqCoefficients(int j_max);

// g(z) = sum_{j>=1} (-1)^{j-1} Gamma(z+j) / (j! (2^j - 1)).
SeriesTail GSeries(Complex z, const SeriesControl& ctrl);
// Same function via Gamma(z) sum_k (1 - (1 + 2^-k)^-z); at z = 0 this is
// sum_k log(1 + 2^-k).
SeriesTail GLogSeries(Complex z, const SeriesControl& ctrl);

// Bernoulli numbers with B_1 = -1/2. Supported for 0 <= m <= 60.
double BernoulliNumber(int m);
// Bernoulli polynomial B_m(x).
double BernoulliPolynomial(int m, double x);

// Below this |u| the window function derivatives are taken from the power
// series for every order up to k_max; above it the forward recurrence
// u f^(k) = e^u - k f^(k-1) is stable for all k <= |u|.
double FSeriesRadius(int k_max);

// f(u), f'(u), ..., f^(k_max)(u) for f(u) = (e^u - 1)/u.
std::vector<Complex> FDerivatives(Complex u, int k_max);
// Same at u = 2 pi i n, n != 0, using e^u = 1 exactly.
std::vector<Complex> FDerivativesAtLattice(std::int64_t n, int k_max);

// Riemann zeta at integers s >= 2 (table plus direct summation).
double ZetaInt(int s);

}  // namespace roundosc

#endif  // ROUNDOSC_SPECIAL_FN_H_
