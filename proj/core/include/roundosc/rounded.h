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

// Rounded variables X_a = floor(X + a) - a + 1: characteristic and moment
// generating functions, moments, oscillation terms beta_m(a), the variance
// decomposition and the exact lattice law.

#ifndef ROUNDOSC_ROUNDED_H_
#define ROUNDOSC_ROUNDED_H_

#include <cstdint>
#include <span>
#include <vector>

#include "roundosc/lattice_sum.h"
#include "roundosc/model.h"
#include "roundosc/series_control.h"
#include "roundosc/special_fn.h"

namespace roundosc {

// Characteristic function of X + U, U uniform on (0, 1):
// (e^{it} - 1)/(it) phi(t).
Complex TildePhi(const CharacteristicModel& model, double t);

// Resolves kAuto: adaptive when decay_exponent >= 1, else cesaro.
SummationMode ResolveMode(const CharacteristicModel& model,
                          const SeriesControl& ctrl);

// E e^{itX_a} as the lattice sum of tilde-phi(t + 2 pi n) e^{2 pi i n a}.
// Adaptive mode throws kNeedsCesaro when decay_exponent < 1.
Complex CharRounded(const CharacteristicModel& model, double t, double alpha,
                    const SeriesControl& ctrl);
LatticeSum CharRoundedDetailed(const CharacteristicModel& model, double t,
                               double alpha, const SeriesControl& ctrl);

// E e^{tX_a} for a < Re t < b, summed over the vertical lattice t + 2 pi n i.
Complex MgfRounded(const CharacteristicModel& model, Complex t, double alpha,
                   const SeriesControl& ctrl);
LatticeSum MgfRoundedDetailed(const CharacteristicModel& model, Complex t,
                              double alpha, const SeriesControl& ctrl);

// D^m tilde-phi(2 pi n) by Leibniz over the window derivatives.
Complex DerivTildeAtLattice(const CharacteristicModel& model, int m,
                            std::int64_t n);

// beta_m(a) = sum_{n != 0} i^-m D^m tilde-phi(2 pi n) e^{2 pi i n a}.
double BetaM(const CharacteristicModel& model, int m, double alpha,
             const SeriesControl& ctrl);
LatticeSum BetaMDetailed(const CharacteristicModel& model, int m, double alpha,
                         const SeriesControl& ctrl);

// beta_m on an arbitrary alpha grid from one set of Fourier coefficients.
// Midpoint grids (k + 1/2)/K use aliasing plus a K-point DFT.
OscillationProfile BetaProfile(const CharacteristicModel& model, int m,
                               std::span<const double> alphas,
                               const SeriesControl& ctrl);

// (k + 1/2)/K, k = 0..K-1.
std::vector<double> MidpointGrid(int k);

// E(X + U)^m from raw moments EX..EX^M (raw[0] = EX).
double SheppardShift(std::span<const double> raw_moments, int m);
// kappa_m(X + U) from cumulants kappa_1..kappa_M (cumulants[0] = kappa_1).
double CumulantShift(std::span<const double> cumulants, int m);

// E X_a^m = E(X + U)^m + beta_m(a).
double MomentRounded(const CharacteristicModel& model, int m, double alpha,
                     const SeriesControl& ctrl);

struct VarianceDecomposition {
  double value = 0.0;
  double var_x = 0.0;
  double sheppard = 1.0 / 12.0;
  double parseval = 0.0;  // sum_{n != 0} |phi(2 pi n)|^2 / (2 pi n)^2
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta2_tilde = 0.0;
};

// Var X_a = Var X + 1/12 - parseval + beta2_tilde, with
// beta2_tilde = beta2 - (2EX + 1) beta1 - beta1^2 + parseval.
VarianceDecomposition VarRoundedDetailed(const CharacteristicModel& model,
                                         double alpha,
                                         const SeriesControl& ctrl);
double VarRounded(const CharacteristicModel& model, double alpha,
                  const SeriesControl& ctrl);
LatticeSum ParsevalSum(const CharacteristicModel& model,
                       const SeriesControl& ctrl);

// P(X_a <= x) = F(floor(x + a) - a).
double CdfRounded(const CharacteristicModel& model, double x, double alpha);

// Law of X_a on the points of [lo, hi]. Throws kWindowTooSmall when more than
// 1e-9 of the mass falls outside.
LatticeDistribution PmfRounded(const CharacteristicModel& model, double alpha,
                               double lo, double hi);
// Window EX -+ 40 sd.
LatticeDistribution PmfRounded(const CharacteristicModel& model, double alpha);

// The four parts of the n-th Fourier coefficient of beta2_tilde for the
// Patricia limit (Gamma', Gamma, g-series and the Gamma x Gamma convolution).
// Their sum vanishes identically.
struct ProdingerTerms {
  Complex gamma_prime;
  Complex gamma;
  Complex g_series;
  Complex bilinear;
  double tail_bound = 0.0;

  Complex Total() const { return gamma_prime + gamma + g_series + bilinear; }
};
ProdingerTerms ProdingerCoefficientTerms(std::int64_t n,
                                         const SeriesControl& ctrl);
Complex ProdingerCoefficient(std::int64_t n, const SeriesControl& ctrl);

}  // namespace roundosc

#endif  // ROUNDOSC_ROUNDED_H_
