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

// Summation of two-sided lattice series sum_n T_n e^{2 pi i n alpha} with a
// declared algebraic decay |T_n| = O(|x_n|^{-1-delta}).

#ifndef ROUNDOSC_LATTICE_SUM_H_
#define ROUNDOSC_LATTICE_SUM_H_

#include <cstdint>
#include <functional>

#include "roundosc/series_control.h"
#include "roundosc/special_fn.h"

namespace roundosc {

// Terms at +n and -n (without the phase factor) and the moduli |x_{+n}|,
// |x_{-n}| of the lattice arguments they were evaluated at.
struct LatticePair {
  Complex plus;
  Complex minus;
  double arg_plus = 0.0;
  double arg_minus = 0.0;
};

struct LatticeSum {
  Complex value;
  std::int64_t truncation_n = 0;
  double tail_bound = 0.0;
  bool converged = false;
  bool extrapolated = false;
};

using LatticeTerm = std::function<LatticePair(std::int64_t)>;

// e^{2 pi i n alpha} with the product n * alpha reduced exactly mod 1.
Complex LatticePhase(std::int64_t n, double alpha);

// Reduces alpha to [0, 1).
double FractionalPart(double x);

// Adaptive sum of zero_term + sum_{n>=1} (T_n z^n + T_{-n} z^{-n}),
// z = e^{2 pi i alpha}. `shift` bounds how far the lattice arguments sit from
// 2 pi n: |x_{+-n}| >= 2 pi n - shift.
//
// Partial sums are taken at N = q 2^j where q is the denominator of alpha
// when alpha = p/q with q <= 64 (else q = 1). The tail bound is the smaller of
// the absolute bound 2C(2 pi N - shift)^-delta / (2 pi delta) and, for alpha
// not an integer, the summation-by-parts bound
// 8C(2 pi N - shift)^{-1-delta} / |1 - z|, with C = max |T_n| |x_n|^{1+delta}
// over the terms seen so far. When neither reaches ctrl.tol and alpha is
// rational, Richardson extrapolation in N^{-delta-k} is tried at each
// checkpoint.
LatticeSum SumLattice(const LatticeTerm& term, Complex zero_term, double alpha,
                      double decay, double shift, const SeriesControl& ctrl);

// Literal Fejer mean sum_{|n|<=N} (1 - |n|/(N+1)) T_n z^n, summed in order of
// increasing n from -N to N.
Complex FejerSum(const std::function<Complex(std::int64_t)>& term,
                 double alpha, std::int64_t fejer_n);

}  // namespace roundosc

#endif  // ROUNDOSC_LATTICE_SUM_H_
