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

#include "roundosc/lattice_sum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "roundosc/error.h"

namespace roundosc {
namespace {

constexpr int kMaxDenominator = 64;
constexpr std::int64_t kFirstCheckpoint = 8;
constexpr int kMaxRichardsonLevels = 5;

int Denominator(double alpha) {
  for (int q = 1; q <= kMaxDenominator; ++q) {
    const double x = alpha * q;
    if (std::fabs(x - std::nearbyint(x)) < 1e-12 * q) return q;
  }
  return 0;
}

struct Extrapolation {
  Complex value;
  double error = 0.0;
};

// Richardson table over partial sums taken at N, 2N, 4N, ... assuming an
// error expansion in N^{-p}, N^{-p-1}, ...
bool Extrapolate(const std::vector<Complex>& partial, double p,
                 Extrapolation* out) {
  const int rows = static_cast<int>(partial.size());
  if (rows < 4) return false;
  const int levels = std::min(kMaxRichardsonLevels, rows - 2);
  const int first = rows - levels - 2;
  std::vector<std::vector<Complex>> r;
  for (int j = first; j < rows; ++j) r.push_back({partial[j]});
  for (int k = 1; k <= levels; ++k) {
    const double factor = std::pow(2.0, p + k - 1) - 1.0;
    for (int j = static_cast<int>(r.size()) - 1; j >= k; --j) {
      r[j].push_back(r[j][k - 1] + (r[j][k - 1] - r[j - 1][k - 1]) / factor);
    }
  }
  const auto& last = r.back();
  const auto& prev = r[r.size() - 2];
  const int k = levels;
  out->value = last[k];
  out->error = std::max(std::abs(last[k] - last[k - 1]),
                        std::abs(last[k] - prev[k - 1]));
  return true;
}

}  // namespace

double FractionalPart(double x) {
  const double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

Complex LatticePhase(std::int64_t n, double alpha) {
  const double nd = static_cast<double>(n);
  const double p = nd * alpha;
  const double err = std::fma(nd, alpha, -p);  // exact rounding error of p
  const double frac = (p - std::floor(p)) + err;
  const double angle = 2.0 * kPi * frac;
  return {std::cos(angle), std::sin(angle)};
}

LatticeSum SumLattice(const LatticeTerm& term, Complex zero_term, double alpha,
                      double decay, double shift, const SeriesControl& ctrl) {
  ctrl.Validate();
  if (!(decay > 0.0)) {
    throw Error(ErrorCode::kNeedsCesaro,
                "adaptive summation needs a positive decay exponent");
  }
  alpha = FractionalPart(alpha);
  const int q = Denominator(alpha);
  const std::int64_t base = q > 0 ? q : 1;
  const double one_minus_z = 2.0 * std::fabs(std::sin(kPi * alpha));
  const bool oscillating = one_minus_z > 1e-300;

  LatticeSum out;
  out.value = zero_term;
  std::vector<Complex> partial;
  double c = 0.0;
  std::int64_t n = 1;
  std::int64_t checkpoint = base;
  while (checkpoint < kFirstCheckpoint) checkpoint *= 2;
  while (checkpoint > ctrl.n_max && checkpoint > base) checkpoint /= 2;

  for (;;) {
    for (; n <= checkpoint; ++n) {
      const LatticePair p = term(n);
      const Complex z = LatticePhase(n, alpha);
      out.value += p.plus * z + p.minus * std::conj(z);
      c = std::max({c, std::abs(p.plus) * std::pow(p.arg_plus, 1.0 + decay),
                    std::abs(p.minus) * std::pow(p.arg_minus, 1.0 + decay)});
    }
    out.truncation_n = checkpoint;
    partial.push_back(out.value);

    const double x = 2.0 * kPi * static_cast<double>(checkpoint) - shift;
    double bound = std::numeric_limits<double>::infinity();
    if (x > 0.0) {
      bound = 2.0 * c * std::pow(x, -decay) / (2.0 * kPi * decay);
      if (oscillating) {
        bound = std::min(bound, 8.0 * c * std::pow(x, -1.0 - decay) /
                                    one_minus_z);
      }
    }
    out.tail_bound = bound;
    if (bound <= ctrl.tol) {
      out.converged = true;
      return out;
    }
    if (q > 0) {
      Extrapolation ex;
      if (Extrapolate(partial, decay, &ex) && ex.error <= ctrl.tol) {
        out.value = ex.value;
        out.tail_bound = ex.error;
        out.converged = true;
        out.extrapolated = true;
        return out;
      }
    }
    if (checkpoint * 2 > ctrl.n_max) break;
    checkpoint *= 2;
  }
  if (q > 0) {
    Extrapolation ex;
    if (Extrapolate(partial, decay, &ex) && ex.error < out.tail_bound) {
      out.value = ex.value;
      out.tail_bound = ex.error;
      out.extrapolated = true;
    }
  }
  return out;
}

Complex FejerSum(const std::function<Complex(std::int64_t)>& term,
                 double alpha, std::int64_t fejer_n) {
  if (fejer_n < 1) throw Error(ErrorCode::kInvalidArgument, "fejer_n < 1");
  alpha = FractionalPart(alpha);
  const double denom = static_cast<double>(fejer_n + 1);
  Complex sum = 0.0;
  for (std::int64_t n = -fejer_n; n <= fejer_n; ++n) {
    const double weight = 1.0 - static_cast<double>(n < 0 ? -n : n) / denom;
    sum += weight * (term(n) * LatticePhase(n, alpha));
  }
  return sum;
}

}  // namespace roundosc
