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

// Description of a continuous random variable X through its characteristic
// function, plus the lattice-valued distributions used for rounded variables
// and integer processes.

#ifndef ROUNDOSC_MODEL_H_
#define ROUNDOSC_MODEL_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "roundosc/special_fn.h"

namespace roundosc {

using Rng = std::mt19937_64;

// splitmix64 hash of (master, index); seeds independent per-trial or
// per-chunk generators so results do not depend on scheduling.
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index);

// Open strip a < Re t < b on which the moment generating function exists.
struct Strip {
  double a = -std::numeric_limits<double>::infinity();
  double b = std::numeric_limits<double>::infinity();

  bool Contains(double re) const { return a < re && re < b; }
};

struct CharacteristicModel {
  std::string name;

  // phi(t) = E e^{itX}.
  std::function<Complex(double)> phi;
  // phi(2 pi n), phi'(2 pi n), ..., phi^(order)(2 pi n). Optional; when
  // empty the numeric fallback in PhiLattice() is used.
  std::function<std::vector<Complex>(std::int64_t, int)> phi_lattice;
  // psi(t) = E e^{tX} on `strip`. Optional.
  std::function<Complex(Complex)> psi;
  Strip strip;

  // Declared bound |D^k phi(t)| = O(|t|^-delta). Zero means "unknown".
  double decay_exponent = 0.0;
  int max_moment_order = 0;
  // EX, EX^2, ... up to max_moment_order.
  std::vector<double> raw_moments;

  std::function<double(double)> cdf;      // optional
  // 1 - F(x) without cancellation near 1. Optional; defaults to 1 - cdf.
  std::function<double(double)> survival;
  std::function<double(double)> density;  // optional
  std::function<double(Rng&)> sampler;    // optional

  bool has_psi() const { return static_cast<bool>(psi); }
  bool has_cdf() const { return static_cast<bool>(cdf); }
  bool has_sampler() const { return static_cast<bool>(sampler); }

  double Mean() const { return raw_moments.at(0); }
  double Variance() const;
  double Survival(double x) const {
    return survival ? survival(x) : 1.0 - cdf(x);
  }

  // Lattice derivatives, from phi_lattice when present. Otherwise psi is
  // differentiated by the Cauchy integral on a circle around 2 pi n i inside
  // the strip, or, without psi, phi by 4th-order central differences
  // (orders <= 2). Throws kInsufficientOrder when neither route applies.
  std::vector<Complex> PhiLattice(std::int64_t n, int order) const;
};

// Derivatives of psi at s0 by the trapezoid rule on the Cauchy integral over
// a circle of the given radius (m nodes).
std::vector<Complex> CauchyDerivatives(const std::function<Complex(Complex)>& f,
                                       Complex s0, double radius, int order,
                                       int m = 64);

// beta_m sampled on an alpha grid.
struct OscillationProfile {
  int order = 0;
  std::vector<double> alphas;
  std::vector<double> values;
  std::int64_t truncation_n = 0;
  double tail_bound = 0.0;
};

// Probability mass on {j + offset : j integer}, offset in [0, 1). probs[i]
// is the mass at j_min + i + offset.
struct LatticeDistribution {
  double offset = 0.0;
  std::int64_t j_min = 0;
  std::vector<double> probs;

  double Point(std::size_t i) const {
    return static_cast<double>(j_min + static_cast<std::int64_t>(i)) + offset;
  }
  double Total() const;
  // E g(V) over the support.
  double Expect(const std::function<double(double)>& g) const;
  double Mean() const;
  double Variance() const;
  double Moment(int m) const;
  // P(V <= x).
  double Cdf(double x) const;
  // Drops leading and trailing masses <= eps.
  void Trim(double eps = 1e-15);
};

}  // namespace roundosc

#endif  // ROUNDOSC_MODEL_H_
