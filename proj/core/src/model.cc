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

#include "roundosc/model.h"

#include <algorithm>
#include <cmath>

#include "roundosc/error.h"

namespace roundosc {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kPole: return "pole";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kNeedsCesaro: return "needs_cesaro";
    case ErrorCode::kStripViolation: return "strip_violation";
    case ErrorCode::kNoMgf: return "no_mgf";
    case ErrorCode::kInsufficientOrder: return "insufficient_order";
    case ErrorCode::kNoCdf: return "no_cdf";
    case ErrorCode::kWindowTooSmall: return "window_too_small";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kUnknownName: return "unknown_name";
    case ErrorCode::kUnsupported: return "unsupported";
  }
  return "unknown";
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double CharacteristicModel::Variance() const {
  if (raw_moments.size() < 2) {
    throw Error(ErrorCode::kInsufficientOrder, name + ": no second moment");
  }
  return raw_moments[1] - raw_moments[0] * raw_moments[0];
}

std::vector<Complex> CauchyDerivatives(const std::function<Complex(Complex)>& f,
                                       Complex s0, double radius, int order,
                                       int m) {
  std::vector<Complex> samples(m);
  for (int j = 0; j < m; ++j) {
    const double theta = 2.0 * kPi * j / m;
    samples[j] = f(s0 + std::polar(radius, theta));
  }
  std::vector<Complex> out(order + 1);
  double fact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    Complex c = 0.0;
    for (int j = 0; j < m; ++j) {
      c += samples[j] * std::polar(1.0, -2.0 * kPi * k * j / m);
    }
    out[k] = fact * c / (static_cast<double>(m) * std::pow(radius, k));
  }
  return out;
}

std::vector<Complex> CharacteristicModel::PhiLattice(std::int64_t n,
                                                     int order) const {
  if (order < 0) throw Error(ErrorCode::kInvalidArgument, "negative order");
  const double t0 = 2.0 * kPi * static_cast<double>(n);
  if (phi_lattice) {
    std::vector<Complex> v = phi_lattice(n, order);
    if (static_cast<int>(v.size()) < order + 1) {
      throw Error(ErrorCode::kInsufficientOrder,
                  name + ": lattice derivatives unavailable at this order");
    }
    v.resize(order + 1);
    return v;
  }
  if (psi && strip.Contains(0.0)) {
    const double radius = std::min(0.5, 0.5 * std::min(-strip.a, strip.b));
    std::vector<Complex> d =
        CauchyDerivatives(psi, Complex(0.0, t0), radius, order);
    Complex ik = 1.0;  // phi^(k)(t) = i^k psi^(k)(it)
    for (auto& v : d) {
      v *= ik;
      ik *= Complex(0.0, 1.0);
    }
    return d;
  }
  if (phi && order <= 2) {
    const double h = (order == 2 ? 1e-3 : 1e-4) *
                     std::sqrt(std::max(1.0, std::fabs(static_cast<double>(n))));
    const Complex f0 = phi(t0);
    const Complex fp1 = phi(t0 + h), fm1 = phi(t0 - h);
    const Complex fp2 = phi(t0 + 2 * h), fm2 = phi(t0 - 2 * h);
    std::vector<Complex> out{f0};
    if (order >= 1) out.push_back((-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12 * h));
    if (order >= 2) {
      out.push_back((-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) /
                    (12 * h * h));
    }
    return out;
  }
  throw Error(ErrorCode::kInsufficientOrder,
              name + ": no route to lattice derivatives of this order");
}

double LatticeDistribution::Total() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

double LatticeDistribution::Expect(
    const std::function<double(double)>& g) const {
  double s = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) s += probs[i] * g(Point(i));
  return s;
}

double LatticeDistribution::Mean() const {
  return Expect([](double x) { return x; });
}

double LatticeDistribution::Variance() const {
  const double mu = Mean();
  return Expect([mu](double x) { return (x - mu) * (x - mu); });
}

double LatticeDistribution::Moment(int m) const {
  return Expect([m](double x) { return std::pow(x, m); });
}

double LatticeDistribution::Cdf(double x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < probs.size() && Point(i) <= x; ++i) s += probs[i];
  return s;
}

void LatticeDistribution::Trim(double eps) {
  std::size_t lo = 0, hi = probs.size();
  while (lo < hi && probs[lo] <= eps) ++lo;
  while (hi > lo && probs[hi - 1] <= eps) --hi;
  probs = std::vector<double>(probs.begin() + lo, probs.begin() + hi);
  j_min += static_cast<std::int64_t>(lo);
}

}  // namespace roundosc
