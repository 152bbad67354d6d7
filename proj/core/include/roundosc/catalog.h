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

// Concrete models: scaled Gumbel, the random-assignment limit, uniform
// families, and the limits of approximate counting, successful search in
// digital search trees and Patricia trie depth.

#ifndef ROUNDOSC_CATALOG_H_
#define ROUNDOSC_CATALOG_H_

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "roundosc/model.h"

namespace roundosc {

struct CatalogEntry {
  CharacteristicModel model;
  // Short human-readable origin of the model.
  std::string provenance;
  // Named constants, e.g. "Q", "eta1", "alpha_const", "g0".
  std::map<std::string, double> analytic_extras;
};

// X = cY with Y standard Gumbel: phi(t) = Gamma(1 - ict).
CatalogEntry ScaledGumbel(double c);
// Density e^-x (e^-x - 1 + x)/(1 - e^-x)^2 on x >= 0; psi(t) = 1 + t psi_1(1 - t).
CatalogEntry AldousAssignment();
// Uniform on (0, N).
CatalogEntry UniformN(int n);
// Uniform on (0, N) plus an independent U(0, 1).
CatalogEntry UniformNPlus2U(int n);
// psi(t) = eta(e^t)/eta(1) Gamma(1 - t/ln 2).
CatalogEntry ApproxCountingLimit();
// psi(t) = e^t eta(e^t) Gamma(1 - t/ln 2) / (eta(1)(1 + t/ln 2)).
CatalogEntry SuccessfulSearchLimit();
// F(x) = sum_m B_m(2^{m-1-x}) exp(-2^{m-1-x}); phi(2 pi n) = Gamma(1 - 2 pi n i/ln 2).
CatalogEntry PatriciaLimit();

// `gumbel:c`, `aldous`, `uniform:N`, `uniform2u:N`, `approx-counting`,
// `successful-search`, `patricia`. Throws kUnknownName.
CatalogEntry CatalogByName(std::string_view name);
std::vector<std::string> CatalogNames();

// sum_{n>=1} 1/(2^n - 1).
double AlphaConstant();

// Distribution functions of the three digital-tree limits.
double ApproxCountingCdf(double x);
double SuccessfulSearchCdf(double x);
// 1 - F without cancellation in the upper tail.
double ApproxCountingSurvival(double x);
double SuccessfulSearchSurvival(double x);
double PatriciaCdf(double x);

// Inverse of a continuous distribution function tabulated on a uniform grid
// and interpolated by monotone piecewise cubic Hermite splines.
class InverseCdfTable {
 public:
  InverseCdfTable(const std::function<double(double)>& cdf, double lo,
                  double hi, int points);

  // Interpolated F(x).
  double Cdf(double x) const;
  // x with Cdf(x) = u, by bisection within the bracketing cell.
  double Quantile(double u) const;

 private:
  double HermiteAt(std::size_t i, double x) const;

  double lo_;
  double step_;
  std::vector<double> f_;
  std::vector<double> slope_;
};

}  // namespace roundosc

#endif  // ROUNDOSC_CATALOG_H_
