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

// Reference engines used to cross-check the lattice formulas: Monte Carlo on
// the definition of X_a, quadrature over CDF differences, the literal Fejer
// mean, and moment/cumulant conversion.

#ifndef ROUNDOSC_ORACLE_H_
#define ROUNDOSC_ORACLE_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "roundosc/model.h"
#include "roundosc/special_fn.h"

namespace roundosc {

using Sampler = std::function<double(Rng&)>;

// Samples are drawn in chunks of this size; chunk c uses the generator
// seeded with DeriveSeed(seed, c).
inline constexpr std::int64_t kMcChunk = 1 << 16;

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

struct McComplexEstimate {
  Complex value;
  double std_error = 0.0;  // of the modulus-wise error, sqrt(E|Z - EZ|^2 / T)
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

// floor(x + a) - a + 1 with the mathematical floor.
double RoundedValue(double x, double alpha);

// Draws `trials` samples in the documented chunk order.
std::vector<double> DrawSamples(const Sampler& sampler, std::int64_t trials,
                                std::uint64_t seed);

// Sample mean of (X_a)^m. Requires trials >= 100.
McEstimate McRoundedMoment(const Sampler& sampler, int m, double alpha,
                           std::int64_t trials, std::uint64_t seed);
// Sample variance of X_a with the delta-method standard error.
McEstimate McRoundedVariance(const Sampler& sampler, double alpha,
                             std::int64_t trials, std::uint64_t seed);
McComplexEstimate McRoundedCharFn(const Sampler& sampler, double t,
                                  double alpha, std::int64_t trials,
                                  std::uint64_t seed);

struct McSummary {
  double alpha = 0.0;
  McEstimate mean;
  McEstimate variance;
};
// Mean and variance of X_a for several a from one shared sample.
std::vector<McSummary> McRoundedSummaries(const Sampler& sampler,
                                          std::span<const double> alphas,
                                          std::int64_t trials,
                                          std::uint64_t seed);

struct QuadResult {
  double value = 0.0;
  double clip_bound = 0.0;  // F(lo) + 1 - F(hi) at the clipped ends
};

// sum_j (j + 1 - a)^m [F(j + 1 - a) - F(j - a)] over the points in
// [lo, hi]. Throws kWindowTooSmall when the clipped mass exceeds 1e-9.
QuadResult QuadRoundedMoment(const std::function<double(double)>& cdf, int m,
                             double alpha, double lo, double hi);
// Central second moment from the same CDF differences.
QuadResult QuadRoundedVariance(const std::function<double(double)>& cdf,
                               double alpha, double lo, double hi);

// sum_{|n| <= N} (1 - |n|/(N+1)) tilde-phi(t + 2 pi n) e^{2 pi i n a}.
Complex CesaroReference(const CharacteristicModel& model, double t,
                        double alpha, std::int64_t n);

// Triangular recurrences between raw moments m_1..m_M and cumulants
// k_1..k_M (index 0 holds order 1).
std::vector<double> MomentsToCumulants(std::span<const double> moments);
std::vector<double> CumulantsToMoments(std::span<const double> cumulants);

}  // namespace roundosc

#endif  // ROUNDOSC_ORACLE_H_
