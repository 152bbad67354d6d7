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

// Integer-valued processes from digital trees and approximate counting:
// exact finite-n laws, a trie simulator, total variation distance and the
// convergence diagnostics d_TV(Y_n, ceil(X + a_n)).

#ifndef ROUNDOSC_PROCESSES_H_
#define ROUNDOSC_PROCESSES_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "roundosc/catalog.h"
#include "roundosc/model.h"
#include "roundosc/series_control.h"

namespace roundosc {

// Independent Bernoulli indicators; the ones beyond the cutoff were dropped
// and carry at most dropped_mass_bound expected successes in total.
struct BernoulliProfile {
  std::vector<double> success_probs;
  double dropped_mass_bound = 0.0;
};

// Law of the number of successes.
LatticeDistribution BernoulliSum(const BernoulliProfile& profile);

// Max of n i.i.d. Ge(p) variables on {1, 2, ...}: P(Y <= k) = (1 - q^k)^n.
LatticeDistribution MaxGeometric(std::int64_t n, double p);

// Depth of a key in a trie over n random m-ary strings:
// P(D <= k) = (1 - m^-k)^(n-1).
LatticeDistribution TrieDepth(std::int64_t n, int m);

struct TrieSample {
  LatticeDistribution depth;   // depth of key 0
  LatticeDistribution height;  // max depth
};

// Monte Carlo over `trials` tries of n keys; trial i uses the generator
// seeded with DeriveSeed(seed, i), so the output does not depend on
// `threads` (0 = hardware concurrency). Throws kResource when n * trials
// exceeds `budget`.
TrieSample TrieSimulate(std::int64_t n, int m, std::int64_t trials,
                        std::uint64_t seed, std::int64_t budget = 1'000'000'000,
                        int threads = 0);

// U_n of the birth chain U_0 = 0, P(U_{n+1} = k + 1 | U_n = k) = 2^-k.
LatticeDistribution ApproxCounting(std::int64_t n);

// 1 + U_I with I uniform on {0, ..., n-1}.
LatticeDistribution SuccessfulSearch(std::int64_t n);

// Y_s = sum_k Be(1 - e^{-s/2^k}), dropping k with s 2^-k summed below
// min(ctrl.tol, 1e-15).
BernoulliProfile PatriciaProfile(double s, const SeriesControl& ctrl = {});
LatticeDistribution PatriciaPoisson(double s, const SeriesControl& ctrl = {});
// m(s) = E Y_s.
double PatriciaMean(double s);
// ln d_TV(Y_s, ceil(X + log2 s)) against the Patricia limit X. The gap
// F(k - log2 s) - P(Y_s <= k) is a sum of positive terms of size at most
// e^{-s}, so it is evaluated with e^{-s} factored out.
double PatriciaLogTv(double s);

// (1/2) sum |P(V = x) - P(W = x)|; 1 when the lattices are not congruent.
double TvDistance(const LatticeDistribution& a, const LatticeDistribution& b);

struct ProcessSpec {
  std::string name;
  std::function<LatticeDistribution(double)> dist;
  std::function<double(double)> centering;  // a_n
  CatalogEntry limit;
  // Exact ln d_TV(dist(n), ceil(X + a_n)) for processes whose distance drops
  // below double resolution. Optional.
  std::function<double(double)> log_tv;
};

// Law of ceil(X + a) on the integers from CDF differences
// F(k - a) - F(k - 1 - a), clipped where either tail is below 1e-12.
LatticeDistribution CeilLimitLattice(const std::function<double(double)>& cdf,
                                     double a);

struct ConvergencePoint {
  double n = 0.0;
  double a_n = 0.0;
  double tv = 0.0;
  double log_tv = 0.0;  // ln tv, finite even where tv underflows
};

std::vector<ConvergencePoint> ConvergenceCheck(const ProcessSpec& proc,
                                               std::span<const double> n_values);

struct MonotoneResult {
  bool pass = true;
  double violation_x = 0.0;  // first offending grid point
  double drop = 0.0;         // size of the decrease found there
};

// F nondecreasing on the grid and F(x) <= F(x + 1) for grid x with x + 1 not
// beyond the last grid point. Drops up to kMonotoneUlps ulps are ignored.
inline constexpr double kMonotoneUlps = 4.0;
MonotoneResult MonotoneCdfCheck(const std::function<double(double)>& f,
                                std::span<const double> grid);

// `maxgeo:p`, `trie-depth:m`, `trie-height:m`, `approx-counting`,
// `successful-search`, `patricia`. `seed` drives the simulated trie height.
// Throws kUnknownName.
inline constexpr std::uint64_t kDefaultProcessSeed = 20260101;
ProcessSpec ProcessByName(std::string_view name,
                          std::uint64_t seed = kDefaultProcessSeed);

}  // namespace roundosc

#endif  // ROUNDOSC_PROCESSES_H_
