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

#include "roundosc/oracle.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "roundosc/error.h"
#include "roundosc/lattice_sum.h"
#include "roundosc/rounded.h"

namespace roundosc {
namespace {

void RequireTrials(std::int64_t trials) {
  if (trials < 100) {
    throw Error(ErrorCode::kInvalidArgument, "Monte Carlo needs >= 100 trials");
  }
}

struct Central {
  double mean = 0.0;
  double m2 = 0.0;
  double m4 = 0.0;
};

// Two-pass central moments, summed in sample order.
Central CentralMoments(const std::vector<double>& y) {
  Central c;
  for (double v : y) c.mean += v;
  c.mean /= static_cast<double>(y.size());
  for (double v : y) {
    const double d = (v - c.mean) * (v - c.mean);
    c.m2 += d;
    c.m4 += d * d;
  }
  c.m2 /= static_cast<double>(y.size());
  c.m4 /= static_cast<double>(y.size());
  return c;
}

McEstimate VarianceEstimate(const std::vector<double>& y, std::uint64_t seed) {
  const Central c = CentralMoments(y);
  const double t = static_cast<double>(y.size());
  McEstimate e;
  e.value = c.m2 * t / (t - 1.0);
  e.std_error = std::sqrt(std::max(0.0, c.m4 - c.m2 * c.m2) / t);
  e.trials = static_cast<std::int64_t>(y.size());
  e.seed = seed;
  return e;
}

McEstimate MeanEstimate(const std::vector<double>& y, std::uint64_t seed) {
  const Central c = CentralMoments(y);
  const double t = static_cast<double>(y.size());
  McEstimate e;
  e.value = c.mean;
  e.std_error = std::sqrt(c.m2 / (t - 1.0));
  e.trials = static_cast<std::int64_t>(y.size());
  e.seed = seed;
  return e;
}

}  // namespace

double RoundedValue(double x, double alpha) {
  return std::floor(x + alpha) - alpha + 1.0;
}

std::vector<double> DrawSamples(const Sampler& sampler, std::int64_t trials,
                                std::uint64_t seed) {
  if (trials < 0) throw Error(ErrorCode::kInvalidArgument, "trials < 0");
  std::vector<double> out(trials);
  const std::int64_t chunks = (trials + kMcChunk - 1) / kMcChunk;
  const int threads = static_cast<int>(std::min<std::int64_t>(
      std::max(1u, std::thread::hardware_concurrency()), std::max<std::int64_t>(chunks, 1)));
  const auto work = [&](int w) {
    for (std::int64_t c = w; c < chunks; c += threads) {
      Rng rng(DeriveSeed(seed, static_cast<std::uint64_t>(c)));
      const std::int64_t end = std::min(trials, (c + 1) * kMcChunk);
      for (std::int64_t i = c * kMcChunk; i < end; ++i) out[i] = sampler(rng);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  return out;
}

McEstimate McRoundedMoment(const Sampler& sampler, int m, double alpha,
                           std::int64_t trials, std::uint64_t seed) {
  RequireTrials(trials);
  std::vector<double> y = DrawSamples(sampler, trials, seed);
  for (double& v : y) v = std::pow(RoundedValue(v, alpha), m);
  return MeanEstimate(y, seed);
}

McEstimate McRoundedVariance(const Sampler& sampler, double alpha,
                             std::int64_t trials, std::uint64_t seed) {
  RequireTrials(trials);
  std::vector<double> y = DrawSamples(sampler, trials, seed);
  for (double& v : y) v = RoundedValue(v, alpha);
  return VarianceEstimate(y, seed);
}

McComplexEstimate McRoundedCharFn(const Sampler& sampler, double t,
                                  double alpha, std::int64_t trials,
                                  std::uint64_t seed) {
  RequireTrials(trials);
  const std::vector<double> x = DrawSamples(sampler, trials, seed);
  std::vector<Complex> z(x.size());
  Complex mean = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = std::polar(1.0, t * RoundedValue(x[i], alpha));
    mean += z[i];
  }
  mean /= static_cast<double>(x.size());
  double spread = 0.0;
  for (const Complex& v : z) spread += std::norm(v - mean);
  McComplexEstimate e;
  e.value = mean;
  e.std_error = std::sqrt(spread / static_cast<double>(x.size()) /
                          static_cast<double>(x.size()));
  e.trials = trials;
  e.seed = seed;
  return e;
}

std::vector<McSummary> McRoundedSummaries(const Sampler& sampler,
                                          std::span<const double> alphas,
                                          std::int64_t trials,
                                          std::uint64_t seed) {
  RequireTrials(trials);
  const std::vector<double> x = DrawSamples(sampler, trials, seed);
  std::vector<McSummary> out;
  std::vector<double> y(x.size());
  for (double a : alphas) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = RoundedValue(x[i], a);
    out.push_back({a, MeanEstimate(y, seed), VarianceEstimate(y, seed)});
  }
  return out;
}

namespace {

// Cells j with support point j + 1 - a in [lo, hi].
struct Cells {
  std::int64_t first, last;
  double clip;
};

Cells QuadCells(const std::function<double(double)>& cdf, double alpha,
                double lo, double hi) {
  if (!cdf) throw Error(ErrorCode::kNoCdf, "quadrature oracle needs a CDF");
  if (!(hi > lo)) throw Error(ErrorCode::kInvalidArgument, "empty window");
  Cells c;
  c.first = static_cast<std::int64_t>(std::ceil(lo + alpha - 1.0));
  c.last = static_cast<std::int64_t>(std::floor(hi + alpha - 1.0));
  c.clip = cdf(c.first - alpha) + (1.0 - cdf(c.last + 1 - alpha));
  if (c.clip > 1e-9) {
    throw Error(ErrorCode::kWindowTooSmall,
                "quadrature window leaves mass " + std::to_string(c.clip));
  }
  return c;
}

}  // namespace

QuadResult QuadRoundedMoment(const std::function<double(double)>& cdf, int m,
                             double alpha, double lo, double hi) {
  const Cells c = QuadCells(cdf, alpha, lo, hi);
  double s = 0.0;
  double prev = cdf(c.first - alpha);
  for (std::int64_t j = c.first; j <= c.last; ++j) {
    const double x = j + 1 - alpha;
    const double cur = cdf(x);
    s += std::pow(x, m) * (cur - prev);
    prev = cur;
  }
  return {s, c.clip};
}

QuadResult QuadRoundedVariance(const std::function<double(double)>& cdf,
                               double alpha, double lo, double hi) {
  const Cells c = QuadCells(cdf, alpha, lo, hi);
  std::vector<double> w;
  double prev = cdf(c.first - alpha), mean = 0.0;
  for (std::int64_t j = c.first; j <= c.last; ++j) {
    const double cur = cdf(j + 1 - alpha);
    w.push_back(cur - prev);
    mean += (j + 1 - alpha) * w.back();
    prev = cur;
  }
  double var = 0.0;
  for (std::int64_t j = c.first; j <= c.last; ++j) {
    const double d = j + 1 - alpha - mean;
    var += d * d * w[j - c.first];
  }
  return {var, c.clip};
}

Complex CesaroReference(const CharacteristicModel& model, double t,
                        double alpha, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "N < 1");
  alpha = FractionalPart(alpha);
  const double denom = static_cast<double>(n + 1);
  Complex sum = 0.0;
  for (std::int64_t k = -n; k <= n; ++k) {
    const double weight = 1.0 - static_cast<double>(k < 0 ? -k : k) / denom;
    const Complex w = TildePhi(model, t + 2.0 * kPi * static_cast<double>(k));
    sum += weight * (w * LatticePhase(k, alpha));
  }
  return sum;
}

std::vector<double> MomentsToCumulants(std::span<const double> moments) {
  // kappa_n = mu_n - sum_{k<n} C(n-1, k-1) kappa_k mu_{n-k}
  const std::size_t m = moments.size();
  std::vector<double> k(m);
  for (std::size_t n = 1; n <= m; ++n) {
    double s = moments[n - 1];
    double binom = 1.0;  // C(n-1, k-1)
    for (std::size_t j = 1; j < n; ++j) {
      s -= binom * k[j - 1] * moments[n - j - 1];
      binom = binom * static_cast<double>(n - j) / static_cast<double>(j);
    }
    k[n - 1] = s;
  }
  return k;
}

std::vector<double> CumulantsToMoments(std::span<const double> cumulants) {
  // mu_n = sum_{k=1}^{n} C(n-1, k-1) kappa_k mu_{n-k}, mu_0 = 1
  const std::size_t m = cumulants.size();
  std::vector<double> mu(m + 1);
  mu[0] = 1.0;
  for (std::size_t n = 1; n <= m; ++n) {
    double s = 0.0, binom = 1.0;
    for (std::size_t j = 1; j <= n; ++j) {
      s += binom * cumulants[j - 1] * mu[n - j];
      binom = binom * static_cast<double>(n - j) / static_cast<double>(j);
    }
    mu[n] = s;
  }
  return std::vector<double>(mu.begin() + 1, mu.end());
}

}  // namespace roundosc
