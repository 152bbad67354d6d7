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

#include "roundosc/processes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "roundosc/error.h"
#include "roundosc/lattice_sum.h"

namespace roundosc {
namespace {

// Max of n geometric variables with failure probability q; q is passed
// directly so trie depth and max-geometric share bit-identical arithmetic.
LatticeDistribution MaxGeometricQ(std::int64_t n, double q) {
  const double nd = static_cast<double>(n);
  const auto log_cdf = [&](std::int64_t k) {
    return nd * std::log1p(-std::pow(q, static_cast<double>(k)));
  };
  LatticeDistribution d;
  d.j_min = 1;
  double prev_cdf = 0.0, prev_surv = 1.0;
  for (std::int64_t k = 1; k < 100000; ++k) {
    const double lc = log_cdf(k);
    const double cdf = std::exp(lc);
    const double surv = -std::expm1(lc);
    // difference of whichever side is better conditioned
    d.probs.push_back(cdf < 0.5 ? cdf - prev_cdf : prev_surv - surv);
    prev_cdf = cdf;
    prev_surv = surv;
    if (surv < 1e-17) break;
  }
  d.Trim(1e-16);
  return d;
}

// Rows of the birth chain; calls `row(i, p)` with the law of U_i for
// i = 0..n. The state space is 0..kmax.
template <typename F>
void BirthChain(std::int64_t n, F&& row) {
  const int kmax = static_cast<int>(
      std::ceil(std::log2(static_cast<double>(n) + 1.0))) + 64;
  std::vector<double> p(kmax + 1, 0.0), up(kmax + 1);
  for (int k = 0; k <= kmax; ++k) up[k] = std::ldexp(1.0, -k);
  p[0] = 1.0;
  int top = 0;  // highest reachable state
  row(0, p);
  for (std::int64_t i = 1; i <= n; ++i) {
    const int new_top = std::min(top + 1, kmax);
    for (int k = new_top; k >= 0; --k) {
      const double stay = k < kmax ? p[k] * (1.0 - up[k]) : p[k];
      const double arrive = k > 0 ? p[k - 1] * up[k - 1] : 0.0;
      p[k] = stay + arrive;
    }
    top = new_top;
    row(i, p);
  }
}

LatticeDistribution FromProbs(std::vector<double> probs, std::int64_t j_min) {
  LatticeDistribution d;
  d.j_min = j_min;
  d.probs = std::move(probs);
  d.Trim(0.0);
  return d;
}

struct TrieTrial {
  int depth = 0;
  int height = 0;
};

TrieTrial OneTrie(std::int64_t n, int m, Rng& rng) {
  std::uniform_int_distribution<int> digit(0, m - 1);
  std::vector<std::int64_t> keys(n), scratch(n);
  std::iota(keys.begin(), keys.end(), 0);
  std::vector<int> digits(n);
  std::vector<std::int64_t> counts(m + 1);
  TrieTrial out;
  // (begin, end, depth) of key ranges sharing a prefix
  struct Node {
    std::int64_t begin, end;
    int depth;
  };
  std::vector<Node> stack{{0, n, 0}};
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    if (node.end - node.begin <= 1) {
      if (node.end - node.begin == 1) {
        out.height = std::max(out.height, node.depth);
        if (keys[node.begin] == 0) out.depth = node.depth;
      }
      continue;
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (std::int64_t i = node.begin; i < node.end; ++i) {
      digits[i] = digit(rng);
      ++counts[digits[i] + 1];
    }
    for (int c = 0; c < m; ++c) counts[c + 1] += counts[c];
    for (std::int64_t i = node.begin; i < node.end; ++i) {
      scratch[node.begin + counts[digits[i]]++] = keys[i];
    }
    std::copy(scratch.begin() + node.begin, scratch.begin() + node.end,
              keys.begin() + node.begin);
    std::int64_t start = node.begin;
    for (int c = 0; c < m; ++c) {
      const std::int64_t stop = node.begin + counts[c];
      if (stop > start) stack.push_back({start, stop, node.depth + 1});
      start = stop;
    }
  }
  return out;
}

LatticeDistribution Histogram(const std::vector<TrieTrial>& trials,
                              int TrieTrial::*field) {
  int hi = 0;
  for (const auto& t : trials) hi = std::max(hi, t.*field);
  std::vector<double> probs(hi + 1, 0.0);
  for (const auto& t : trials) probs[t.*field] += 1.0;
  for (double& p : probs) p /= static_cast<double>(trials.size());
  LatticeDistribution d;
  d.probs = std::move(probs);
  d.Trim(0.0);
  return d;
}

std::string Tail(std::string_view name, std::string_view prefix) {
  return std::string(name.substr(prefix.size()));
}

double ParseDouble(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

int ParseInt(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

}  // namespace

LatticeDistribution BernoulliSum(const BernoulliProfile& profile) {
  std::vector<double> p{1.0};
  p.reserve(profile.success_probs.size() + 1);
  for (double q : profile.success_probs) {
    p.push_back(0.0);
    for (std::size_t j = p.size() - 1; j > 0; --j) {
      p[j] = p[j] * (1.0 - q) + p[j - 1] * q;
    }
    p[0] *= 1.0 - q;
  }
  LatticeDistribution d;
  d.probs = std::move(p);
  return d;
}

LatticeDistribution MaxGeometric(std::int64_t n, double p) {
  if (n < 1 || !(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "max_geometric needs n >= 1, 0 < p < 1");
  }
  return MaxGeometricQ(n, 1.0 - p);
}

LatticeDistribution TrieDepth(std::int64_t n, int m) {
  if (n < 2 || m < 2) {
    throw Error(ErrorCode::kInvalidArgument, "trie_depth needs n >= 2, m >= 2");
  }
  return MaxGeometricQ(n - 1, 1.0 / m);
}

TrieSample TrieSimulate(std::int64_t n, int m, std::int64_t trials,
                        std::uint64_t seed, std::int64_t budget,
                        int threads) {
  if (n < 1 || m < 2 || trials < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "trie_simulate needs n >= 1, m >= 2, trials >= 1");
  }
  if (static_cast<double>(n) * static_cast<double>(trials) >
      static_cast<double>(budget)) {
    throw Error(ErrorCode::kResource, "trie_simulate: n * trials over budget");
  }
  std::vector<TrieTrial> results(trials);
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = static_cast<int>(std::min<std::int64_t>(threads, trials));
  const auto work = [&](int w) {
    for (std::int64_t i = w; i < trials; i += threads) {
      Rng rng(DeriveSeed(seed, static_cast<std::uint64_t>(i)));
      results[i] = OneTrie(n, m, rng);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  return TrieSample{Histogram(results, &TrieTrial::depth),
                    Histogram(results, &TrieTrial::height)};
}

LatticeDistribution ApproxCounting(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "approx_counting needs n >= 0");
  std::vector<double> last;
  BirthChain(n, [&](std::int64_t i, const std::vector<double>& p) {
    if (i == n) last = p;
  });
  return FromProbs(std::move(last), 0);
}

LatticeDistribution SuccessfulSearch(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "successful_search needs n >= 1");
  std::vector<double> acc;
  BirthChain(n - 1, [&](std::int64_t, const std::vector<double>& p) {
    if (acc.empty()) acc.assign(p.size(), 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) acc[k] += p[k];
  });
  for (double& v : acc) v /= static_cast<double>(n);
  return FromProbs(std::move(acc), 1);
}

BernoulliProfile PatriciaProfile(double s, const SeriesControl& ctrl) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidArgument, "patricia needs s > 0");
  }
  const double cut = std::min(ctrl.tol, 1e-15);
  BernoulliProfile profile;
  for (int k = 1; k < 4000; ++k) {
    profile.success_probs.push_back(-std::expm1(-std::ldexp(s, -k)));
    // sum_{j > k} (1 - e^{-s/2^j}) <= s / 2^k
    const double rest = std::ldexp(s, -k);
    if (rest < cut) {
      profile.dropped_mass_bound = rest;
      break;
    }
  }
  return profile;
}

LatticeDistribution PatriciaPoisson(double s, const SeriesControl& ctrl) {
  LatticeDistribution d = BernoulliSum(PatriciaProfile(s, ctrl));
  d.Trim();
  return d;
}

double PatriciaMean(double s) {
  double m = 0.0;
  for (int k = 1; k < 4000; ++k) {
    const double x = std::ldexp(s, -k);
    m += -std::expm1(-x);
    if (x < 1e-18) break;
  }
  return m;
}

double TvDistance(const LatticeDistribution& a, const LatticeDistribution& b) {
  const double shift = a.offset - b.offset;
  const double r = std::nearbyint(shift);
  if (std::fabs(shift - r) > 1e-12) return 1.0;
  // position of a's support on b's integer index
  const std::int64_t da = a.j_min + static_cast<std::int64_t>(r);
  const std::int64_t lo = std::min(da, b.j_min);
  const std::int64_t hi =
      std::max(da + static_cast<std::int64_t>(a.probs.size()),
               b.j_min + static_cast<std::int64_t>(b.probs.size()));
  const auto at = [](const std::vector<double>& p, std::int64_t i) {
    return (i >= 0 && i < static_cast<std::int64_t>(p.size())) ? p[i] : 0.0;
  };
  double s = 0.0;
  for (std::int64_t j = lo; j < hi; ++j) {
    s += std::fabs(at(a.probs, j - da) - at(b.probs, j - b.j_min));
  }
  return std::min(1.0, 0.5 * s);
}

double PatriciaLogTv(double s) {
  if (!(s > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "patricia needs s > 0");
  }
  // With T_k = F(k - log2 s) - P(Y_s <= k) = sum_{i >= 0} B_{k+1+i}(s 2^i)
  // e^{-s 2^i}, write T_k = e^{-s} A_k; the TV is e^{-s} sum |A_k - A_{k-1}|/2.
  std::vector<std::vector<double>> pmf;  // law of Y_{s 2^i}
  for (int i = 0; i < 64 && s * (std::exp2(i) - 1.0) < 745.0; ++i) {
    const LatticeDistribution d = BernoulliSum(PatriciaProfile(s * std::exp2(i)));
    pmf.push_back(d.probs);
  }
  const auto b = [&pmf](int i, std::int64_t m) {
    const std::vector<double>& p = pmf[i];
    return m >= 0 && m < static_cast<std::int64_t>(p.size()) ? p[m] : 0.0;
  };
  const auto a_k = [&](std::int64_t k) {
    double sum = 0.0;
    for (int i = static_cast<int>(pmf.size()) - 1; i >= 0; --i) {
      sum += b(i, k + 1 + i) * std::exp(-s * (std::exp2(i) - 1.0));
    }
    return sum;
  };
  const auto k_lo = -static_cast<std::int64_t>(pmf.size()) - 1;
  const auto k_hi = static_cast<std::int64_t>(pmf.back().size()) + 1;
  double prev = a_k(k_lo - 1), total = 0.0;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const double cur = a_k(k);
    total += std::fabs(cur - prev);
    prev = cur;
  }
  return -s + std::log(0.5 * total);
}

LatticeDistribution CeilLimitLattice(const std::function<double(double)>& cdf,
                                     double a) {
  constexpr double kTail = 1e-12;
  constexpr int kMaxSpan = 100000;
  std::int64_t lo = static_cast<std::int64_t>(std::floor(a));
  std::int64_t hi = lo;
  for (int i = 0; i < kMaxSpan && cdf(lo - 1 - a) > kTail; ++i) --lo;
  for (int i = 0; i < kMaxSpan && 1.0 - cdf(hi - a) > kTail; ++i) ++hi;
  std::vector<double> probs;
  probs.reserve(hi - lo + 1);
  double prev = cdf(lo - 1 - a);
  for (std::int64_t k = lo; k <= hi; ++k) {
    const double cur = cdf(k - a);
    probs.push_back(std::max(0.0, cur - prev));
    prev = cur;
  }
  LatticeDistribution d;
  d.j_min = lo;
  d.probs = std::move(probs);
  return d;
}

std::vector<ConvergencePoint> ConvergenceCheck(const ProcessSpec& proc,
                                               std::span<const double> n_values) {
  if (!proc.limit.model.has_cdf()) {
    throw Error(ErrorCode::kNoCdf, proc.limit.model.name + " has no CDF");
  }
  std::vector<ConvergencePoint> out;
  for (double n : n_values) {
    const double a = proc.centering(n);
    if (proc.log_tv) {
      const double lt = proc.log_tv(n);
      out.push_back({n, a, std::exp(lt), lt});
      continue;
    }
    const LatticeDistribution limit = CeilLimitLattice(proc.limit.model.cdf, a);
    const double tv = TvDistance(proc.dist(n), limit);
    out.push_back({n, a, tv, std::log(tv)});
  }
  return out;
}

MonotoneResult MonotoneCdfCheck(const std::function<double(double)>& f,
                                std::span<const double> grid) {
  MonotoneResult r;
  if (grid.empty()) return r;
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = f(grid[i]);
  // decreases within a few ulps of the larger value are rounding, not a
  // violation
  const auto drops = [](double from, double to) {
    return from - to > kMonotoneUlps * std::numeric_limits<double>::epsilon() *
                           std::fabs(from);
  };
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && drops(v[i - 1], v[i])) {
      return {false, grid[i], v[i - 1] - v[i]};
    }
    if (grid[i] + 1.0 <= grid.back()) {
      const double ahead = f(grid[i] + 1.0);
      if (drops(v[i], ahead)) return {false, grid[i], v[i] - ahead};
    }
  }
  return r;
}

ProcessSpec ProcessByName(std::string_view name, std::uint64_t seed) {
  const auto as_count = [](double n) {
    return static_cast<std::int64_t>(std::llround(n));
  };
  try {
    if (name.starts_with("maxgeo:")) {
      const double p = ParseDouble(Tail(name, "maxgeo:"));
      if (p > 0.0 && p < 1.0) {
        const double l = -std::log1p(-p);
        return {std::string(name),
                [p, as_count](double n) { return MaxGeometric(as_count(n), p); },
                [l](double n) { return std::log(n) / l; },
                ScaledGumbel(1.0 / l), nullptr};
      }
    }
    if (name.starts_with("trie-depth:")) {
      const int m = ParseInt(Tail(name, "trie-depth:"));
      if (m >= 2) {
        const double l = std::log(static_cast<double>(m));
        return {std::string(name),
                [m, as_count](double n) { return TrieDepth(as_count(n), m); },
                [l](double n) { return std::log(n) / l; },
                ScaledGumbel(1.0 / l), nullptr};
      }
    }
    if (name.starts_with("trie-height:")) {
      const int m = ParseInt(Tail(name, "trie-height:"));
      if (m >= 2) {
        const double l = std::log(static_cast<double>(m));
        return {std::string(name),
                [m, seed, as_count](double n) {
                  constexpr std::int64_t kTrials = 20000;
                  return TrieSimulate(as_count(n), m, kTrials, seed).height;
                },
                [l](double n) { return (2.0 * std::log(n) - std::log(2.0)) / l; },
                ScaledGumbel(1.0 / l), nullptr};
      }
    }
  } catch (const std::logic_error&) {
    // malformed parameter: reported as unknown below
  }
  if (name == "approx-counting") {
    return {"approx-counting",
            [as_count](double n) { return ApproxCounting(as_count(n)); },
            [](double n) { return std::log2(n); }, ApproxCountingLimit(), nullptr};
  }
  if (name == "successful-search") {
    return {"successful-search",
            [as_count](double n) { return SuccessfulSearch(as_count(n)); },
            [](double n) { return std::log2(n); }, SuccessfulSearchLimit(), nullptr};
  }
  if (name == "patricia") {
    return {"patricia", [](double s) { return PatriciaPoisson(s); },
            [](double s) { return std::log2(s); }, PatriciaLimit(),
            PatriciaLogTv};
  }
  throw Error(ErrorCode::kUnknownName,
              "unknown process '" + std::string(name) + "'");
}

}  // namespace roundosc
