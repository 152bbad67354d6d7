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

// Reference values come from tests/reference/mpmath_reference.py, where they
// are computed as direct lattice sums over the distribution function.

#include "roundosc/rounded.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "roundosc/catalog.h"
#include "roundosc/error.h"
#include "roundosc/oracle.h"

namespace roundosc {
namespace {

const SeriesControl kCtrl{};
const double kC = 1.0 / kLn2;

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kUnsupported;
}

// A model that declares slow decay and nothing else.
CharacteristicModel SlowModel() {
  CharacteristicModel m = UniformN(1).model;
  m.name = "slow";
  m.decay_exponent = 0.5;
  m.psi = nullptr;
  m.cdf = nullptr;
  return m;
}

TEST(TildePhiTest, Values) {
  const CharacteristicModel g = ScaledGumbel(1.0).model;
  EXPECT_EQ(TildePhi(g, 0.0), Complex(1.0));
  for (int n : {1, -2, 5}) EXPECT_LT(std::abs(TildePhi(g, 2 * kPi * n)), 1e-17);
  const Complex w = (std::exp(Complex(0, 1)) - 1.0) / Complex(0, 1);
  const Complex want = w * GammaComplex(Complex(1, -1));
  EXPECT_LT(std::abs(TildePhi(g, 1.0) - want), 1e-15);
}

TEST(CharRoundedTest, TrivialAndPeriodic) {
  for (const char* name : {"gumbel:1.4426950408889634", "aldous", "uniform:3",
                           "approx-counting", "patricia"}) {
    const CharacteristicModel m = CatalogByName(name).model;
    EXPECT_NEAR(std::abs(CharRounded(m, 0.0, 0.37, kCtrl) - 1.0), 0.0, 1e-12)
        << name;
    const Complex a = CharRounded(m, 0.8, 0.3, kCtrl);
    const Complex b = CharRounded(m, 0.8, 1.3, kCtrl);
    const Complex c = CharRounded(m, 0.8, -0.7, kCtrl);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-14) << name;
    EXPECT_NEAR(std::abs(a - c), 0.0, 1e-14) << name;
    EXPECT_LE(std::abs(a), 1.0 + kCtrl.tol) << name;
  }
}

TEST(CharRoundedTest, GumbelMatchesDirectLatticeSum) {
  const CharacteristicModel m = ScaledGumbel(kC).model;
  const Complex z = CharRounded(m, 1.0, 0.3, kCtrl);
  EXPECT_NEAR(z.real(), 0.23140592576030195673, 1e-12);
  EXPECT_NEAR(z.imag(), 0.18997935275973781675, 1e-12);
}

TEST(CharRoundedTest, SlowDecayNeedsCesaro) {
  SeriesControl ctrl;
  ctrl.mode = SummationMode::kAdaptive;
  const CharacteristicModel m = SlowModel();
  EXPECT_EQ(CodeOf([&] { CharRounded(m, 1.0, 0.3, ctrl); }),
            ErrorCode::kNeedsCesaro);
  EXPECT_EQ(ResolveMode(m, SeriesControl{}), SummationMode::kCesaro);
  EXPECT_EQ(ResolveMode(ScaledGumbel(1).model, SeriesControl{}),
            SummationMode::kAdaptive);
}

TEST(CharRoundedTest, CesaroAgreesWithAdaptive) {
  SeriesControl cesaro;
  cesaro.mode = SummationMode::kCesaro;
  cesaro.fejer_n = 1 << 16;
  for (const char* name :
       {"gumbel:1.4426950408889634", "approx-counting", "successful-search"}) {
    const CharacteristicModel m = CatalogByName(name).model;
    const Complex a = CharRounded(m, 1.0, 0.3, kCtrl);
    const Complex c = CharRounded(m, 1.0, 0.3, cesaro);
    EXPECT_LT(std::abs(a - c), 1e-6) << name;
  }
}

TEST(CharRoundedTest, CesaroRateForAlgebraicDecay) {
  // Fejer weights leave an O(log N / N) bias when |phi| ~ 1/|t|.
  const CharacteristicModel m = AldousAssignment().model;
  const Complex exact = CharRounded(m, 1.0, 0.3, kCtrl);
  SeriesControl c;
  c.mode = SummationMode::kCesaro;
  c.fejer_n = 1024;
  const double e1 = std::abs(CharRounded(m, 1.0, 0.3, c) - exact);
  c.fejer_n = 4096;
  const double e2 = std::abs(CharRounded(m, 1.0, 0.3, c) - exact);
  EXPECT_LT(e2, e1 / 2.5);
}

TEST(MgfRoundedTest, ApproxCountingExponentialMoments) {
  const CharacteristicModel m = ApproxCountingLimit().model;
  const double want[] = {1.0, 1.5, 3.5};
  for (int k = 1; k <= 3; ++k) {
    for (double a : {0.0, 0.3, 0.75}) {
      EXPECT_NEAR(MgfRounded(m, k * kLn2, a, kCtrl).real(), want[k - 1], 1e-10)
          << k << " " << a;
    }
  }
  EXPECT_NEAR(MgfRounded(m, 0.0, 0.4, kCtrl).real(), 1.0, 1e-12);
  EXPECT_NEAR(MgfRounded(m, 0.5, 0.3, kCtrl).real(), 0.96163818295599733562,
              1e-11);
}

TEST(MgfRoundedTest, SuccessfulSearch) {
  const CharacteristicModel m = SuccessfulSearchLimit().model;
  for (double a : {0.1, 0.6}) {
    EXPECT_NEAR(MgfRounded(m, kLn2, a, kCtrl).real(), 1.0, 1e-10);
    EXPECT_NEAR(MgfRounded(m, 2 * kLn2, a, kCtrl).real(), 2.0, 1e-10);
  }
}

TEST(MgfRoundedTest, Errors) {
  const CharacteristicModel s = SuccessfulSearchLimit().model;
  EXPECT_EQ(CodeOf([&] { MgfRounded(s, -1.0, 0.0, kCtrl); }),
            ErrorCode::kStripViolation);
  const CharacteristicModel g = ScaledGumbel(1.0).model;
  EXPECT_EQ(CodeOf([&] { MgfRounded(g, 1.5, 0.0, kCtrl); }),
            ErrorCode::kStripViolation);
  EXPECT_EQ(CodeOf([&] { MgfRounded(SlowModel(), 0.1, 0.0, kCtrl); }),
            ErrorCode::kNoMgf);
}

TEST(DerivTildeTest, LowOrders) {
  const CharacteristicModel m = ApproxCountingLimit().model;
  for (std::int64_t n : {1, -1, 2}) {
    const double x = 2 * kPi * n;
    const std::vector<Complex> phi = m.PhiLattice(n, 1);
    EXPECT_LT(std::abs(DerivTildeAtLattice(m, 1, n) - phi[0] / x),
              1e-14 * std::abs(phi[0] / x));
    const Complex want2 = Complex(0, 1) * phi[0] / x -
                          2.0 * phi[0] / (x * x) + 2.0 * phi[1] / x;
    EXPECT_LT(std::abs(DerivTildeAtLattice(m, 2, n) - want2),
              1e-13 * std::abs(want2));
  }
}

TEST(DerivTildeTest, UniformPlusUniformThirdOrder) {
  // Three simple zeros meet at 2 pi n, so D^3 tilde-phi = 3!/(2 pi n)^3.
  for (int big_n : {1, 2, 5}) {
    const CharacteristicModel m = UniformNPlus2U(big_n).model;
    for (std::int64_t n : {1, 2, -3}) {
      const double x = 2 * kPi * n;
      EXPECT_LT(std::abs(DerivTildeAtLattice(m, 3, n) - 6.0 / (x * x * x)),
                1e-12 / std::fabs(x * x * x))
          << big_n << " " << n;
    }
  }
}

TEST(DerivTildeTest, OrderCap) {
  // Patricia has no closed-form phi'' at the lattice.
  const CharacteristicModel p = PatriciaLimit().model;
  EXPECT_EQ(CodeOf([&] { DerivTildeAtLattice(p, 3, 1); }),
            ErrorCode::kUnsupported);
}

TEST(BetaTest, ReferenceValues) {
  EXPECT_NEAR(BetaM(ScaledGumbel(kC).model, 1, 0.3, kCtrl),
              5.8924760946057739968e-7, 1e-13);
  EXPECT_NEAR(BetaM(ApproxCountingLimit().model, 2, 0.3, kCtrl),
              -0.000011897084384374137398, 1e-13);
}

TEST(BetaTest, UniformVanishes) {
  for (int n : {1, 3}) {
    const CharacteristicModel m = UniformN(n).model;
    for (double a : {0.0, 0.2, 0.5, 0.9}) {
      EXPECT_LT(std::fabs(BetaM(m, 1, a, kCtrl)), 1e-12) << n << " " << a;
    }
  }
}

TEST(BetaTest, UniformPlusUniformIsBernoulliCubic) {
  const CharacteristicModel m = UniformNPlus2U(2).model;
  for (double a : {0.1, 0.25, 0.6}) {
    EXPECT_LT(std::fabs(BetaM(m, 1, a, kCtrl)), 1e-12);
    EXPECT_LT(std::fabs(BetaM(m, 2, a, kCtrl)), 1e-12);
    EXPECT_NEAR(BetaM(m, 3, a, kCtrl), -BernoulliPolynomial(3, a), 1e-9);
  }
}

TEST(BetaTest, MeanZeroAndPeriodic) {
  const std::vector<double> grid = MidpointGrid(256);
  struct Case {
    const char* name;
    int m;
  };
  for (const Case& c : {Case{"gumbel:1.4426950408889634", 1},
                        Case{"gumbel:0.5", 2}, Case{"aldous", 1},
                        Case{"approx-counting", 2}, Case{"patricia", 2},
                        Case{"successful-search", 1}}) {
    const CharacteristicModel m = CatalogByName(c.name).model;
    const OscillationProfile p = BetaProfile(m, c.m, grid, kCtrl);
    const double mean =
        std::accumulate(p.values.begin(), p.values.end(), 0.0) / grid.size();
    // The grid mean picks up the Fourier terms at multiples of the grid size.
    double alias = 0.0;
    const auto k = static_cast<std::int64_t>(grid.size());
    for (std::int64_t j = 1; j <= 64; ++j) {
      alias += 2.0 * std::abs(m.PhiLattice(j * k, 0)[0]) *
               std::pow(2 * kPi * j * k, -c.m);
    }
    EXPECT_LT(std::fabs(mean), 10 * kCtrl.tol + 2.0 * alias) << c.name;
    EXPECT_NEAR(BetaM(m, c.m, 0.3, kCtrl), BetaM(m, c.m, 1.3, kCtrl), 1e-14)
        << c.name;
    // The DFT profile agrees with pointwise summation; each is within tol.
    for (std::size_t i : {std::size_t{0}, std::size_t{77}, std::size_t{200}}) {
      EXPECT_NEAR(p.values[i], BetaM(m, c.m, grid[i], kCtrl), 2 * kCtrl.tol)
          << c.name;
    }
  }
}

TEST(BetaTest, GumbelBound) {
  const OscillationProfile p =
      BetaProfile(ScaledGumbel(kC).model, 1, MidpointGrid(256), kCtrl);
  double worst = 0.0;
  for (double v : p.values) worst = std::max(worst, std::fabs(v));
  EXPECT_GE(worst, 1.0e-6);
  EXPECT_LE(worst, 1.6e-6);
}

TEST(BetaTest, FractionalPartsShareFourierCoefficients) {
  const std::vector<double> grid = MidpointGrid(64);
  const OscillationProfile g =
      BetaProfile(ScaledGumbel(kC).model, 1, grid, kCtrl);
  for (const char* name : {"approx-counting", "patricia"}) {
    const CharacteristicModel m = CatalogByName(name).model;
    for (std::int64_t n : {1, 2, -1}) {
      EXPECT_LT(std::abs(m.PhiLattice(n, 0)[0] -
                         ScaledGumbel(kC).model.PhiLattice(n, 0)[0]),
                1e-10);
    }
    const OscillationProfile p = BetaProfile(m, 1, grid, kCtrl);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_NEAR(p.values[i], g.values[i], 1e-10) << name;
    }
  }
}

TEST(BetaTest, ParsevalRelation) {
  // Relative for Gumbel, whose sum is ~1e-12; absolute for Aldous, where
  // midpoint aliasing at 4096 points is ~1e-10.
  for (const auto& [name, relative] :
       {std::pair{"gumbel:1.4426950408889634", true},
        std::pair{"aldous", false}}) {
    const CharacteristicModel m = CatalogByName(name).model;
    const OscillationProfile p = BetaProfile(m, 1, MidpointGrid(4096), kCtrl);
    double q = 0.0;
    for (double v : p.values) q += v * v;
    q /= 4096.0;
    const double s = ParsevalSum(m, kCtrl).value.real();
    EXPECT_NEAR(q, s, relative ? 1e-8 * s : 1e-8) << name;
  }
}

TEST(MomentRoundedTest, Examples) {
  EXPECT_NEAR(MomentRounded(UniformN(1).model, 1, 0.3, kCtrl), 1.0, 1e-12);
  const CharacteristicModel g = ScaledGumbel(kC).model;
  EXPECT_NEAR(MomentRounded(g, 1, 0.0, kCtrl),
              kC * kEulerGamma + 0.5 + BetaM(g, 1, 0.0, kCtrl), 1e-14);
  const CharacteristicModel a = ApproxCountingLimit().model;
  EXPECT_NEAR(MomentRounded(a, 1, 0.3, kCtrl), -0.27394838589081515256, 1e-12);
}

TEST(MomentRoundedTest, FirstMomentIsShiftedBeta) {
  for (const char* name : {"aldous", "approx-counting", "gumbel:2"}) {
    const CharacteristicModel m = CatalogByName(name).model;
    for (double a : {0.05, 0.5, 0.95}) {
      EXPECT_NEAR(MomentRounded(m, 1, a, kCtrl) - (m.Mean() + 0.5),
                  BetaM(m, 1, a, kCtrl), 1e-14)
          << name;
    }
  }
}

TEST(MomentRoundedTest, AldousFractionalPartMean) {
  const CharacteristicModel m = AldousAssignment().model;
  const double frac = m.Mean() + 1.0 - MomentRounded(m, 1, 0.0, kCtrl);
  EXPECT_NEAR(frac, 11.0 / 24.0, 1e-12);
}

TEST(VarRoundedTest, Uniform) {
  const CharacteristicModel m = UniformN(2).model;
  EXPECT_NEAR(VarRounded(m, 0.5, kCtrl), m.Variance() - 1.0 / 12.0 + 0.25,
              1e-10);
  for (double a : {0.1, 0.9}) {
    EXPECT_NEAR(VarRounded(m, a, kCtrl),
                m.Variance() - 1.0 / 12.0 + a * (1 - a), 1e-10);
  }
}

TEST(VarRoundedTest, PatriciaIsOne) {
  const CharacteristicModel m = PatriciaLimit().model;
  for (double a : MidpointGrid(16)) {
    EXPECT_NEAR(VarRounded(m, a, kCtrl), 1.0, 1e-9) << a;
  }
}

TEST(VarRoundedTest, ApproxCountingReference) {
  const CharacteristicModel m = ApproxCountingLimit().model;
  EXPECT_NEAR(VarRounded(m, 0.3, kCtrl), 0.76300261287397421245, 1e-11);
}

TEST(VarRoundedTest, MatchesMomentDifference) {
  for (const char* name : {"aldous", "approx-counting", "successful-search",
                           "patricia", "uniform2u:2"}) {
    const CharacteristicModel m = CatalogByName(name).model;
    for (double a : {0.0, 0.4}) {
      const double m1 = MomentRounded(m, 1, a, kCtrl);
      const double m2 = MomentRounded(m, 2, a, kCtrl);
      EXPECT_NEAR(m2 - m1 * m1, VarRounded(m, a, kCtrl), 1e-10) << name;
    }
  }
}

TEST(ShiftTest, SheppardAndCumulantRoutes) {
  const std::vector<double> raw = {0.3, 1.2, 0.9, 5.0};
  EXPECT_DOUBLE_EQ(SheppardShift(raw, 1), 0.3 + 0.5);
  EXPECT_NEAR(SheppardShift(raw, 2), 1.2 + 0.3 + 1.0 / 3.0, 1e-15);
  const std::vector<double> kappa = MomentsToCumulants(raw);
  EXPECT_NEAR(CumulantShift(kappa, 2), kappa[1] + 1.0 / 12.0, 1e-15);
  std::vector<double> shifted_kappa(4);
  for (int m = 1; m <= 4; ++m) shifted_kappa[m - 1] = CumulantShift(kappa, m);
  const std::vector<double> via_cumulants = CumulantsToMoments(shifted_kappa);
  for (int m = 1; m <= 4; ++m) {
    EXPECT_NEAR(via_cumulants[m - 1], SheppardShift(raw, m), 1e-12) << m;
  }
}

TEST(CdfRoundedTest, FloorConvention) {
  const CharacteristicModel m = ScaledGumbel(1.0).model;
  EXPECT_EQ(CdfRounded(m, std::numeric_limits<double>::infinity(), 0.3), 1.0);
  EXPECT_EQ(CdfRounded(m, -std::numeric_limits<double>::infinity(), 0.3), 0.0);
  // floor(-1.5 + 0.3) - 0.3 = -2.3
  EXPECT_DOUBLE_EQ(CdfRounded(m, -1.5, 0.3), m.cdf(-2.3));
  EXPECT_EQ(CodeOf([&] { CdfRounded(SlowModel(), 0.0, 0.0); }),
            ErrorCode::kNoCdf);
}

TEST(PmfRoundedTest, UniformHalf) {
  const LatticeDistribution d = PmfRounded(UniformN(1).model, 0.5);
  ASSERT_EQ(d.probs.size(), 2u);
  EXPECT_DOUBLE_EQ(d.Point(0), 0.5);
  EXPECT_DOUBLE_EQ(d.Point(1), 1.5);
  EXPECT_DOUBLE_EQ(d.probs[0], 0.5);
  EXPECT_DOUBLE_EQ(d.probs[1], 0.5);
}

TEST(PmfRoundedTest, InvariantsAndWindow) {
  for (const char* name : {"gumbel:1", "aldous", "approx-counting",
                           "successful-search", "patricia", "uniform2u:3"}) {
    const CharacteristicModel m = CatalogByName(name).model;
    const LatticeDistribution d = PmfRounded(m, 0.3);
    EXPECT_NEAR(d.Total(), 1.0, 1e-9) << name;
    for (double p : d.probs) EXPECT_GE(p, 0.0);
    EXPECT_NEAR(d.Mean(), MomentRounded(m, 1, 0.3, kCtrl), 1e-9) << name;
  }
  EXPECT_EQ(CodeOf([] { PmfRounded(ScaledGumbel(1).model, 0.0, -1.0, 1.0); }),
            ErrorCode::kWindowTooSmall);
}

TEST(PmfRoundedTest, UpperTailKeepsExponentialMoments) {
  // 2^{3X} weights the super-exponential upper tail of the approximate
  // counting limit; the tail masses must keep their relative accuracy.
  const CharacteristicModel m = ApproxCountingLimit().model;
  const double want[] = {1.0, 1.5, 3.5};
  for (double a : {0.0, 0.5, 0.8}) {
    const LatticeDistribution d = PmfRounded(m, a);
    for (int k = 1; k <= 3; ++k) {
      const double got =
          d.Expect([k](double x) { return std::exp2(k * x); });
      EXPECT_NEAR(got, want[k - 1], 1e-10) << a << " " << k;
    }
  }
}

TEST(MixtureTest, AveragedRoundingGivesXPlusU) {
  const CharacteristicModel m = ScaledGumbel(kC).model;
  // CDF of X + U by Simpson's rule on F over [x - 1, x].
  const auto f_xu = [&m](double x) {
    const int panels = 2000;
    const double h = 1.0 / panels;
    double s = m.cdf(x - 1) + m.cdf(x);
    for (int i = 1; i < panels; ++i) {
      s += (i % 2 ? 4.0 : 2.0) * m.cdf(x - 1 + i * h);
    }
    return s * h / 3.0;
  };
  const auto sup_err = [&](int k) {
    const std::vector<double> grid = MidpointGrid(k);
    double worst = 0.0;
    for (double x = -4.0; x <= 10.0; x += 0.05) {
      double avg = 0.0;
      for (double a : grid) avg += CdfRounded(m, x, a);
      worst = std::max(worst, std::fabs(avg / k - f_xu(x)));
    }
    return worst;
  };
  const double e512 = sup_err(512);
  const double e1024 = sup_err(1024);
  EXPECT_LT(e1024, 1e-3);
  EXPECT_LT(e1024, 0.6 * e512);
}

TEST(ProdingerTest, CoefficientsVanish) {
  for (std::int64_t n : {1, 2}) {
    EXPECT_LT(std::abs(ProdingerCoefficient(n, kCtrl)), 1e-10) << n;
  }
  // Without the g-series part the remaining terms do not cancel.
  const ProdingerTerms t = ProdingerCoefficientTerms(1, kCtrl);
  EXPECT_GT(std::abs(t.gamma_prime + t.gamma + t.bilinear), 1e-6);
}

}  // namespace
}  // namespace roundosc
