// Copyright 2026 The szego Authors
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


#include "szego/asymptotics.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

namespace szego {
namespace {

constexpr double kPi = std::numbers::pi;

Vec2 random_spinor(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec2 v(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)));
  return v / v.norm();
}

TEST(Constants, DensityIsOneOverPi) {
  EXPECT_NEAR(density_constant(), 1 / kPi, 1e-16);
  EXPECT_EQ(parse_bracket("thm"), Bracket::kTheorem);
  EXPECT_EQ(parse_bracket("sec4"), Bracket::kPairSum);
  EXPECT_THROW(parse_bracket("other"), std::invalid_argument);
}

TEST(Central, P1IsKOverPi) {
  std::mt19937_64 rng(1);
  const BundlePoint x(ModelSpace::P1(), random_spinor(rng));
  for (int k = 1; k <= 300; ++k) {
    EXPECT_NEAR(leading_diag_central(k, IrrepLabel(1), x) * kPi / k, 1.0, 1e-14);
  }
}

TEST(Central, StabilizerFactorForOddR) {
  std::mt19937_64 rng(2);
  const BundlePoint x(ModelSpace::P1xP1(3), random_spinor(rng), random_spinor(rng));
  const double lambda = lambda_of(moment(x));
  for (int k = 1; k <= 12; ++k) {
    const AsymptoticPrediction p = leading_diag(k, IrrepLabel(1), x);
    ASSERT_EQ(p.central.size(), 2u);
    const double growth = std::pow(k / (2 * kPi * lambda), 2) / (2 * lambda);
    EXPECT_NEAR(p.central_sum() / growth, k % 2 == 1 ? 2.0 : 0.0, 1e-12);
    EXPECT_TRUE(p.noncentral.empty());
    EXPECT_NEAR(p.total.real(), p.central_sum() + p.noncentral_sum(), 1e-12);
  }
}

TEST(Central, OrbitInvariant) {
  std::mt19937_64 rng(3);
  const BundlePoint x(ModelSpace::P1xP1(2), random_spinor(rng), random_spinor(rng));
  for (int trial = 0; trial < 10; ++trial) {
    const Vec2 g = random_spinor(rng);
    const BundlePoint y = act(GroupElement(g(0), g(1)), x);
    EXPECT_NEAR(leading_diag_central(20, IrrepLabel(1), y),
                leading_diag_central(20, IrrepLabel(1), x),
                1e-10 * leading_diag_central(20, IrrepLabel(1), x));
  }
}

TEST(Noncentral, EmptyAndPeriodic) {
  std::mt19937_64 rng(4);
  const BundlePoint generic(ModelSpace::P1xP1(2), random_spinor(rng), random_spinor(rng));
  EXPECT_THROW(leading_diag_noncentral(5, IrrepLabel(1), generic), GeometryError);
  EXPECT_TRUE(leading_diag(5, IrrepLabel(1), generic).noncentral.empty());

  // Scaled by k^{-d}, the term depends on k nu mod 3 only.
  const BundlePoint orth(ModelSpace::P1xP1(4), Vec2(1.0, 0.0), Vec2(0.0, 1.0));
  for (Bracket bracket : {Bracket::kTheorem, Bracket::kPairSum}) {
    for (int k = 10; k < 20; ++k) {
      const double a = leading_diag_noncentral(k, IrrepLabel(1), orth, bracket) / (k * k);
      const double b = leading_diag_noncentral(k + 3, IrrepLabel(1), orth, bracket) /
                       ((k + 3.0) * (k + 3.0));
      EXPECT_NEAR(a, b, 1e-12 * (1 + std::abs(a)));
    }
  }
  const double thm = leading_diag_noncentral(11, IrrepLabel(1), orth, Bracket::kTheorem);
  const double pair = leading_diag_noncentral(11, IrrepLabel(1), orth, Bracket::kPairSum);
  EXPECT_NEAR(pair, 2 * thm, 1e-12 * std::abs(pair));
}

TEST(NearDiag, ReducesAndDecays) {
  std::mt19937_64 rng(5);
  const BundlePoint p1(ModelSpace::P1(), random_spinor(rng));
  TangentVector zero = TangentVector::Zero(1);
  const int k = 50;
  EXPECT_NEAR(std::abs(leading_near_diag(k, IrrepLabel(1), p1, zero, zero) - k / kPi), 0.0,
              1e-12);
  TangentVector v(1), w(1);
  v << Complex(0.7, 0.2);
  w << Complex(-0.3, 0.5);
  const Complex expected = k / kPi * std::exp(psi2(v, w));
  EXPECT_NEAR(std::abs(leading_near_diag(k, IrrepLabel(1), p1, v, w) - expected), 0.0, 1e-12);

  const BundlePoint x(ModelSpace::P1xP1(2), random_spinor(rng), random_spinor(rng));
  const auto dirs = transverse_directions(x);
  ASSERT_FALSE(dirs.empty());
  const TangentVector z2 = TangentVector::Zero(2);
  const double base = leading_near_diag(k, IrrepLabel(2), x, z2, z2).real();
  EXPECT_NEAR(base, leading_diag_central(k, IrrepLabel(2), x), 1e-12 * base);
  const TangentVector u = 1.3 * dirs.front();
  const double rate = u0(IrrepLabel(2), moment(x));
  EXPECT_NEAR(std::abs(leading_near_diag(k, IrrepLabel(2), x, u, z2)) / base,
              std::exp(-rate * u.squaredNorm() / 2), 1e-12);
  EXPECT_THROW(leading_near_diag(4, IrrepLabel(1), p1, 10.0 * v, zero), GeometryError);
}

TEST(DimensionIntegral, MatchesClosedFormAndBounds) {
  // int (2 lambda)^{-3} dV = pi^2 / (r^2 - 1), from the moment-polytope pushforward.
  for (int r : {2, 4}) {
    const ModelSpace model = ModelSpace::P1xP1(r);
    DimensionIntegralOptions options;
    options.samples = 200'000;
    const IntegralEstimate est = dimension_limit_integral(model, options);
    const double exact = kPi * kPi / (r * r - 1.0);
    EXPECT_NEAR(est.value, exact, 4 * est.standard_error);
    EXPECT_NEAR(est.gauss_value, exact, 1e-3 * exact);
    EXPECT_NEAR(est.value, est.gauss_value, 3 * est.standard_error + 1e-3 * exact);
    EXPECT_LE(est.standard_error / est.value, 0.005);
  }
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const BundlePoint x(ModelSpace::P1xP1(2), random_spinor(rng), random_spinor(rng));
    const double f = std::pow(2 * lambda_of(moment(x)), -3);
    EXPECT_GE(f, std::pow(3.0, -3) - 1e-12);
    EXPECT_LE(f, 1.0 + 1e-12);
  }
  EXPECT_THROW(dimension_limit_integral(ModelSpace::P1xP1(3)), GeometryError);
  EXPECT_THROW(dimension_limit_integral(ModelSpace::P1()), ModelMismatch);
  DimensionIntegralOptions forced;
  forced.force = true;
  forced.samples = 1000;
  EXPECT_GT(dimension_limit_integral(ModelSpace::P1xP1(3), forced).value, 0.0);
}

TEST(DecayFit, SyntheticSeries) {
  std::vector<double> ks, power, expo;
  for (int k = 20; k <= 100; k += 5) {
    ks.push_back(k);
    power.push_back(7.0 * std::pow(k, -3.0));
    expo.push_back(std::exp(-0.3 * k));
  }
  EXPECT_NEAR(decay_fit(ks, power), -3.0, 0.01);
  const std::vector<double> head(ks.begin(), ks.begin() + 8), tail(ks.end() - 8, ks.end());
  const std::vector<double> head_v(expo.begin(), expo.begin() + 8), tail_v(expo.end() - 8, expo.end());
  EXPECT_LT(decay_fit(tail, tail_v), decay_fit(head, head_v));
  EXPECT_EQ(decay_fit(ks, std::vector<double>(ks.size(), 0.0)),
            -std::numeric_limits<double>::infinity());
  EXPECT_THROW(decay_fit({1, 2, 3}, {1, 1, 1}), std::invalid_argument);
}

TEST(Fits, RichardsonPeriodAndOscillation) {
  std::vector<double> ks, values, series, osc;
  const double theta = 2 * kPi / 3;
  const Complex c(0.4, -0.25);
  for (int k = 10; k <= 70; ++k) {
    ks.push_back(k);
    values.push_back(1.0 + 0.8 / k - 2.0 / (k * k));
    series.push_back(std::cos(2 * kPi * k / 3.0) + 0.01 * k);
    osc.push_back(0.2 + 0.5 / k + (c * std::polar(1.0, -k * theta)).real());
  }
  const PolynomialFit fit = richardson_fit(ks, values, 2);
  EXPECT_NEAR(fit.coefficients[0], 1.0, 1e-10);
  EXPECT_NEAR(fit.coefficients[1], 0.8, 1e-8);
  EXPECT_NEAR(dominant_period(series), 3.0, 0.1);
  EXPECT_EQ(dominant_period(std::vector<double>(10, 2.0)), 0.0);
  const OscillationFit of = oscillation_fit(ks, osc, {theta});
  EXPECT_NEAR(of.offset, 0.2, 1e-10);
  EXPECT_NEAR(of.slope, 0.5, 1e-8);
  ASSERT_EQ(of.amplitude.size(), 1u);
  EXPECT_NEAR(std::abs(of.amplitude[0] - c), 0.0, 1e-10);
}

}  // namespace
}  // namespace szego
