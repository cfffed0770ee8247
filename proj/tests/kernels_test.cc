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


#include "szego/kernels.h"

#include <cmath>
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

GroupElement random_element(std::mt19937_64& rng) {
  const Vec2 v = random_spinor(rng);
  return {v(0), v(1)};
}

BundlePoint random_point(const ModelSpace& model, std::mt19937_64& rng) {
  return BundlePoint(model, random_spinor(rng), random_spinor(rng));
}

TEST(LevelKernel, DiagonalTrace) {
  std::mt19937_64 rng(1);
  for (int l = 0; l <= 12; ++l) {
    const BundlePoint x(ModelSpace::P1(), random_spinor(rng));
    EXPECT_NEAR(level_kernel(l, x, x).real(), (l + 1) / kPi, 1e-12);
    for (int r : {2, 3}) {
      const ModelSpace model = ModelSpace::P1xP1(r);
      const BundlePoint y = random_point(model, rng);
      EXPECT_NEAR(level_kernel(l, y, y).real() * model.volume(),
                  static_cast<double>((l + 1) * (l * r + 1)), 1e-9 * (l + 1) * (l * r + 1));
    }
  }
}

TEST(LevelKernel, ClosedFormAndCauchySchwarz) {
  std::mt19937_64 rng(2);
  const ModelSpace model = ModelSpace::P1xP1(2);
  for (int l : {1, 4, 9, 40}) {
    for (int trial = 0; trial < 10; ++trial) {
      const BundlePoint x = random_point(model, rng);
      const BundlePoint y = random_point(model, rng);
      const Complex sum = level_kernel(l, x, y);
      const Complex closed = level_kernel_closed_form(l, x, y);
      const double bound =
          std::sqrt(level_kernel(l, x, x).real() * level_kernel(l, y, y).real());
      EXPECT_NEAR(std::abs(sum - closed), 0.0, 1e-12 * bound);
      EXPECT_LE(std::abs(sum), bound * (1 + 1e-12));
    }
  }
}

TEST(Levels, Examples) {
  for (int knu = 2; knu <= 40; knu += 2) {
    EXPECT_TRUE(admissible_levels(knu, IrrepLabel(1), 3).levels.empty());
  }
  const LevelRange r3 = admissible_levels(401, IrrepLabel(1), 3);
  EXPECT_NEAR(r3.levels.size() / (2.0 * 401 / 8.0), 1.0, 0.02);
  const LevelRange r2 = admissible_levels(400, IrrepLabel(1), 2);
  EXPECT_NEAR(r2.levels.size() / (400 / 3.0), 1.0, 0.02);
  for (int l : r2.levels) {
    EXPECT_GE(l * 3, 399);
    EXPECT_LE(l, 399);
  }
  EXPECT_THROW(admissible_levels(3, IrrepLabel(1), 1), std::invalid_argument);
}

TEST(Levels, ExhaustiveAgainstClebsch) {
  // A level appears iff V_{k nu} occurs in V_{l+1} x V_{lr+1}.
  for (int r : {2, 3, 4}) {
    for (int knu = 1; knu <= 30; ++knu) {
      const LevelRange range = admissible_levels(knu, IrrepLabel(1), r);
      std::vector<int> brute;
      for (int l = 0; l <= knu; ++l) {
        if (clebsch_multiplicity(IrrepLabel(l + 1), IrrepLabel(l * r + 1), IrrepLabel(knu)) == 1) {
          brute.push_back(l);
        }
      }
      EXPECT_EQ(range.levels, brute) << "r=" << r << " knu=" << knu;
    }
  }
}

TEST(Dimension, Examples) {
  for (int k = 1; k <= 20; ++k) {
    EXPECT_EQ(dimension(k, IrrepLabel(3), ModelSpace::P1()), 3 * k);
    EXPECT_EQ(dimension(2 * k, IrrepLabel(1), ModelSpace::P1xP1(3)), 0);
    EXPECT_EQ(dimension(k, IrrepLabel(2), ModelSpace::P1xP1(5)), 0);
  }
  const double ratio = static_cast<double>(dimension(99, IrrepLabel(1), ModelSpace::P1xP1(3))) /
                       (99.0 * 99.0);
  EXPECT_NEAR(ratio / 0.25, 1.0, 0.05);
}

TEST(Dimension, MatchesBasisCardinality) {
  BasisCache cache;
  for (int r : {2, 3}) {
    const ModelSpace model = ModelSpace::P1xP1(r);
    for (int knu = 1; knu <= 15; ++knu) {
      long long total = 0;
      for (int l : admissible_levels(knu, IrrepLabel(1), r).levels) {
        total += static_cast<long long>(cache.get(model, l, IrrepLabel(knu))->sections.size());
      }
      EXPECT_EQ(dimension(knu, IrrepLabel(1), model), total);
    }
  }
}

TEST(Equivariant, P1IsLevelKernel) {
  std::mt19937_64 rng(3);
  const BundlePoint x(ModelSpace::P1(), random_spinor(rng));
  const BundlePoint y(ModelSpace::P1(), random_spinor(rng));
  for (int k = 1; k <= 5; ++k) {
    const KernelValue v = equivariant_kernel(k, IrrepLabel(2), x, y);
    EXPECT_NEAR(std::abs(v.value - level_kernel(2 * k - 1, x, y)), 0.0, 1e-14);
  }
  EXPECT_NEAR(equivariant_kernel(1, IrrepLabel(1), x, x).value.real(), 1 / kPi, 1e-15);
}

TEST(Equivariant, HermitianInvariantAndVanishing) {
  std::mt19937_64 rng(4);
  for (int r : {2, 3}) {
    const ModelSpace model = ModelSpace::P1xP1(r);
    for (int k : {3, 7, 10}) {
      const BundlePoint x = random_point(model, rng);
      const BundlePoint y = random_point(model, rng);
      const Complex xy = equivariant_kernel(k, IrrepLabel(1), x, y).value;
      const Complex yx = equivariant_kernel(k, IrrepLabel(1), y, x).value;
      EXPECT_NEAR(std::abs(xy - std::conj(yx)), 0.0, 1e-12 * (1 + std::abs(xy)));
      const GroupElement g = random_element(rng);
      const Complex moved = equivariant_kernel(k, IrrepLabel(1), act(g, x), act(g, y)).value;
      EXPECT_NEAR(std::abs(moved - xy), 0.0, 1e-9 * (1 + std::abs(xy)));
      if (r % 2 == 1 && k % 2 == 0) {
        EXPECT_EQ(xy, Complex(0.0, 0.0));
      }
    }
  }
}

TEST(Equivariant, PositiveSemidefiniteGram) {
  std::mt19937_64 rng(5);
  const ModelSpace model = ModelSpace::P1xP1(2);
  for (int k : {4, 9}) {
    const int n = 12;
    std::vector<BundlePoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_point(model, rng));
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g(i, j) = equivariant_kernel(k, IrrepLabel(1), pts[i], pts[j]).value;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-9 * g.trace().real());
  }
}

TEST(Equivariant, TraceReproducesDimension) {
  // vol * mean of Pi(x, x) over uniformly sampled points.
  std::mt19937_64 rng(6);
  const ModelSpace model = ModelSpace::P1xP1(2);
  const int k = 7;
  const int samples = 20000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const BundlePoint x = random_point(model, rng);
    const double v = equivariant_kernel(k, IrrepLabel(1), x, x).value.real();
    s += v;
    s2 += v * v;
  }
  const double mean = s / samples;
  const double se = std::sqrt((s2 / samples - mean * mean) / samples);
  const double dim = static_cast<double>(dimension(k, IrrepLabel(1), model));
  EXPECT_NEAR(model.volume() * mean / dim, 1.0, std::max(0.01, 3 * model.volume() * se / dim));
}

TEST(Quadrature, AgreesWithIsotypic) {
  std::mt19937_64 rng(7);
  const ModelSpace model = ModelSpace::P1xP1(2);
  for (int k : {2, 5}) {
    const HaarQuadrature q =
        HaarQuadrature::Build(required_quadrature_degree(k, IrrepLabel(1), model));
    for (int trial = 0; trial < 3; ++trial) {
      const BundlePoint x = random_point(model, rng);
      const BundlePoint y = random_point(model, rng);
      const Complex a = equivariant_kernel(k, IrrepLabel(1), x, y).value;
      const Complex b = equivariant_kernel_quadrature(k, IrrepLabel(1), x, y, q).value;
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-8 * std::max(1e-10, std::abs(a)));
    }
  }
  const ModelSpace odd = ModelSpace::P1xP1(3);
  const HaarQuadrature q = HaarQuadrature::Build(required_quadrature_degree(4, IrrepLabel(1), odd));
  const BundlePoint x = random_point(odd, rng);
  const BundlePoint y = random_point(odd, rng);
  EXPECT_LE(std::abs(equivariant_kernel_quadrature(4, IrrepLabel(1), x, y, q).value), 1e-10);
  const BundlePoint p(ModelSpace::P1(), random_spinor(rng));
  const HaarQuadrature q1 = HaarQuadrature::Build(2);
  EXPECT_NEAR(equivariant_kernel_quadrature(1, IrrepLabel(1), p, p, q1).value.real(), 1 / kPi,
              1e-12);
}

TEST(Quadrature, RejectsInsufficientDegree) {
  std::mt19937_64 rng(8);
  const ModelSpace model = ModelSpace::P1xP1(2);
  const BundlePoint x = random_point(model, rng);
  const HaarQuadrature q = HaarQuadrature::Build(2);
  EXPECT_THROW(equivariant_kernel_quadrature(9, IrrepLabel(1), x, x, q), QuadratureError);
}

TEST(Cache, HitsMissesAndEviction) {
  BasisCache cache(2);
  const ModelSpace model = ModelSpace::P1xP1(2);
  auto a = cache.get(model, 3, IrrepLabel(4));
  auto b = cache.get(model, 3, IrrepLabel(4));
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(cache.hits(), 1u);
  EXPECT_EQ(cache.misses(), 1u);
  cache.get(model, 4, IrrepLabel(5));
  cache.get(model, 5, IrrepLabel(6));
  EXPECT_EQ(cache.size(), 2u);
  cache.get(model, 3, IrrepLabel(4));
  EXPECT_EQ(cache.misses(), 4u);
}

}  // namespace
}  // namespace szego
