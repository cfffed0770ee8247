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

// Leading-order predictions for Pi_{k nu} and the dimension-limit integral.

#ifndef SZEGO_ASYMPTOTICS_H_
#define SZEGO_ASYMPTOTICS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "szego/geometry.h"
#include "szego/su2.h"

namespace szego {

// 2 pi / vol(S^3) = 1 / pi.
double density_constant();

// Overall factor of the non-central term: 4 pi D per element pair, or 8 pi D
// per pair as obtained by summing g and g^{-1} separately.
enum class Bracket { kTheorem, kPairSum };
std::string to_string(Bracket bracket);
// "thm" or "sec4"; throws std::invalid_argument otherwise.
Bracket parse_bracket(const std::string& name);

struct NoncentralTerm {
  std::size_t index = 0;  // into StabilizerInfo::angles
  double theta = 0.0;
  Complex sqrt_det_b;
  double value = 0.0;
};

struct AsymptoticPrediction {
  Complex total;
  int k = 0;
  int nu = 1;
  // Per element of Z_x, by angle.
  std::vector<std::pair<double, double>> central;
  std::vector<NoncentralTerm> noncentral;

  double central_sum() const;
  double noncentral_sum() const;
};

// (1 / 2 lambda) (nu k / 2 pi lambda)^d sum_{g in Z_x} f_{1 - k nu}(g).
double leading_diag_central(int k, IrrepLabel nu, const BundlePoint& x);

// Throws GeometryError when G_x has no non-central element.
double leading_diag_noncentral(int k, IrrepLabel nu, const BundlePoint& x,
                               Bracket bracket = Bracket::kTheorem,
                               FiberNorm fiber = FiberNorm::kUnit);

// Both terms with their breakdown; the non-central part is empty when
// G_x = Z_x.
AsymptoticPrediction leading_diag(int k, IrrepLabel nu, const BundlePoint& x,
                                  Bracket bracket = Bracket::kTheorem,
                                  FiberNorm fiber = FiberNorm::kUnit);

// (1 / 2 lambda) (nu k / 2 pi lambda)^d sum_{g in Z_x} f_{1 - k nu}(g)
//   exp(u0 psi2(dmu_g v1, v2)).
// The chart-radius bound |v_j| <= kChartRadius sqrt(k) is enforced with
// GeometryError; so is G_x = Z_x.
Complex leading_near_diag(int k, IrrepLabel nu, const BundlePoint& x,
                          const TangentVector& v1, const TangentVector& v2);

struct IntegralEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  // Deterministic product-Gauss value of the same integral.
  double gauss_value = 0.0;
  std::size_t samples = 0;
};

struct DimensionIntegralOptions {
  std::size_t samples = 400'000;
  std::uint64_t seed = 20240601;
  int gauss_nodes = 20;
  // Evaluate even when the generic stabilizer is {+I, -I} (r odd).
  bool force = false;
};

// int_M (2 lambda)^{-(d + 1)} dV_M by Monte Carlo on S^2 x S^2 together with a
// product Gauss rule. Throws ModelMismatch on P^1 and GeometryError for odd r
// unless forced.
IntegralEstimate dimension_limit_integral(const ModelSpace& model,
                                          const DimensionIntegralOptions& options = {});

// Samples at or below this value count as zero in decay_fit.
inline constexpr double kDecayFloor = 1e-300;

// Least-squares slope of log |Pi| against log k; -infinity when every sample
// sits at the floor. Throws std::invalid_argument for fewer than 5 points.
double decay_fit(const std::vector<double>& k_values, const std::vector<double>& samples);

struct PolynomialFit {
  // c[0] + c[1] t + c[2] t^2 + ...
  std::vector<double> coefficients;
  double residual_rms = 0.0;
};

// Least squares polynomial in t = 1/k of the given degree.
PolynomialFit richardson_fit(const std::vector<double>& k_values,
                             const std::vector<double>& values, int degree);

// Period N / j of the largest nonzero discrete Fourier mode of the series
// after removing its mean; 0 for a constant series.
double dominant_period(const std::vector<double>& series);

struct OscillationFit {
  double offset = 0.0;
  double slope = 0.0;
  // c_j in Re(c_j e^{-i k theta_j}), the leading oscillating terms.
  std::vector<Complex> amplitude;
  double residual_rms = 0.0;
};

// Least squares fit of
//   values ~ a + b / k + sum_j Re(c_j e^{-i k theta_j}) + Re(d_j e^{-i k theta_j}) / k.
OscillationFit oscillation_fit(const std::vector<double>& k_values,
                               const std::vector<double>& values,
                               const std::vector<double>& thetas);

}  // namespace szego

#endif  // SZEGO_ASYMPTOTICS_H_
