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
#include <stdexcept>

#include <Eigen/Dense>
#include <gsl/gsl_integration.h>

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

// (nu k / 2 pi lambda)^d.
double growth(int k, IrrepLabel nu, double lambda, int d) {
  return std::pow(nu.nu() * static_cast<double>(k) / (2 * kPi * lambda), d);
}

double central_factor(int k, IrrepLabel nu, const StabilizerInfo& stab,
                      std::vector<std::pair<double, double>>* terms, double scale) {
  double acc = 0.0;
  for (double angle : stab.central_angles) {
    const double f = f_ell(1L - static_cast<long>(k) * nu.nu(), angle).real();
    if (terms != nullptr) terms->emplace_back(angle, scale * f);
    acc += f;
  }
  return acc;
}

Vec2 spinor_from_u(double u, double phi) {
  return {std::sqrt(u), std::polar(std::sqrt(std::max(0.0, 1.0 - u)), phi)};
}

double integrand(const ModelSpace& model, const Vec2& z, const Vec2& w) {
  const double lambda = lambda_of(moment(BundlePoint(model, z, w)));
  return std::pow(2 * lambda, -(model.complex_dim() + 1));
}

}  // namespace

double density_constant() { return 2 * kPi / (2 * kPi * kPi); }

std::string to_string(Bracket bracket) {
  return bracket == Bracket::kTheorem ? "thm" : "sec4";
}

Bracket parse_bracket(const std::string& name) {
  if (name == "thm") return Bracket::kTheorem;
  if (name == "sec4") return Bracket::kPairSum;
  throw std::invalid_argument("unknown bracket convention '" + name + "'");
}

double AsymptoticPrediction::central_sum() const {
  double acc = 0.0;
  for (const auto& [angle, value] : central) acc += value;
  return acc;
}

double AsymptoticPrediction::noncentral_sum() const {
  double acc = 0.0;
  for (const auto& term : noncentral) acc += term.value;
  return acc;
}

double leading_diag_central(int k, IrrepLabel nu, const BundlePoint& x) {
  const MomentValue phi = moment(x);
  const double lambda = lambda_of(phi);
  const StabilizerInfo stab = stabilizer(x);
  return growth(k, nu, lambda, x.model().complex_dim()) / (2 * lambda) *
         central_factor(k, nu, stab, nullptr, 0.0);
}

AsymptoticPrediction leading_diag(int k, IrrepLabel nu, const BundlePoint& x,
                                  Bracket bracket, FiberNorm fiber) {
  const MomentValue phi = moment(x);
  const double lambda = lambda_of(phi);
  const int d = x.model().complex_dim();
  const StabilizerInfo stab = stabilizer(x);
  AsymptoticPrediction out;
  out.k = k;
  out.nu = nu.nu();
  const double scale = growth(k, nu, lambda, d) / (2 * lambda);
  central_factor(k, nu, stab, &out.central, scale);

  const double front = (bracket == Bracket::kTheorem ? 4 * kPi : 8 * kPi) *
                       density_constant() * growth(k, nu, lambda, d);
  const Complex i(0.0, 1.0);
  for (std::size_t j : stab.noncentral_representatives()) {
    const CBMatrices cb = c_and_b_matrices(x, j, fiber);
    const Complex root = std::sqrt(cb.b.determinant());
    const Complex phase = f_ell(-static_cast<long>(k) * nu.nu(), cb.theta);
    const double value = front * (i * std::sin(cb.theta) * phase / root).real();
    out.noncentral.push_back({j, cb.theta, root, value});
  }
  out.total = out.central_sum() + out.noncentral_sum();
  return out;
}

double leading_diag_noncentral(int k, IrrepLabel nu, const BundlePoint& x,
                               Bracket bracket, FiberNorm fiber) {
  const AsymptoticPrediction p = leading_diag(k, nu, x, bracket, fiber);
  if (p.noncentral.empty()) {
    throw GeometryError("stabilizer has no non-central element");
  }
  return p.noncentral_sum();
}

Complex leading_near_diag(int k, IrrepLabel nu, const BundlePoint& x,
                          const TangentVector& v1, const TangentVector& v2) {
  const double bound = kChartRadius * std::sqrt(static_cast<double>(k));
  if (v1.norm() > bound || v2.norm() > bound) {
    throw GeometryError("tangent vector exceeds the chart radius");
  }
  const MomentValue phi = moment(x);
  const double lambda = lambda_of(phi);
  const StabilizerInfo stab = stabilizer(x);
  if (stab.size() != stab.central_angles.size()) {
    throw GeometryError("near-diagonal prediction needs G_x = Z_x");
  }
  const double rate = u0(nu, phi);
  // +I and -I act trivially on M, so dmu_g v1 = v1 for g in Z_x.
  const Complex gaussian = std::exp(rate * psi2(v1, v2));
  return growth(k, nu, lambda, x.model().complex_dim()) / (2 * lambda) *
         central_factor(k, nu, stab, nullptr, 0.0) * gaussian;
}

IntegralEstimate dimension_limit_integral(const ModelSpace& model,
                                          const DimensionIntegralOptions& options) {
  if (!model.is_product()) {
    throw ModelMismatch("dimension-limit integral is defined on the product");
  }
  if (model.r() % 2 == 1 && !options.force) {
    throw GeometryError("odd r: the generic stabilizer is {+I, -I}");
  }
  if (options.samples < 2) throw std::invalid_argument("need at least two samples");
  IntegralEstimate out;
  out.samples = options.samples;

  // Uniform |z0|^2 and phase give the normalized Fubini-Study measure.
  constexpr std::size_t kBatch = 4096;
  double sum = 0.0;
  double sum2 = 0.0;
  std::size_t done = 0;
  for (std::size_t batch = 0; done < options.samples; ++batch) {
    std::mt19937_64 rng(options.seed + 0x9E3779B97F4A7C15ULL * batch);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t count = std::min(kBatch, options.samples - done);
    for (std::size_t s = 0; s < count; ++s) {
      const double u1 = unit(rng);
      const double p1 = 2 * kPi * unit(rng);
      const double u2 = unit(rng);
      const double p2 = 2 * kPi * unit(rng);
      const double f = integrand(model, spinor_from_u(u1, p1), spinor_from_u(u2, p2));
      sum += f;
      sum2 += f * f;
    }
    done += count;
  }
  const double n = static_cast<double>(options.samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum2 / n - mean * mean) * n / (n - 1));
  out.value = model.volume() * mean;
  out.standard_error = model.volume() * std::sqrt(var / n);

  // Gauss-Legendre in |z0|^2 and |w0|^2, equispaced in the two phases.
  const int g = std::max(2, options.gauss_nodes);
  const int circle = 2 * g;
  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(g));
  std::vector<double> nodes(g), weights(g);
  for (int i = 0; i < g; ++i) {
    gsl_integration_glfixed_point(0.0, 1.0, static_cast<std::size_t>(i), &nodes[i],
                                  &weights[i], table);
  }
  gsl_integration_glfixed_table_free(table);
  double acc = 0.0;
  for (int a = 0; a < g; ++a) {
    for (int pa = 0; pa < circle; ++pa) {
      const Vec2 z = spinor_from_u(nodes[a], 2 * kPi * pa / circle);
      for (int b = 0; b < g; ++b) {
        double inner = 0.0;
        for (int pb = 0; pb < circle; ++pb) {
          inner += integrand(model, z, spinor_from_u(nodes[b], 2 * kPi * pb / circle));
        }
        acc += weights[a] * weights[b] * inner;
      }
    }
  }
  out.gauss_value = model.volume() * acc / (static_cast<double>(circle) * circle);
  return out;
}

double decay_fit(const std::vector<double>& k_values, const std::vector<double>& samples) {
  if (k_values.size() != samples.size()) {
    throw std::invalid_argument("decay_fit: mismatched input lengths");
  }
  if (k_values.size() < 5) throw std::invalid_argument("decay_fit needs >= 5 points");
  bool any_above = false;
  Eigen::MatrixXd a(k_values.size(), 2);
  Eigen::VectorXd y(k_values.size());
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    const double s = std::abs(samples[i]);
    any_above = any_above || s > kDecayFloor;
    a(i, 0) = 1.0;
    a(i, 1) = std::log(k_values[i]);
    y(i) = std::log(std::max(s, kDecayFloor));
  }
  if (!any_above) return -std::numeric_limits<double>::infinity();
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(y);
  return c(1);
}

PolynomialFit richardson_fit(const std::vector<double>& k_values,
                             const std::vector<double>& values, int degree) {
  if (k_values.size() != values.size() || degree < 0 ||
      static_cast<int>(k_values.size()) <= degree) {
    throw std::invalid_argument("richardson_fit: not enough points for the degree");
  }
  const auto n = static_cast<Eigen::Index>(k_values.size());
  Eigen::MatrixXd a(n, degree + 1);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = 1.0 / k_values[i];
    double p = 1.0;
    for (int c = 0; c <= degree; ++c) {
      a(i, c) = p;
      p *= t;
    }
    y(i) = values[i];
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
  PolynomialFit out;
  out.coefficients.assign(c.data(), c.data() + c.size());
  out.residual_rms = std::sqrt((a * c - y).squaredNorm() / static_cast<double>(n));
  return out;
}

double dominant_period(const std::vector<double>& series) {
  const std::size_t n = series.size();
  if (n < 2) return 0.0;
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  double best = 0.0;
  std::size_t best_j = 0;
  for (std::size_t j = 1; j <= n / 2; ++j) {
    Complex acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      acc += (series[t] - mean) * std::polar(1.0, -2 * kPi * static_cast<double>(j * t) / n);
    }
    if (std::abs(acc) > best * (1 + 1e-12)) {
      best = std::abs(acc);
      best_j = j;
    }
  }
  return best_j == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(best_j);
}

OscillationFit oscillation_fit(const std::vector<double>& k_values,
                               const std::vector<double>& values,
                               const std::vector<double>& thetas) {
  const auto n = static_cast<Eigen::Index>(k_values.size());
  const auto cols = static_cast<Eigen::Index>(2 + 4 * thetas.size());
  if (static_cast<std::size_t>(n) != values.size() || n <= cols) {
    throw std::invalid_argument("oscillation_fit: not enough samples");
  }
  Eigen::MatrixXd a(n, cols);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double k = k_values[i];
    a(i, 0) = 1.0;
    a(i, 1) = 1.0 / k;
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      const double c = std::cos(k * thetas[j]);
      const double s = std::sin(k * thetas[j]);
      const auto col = static_cast<Eigen::Index>(2 + 4 * j);
      a(i, col) = c;
      a(i, col + 1) = s;
      a(i, col + 2) = c / k;
      a(i, col + 3) = s / k;
    }
    y(i) = values[i];
  }
  const Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
  OscillationFit out;
  out.offset = c(0);
  out.slope = c(1);
  for (std::size_t j = 0; j < thetas.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(2 + 4 * j);
    // Re(c e^{-i k theta}) = Re(c) cos(k theta) + Im(c) sin(k theta).
    out.amplitude.emplace_back(c(col), c(col + 1));
  }
  out.residual_rms = std::sqrt((a * c - y).squaredNorm() / static_cast<double>(n));
  return out;
}

}  // namespace szego
