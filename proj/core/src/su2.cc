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

#include "szego/su2.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <gsl/gsl_integration.h>

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

}  // namespace

IrrepLabel::IrrepLabel(int nu) : nu_(nu) {
  if (nu < 1) {
    throw std::invalid_argument("irrep label must be >= 1, got " +
                                std::to_string(nu));
  }
}

GroupElement::GroupElement(Complex alpha, Complex beta) {
  const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
  if (!(n > 0.0)) throw std::invalid_argument("zero pair is not in SU(2)");
  alpha_ = alpha / n;
  beta_ = beta / n;
}

GroupElement GroupElement::Torus(double theta) {
  return {std::polar(1.0, theta), 0.0};
}

GroupElement GroupElement::FromMatrix(const Mat2& m) {
  return {m(0, 0), m(1, 0)};
}

Mat2 GroupElement::matrix() const {
  Mat2 m;
  m << alpha_, -std::conj(beta_), beta_, std::conj(alpha_);
  return m;
}

GroupElement GroupElement::inverse() const {
  return {std::conj(alpha_), -beta_};
}

Vec2 GroupElement::apply(const Vec2& v) const {
  return {alpha_ * v(0) - std::conj(beta_) * v(1),
          beta_ * v(0) + std::conj(alpha_) * v(1)};
}

double GroupElement::angle() const {
  return std::acos(clamp_unit(alpha_.real()));
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  // First column of g.matrix() * h.matrix().
  return {g.alpha_ * h.alpha_ - std::conj(g.beta_) * h.beta_,
          g.beta_ * h.alpha_ + std::conj(g.alpha_) * h.beta_};
}

LieAlgebraElement::LieAlgebraElement(const Mat2& m) : m_(m) {
  const double scale = std::max(1.0, m.norm());
  const double trace_defect = std::abs(m.trace());
  const double herm_defect = (m + m.adjoint()).norm();
  if (trace_defect > 1e-12 * scale || herm_defect > 1e-12 * scale) {
    throw std::invalid_argument("matrix is not traceless skew-Hermitian");
  }
}

LieAlgebraElement LieAlgebraElement::BetaGenerator() {
  return FromCoordinates(1.0, 0.0);
}

LieAlgebraElement LieAlgebraElement::OffDiagonal(Complex z) {
  return FromCoordinates(0.0, z);
}

LieAlgebraElement LieAlgebraElement::FromCoordinates(double a, Complex b) {
  const Complex i(0.0, 1.0);
  Mat2 m;
  m << i * a, i * b, i * std::conj(b), -i * a;
  LieAlgebraElement out;
  out.m_ = m;
  return out;
}

LieAlgebraElement LieAlgebraElement::Basis(int index) {
  switch (index) {
    case 0:
      return FromCoordinates(1.0, 0.0);
    case 1:
      return FromCoordinates(0.0, Complex(1.0, 0.0));
    case 2:
      return FromCoordinates(0.0, Complex(0.0, -1.0));
    default:
      throw std::out_of_range("su(2) basis index must be 0, 1 or 2");
  }
}

LieAlgebraElement LieAlgebraElement::operator+(
    const LieAlgebraElement& o) const {
  LieAlgebraElement out;
  out.m_ = m_ + o.m_;
  return out;
}

LieAlgebraElement LieAlgebraElement::operator-(
    const LieAlgebraElement& o) const {
  LieAlgebraElement out;
  out.m_ = m_ - o.m_;
  return out;
}

LieAlgebraElement LieAlgebraElement::operator*(double s) const {
  LieAlgebraElement out;
  out.m_ = m_ * s;
  return out;
}

double pairing(const LieAlgebraElement& xi, const LieAlgebraElement& eta) {
  return -(xi.matrix() * eta.matrix()).trace().real();
}

LieAlgebraElement adjoint(const GroupElement& g, const LieAlgebraElement& xi) {
  const Mat2 m = g.matrix();
  Mat2 out = m * xi.matrix() * m.adjoint();
  // Re-project onto su(2) to keep the invariant exact under rounding.
  out = 0.5 * (out - out.adjoint()).eval();
  const Complex t = 0.5 * out.trace();
  out(0, 0) -= t;
  out(1, 1) -= t;
  return LieAlgebraElement(out);
}

GroupElement exp(const LieAlgebraElement& xi) {
  // xi^2 = -|xi|^2 I with |xi|^2 = -det(xi).
  const double r = std::sqrt(std::max(0.0, xi.matrix().determinant().real()));
  const double s = r > 1e-300 ? std::sin(r) / r : 1.0;
  const Mat2 m = std::cos(r) * Mat2::Identity() + s * xi.matrix();
  return GroupElement::FromMatrix(m);
}

double character_torus(IrrepLabel nu, double theta) {
  const int n = nu.nu();
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-6) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += std::cos((n - 1 - 2 * j) * theta);
    return acc;
  }
  return std::sin(n * theta) / s;
}

double character_group(IrrepLabel nu, const GroupElement& g) {
  return character_torus(nu, g.angle());
}

Complex f_ell(long ell, double theta) {
  // Reduce the phase exactly for integer multiples of pi.
  const double phase = std::remainder(static_cast<double>(ell) * theta, 2 * kPi);
  return std::polar(1.0, phase);
}

int clebsch_multiplicity(IrrepLabel a, IrrepLabel b, IrrepLabel nu) {
  int lo = a.nu();
  int hi = b.nu();
  if (lo > hi) std::swap(lo, hi);
  const int n = nu.nu();
  if (n < hi - lo + 1 || n > lo + hi - 1) return 0;
  return ((lo + hi - 1 - n) % 2 == 0) ? 1 : 0;
}

std::size_t HaarQuadrature::NodeCount(int max_degree) {
  if (max_degree < 1) return 0;
  const std::size_t poly_degree = 2 * static_cast<std::size_t>(max_degree - 1);
  const std::size_t circle = poly_degree + 1;
  const std::size_t legendre = poly_degree / 4 + 1;
  return legendre * circle * circle;
}

HaarQuadrature HaarQuadrature::Build(int max_degree, std::size_t node_budget) {
  if (max_degree < 1) {
    throw QuadratureError("haar quadrature needs max_degree >= 1");
  }
  const std::size_t count = NodeCount(max_degree);
  if (count > node_budget) {
    throw QuadratureError("haar quadrature with max_degree " +
                          std::to_string(max_degree) + " needs " +
                          std::to_string(count) + " nodes, budget is " +
                          std::to_string(node_budget));
  }
  // After the two circle integrations a monomial of total degree P reduces to
  // u^p (1-u)^s with u = cos^2 t and p + s <= P/2, integrated against du on
  // [0, 1]. m Gauss-Legendre points are exact through degree 2m - 1.
  const int poly_degree = 2 * (max_degree - 1);
  const int circle = poly_degree + 1;
  const int legendre = poly_degree / 4 + 1;

  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(legendre));
  std::vector<double> u_nodes(legendre), u_weights(legendre);
  for (int i = 0; i < legendre; ++i) {
    gsl_integration_glfixed_point(0.0, 1.0, static_cast<std::size_t>(i),
                                  &u_nodes[i], &u_weights[i], table);
  }
  gsl_integration_glfixed_table_free(table);

  HaarQuadrature q;
  q.max_degree_ = max_degree;
  q.nodes_.reserve(count);
  q.weights_.reserve(count);
  const double circle_weight = 1.0 / (static_cast<double>(circle) * circle);
  for (int i = 0; i < legendre; ++i) {
    const double c = std::sqrt(u_nodes[i]);
    const double s = std::sqrt(1.0 - u_nodes[i]);
    for (int p = 0; p < circle; ++p) {
      const Complex alpha = std::polar(c, 2 * kPi * p / circle);
      for (int r = 0; r < circle; ++r) {
        const Complex beta = std::polar(s, 2 * kPi * r / circle);
        q.nodes_.emplace_back(alpha, beta);
        q.weights_.push_back(u_weights[i] * circle_weight);
      }
    }
  }

  const double defect = q.orthogonality_defect();
  if (!(defect <= 1e-10)) {
    throw QuadratureError("haar quadrature self test failed, defect " +
                          std::to_string(defect));
  }
  return q;
}

double HaarQuadrature::orthogonality_defect() const {
  const int n = max_degree_;
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd chi(n);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double theta = nodes_[i].angle();
    for (int a = 0; a < n; ++a) chi(a) = character_torus(IrrepLabel(a + 1), theta);
    gram.noalias() += weights_[i] * chi * chi.transpose();
  }
  return (gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace szego
