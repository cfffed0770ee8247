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

#include "szego/geometry.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace szego {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Vec2 normalized(const Vec2& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw std::invalid_argument("spinor must be nonzero");
  return v / n;
}

// SU(2) matrix with first column z.
Mat2 frame_of(const Vec2& z) { return GroupElement(z(0), z(1)).matrix(); }

double wrap_angle(double theta) {
  double t = std::remainder(theta, 2 * kPi);
  if (t <= -kPi) t += 2 * kPi;
  return t;
}

// Z (x) W^r in the orthonormal symmetric basis.
Eigen::VectorXcd product_tensor(const Vec2& z, const Vec2& w, int r) {
  Eigen::VectorXcd sym(r + 1);
  for (int b = 0; b <= r; ++b) {
    const double log_binom =
        std::lgamma(r + 1.0) - std::lgamma(b + 1.0) - std::lgamma(r - b + 1.0);
    sym(b) = std::exp(0.5 * log_binom) * std::pow(w(0), b) * std::pow(w(1), r - b);
  }
  Eigen::VectorXcd out(2 * (r + 1));
  out.head(r + 1) = z(0) * sym;
  out.tail(r + 1) = z(1) * sym;
  return out;
}

}  // namespace

ModelSpace ModelSpace::P1xP1(int r) {
  if (r < 2) {
    throw std::invalid_argument(
        "P1xP1 needs r >= 2 for a nowhere vanishing moment map");
  }
  return ModelSpace(Kind::kP1xP1, r);
}

double ModelSpace::volume() const {
  return is_product() ? r_ * kPi * kPi : kPi;
}

std::string ModelSpace::name() const {
  return is_product() ? "p1xp1(r=" + std::to_string(r_) + ")" : "p1";
}

BundlePoint::BundlePoint(const ModelSpace& model, const Vec2& z, const Vec2& w)
    : model_(model),
      z_(normalized(z)),
      w_(model.is_product() ? normalized(w) : Vec2(1.0, 0.0)) {}

Eigen::VectorXcd BundlePoint::tensor_representative() const {
  if (!model_.is_product()) return z_;
  return product_tensor(z_, w_, model_.r());
}

bool BundlePoint::same_point(const BundlePoint& other, double tol) const {
  if (!(model_ == other.model_)) return false;
  return (tensor_representative() - other.tensor_representative()).norm() <= tol;
}

BundlePoint BundlePoint::rotate_fiber(double theta) const {
  return BundlePoint(model_, std::polar(1.0, theta) * z_, w_);
}

MomentValue moment_p1(const Vec2& z) {
  const Vec2 u = normalized(z);
  const double a = 0.5 * (std::norm(u(0)) - std::norm(u(1)));
  return LieAlgebraElement::FromCoordinates(a, u(0) * std::conj(u(1)));
}

MomentValue moment_product(const BundlePoint& x) {
  if (!x.model().is_product()) {
    throw ModelMismatch("moment_product needs a P1xP1 point, got " +
                        x.model().name());
  }
  return moment_p1(x.z()) + moment_p1(x.w()) * static_cast<double>(x.model().r());
}

MomentValue moment(const BundlePoint& x) {
  return x.model().is_product() ? moment_product(x) : moment_p1(x.z());
}

double lambda_of(const MomentValue& phi) {
  const Mat2 h = -kI * phi.matrix();
  const double a = h(0, 0).real();
  const double lambda = std::sqrt(a * a + std::norm(h(0, 1)));
  if (!(lambda > 1e-300)) throw GeometryError("moment value vanishes");
  return lambda;
}

GroupElement h_coset(const MomentValue& phi) {
  const double lambda = lambda_of(phi);
  const Mat2 h = -kI * phi.matrix();
  const double a = h(0, 0).real();
  const Complex b = h(0, 1);
  Vec2 u = a >= 0.0 ? Vec2(a + lambda, std::conj(b)) : Vec2(b, lambda - a);
  u.normalize();
  const double mod = std::abs(u(0));
  if (mod > 1e-15) {
    u *= std::conj(u(0)) / mod;
    u(0) = mod;
  } else {
    u = Vec2(0.0, std::abs(u(1)));
  }
  return GroupElement(u(0), u(1));
}

double u0(IrrepLabel nu, const MomentValue& phi) {
  return nu.nu() / (2.0 * lambda_of(phi));
}

Complex psi2(const TangentVector& v1, const TangentVector& v2) {
  if (v1.size() != v2.size()) {
    throw std::invalid_argument("psi2 needs vectors of equal dimension");
  }
  const double omega = v1.dot(v2).imag();  // Eigen's dot conjugates v1.
  return Complex(-0.5 * (v1 - v2).squaredNorm(), -omega);
}

BundlePoint act(const GroupElement& g, const BundlePoint& x) {
  return BundlePoint(x.model(), g.apply(x.z()), g.apply(x.w()));
}

GroupElement StabilizerInfo::element(std::size_t j) const {
  return conjugator * GroupElement::Torus(angles.at(j)) * conjugator.inverse();
}

bool StabilizerInfo::is_central(std::size_t j) const {
  return std::abs(std::sin(angles.at(j))) < 1e-12;
}

std::vector<std::size_t> StabilizerInfo::noncentral_representatives() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < angles.size(); ++j) {
    if (!is_central(j) && angles[j] > 0.0) out.push_back(j);
  }
  return out;
}

StabilizerInfo stabilizer(const BundlePoint& x, double tol) {
  StabilizerInfo info;
  info.conjugator = h_coset(moment(x));
  int cyclic = 1;
  if (x.model().is_product()) {
    const int r = x.model().r();
    const double overlap = std::abs(x.z().dot(x.w()));
    if (overlap >= 1.0 - tol) {
      cyclic = r + 1;
    } else if (overlap <= tol) {
      cyclic = r - 1;
    } else {
      cyclic = (r % 2 == 1) ? 2 : 1;
    }
  }
  for (int j = 0; j < cyclic; ++j) {
    info.angles.push_back(wrap_angle(2 * kPi * j / cyclic));
  }
  for (std::size_t j = 0; j < info.angles.size(); ++j) {
    if (info.is_central(j)) info.central_angles.push_back(info.angles[j]);
  }
  info.order = static_cast<int>(info.angles.size());
  if (info.order == 1) {
    info.kind = StabilizerInfo::Kind::kTrivial;
  } else if (info.central_angles.size() == info.angles.size()) {
    info.kind = StabilizerInfo::Kind::kCenterOnly;
  } else {
    info.kind = StabilizerInfo::Kind::kCyclic;
  }
  return info;
}

BundlePoint hlc_chart(const BundlePoint& x, const TangentVector& v, double k) {
  const int d = x.model().complex_dim();
  if (v.size() != d) {
    throw std::invalid_argument("tangent vector has dimension " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(d));
  }
  if (!(k > 0.0)) throw std::invalid_argument("chart scale k must be positive");
  const double sk = std::sqrt(k);
  if (v.norm() / sk > kChartRadius) {
    throw GeometryError("chart radius exceeded");
  }
  const Vec2 z = frame_of(x.z()) * normalized(Vec2(1.0, v(0) / sk));
  if (!x.model().is_product()) return BundlePoint(x.model(), z);
  const double sr = std::sqrt(static_cast<double>(x.model().r()));
  const Vec2 w = frame_of(x.w()) * normalized(Vec2(1.0, v(1) / (sk * sr)));
  return BundlePoint(x.model(), z, w);
}

TangentVector infinitesimal_action(const BundlePoint& x,
                                   const LieAlgebraElement& xi) {
  TangentVector out(x.model().complex_dim());
  out(0) = (frame_of(x.z()).adjoint() * xi.matrix() * x.z())(1);
  if (x.model().is_product()) {
    const double sr = std::sqrt(static_cast<double>(x.model().r()));
    out(1) = sr * (frame_of(x.w()).adjoint() * xi.matrix() * x.w())(1);
  }
  return out;
}

double fiber_norm_squared(FiberNorm convention) {
  return convention == FiberNorm::kUnit ? 1.0 : 1.0 / (4 * kPi * kPi);
}

std::string to_string(FiberNorm convention) {
  return convention == FiberNorm::kUnit ? "1" : "inv2pi";
}

double xi_norm2(const BundlePoint& x, const LieAlgebraElement& xi,
                FiberNorm fiber) {
  const double horizontal = infinitesimal_action(x, xi).squaredNorm();
  const double vertical = pairing(moment(x), xi);
  return horizontal + fiber_norm_squared(fiber) * vertical * vertical;
}

CBMatrices c_and_b_matrices(const BundlePoint& x, std::size_t j,
                            FiberNorm fiber) {
  const StabilizerInfo info = stabilizer(x);
  if (j >= info.size()) {
    throw std::out_of_range("stabilizer index " + std::to_string(j) +
                            " out of range");
  }
  if (info.is_central(j)) {
    throw GeometryError("C(x;j) is undefined for central stabilizer elements");
  }
  const double theta = info.angles[j];
  const GroupElement t_inv = GroupElement::Torus(theta).inverse();
  const GroupElement& h = info.conjugator;
  auto q = [&](Complex z) {
    const LieAlgebraElement a = LieAlgebraElement::OffDiagonal(z);
    const LieAlgebraElement eta = adjoint(t_inv, a) - a;
    return xi_norm2(x, adjoint(h, eta), fiber);
  };
  const double q10 = q(Complex(1.0, 0.0));
  const double q01 = q(Complex(0.0, 1.0));
  const double q11 = q(Complex(1.0, 1.0));
  CBMatrices out;
  out.theta = theta;
  out.c << 2 * q10, q11 - q10 - q01, q11 - q10 - q01, 2 * q01;
  const double lambda = lambda_of(moment(x));
  out.b = out.c.cast<Complex>();
  const Complex shift = 4.0 * kI * std::sin(2 * theta) * lambda;
  out.b(0, 0) += shift;
  out.b(1, 1) += shift;
  return out;
}

namespace {

struct OrbitSvd {
  Eigen::MatrixXd u;
  int rank = 0;
};

OrbitSvd orbit_svd(const BundlePoint& x, double threshold) {
  const int d = x.model().complex_dim();
  Eigen::MatrixXd span(2 * d, 3);
  for (int i = 0; i < 3; ++i) {
    const TangentVector v = infinitesimal_action(x, LieAlgebraElement::Basis(i));
    for (int c = 0; c < d; ++c) {
      span(2 * c, i) = v(c).real();
      span(2 * c + 1, i) = v(c).imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(span, Eigen::ComputeFullU);
  const Eigen::VectorXd& s = svd.singularValues();
  OrbitSvd out{svd.matrixU(), 0};
  while (out.rank < s.size() && s(out.rank) > threshold * std::max(1.0, s(0))) {
    ++out.rank;
  }
  return out;
}

}  // namespace

Eigen::MatrixXd orbit_tangent_basis(const BundlePoint& x, double threshold) {
  const OrbitSvd svd = orbit_svd(x, threshold);
  return svd.u.leftCols(svd.rank);
}

std::vector<TangentVector> transverse_directions(const BundlePoint& x,
                                                 double threshold) {
  const int d = x.model().complex_dim();
  const OrbitSvd svd = orbit_svd(x, threshold);
  std::vector<TangentVector> out;
  for (int col = svd.rank; col < 2 * d; ++col) {
    TangentVector v(d);
    for (int c = 0; c < d; ++c) {
      v(c) = Complex(svd.u(2 * c, col), svd.u(2 * c + 1, col));
    }
    out.push_back(v);
  }
  return out;
}

OrbitDistance dist_to_orbit(const BundlePoint& x, const BundlePoint& y,
                            const HaarQuadrature& grid) {
  if (!(x.model() == y.model())) {
    throw ModelMismatch("dist_to_orbit needs points of the same model");
  }
  const Eigen::VectorXcd tx = x.tensor_representative();
  auto distance = [&](const GroupElement& g) {
    return (tx - act(g, y).tensor_representative()).norm();
  };

  OrbitDistance best{std::numeric_limits<double>::infinity(), GroupElement()};
  for (const GroupElement& g : grid.nodes()) {
    const double dist = distance(g);
    if (dist < best.distance) best = {dist, g};
  }

  // Compass search in the exponential coordinates around the best node.
  std::array<LieAlgebraElement, 3> basis = {LieAlgebraElement::Basis(0),
                                            LieAlgebraElement::Basis(1),
                                            LieAlgebraElement::Basis(2)};
  double step = kPi / (2.0 * std::max(1, grid.max_degree()));
  int iterations = 0;
  while (step > 1e-12 && iterations < 20000) {
    bool improved = false;
    for (const auto& e : basis) {
      for (double sign : {1.0, -1.0}) {
        ++iterations;
        const GroupElement trial = best.best * exp(e * (sign * step));
        const double dist = distance(trial);
        if (dist < best.distance) {
          best = {dist, trial};
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace szego
