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

// Model Kaehler geometry of P^1 and of P^1 x P^1 polarized by O(1) [x] O(r),
// with the diagonal SU(2) action.
//
// Conventions used throughout:
//  * The Fubini-Study form on P^1 has total area pi; the Hopf map from the
//    unit sphere S^3 onto P^1 is then a Riemannian submersion. On P^1 x P^1
//    the Kaehler form is omega_FS + r omega_FS, so vol(M) = r pi^2.
//  * dV_X is normalized so that vol(X) = vol(M).
//  * A bundle point is a pair of unit spinors (Z, W) standing for the tensor
//    Z (x) W^r; on P^1 only Z is used and X = S^3.
//  * Tangent vectors at m_x are written in a unitary frame attached to x (see
//    hlc_chart); on the product the first coordinate is the Z factor and the
//    second the W factor.

#ifndef SZEGO_GEOMETRY_H_
#define SZEGO_GEOMETRY_H_

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "szego/su2.h"

namespace szego {

class ModelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ModelSpace {
 public:
  enum class Kind { kP1, kP1xP1 };

  static ModelSpace P1() { return ModelSpace(Kind::kP1, 0); }
  // Throws std::invalid_argument unless r >= 2.
  static ModelSpace P1xP1(int r);

  Kind kind() const { return kind_; }
  bool is_product() const { return kind_ == Kind::kP1xP1; }
  // 0 for P^1.
  int r() const { return r_; }
  // Complex dimension d.
  int complex_dim() const { return is_product() ? 2 : 1; }
  // pi for P^1, r pi^2 for the product.
  double volume() const;
  std::string name() const;

  friend bool operator==(const ModelSpace&, const ModelSpace&) = default;

 private:
  ModelSpace(Kind kind, int r) : kind_(kind), r_(r) {}

  Kind kind_;
  int r_;
};

class BundlePoint {
 public:
  // Normalizes Z and W. W is ignored (set to (1, 0)) on P^1.
  BundlePoint(const ModelSpace& model, const Vec2& z, const Vec2& w = Vec2(1.0, 0.0));

  const ModelSpace& model() const { return model_; }
  const Vec2& z() const { return z_; }
  const Vec2& w() const { return w_; }

  // Z on P^1; Z (x) W^r in C^2 (x) Sym^r(C^2) = C^{2(r+1)} on the product,
  // with the symmetric factor written in the orthonormal basis
  // sqrt(binom(r, b)) w0^b w1^{r-b}.
  Eigen::VectorXcd tensor_representative() const;

  // Equality of the points of X (not of their spinor representatives).
  bool same_point(const BundlePoint& other, double tol = 1e-12) const;

  // Standard circle action of e^{i theta} on the fiber.
  BundlePoint rotate_fiber(double theta) const;

 private:
  ModelSpace model_;
  Vec2 z_;
  Vec2 w_;
};

using MomentValue = LieAlgebraElement;
using TangentVector = Eigen::VectorXcd;

// Psi([Z]) for a unit spinor Z.
MomentValue moment_p1(const Vec2& z);
// Psi(Z) + r Psi(W). Throws ModelMismatch on P^1 points.
MomentValue moment_product(const BundlePoint& x);
// Dispatches on the model.
MomentValue moment(const BundlePoint& x);

// Positive eigenvalue of -i phi. Throws GeometryError on phi = 0.
double lambda_of(const MomentValue& phi);

// h with phi = i h diag(lambda, -lambda) h^{-1}; alpha is taken real and
// nonnegative, and beta real positive when alpha = 0.
GroupElement h_coset(const MomentValue& phi);

// nu / (2 lambda).
double u0(IrrepLabel nu, const MomentValue& phi);

// -i omega(v1, v2) - |v1 - v2|^2 / 2 with omega(v1, v2) = Im <v1, v2> and
// <v1, v2> = sum conj(v1) v2.
Complex psi2(const TangentVector& v1, const TangentVector& v2);

BundlePoint act(const GroupElement& g, const BundlePoint& x);

struct StabilizerInfo {
  enum class Kind { kTrivial, kCenterOnly, kCyclic };

  Kind kind = Kind::kTrivial;
  // Group order.
  int order = 1;
  // Angles theta_j in (-pi, pi] of all elements g_j = h t_j h^{-1}, with
  // t_j = Torus(theta_j) and h = h_coset(moment(x)). Always contains 0.
  std::vector<double> angles;
  // Elements of Z_x = G_x ∩ {+I, -I}, recorded by their angle (0 or pi).
  std::vector<double> central_angles;
  // h_coset(moment(x)), the conjugator for every listed element.
  GroupElement conjugator;

  std::size_t size() const { return angles.size(); }
  GroupElement element(std::size_t j) const;
  bool is_central(std::size_t j) const;
  // Indices j with theta_j in (0, pi): one representative of each pair
  // {g, g^{-1}} in G_x minus Z_x.
  std::vector<std::size_t> noncentral_representatives() const;
};

// Classification of G_x: W parallel to Z gives Z_{r+1}; Z orthogonal to W
// gives Z_{r-1}; otherwise trivial (r even) or {+I, -I} (r odd). On P^1 the
// action on S^3 is free.
StabilizerInfo stabilizer(const BundlePoint& x, double tol = 1e-10);

// Largest allowed |v| / sqrt(k) in hlc_chart.
inline constexpr double kChartRadius = 1.0;

// Unitary chart centered at x, x + v / sqrt(k). With U_Z the SU(2) matrix whose
// first column is Z, the Z factor moves to U_Z normalize(1, v_0 / sqrt(k)); on
// the product the W factor moves to U_W normalize(1, v_1 / sqrt(r k)). The
// phases of these lifts are horizontal to first order at v = 0.
// Throws GeometryError when |v| / sqrt(k) exceeds kChartRadius.
BundlePoint hlc_chart(const BundlePoint& x, const TangentVector& v, double k);

// xi_M(m_x) in the unitary frame of hlc_chart at x.
TangentVector infinitesimal_action(const BundlePoint& x,
                                   const LieAlgebraElement& xi);

enum class FiberNorm { kUnit, kInverseTwoPi };
// |d/d theta|^2 under the given convention: 1 or 1 / (2 pi)^2.
double fiber_norm_squared(FiberNorm convention);
std::string to_string(FiberNorm convention);

// |xi_X(x)|^2 = |xi_M(m_x)|^2 + c_theta <Phi(m_x), xi>^2.
double xi_norm2(const BundlePoint& x, const LieAlgebraElement& xi,
                FiberNorm fiber = FiberNorm::kUnit);

struct CBMatrices {
  Eigen::Matrix2d c;
  Eigen::Matrix2cd b;
  double theta = 0.0;
};

// C(x; j) from |Ad_h(eta_j(z))_X(x)|^2 = Z^t C Z / 2, z = a + ib, Z = (a, b),
// with eta_j(z) = (Ad_{t_j^{-1}} - id)(A(z)); B = C + 4 i sin(2 theta_j)
// lambda I. j indexes StabilizerInfo::angles.
// Throws std::out_of_range for a bad j and GeometryError for central g_j.
CBMatrices c_and_b_matrices(const BundlePoint& x, std::size_t j,
                            FiberNorm fiber = FiberNorm::kUnit);

// Real orthonormal basis of the span of {xi_M(m_x)} inside T_{m_x} M = C^d,
// returned as columns of a (2d) x rank real matrix with the interleaved layout
// (Re v_0, Im v_0, Re v_1, Im v_1).
Eigen::MatrixXd orbit_tangent_basis(const BundlePoint& x, double threshold = 1e-8);

// Orthonormal real basis of the orthogonal complement of the orbit tangent
// space, as tangent vectors. Empty on P^1.
std::vector<TangentVector> transverse_directions(const BundlePoint& x,
                                                 double threshold = 1e-8);

struct OrbitDistance {
  double distance = 0.0;
  GroupElement best;
};

// Upper bound for min_g |T(x) - T(g y)| with T the tensor representative:
// minimum over the quadrature nodes, refined by a compass search.
OrbitDistance dist_to_orbit(const BundlePoint& x, const BundlePoint& y,
                            const HaarQuadrature& grid);

}  // namespace szego

#endif  // SZEGO_GEOMETRY_H_
