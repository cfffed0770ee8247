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

#ifndef SZEGO_SU2_H_
#define SZEGO_SU2_H_

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace szego {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;

// Label of the irreducible representation V_nu = Sym^{nu-1}(C^2); dim V_nu = nu.
class IrrepLabel {
 public:
  explicit IrrepLabel(int nu);

  int nu() const { return nu_; }
  int dim() const { return nu_; }

  friend bool operator==(IrrepLabel, IrrepLabel) = default;

 private:
  int nu_;
};

// An element of SU(2) stored as the unit pair (alpha, beta); its matrix is
// [[alpha, -conj(beta)], [beta, conj(alpha)]].
class GroupElement {
 public:
  GroupElement() : alpha_(1.0, 0.0), beta_(0.0, 0.0) {}
  // Renormalizes (alpha, beta) onto S^3. Throws on the zero pair.
  GroupElement(Complex alpha, Complex beta);

  static GroupElement Identity() { return {}; }
  static GroupElement MinusIdentity() { return {Complex(-1.0, 0.0), 0.0}; }
  // diag(e^{i theta}, e^{-i theta}) = exp(theta * beta_generator).
  static GroupElement Torus(double theta);
  // The Weyl element [[0, -1], [1, 0]].
  static GroupElement WeylFlip() { return {0.0, Complex(1.0, 0.0)}; }
  // Projects the first column of a special unitary matrix.
  static GroupElement FromMatrix(const Mat2& m);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }

  Mat2 matrix() const;
  GroupElement inverse() const;
  Vec2 apply(const Vec2& v) const;

  // Rotation angle in [0, pi]: g is conjugate to Torus(angle()).
  double angle() const;

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);

 private:
  Complex alpha_;
  Complex beta_;
};

// A traceless skew-Hermitian 2x2 matrix.
class LieAlgebraElement {
 public:
  LieAlgebraElement() : m_(Mat2::Zero()) {}
  // Throws std::invalid_argument unless m is traceless skew-Hermitian to 1e-12
  // relative to its size.
  explicit LieAlgebraElement(const Mat2& m);

  // beta = diag(i, -i), generator of the standard torus.
  static LieAlgebraElement BetaGenerator();
  // A(z) = i [[0, z], [conj(z), 0]].
  static LieAlgebraElement OffDiagonal(Complex z);
  // i * diag(a, -a) + A(b): the general element, a real and b complex.
  static LieAlgebraElement FromCoordinates(double a, Complex b);
  // Basis {i sigma_z, i sigma_x, i sigma_y}.
  static LieAlgebraElement Basis(int index);

  const Mat2& matrix() const { return m_; }
  double norm() const { return m_.norm(); }

  LieAlgebraElement operator+(const LieAlgebraElement& o) const;
  LieAlgebraElement operator-(const LieAlgebraElement& o) const;
  LieAlgebraElement operator*(double s) const;

 private:
  Mat2 m_;
};

// <xi, eta> = -trace(xi eta). With this normalization <i diag(l, -l), beta> = 2l.
double pairing(const LieAlgebraElement& xi, const LieAlgebraElement& eta);

// g xi g^{-1}.
LieAlgebraElement adjoint(const GroupElement& g, const LieAlgebraElement& xi);

// Group exponential.
GroupElement exp(const LieAlgebraElement& xi);

// sin(nu theta) / sin(theta), with the removable singularity resolved by the
// finite cosine sum near theta in pi Z.
double character_torus(IrrepLabel nu, double theta);

double character_group(IrrepLabel nu, const GroupElement& g);

// f_ell(e^{theta beta}) = e^{i ell theta}.
Complex f_ell(long ell, double theta);

// Multiplicity (0 or 1) of V_nu in V_a (x) V_b.
int clebsch_multiplicity(IrrepLabel a, IrrepLabel b, IrrepLabel nu);

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Product rule for normalized Haar measure on SU(2) in the coordinates
// alpha = cos(t) e^{i p}, beta = sin(t) e^{i q}, dg = sin(2t) dt dp dq / (2 pi)^2.
// Exact for every polynomial in (alpha, conj alpha, beta, conj beta) of total
// degree <= 2 (max_degree - 1); in particular for products of two matrix
// coefficients of V_a, V_b with a, b <= max_degree.
class HaarQuadrature {
 public:
  static constexpr std::size_t kDefaultNodeBudget = 4'000'000;

  // Throws QuadratureError if max_degree < 1, if the node count exceeds
  // node_budget, or if the character-orthogonality self test fails.
  static HaarQuadrature Build(int max_degree,
                              std::size_t node_budget = kDefaultNodeBudget);

  // Node count of Build(max_degree) without constructing it.
  static std::size_t NodeCount(int max_degree);

  int max_degree() const { return max_degree_; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const GroupElement> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  // Largest |sum_g w(g) chi_a(g) chi_b(g) - delta_ab| over a, b <= max_degree.
  double orthogonality_defect() const;

  template <class F>
  auto integrate(F&& f) const -> decltype(f(GroupElement{}) * 1.0) {
    using R = decltype(f(GroupElement{}) * 1.0);
    R acc{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      acc += weights_[i] * f(nodes_[i]);
    }
    return acc;
  }

 private:
  HaarQuadrature() = default;

  int max_degree_ = 0;
  std::vector<GroupElement> nodes_;
  std::vector<double> weights_;
};

}  // namespace szego

#endif  // SZEGO_SU2_H_
