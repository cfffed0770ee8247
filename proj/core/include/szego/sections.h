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

// Holomorphic sections of A^l as bihomogeneous polynomials of bidegree
// (l, l r) in (Z, W), with the L^2(X) inner product.
//
// Section vectors are stored per weight block, in coordinates relative to the
// orthonormal monomial basis e_{a,b} = m_{a,b} / |m_{a,b}|, where
// m_{a,b} = z0^a z1^{l-a} w0^b w1^{lr-b}. The weight of m_{a,b} (eigenvalue of
// H) is (2a - l) + (2b - lr). For P^1 the index b is absent (always 0).

#ifndef SZEGO_SECTIONS_H_
#define SZEGO_SECTIONS_H_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "szego/geometry.h"
#include "szego/su2.h"

namespace szego {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MonomialIndex {
  int level = 0;
  int a = 0;
  int b = 0;
};

// The monomial basis of H^0(M, A^l) and its weight-block layout.
class SectionSpace {
 public:
  SectionSpace(const ModelSpace& model, int level);

  const ModelSpace& model() const { return model_; }
  int level() const { return level_; }
  // Degree in W: l r on the product, 0 on P^1.
  int w_degree() const { return w_degree_; }
  // (l + 1)(l r + 1), or l + 1.
  std::size_t dim() const;

  // Dense position of (a, b): a * (w_degree + 1) + b.
  std::size_t position(int a, int b) const;
  MonomialIndex index_at(std::size_t position) const;
  int weight(int a, int b) const;
  int top_weight() const { return level_ + w_degree_; }

  // The a-range [a_begin, a_end) of the weight-w block; empty when w is not a
  // weight of the space. b is determined by a within a block.
  struct BlockRange {
    int a_begin = 0;
    int a_end = 0;
    int size() const { return a_end > a_begin ? a_end - a_begin : 0; }
  };
  BlockRange block(int weight) const;
  int b_for(int weight, int a) const;

 private:
  ModelSpace model_;
  int level_;
  int w_degree_;
};

// |m_{a,b}|^2 in L^2(X): vol(X) a!(l-a)!/(l+1)! b!(lr-b)!/(lr+1)!. Distinct
// monomials are orthogonal.
double monomial_norm2(const ModelSpace& model, const MonomialIndex& idx);
double log_monomial_norm2(const ModelSpace& model, const MonomialIndex& idx);

struct WeightBlock {
  int weight = 0;
  int a_begin = 0;
  Eigen::VectorXcd coeff;
};

class SectionVector {
 public:
  SectionVector(const ModelSpace& model, int level)
      : model_(model), level_(level) {}

  // From dense orthonormal-monomial coordinates (length SectionSpace::dim()).
  static SectionVector FromDense(const ModelSpace& model, int level,
                                 const Eigen::VectorXcd& dense);
  // From dense coefficients over the raw monomials m_{a,b}.
  static SectionVector FromMonomialCoefficients(const ModelSpace& model, int level,
                                                const Eigen::VectorXcd& raw);

  const ModelSpace& model() const { return model_; }
  int level() const { return level_; }
  const std::vector<WeightBlock>& blocks() const { return blocks_; }
  void add_block(WeightBlock block);

  Eigen::VectorXcd dense() const;
  // Coefficients over the raw monomials m_{a,b}.
  Eigen::VectorXcd monomial_coefficients() const;
  double norm() const;

 private:
  ModelSpace model_;
  int level_;
  std::vector<WeightBlock> blocks_;
};

// <s, t> in L^2(X), antilinear in s.
Complex inner_product(const SectionVector& s, const SectionVector& t);

// Values e_{a,b}(x) of the orthonormal monomials at a point, stored in
// factorized form e_{a,b}(x) = zhat_a(Z) what_b(W) / sqrt(vol). The factors are
// computed in log space so that large levels neither overflow nor underflow.
class MonomialTable {
 public:
  MonomialTable(const SectionSpace& space, const BundlePoint& x);

  Complex value(int a, int b) const { return z_part_[a] * w_part_[b] * scale_; }
  const std::vector<Complex>& z_values() const { return z_part_; }
  const std::vector<Complex>& w_values() const { return w_part_; }

 private:
  std::vector<Complex> z_part_;
  std::vector<Complex> w_part_;
  double scale_;
};

// Evaluates the CR function of s at x. Throws ModelMismatch across models.
Complex evaluate(const SectionVector& s, const BundlePoint& x);
Complex evaluate(const SectionVector& s, const MonomialTable& table);

struct LadderMatrices {
  Eigen::SparseMatrix<long> e;
  Eigen::SparseMatrix<long> f;
  Eigen::SparseMatrix<long> h;
};

// Default level budget for the dense monomial ladder matrices.
inline constexpr std::size_t kLadderDimBudget = 200'000;

// E = z0 d/dz1 + w0 d/dw1, F = z1 d/dz0 + w1 d/dw0, H = [E, F] on the raw
// monomials m_{a,b}; column j holds the image of the j-th monomial. The
// one-parameter group exp(t beta) acts on sections through
// (g s)(x) = s(g^{-1} x), with derivative -i H at t = 0.
LadderMatrices ladder_matrices(const ModelSpace& model, int level,
                               std::size_t dim_budget = kLadderDimBudget);

// E and F restricted to weight blocks, in orthonormal-monomial coordinates:
// maps the weight-w block to the weight-(w + 2) (resp. w - 2) block.
Eigen::MatrixXd raising_block(const SectionSpace& space, int weight);
Eigen::MatrixXd lowering_block(const SectionSpace& space, int weight);

// Orthonormal basis of ker E in the weight-(nu - 1) block: the highest weight
// vectors of the copies of V_nu at this level.
std::vector<SectionVector> highest_weight_space(const ModelSpace& model, int level,
                                                IrrepLabel nu);

struct IsotypicBasis {
  IrrepLabel nu{1};
  int level = 0;
  // Chains F^j v / |F^j v|, j = 0..nu-1, for each highest weight vector v.
  std::vector<SectionVector> sections;
};

IsotypicBasis isotypic_basis(const ModelSpace& model, int level, IrrepLabel nu);

// Matrix of the action of g on the level-l space, (g s)(x) = s(g^{-1} x), in
// orthonormal-monomial coordinates. Built by binomial expansion; intended for
// small levels.
Eigen::MatrixXcd action_matrix(const ModelSpace& model, int level,
                               const GroupElement& g);

}  // namespace szego

#endif  // SZEGO_SECTIONS_H_
