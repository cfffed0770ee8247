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

#include "szego/sections.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace szego {

namespace {

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// sqrt((n + 1) binom(n, a)) u0^a u1^{n-a} for a = 0..n, via logarithms.
std::vector<Complex> normalized_powers(const Vec2& u, int n) {
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
  const double m0 = std::abs(u(0));
  const double m1 = std::abs(u(1));
  const double l0 = std::log(m0);
  const double l1 = std::log(m1);
  const double p0 = std::arg(u(0));
  const double p1 = std::arg(u(1));
  const double log_n1 = std::log(n + 1.0);
  for (int a = 0; a <= n; ++a) {
    if ((a > 0 && m0 == 0.0) || (n - a > 0 && m1 == 0.0)) {
      out[a] = 0.0;
      continue;
    }
    const double lz = (a > 0 ? a * l0 : 0.0) + (n - a > 0 ? (n - a) * l1 : 0.0);
    const double mag = std::exp(0.5 * (log_n1 + log_binomial(n, a)) + lz);
    out[a] = std::polar(mag, a * p0 + (n - a) * p1);
  }
  return out;
}

// Matrix of p(Z) -> p(m Z) on homogeneous polynomials of degree n in the raw
// monomial basis z0^a z1^{n-a}.
Eigen::MatrixXcd substitution_matrix(const Mat2& m, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  // (m00 z0 + m01 z1)^a (m10 z0 + m11 z1)^{n-a}, as coefficient vectors indexed
  // by the power of z0.
  for (int a = 0; a <= n; ++a) {
    std::vector<Complex> poly{Complex(1.0, 0.0)};
    auto multiply = [&](Complex c0, Complex c1) {
      std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i] * c0;
        next[i] += poly[i] * c1;
      }
      poly.swap(next);
    };
    for (int i = 0; i < a; ++i) multiply(m(0, 0), m(0, 1));
    for (int i = 0; i < n - a; ++i) multiply(m(1, 0), m(1, 1));
    for (int p = 0; p <= n; ++p) out(p, a) = poly[p];
  }
  return out;
}

// lowering_block(space, weight) * v without forming the matrix.
Eigen::VectorXd lower(const SectionSpace& space, int weight, const Eigen::VectorXd& v) {
  const auto from = space.block(weight);
  const auto to = space.block(weight - 2);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(to.size());
  const int l = space.level();
  const int big = space.w_degree();
  for (int a = from.a_begin; a < from.a_end; ++a) {
    const int b = space.b_for(weight, a);
    const double c = v(a - from.a_begin);
    if (a > 0) out(a - 1 - to.a_begin) += std::sqrt(a * (l - a + 1.0)) * c;
    if (b > 0) out(a - to.a_begin) += std::sqrt(b * (big - b + 1.0)) * c;
  }
  return out;
}

// Solves (T - shift) x = rhs for symmetric tridiagonal T (diagonal diag,
// off-diagonal off) by Gaussian elimination with partial pivoting. Exactly
// zero pivots are replaced by a tiny multiple of the scale.
Eigen::VectorXd tridiagonal_solve(const Eigen::VectorXd& diag, const Eigen::VectorXd& off,
                                  double shift, Eigen::VectorXd rhs) {
  const Eigen::Index n = diag.size();
  Eigen::VectorXd d = diag.array() - shift;
  if (n == 1) {
    const double piv = d(0) != 0.0 ? d(0) : 1e-300;
    return rhs / piv;
  }
  Eigen::VectorXd dl = off;
  Eigen::VectorXd du = off;
  Eigen::VectorXd du2 = Eigen::VectorXd::Zero(n);
  const double tiny = 1e-15 * std::max(1.0, diag.cwiseAbs().maxCoeff() + 2 * off.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (std::abs(d(i)) >= std::abs(dl(i))) {
      if (d(i) == 0.0) d(i) = tiny;
      const double fact = dl(i) / d(i);
      d(i + 1) -= fact * du(i);
      rhs(i + 1) -= fact * rhs(i);
    } else {
      const double fact = d(i) / dl(i);
      d(i) = dl(i);
      const double temp = d(i + 1);
      d(i + 1) = du(i) - fact * temp;
      if (i + 2 < n) {
        du2(i) = du(i + 1);
        du(i + 1) = -fact * du2(i);
      }
      du(i) = temp;
      const double b = rhs(i);
      rhs(i) = rhs(i + 1);
      rhs(i + 1) = b - fact * rhs(i + 1);
    }
  }
  if (d(n - 1) == 0.0) d(n - 1) = tiny;
  Eigen::VectorXd x(n);
  x(n - 1) = rhs(n - 1) / d(n - 1);
  x(n - 2) = (rhs(n - 2) - du(n - 2) * x(n - 1)) / d(n - 2);
  for (Eigen::Index i = n - 3; i >= 0; --i) {
    x(i) = (rhs(i) - du(i) * x(i + 1) - du2(i) * x(i + 2)) / d(i);
  }
  return x;
}

// Inverse iteration for the weight-w vector of V_nu: FE restricted to the
// weight block is tridiagonal with eigenvalue (j - m)(j + m + 1) on V_nu,
// j = (nu - 1)/2, m = w/2. Distinct isotypes are separated by at least nu.
Eigen::VectorXd refine_chain_vector(const SectionSpace& space, IrrepLabel nu, int w,
                                    const Eigen::VectorXd& start) {
  const auto range = space.block(w);
  const int s = range.size();
  if (s <= 1) return start;
  const int l = space.level();
  const int big = space.w_degree();
  Eigen::VectorXd diag(s), off(s - 1);
  for (int i = 0; i < s; ++i) {
    const int a = range.a_begin + i;
    const int b = space.b_for(w, a);
    diag(i) = static_cast<double>(l - a) * (a + 1) + static_cast<double>(big - b) * (b + 1);
    if (i + 1 < s) {
      off(i) = std::sqrt(static_cast<double>(l - a) * (a + 1)) *
               std::sqrt(static_cast<double>(big - b + 1) * b);
    }
  }
  const double mu = 0.25 * (nu.nu() - 1 - w) * static_cast<double>(nu.nu() + 1 + w);
  const double shift = mu + 1e-9 * (1.0 + mu);
  Eigen::VectorXd v = start;
  for (int it = 0; it < 3; ++it) {
    v = tridiagonal_solve(diag, off, shift, v);
    v.normalize();
  }
  if (v.dot(start) < 0) v = -v;
  return v;
}

}  // namespace

SectionSpace::SectionSpace(const ModelSpace& model, int level)
    : model_(model),
      level_(level),
      w_degree_(model.is_product() ? level * model.r() : 0) {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
}

std::size_t SectionSpace::dim() const {
  return static_cast<std::size_t>(level_ + 1) * static_cast<std::size_t>(w_degree_ + 1);
}

std::size_t SectionSpace::position(int a, int b) const {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(w_degree_ + 1) +
         static_cast<std::size_t>(b);
}

MonomialIndex SectionSpace::index_at(std::size_t position) const {
  const auto stride = static_cast<std::size_t>(w_degree_ + 1);
  return {level_, static_cast<int>(position / stride),
          static_cast<int>(position % stride)};
}

int SectionSpace::weight(int a, int b) const {
  return (2 * a - level_) + (2 * b - w_degree_);
}

SectionSpace::BlockRange SectionSpace::block(int weight) const {
  const int twice = weight + level_ + w_degree_;
  if (twice < 0 || twice % 2 != 0 || twice > 2 * (level_ + w_degree_)) return {};
  const int sum = twice / 2;
  return {std::max(0, sum - w_degree_), std::min(level_, sum) + 1};
}

int SectionSpace::b_for(int weight, int a) const {
  return (weight + level_ + w_degree_) / 2 - a;
}

double log_monomial_norm2(const ModelSpace& model, const MonomialIndex& idx) {
  const SectionSpace space(model, idx.level);
  if (idx.a < 0 || idx.a > idx.level || idx.b < 0 || idx.b > space.w_degree()) {
    throw std::out_of_range("monomial index out of range");
  }
  const int l = idx.level;
  const int big = space.w_degree();
  return std::log(model.volume()) - std::log(l + 1.0) - log_binomial(l, idx.a) -
         std::log(big + 1.0) - log_binomial(big, idx.b);
}

double monomial_norm2(const ModelSpace& model, const MonomialIndex& idx) {
  return std::exp(log_monomial_norm2(model, idx));
}

SectionVector SectionVector::FromDense(const ModelSpace& model, int level,
                                       const Eigen::VectorXcd& dense) {
  const SectionSpace space(model, level);
  if (static_cast<std::size_t>(dense.size()) != space.dim()) {
    throw std::invalid_argument("dense section has wrong length");
  }
  SectionVector out(model, level);
  for (int w = -space.top_weight(); w <= space.top_weight(); w += 2) {
    const auto range = space.block(w);
    WeightBlock block{w, range.a_begin, Eigen::VectorXcd(range.size())};
    for (int a = range.a_begin; a < range.a_end; ++a) {
      block.coeff(a - range.a_begin) = dense(space.position(a, space.b_for(w, a)));
    }
    out.blocks_.push_back(std::move(block));
  }
  return out;
}

SectionVector SectionVector::FromMonomialCoefficients(const ModelSpace& model,
                                                      int level,
                                                      const Eigen::VectorXcd& raw) {
  const SectionSpace space(model, level);
  if (static_cast<std::size_t>(raw.size()) != space.dim()) {
    throw std::invalid_argument("monomial coefficient vector has wrong length");
  }
  Eigen::VectorXcd dense(raw.size());
  for (std::size_t p = 0; p < space.dim(); ++p) {
    dense(p) = raw(p) * std::exp(0.5 * log_monomial_norm2(model, space.index_at(p)));
  }
  return FromDense(model, level, dense);
}

void SectionVector::add_block(WeightBlock block) {
  const SectionSpace space(model_, level_);
  const auto range = space.block(block.weight);
  if (range.size() != block.coeff.size() || range.a_begin != block.a_begin) {
    throw std::invalid_argument("weight block does not match the level layout");
  }
  for (auto& existing : blocks_) {
    if (existing.weight == block.weight) {
      existing.coeff += block.coeff;
      return;
    }
  }
  blocks_.push_back(std::move(block));
}

Eigen::VectorXcd SectionVector::dense() const {
  const SectionSpace space(model_, level_);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  for (const auto& block : blocks_) {
    for (Eigen::Index i = 0; i < block.coeff.size(); ++i) {
      const int a = block.a_begin + static_cast<int>(i);
      out(space.position(a, space.b_for(block.weight, a))) += block.coeff(i);
    }
  }
  return out;
}

Eigen::VectorXcd SectionVector::monomial_coefficients() const {
  const SectionSpace space(model_, level_);
  Eigen::VectorXcd out = dense();
  for (std::size_t p = 0; p < space.dim(); ++p) {
    out(p) *= std::exp(-0.5 * log_monomial_norm2(model_, space.index_at(p)));
  }
  return out;
}

double SectionVector::norm() const {
  double acc = 0.0;
  for (const auto& block : blocks_) acc += block.coeff.squaredNorm();
  return std::sqrt(acc);
}

Complex inner_product(const SectionVector& s, const SectionVector& t) {
  if (!(s.model() == t.model())) {
    throw ModelMismatch("inner product across different models");
  }
  if (s.level() != t.level()) return 0.0;
  Complex acc = 0.0;
  for (const auto& bs : s.blocks()) {
    for (const auto& bt : t.blocks()) {
      if (bs.weight == bt.weight) acc += bs.coeff.dot(bt.coeff);
    }
  }
  return acc;
}

MonomialTable::MonomialTable(const SectionSpace& space, const BundlePoint& x)
    : z_part_(normalized_powers(x.z(), space.level())),
      w_part_(space.model().is_product()
                  ? normalized_powers(x.w(), space.w_degree())
                  : std::vector<Complex>{Complex(1.0, 0.0)}),
      scale_(1.0 / std::sqrt(space.model().volume())) {
  if (!(space.model() == x.model())) {
    throw ModelMismatch("monomial table: point model " + x.model().name() +
                        " does not match section model " + space.model().name());
  }
}

Complex evaluate(const SectionVector& s, const MonomialTable& table) {
  const SectionSpace space(s.model(), s.level());
  Complex acc = 0.0;
  for (const auto& block : s.blocks()) {
    for (Eigen::Index i = 0; i < block.coeff.size(); ++i) {
      const int a = block.a_begin + static_cast<int>(i);
      acc += block.coeff(i) * table.value(a, space.b_for(block.weight, a));
    }
  }
  return acc;
}

Complex evaluate(const SectionVector& s, const BundlePoint& x) {
  const SectionSpace space(s.model(), s.level());
  return evaluate(s, MonomialTable(space, x));
}

LadderMatrices ladder_matrices(const ModelSpace& model, int level,
                               std::size_t dim_budget) {
  const SectionSpace space(model, level);
  const std::size_t n = space.dim();
  if (n > dim_budget) {
    throw BudgetExceeded("ladder matrices of dimension " + std::to_string(n) +
                         " exceed the budget " + std::to_string(dim_budget));
  }
  using Triplet = Eigen::Triplet<long>;
  std::vector<Triplet> e, f, h;
  const int l = level;
  const int big = space.w_degree();
  for (int a = 0; a <= l; ++a) {
    for (int b = 0; b <= big; ++b) {
      const auto col = static_cast<Eigen::Index>(space.position(a, b));
      auto row = [&](int aa, int bb) {
        return static_cast<Eigen::Index>(space.position(aa, bb));
      };
      if (a < l) e.emplace_back(row(a + 1, b), col, l - a);
      if (b < big) e.emplace_back(row(a, b + 1), col, big - b);
      if (a > 0) f.emplace_back(row(a - 1, b), col, a);
      if (b > 0) f.emplace_back(row(a, b - 1), col, b);
      h.emplace_back(col, col, space.weight(a, b));
    }
  }
  const auto dim = static_cast<Eigen::Index>(n);
  LadderMatrices out{Eigen::SparseMatrix<long>(dim, dim),
                     Eigen::SparseMatrix<long>(dim, dim),
                     Eigen::SparseMatrix<long>(dim, dim)};
  out.e.setFromTriplets(e.begin(), e.end());
  out.f.setFromTriplets(f.begin(), f.end());
  out.h.setFromTriplets(h.begin(), h.end());
  return out;
}

Eigen::MatrixXd raising_block(const SectionSpace& space, int weight) {
  const auto from = space.block(weight);
  const auto to = space.block(weight + 2);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(to.size(), from.size());
  const int l = space.level();
  const int big = space.w_degree();
  for (int a = from.a_begin; a < from.a_end; ++a) {
    const int b = space.b_for(weight, a);
    const int col = a - from.a_begin;
    if (a < l) out(a + 1 - to.a_begin, col) += std::sqrt((l - a) * (a + 1.0));
    if (b < big) out(a - to.a_begin, col) += std::sqrt((big - b) * (b + 1.0));
  }
  return out;
}

Eigen::MatrixXd lowering_block(const SectionSpace& space, int weight) {
  const auto from = space.block(weight);
  const auto to = space.block(weight - 2);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(to.size(), from.size());
  const int l = space.level();
  const int big = space.w_degree();
  for (int a = from.a_begin; a < from.a_end; ++a) {
    const int b = space.b_for(weight, a);
    const int col = a - from.a_begin;
    if (a > 0) out(a - 1 - to.a_begin, col) += std::sqrt(a * (l - a + 1.0));
    if (b > 0) out(a - to.a_begin, col) += std::sqrt(b * (big - b + 1.0));
  }
  return out;
}

std::vector<SectionVector> highest_weight_space(const ModelSpace& model, int level,
                                                IrrepLabel nu) {
  const SectionSpace space(model, level);
  const int w = nu.nu() - 1;
  const auto range = space.block(w);
  std::vector<SectionVector> out;
  if (range.size() == 0) return out;

  // ker E is the orthogonal complement of the column space of E^t.
  const Eigen::MatrixXd et = raising_block(space, w).transpose();
  Eigen::MatrixXd kernel;
  if (et.cols() == 0) {
    kernel = Eigen::MatrixXd::Identity(range.size(), range.size());
  } else {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(et);
    qr.setThreshold(1e-9);
    const auto rank = qr.rank();
    const Eigen::MatrixXd q = qr.householderQ();
    kernel = q.rightCols(range.size() - rank);
  }
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    Eigen::VectorXd v = kernel.col(c);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    if (v(pivot) < 0) v = -v;
    SectionVector s(model, level);
    s.add_block({w, range.a_begin, v.cast<Complex>()});
    out.push_back(std::move(s));
  }
  return out;
}

IsotypicBasis isotypic_basis(const ModelSpace& model, int level, IrrepLabel nu) {
  IsotypicBasis out{nu, level, {}};
  const SectionSpace space(model, level);
  const std::vector<SectionVector> tops = highest_weight_space(model, level, nu);
  for (const SectionVector& top : tops) {
    Eigen::VectorXd v = top.blocks().front().coeff.real();
    int w = nu.nu() - 1;
    out.sections.push_back(top);
    for (int j = 1; j < nu.nu(); ++j) {
      v = lower(space, w, v);
      v.normalize();
      w -= 2;
      // Plain lowering amplifies rounding in the higher isotypes by a factor
      // that grows quickly along the chain; with a single copy of V_nu the
      // vector is pinned down by its FE eigenvalue, which removes that drift.
      if (tops.size() == 1) v = refine_chain_vector(space, nu, w, v);
      SectionVector s(model, level);
      s.add_block({w, space.block(w).a_begin, v.cast<Complex>()});
      out.sections.push_back(std::move(s));
    }
  }
  return out;
}

Eigen::MatrixXcd action_matrix(const ModelSpace& model, int level,
                               const GroupElement& g) {
  const SectionSpace space(model, level);
  const Mat2 inv = g.inverse().matrix();
  const Eigen::MatrixXcd mz = substitution_matrix(inv, level);
  const Eigen::MatrixXcd mw = substitution_matrix(inv, space.w_degree());
  const auto n = static_cast<Eigen::Index>(space.dim());
  Eigen::MatrixXcd raw(n, n);
  const int big = space.w_degree();
  for (int a = 0; a <= level; ++a) {
    for (int b = 0; b <= big; ++b) {
      for (int p = 0; p <= level; ++p) {
        for (int q = 0; q <= big; ++q) {
          raw(space.position(p, q), space.position(a, b)) = mz(p, a) * mw(q, b);
        }
      }
    }
  }
  Eigen::VectorXd norms(n);
  for (Eigen::Index p = 0; p < n; ++p) {
    norms(p) = std::exp(0.5 * log_monomial_norm2(model, space.index_at(p)));
  }
  return norms.asDiagonal() * raw * norms.cwiseInverse().asDiagonal();
}

}  // namespace szego
