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

// Exact Szego kernels on the model spaces: the level-l kernels and the
// projector onto the V_{k nu} isotype of H(X).

#ifndef SZEGO_KERNELS_H_
#define SZEGO_KERNELS_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "szego/geometry.h"
#include "szego/sections.h"
#include "szego/su2.h"

namespace szego {

struct LevelEntry {
  int level = 0;
  // Whether k nu and l (r + 1) + 1 have the same parity.
  bool parity_ok = false;
};

// Levels l with (k nu - 1)/(r + 1) <= l <= (k nu - 1)/(r - 1).
struct LevelRange {
  int k = 0;
  int nu = 1;
  int r = 0;
  // Every integer l in the inequality range.
  std::vector<LevelEntry> candidates;
  // The candidates passing the parity test, increasing.
  std::vector<int> levels;
};

// Throws std::invalid_argument unless r >= 2 and k >= 1.
LevelRange admissible_levels(int k, IrrepLabel nu, int r);
// On P^1 the single level k nu - 1.
LevelRange admissible_levels(int k, IrrepLabel nu, const ModelSpace& model);

enum class KernelMethod { kLevel, kIsotypic, kQuadrature };
std::string to_string(KernelMethod method);

struct KernelValue {
  Complex value;
  int k = 0;
  int nu = 1;
  KernelMethod method = KernelMethod::kIsotypic;
  BundlePoint x;
  BundlePoint y;
};

// sum over the orthonormal monomials of e(x) conj(e(y)). Throws ModelMismatch.
Complex level_kernel(int level, const BundlePoint& x, const BundlePoint& y);

// (l + 1)(l r + 1) / vol(X) <Z, Z'>^l <W, W'>^{l r}, the closed form of
// level_kernel.
Complex level_kernel_closed_form(int level, const BundlePoint& x, const BundlePoint& y);

// Memoized isotypic bases keyed by (r, l, nu), least recently used first out.
// Safe for concurrent use.
class BasisCache {
 public:
  explicit BasisCache(std::size_t capacity = 1024);
  ~BasisCache();
  BasisCache(const BasisCache&) = delete;
  BasisCache& operator=(const BasisCache&) = delete;

  std::shared_ptr<const IsotypicBasis> get(const ModelSpace& model, int level,
                                           IrrepLabel nu);
  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }
  std::size_t hits() const;
  std::size_t misses() const;

  // Process-wide instance.
  static BasisCache& Shared();

 private:
  struct Impl;
  std::size_t capacity_;
  std::unique_ptr<Impl> impl_;
};

// Pi_{k nu}(x, y) from the isotypic bases of the admissible levels.
KernelValue equivariant_kernel(int k, IrrepLabel nu, const BundlePoint& x,
                               const BundlePoint& y,
                               BasisCache& cache = BasisCache::Shared());

// Smallest quadrature degree for which equivariant_kernel_quadrature is exact.
int required_quadrature_degree(int k, IrrepLabel nu, const ModelSpace& model);

// k nu * sum_g w(g) conj(chi_{k nu}(g)) sum_l level_kernel(l, g^{-1} x, y).
// Throws QuadratureError if q is not exact enough.
KernelValue equivariant_kernel_quadrature(int k, IrrepLabel nu, const BundlePoint& x,
                                          const BundlePoint& y,
                                          const HaarQuadrature& q);

// dim H(X)_{k nu} = k nu * sum_l multiplicity.
long long dimension(int k, IrrepLabel nu, const ModelSpace& model);

}  // namespace szego

#endif  // SZEGO_KERNELS_H_
