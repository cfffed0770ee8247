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
#include <list>
#include <map>
#include <mutex>
#include <tuple>

namespace szego {

namespace {

void require_same_model(const BundlePoint& x, const BundlePoint& y) {
  if (!(x.model() == y.model())) {
    throw ModelMismatch("kernel points live on " + x.model().name() + " and " +
                        y.model().name());
  }
}

// sum_a zhat_a(u) conj(zhat_a(v)) = (n + 1) <u, v>^n, accumulated termwise.
Complex factor_sum(const std::vector<Complex>& u, const std::vector<Complex>& v) {
  Complex acc = 0.0;
  for (std::size_t a = 0; a < u.size(); ++a) acc += u[a] * std::conj(v[a]);
  return acc;
}

}  // namespace

LevelRange admissible_levels(int k, IrrepLabel nu, int r) {
  if (r < 2) throw std::invalid_argument("admissible_levels needs r >= 2");
  if (k < 1) throw std::invalid_argument("admissible_levels needs k >= 1");
  LevelRange out;
  out.k = k;
  out.nu = nu.nu();
  out.r = r;
  const int m = k * nu.nu() - 1;
  // Integer ceiling and floor of m/(r + 1) and m/(r - 1), m >= 0.
  const int lo = (m + r) / (r + 1);
  const int hi = m / (r - 1);
  for (int l = lo; l <= hi; ++l) {
    const bool ok = ((m + 1) - (l * (r + 1) + 1)) % 2 == 0;
    out.candidates.push_back({l, ok});
    if (ok) out.levels.push_back(l);
  }
  return out;
}

LevelRange admissible_levels(int k, IrrepLabel nu, const ModelSpace& model) {
  if (model.is_product()) return admissible_levels(k, nu, model.r());
  if (k < 1) throw std::invalid_argument("admissible_levels needs k >= 1");
  LevelRange out;
  out.k = k;
  out.nu = nu.nu();
  out.r = 0;
  out.candidates.push_back({k * nu.nu() - 1, true});
  out.levels.push_back(k * nu.nu() - 1);
  return out;
}

std::string to_string(KernelMethod method) {
  switch (method) {
    case KernelMethod::kLevel:
      return "level";
    case KernelMethod::kIsotypic:
      return "isotypic";
    case KernelMethod::kQuadrature:
      return "quadrature";
  }
  return "unknown";
}

Complex level_kernel(int level, const BundlePoint& x, const BundlePoint& y) {
  require_same_model(x, y);
  const SectionSpace space(x.model(), level);
  const MonomialTable tx(space, x);
  const MonomialTable ty(space, y);
  // The double sum over (a, b) factorizes into the Z and W parts.
  return factor_sum(tx.z_values(), ty.z_values()) *
         factor_sum(tx.w_values(), ty.w_values()) / x.model().volume();
}

Complex level_kernel_closed_form(int level, const BundlePoint& x, const BundlePoint& y) {
  require_same_model(x, y);
  const ModelSpace& model = x.model();
  const Complex zz = x.z().dot(y.z());  // conj(Z') . Z
  Complex out = static_cast<double>(level + 1) * std::pow(std::conj(zz), level);
  if (model.is_product()) {
    const int big = level * model.r();
    const Complex ww = x.w().dot(y.w());
    out *= static_cast<double>(big + 1) * std::pow(std::conj(ww), big);
  }
  return out / model.volume();
}

struct BasisCache::Impl {
  using Key = std::tuple<int, int, int>;
  mutable std::mutex mutex;
  std::list<Key> order;  // front is most recent
  std::map<Key, std::pair<std::shared_ptr<const IsotypicBasis>,
                          std::list<Key>::iterator>>
      entries;
  std::size_t hits = 0;
  std::size_t misses = 0;
};

BasisCache::BasisCache(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity), impl_(std::make_unique<Impl>()) {}

BasisCache::~BasisCache() = default;

std::shared_ptr<const IsotypicBasis> BasisCache::get(const ModelSpace& model, int level,
                                                     IrrepLabel nu) {
  const Impl::Key key{model.is_product() ? model.r() : 0, level, nu.nu()};
  {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto it = impl_->entries.find(key);
    if (it != impl_->entries.end()) {
      impl_->order.splice(impl_->order.begin(), impl_->order, it->second.second);
      ++impl_->hits;
      return it->second.first;
    }
    ++impl_->misses;
  }
  auto built = std::make_shared<const IsotypicBasis>(isotypic_basis(model, level, nu));
  std::lock_guard<std::mutex> lock(impl_->mutex);
  auto it = impl_->entries.find(key);
  if (it != impl_->entries.end()) return it->second.first;
  impl_->order.push_front(key);
  impl_->entries.emplace(key, std::make_pair(built, impl_->order.begin()));
  while (impl_->entries.size() > capacity_) {
    impl_->entries.erase(impl_->order.back());
    impl_->order.pop_back();
  }
  return built;
}

std::size_t BasisCache::size() const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->entries.size();
}

std::size_t BasisCache::hits() const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->hits;
}

std::size_t BasisCache::misses() const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  return impl_->misses;
}

BasisCache& BasisCache::Shared() {
  static BasisCache cache;
  return cache;
}

KernelValue equivariant_kernel(int k, IrrepLabel nu, const BundlePoint& x,
                               const BundlePoint& y, BasisCache& cache) {
  require_same_model(x, y);
  const ModelSpace& model = x.model();
  KernelValue out{0.0, k, nu.nu(), KernelMethod::kIsotypic, x, y};
  if (!model.is_product()) {
    out.value = level_kernel(k * nu.nu() - 1, x, y);
    out.method = KernelMethod::kLevel;
    return out;
  }
  // Odd r with even k nu admits no level at all.
  if (model.r() % 2 == 1 && (k * nu.nu()) % 2 == 0) return out;
  const IrrepLabel n(k * nu.nu());
  for (int l : admissible_levels(k, nu, model.r()).levels) {
    const auto basis = cache.get(model, l, n);
    if (basis->sections.empty()) continue;
    const SectionSpace space(model, l);
    const MonomialTable tx(space, x);
    const MonomialTable ty(space, y);
    for (const SectionVector& s : basis->sections) {
      out.value += evaluate(s, tx) * std::conj(evaluate(s, ty));
    }
  }
  return out;
}

int required_quadrature_degree(int k, IrrepLabel nu, const ModelSpace& model) {
  const int n = k * nu.nu();
  int top = 0;
  for (int l : admissible_levels(k, nu, model).levels) {
    top = std::max(top, l + (model.is_product() ? l * model.r() : 0));
  }
  // Polynomial degree n - 1 + top in the entries of g, exact when
  // 2 (max_degree - 1) covers it.
  return (n - 1 + top + 1) / 2 + 1;
}

KernelValue equivariant_kernel_quadrature(int k, IrrepLabel nu, const BundlePoint& x,
                                          const BundlePoint& y,
                                          const HaarQuadrature& q) {
  require_same_model(x, y);
  const ModelSpace& model = x.model();
  const int need = required_quadrature_degree(k, nu, model);
  if (q.max_degree() < need) {
    throw QuadratureError("quadrature degree " + std::to_string(q.max_degree()) +
                          " below the required " + std::to_string(need));
  }
  const IrrepLabel n(k * nu.nu());
  const std::vector<int> levels = admissible_levels(k, nu, model).levels;
  KernelValue out{0.0, k, nu.nu(), KernelMethod::kQuadrature, x, y};
  if (levels.empty()) return out;
  const Complex integral = q.integrate([&](const GroupElement& g) {
    const BundlePoint gx = act(g.inverse(), x);
    Complex acc = 0.0;
    for (int l : levels) acc += level_kernel(l, gx, y);
    return character_group(n, g) * acc;
  });
  out.value = static_cast<double>(n.nu()) * integral;
  return out;
}

long long dimension(int k, IrrepLabel nu, const ModelSpace& model) {
  const int n = k * nu.nu();
  if (!model.is_product()) return n;
  if (model.r() % 2 == 1 && n % 2 == 0) return 0;
  long long copies = 0;
  for (int l : admissible_levels(k, nu, model.r()).levels) {
    copies += clebsch_multiplicity(IrrepLabel(l + 1), IrrepLabel(l * model.r() + 1),
                                   IrrepLabel(n));
  }
  return copies * n;
}

}  // namespace szego
