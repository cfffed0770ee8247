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


#include <benchmark/benchmark.h>

#include "szego/asymptotics.h"
#include "szego/kernels.h"
#include "szego/sections.h"

namespace {

using szego::BundlePoint;
using szego::IrrepLabel;
using szego::ModelSpace;
using szego::Vec2;

BundlePoint generic_point(const ModelSpace& model) {
  Vec2 z(0.8, szego::Complex(0.2, 0.3));
  Vec2 w(0.3, szego::Complex(-0.5, 0.7));
  return BundlePoint(model, z / z.norm(), w / w.norm());
}

void BM_LevelKernel(benchmark::State& state) {
  const ModelSpace model = ModelSpace::P1xP1(2);
  const BundlePoint x = generic_point(model);
  const BundlePoint y(model, Vec2(0.6, 0.8), Vec2(1.0, 0.0));
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(szego::level_kernel(level, x, y));
}
BENCHMARK(BM_LevelKernel)->Arg(10)->Arg(100)->Arg(400);

void BM_IsotypicBasis(benchmark::State& state) {
  const ModelSpace model = ModelSpace::P1xP1(3);
  const int level = static_cast<int>(state.range(0));
  const IrrepLabel nu(2 * level + 1);
  for (auto _ : state) benchmark::DoNotOptimize(szego::isotypic_basis(model, level, nu));
}
BENCHMARK(BM_IsotypicBasis)->Arg(10)->Arg(40)->Arg(75)->Unit(benchmark::kMillisecond);

void BM_EquivariantKernelCached(benchmark::State& state) {
  const ModelSpace model = ModelSpace::P1xP1(2);
  const BundlePoint x = generic_point(model);
  const int k = static_cast<int>(state.range(0));
  szego::BasisCache cache;
  szego::equivariant_kernel(k, IrrepLabel(1), x, x, cache);
  for (auto _ : state) {
    benchmark::DoNotOptimize(szego::equivariant_kernel(k, IrrepLabel(1), x, x, cache));
  }
}
BENCHMARK(BM_EquivariantKernelCached)->Arg(20)->Arg(100)->Arg(200);

void BM_EquivariantKernelQuadrature(benchmark::State& state) {
  const ModelSpace model = ModelSpace::P1xP1(2);
  const BundlePoint x = generic_point(model);
  const int k = static_cast<int>(state.range(0));
  const szego::HaarQuadrature q =
      szego::HaarQuadrature::Build(szego::required_quadrature_degree(k, IrrepLabel(1), model));
  for (auto _ : state) {
    benchmark::DoNotOptimize(szego::equivariant_kernel_quadrature(k, IrrepLabel(1), x, x, q));
  }
}
BENCHMARK(BM_EquivariantKernelQuadrature)->Arg(3)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_DimensionIntegral(benchmark::State& state) {
  szego::DimensionIntegralOptions options;
  options.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(szego::dimension_limit_integral(ModelSpace::P1xP1(2), options));
  }
}
BENCHMARK(BM_DimensionIntegral)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
