// Copyright 2026 The rzpencil Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rzpencil/catalog.h"
#include "rzpencil/clifford.h"
#include "rzpencil/pencil.h"
#include "rzpencil/random.h"
#include "rzpencil/realzero.h"

namespace rzpencil {
namespace {

void BM_DetArrowhead(benchmark::State& state) {
  const Pencil p = arrowhead_pencil(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_poly(p));
}
BENCHMARK(BM_DetArrowhead)->DenseRange(2, 8, 2);

void BM_DetBrauerWeyl(benchmark::State& state) {
  const Pencil p = bw5_pencil();
  for (auto _ : state) benchmark::DoNotOptimize(det_poly(p));
}
BENCHMARK(BM_DetBrauerWeyl);

void BM_SampledRealZero(benchmark::State& state) {
  const Poly p = ball_poly(static_cast<int>(state.range(0)));
  RzOptions o;
  o.strategy = RzOptions::Strategy::kSampled;
  o.samples = 64;
  for (auto _ : state) benchmark::DoNotOptimize(is_real_zero(p, o));
}
BENCHMARK(BM_SampledRealZero)->Arg(3)->Arg(6);

void BM_VerifyIdentity(benchmark::State& state) {
  const Pencil p = hyperboloid5_pencil();
  const Poly q = hyperboloid_poly(5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(p, q, 2, 200, kDefaultSeed));
}
BENCHMARK(BM_VerifyIdentity)->Unit(benchmark::kMillisecond);

void BM_UnitaryEquivalence(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(kDefaultSeed);
  std::vector<Eigen::MatrixXcd> ms;
  for (int i = 0; i < 3; ++i) ms.push_back(rng.hermitian(k));
  const Pencil p = Pencil::from_numeric(3, k, std::move(ms));
  const Pencil q = p.conjugated(rng.unitary(k));
  for (auto _ : state) benchmark::DoNotOptimize(unitary_equiv_test(p, q, 4, 200, kDefaultSeed));
}
BENCHMARK(BM_UnitaryEquivalence)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rzpencil

BENCHMARK_MAIN();
