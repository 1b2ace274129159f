// Copyright 2026 The fermsep Authors
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

#include <random>

#include "fermsep/classification.hpp"
#include "fermsep/linalg.hpp"
#include "fermsep/measures.hpp"
#include "fermsep/random_states.hpp"
#include "fermsep/xychain.hpp"

namespace fermsep {
namespace {

void BM_Pfaffian(benchmark::State& state) {
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  RealMatrix a = RealMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      a(i, j) = normal(rng);
      a(j, i) = -a(i, j);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(linalg::pfaffian(a));
}
BENCHMARK(BM_Pfaffian)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Classify(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const ModeBipartition split(m, m);
  random::Engine rng(2);
  const DensityMatrix rho = random::random_even_state(2 * m, 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(classify::classify(rho, split));
}
BENCHMARK(BM_Classify)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_ThermalRdm(benchmark::State& state) {
  const xy::XYParams p{0.95, 0.15, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(xy::rdm_two_adjacent(p).rho);
}
BENCHMARK(BM_ThermalRdm)->Arg(1)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_Concurrence(benchmark::State& state) {
  random::Engine rng(3);
  const DensityMatrix rho = random::random_even_1x1(rng);
  for (auto _ : state) benchmark::DoNotOptimize(measures::concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_EofOracle(benchmark::State& state) {
  random::Engine rng(4);
  const DensityMatrix rho = random::random_even_1x1(rng);
  measures::OracleOptions options;
  options.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(measures::eof_oracle(rho, options).value);
}
BENCHMARK(BM_EofOracle)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fermsep

BENCHMARK_MAIN();
