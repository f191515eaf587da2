// Copyright 2026 The Tempus Authors
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

#include <cmath>
#include <random>

#include "tempus/synthesis.hpp"

namespace tempus {
namespace {

PhaseSpec random_phases(int n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  const std::size_t dim = std::size_t{1} << n;
  PhaseSpec spec{n, std::vector<double>(dim), std::vector<double>(dim, 1.0 / std::sqrt(static_cast<double>(dim)))};
  for (double& p : spec.phases) p = angle(rng);
  return spec;
}

void BM_SynthBoolean(benchmark::State& state) {
  const PhaseSpec phases = random_phases(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(synth_boolean(phases));
}
BENCHMARK(BM_SynthBoolean)->DenseRange(2, 12, 2);

void BM_SynthDenseAncilla(benchmark::State& state) {
  const PhaseSpec phases = random_phases(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(synth_dense_ancilla(phases));
}
BENCHMARK(BM_SynthDenseAncilla)->DenseRange(2, 8, 2);

}  // namespace
}  // namespace tempus
