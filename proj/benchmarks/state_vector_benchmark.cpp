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

#include "tempus/circuit.hpp"
#include "tempus/gate.hpp"
#include "tempus/state_vector.hpp"

namespace tempus {
namespace {

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector psi(n);
  const Gate gate = Gate::cnot(0, n - 1);
  for (auto _ : state) {
    apply_gate_inplace(psi, gate);
    benchmark::DoNotOptimize(psi);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyCnot)->DenseRange(4, 20, 4);

void BM_ApplyU3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector psi(n);
  const Gate gate = Gate::u3(n / 2, 0.3, 0.7, -1.1);
  for (auto _ : state) {
    apply_gate_inplace(psi, gate);
    benchmark::DoNotOptimize(psi);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ApplyU3)->DenseRange(4, 20, 4);

}  // namespace
}  // namespace tempus
