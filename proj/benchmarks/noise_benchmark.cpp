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

#include "tempus/noise.hpp"
#include "tempus/scattering.hpp"

namespace tempus {
namespace {

void BM_NoisyRun(benchmark::State& state) {
  const ExperimentModel model = state.range(0) == 2 ? ExperimentModel::TwoBit : ExperimentModel::ThreeBit;
  const Circuit circuit = build_experiment(model, TliParams()).full();
  const NoiseModel noise = appendix_f_profile();
  const std::vector<int> map = physical_map(model);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(noisy_run(circuit, noise, 8192, 0, {map, threads}));
  state.SetItemsProcessed(state.iterations() * 8192);
}
BENCHMARK(BM_NoisyRun)->ArgsProduct({{2, 3}, {1, 4}})->UseRealTime();

}  // namespace
}  // namespace tempus
