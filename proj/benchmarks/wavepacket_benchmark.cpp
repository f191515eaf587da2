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

#include "tempus/wavepacket.hpp"

namespace tempus {
namespace {

void BM_WavepacketReversal(benchmark::State& state) {
  const auto cells = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_wavepacket_reversal(1.0, 3.0, cells));
}
BENCHMARK(BM_WavepacketReversal)->RangeMultiplier(8)->Range(8, 4096);

}  // namespace
}  // namespace tempus

BENCHMARK_MAIN();
