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

#ifndef TEMPUS_SAMPLING_HPP
#define TEMPUS_SAMPLING_HPP

#include <cstdint>
#include <map>
#include <string>

#include "tempus/state_vector.hpp"

namespace tempus {

/// Measurement outcome counts keyed by bit string b_0 ... b_{n-1}.
struct Histogram {
  int n_qubits = 0;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> counts;

  /// Count for `label`, zero when absent.
  std::uint64_t count(const std::string& label) const;
  double probability(const std::string& label) const;

  /// Registers one shot with outcome `index`.
  void record(std::uint64_t index);

  /// CSV with header `state,count,probability`, every basis state listed in
  /// index order.
  std::string to_csv() const;

  bool operator==(const Histogram&) const = default;
};

/// `shots` independent computational-basis measurements of `state`. Shot k
/// draws from PhiloxStream(seed, k), so the result is a pure function of the
/// arguments.
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace tempus

#endif  // TEMPUS_SAMPLING_HPP
