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

#include "tempus/sampling.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "tempus/random.hpp"

namespace tempus {

std::uint64_t Histogram::count(const std::string& label) const {
  auto it = counts.find(label);
  return it == counts.end() ? 0 : it->second;
}

double Histogram::probability(const std::string& label) const {
  return shots == 0 ? 0.0 : static_cast<double>(count(label)) / static_cast<double>(shots);
}

void Histogram::record(std::uint64_t index) {
  ++counts[basis_label(index, n_qubits)];
  ++shots;
}

std::string Histogram::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "state,count,probability\n";
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::string label = basis_label(i, n_qubits);
    out << label << ',' << count(label) << ',' << probability(label) << '\n';
  }
  return out.str();
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample: shots must be >= 1");
  std::vector<double> cumulative = state.probabilities();
  for (std::size_t i = 1; i < cumulative.size(); ++i) cumulative[i] += cumulative[i - 1];
  Histogram hist{state.num_qubits(), 0, {}};
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    PhiloxStream rng(seed, shot);
    hist.record(draw_from_cdf(cumulative, rng.uniform()));
  }
  return hist;
}

}  // namespace tempus
