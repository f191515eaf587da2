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

#include "tempus/parity.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tempus {

namespace {

void check_length(std::size_t length, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30 || length != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("parity expansion: expected 2^" + std::to_string(n_qubits) +
                                " values, got " + std::to_string(length));
  }
}

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

}  // namespace

double ParityCoefficients::evaluate(std::uint64_t index) const {
  double value = constant;
  for (std::size_t s = 1; s < coeffs.size(); ++s) {
    if (parity(s & index)) value += coeffs[s];
  }
  return value;
}

void walsh_hadamard(std::span<double> values) {
  if (!std::has_single_bit(values.size())) {
    throw std::invalid_argument("walsh_hadamard: length must be a power of two");
  }
  for (std::size_t h = 1; h < values.size(); h <<= 1) {
    for (std::size_t i = 0; i < values.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        double a = values[j], b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
}

ParityCoefficients parity_expansion(std::span<const double> values, int n_qubits) {
  check_length(values.size(), n_qubits);
  // f(b) = sum_s F_s (-1)^{s.b} with F = WHT(f)/N, and (-1)^p = 1 - 2p, so
  // f(b) = f(0) - 2 sum_{s != 0} F_s p_s(b).
  std::vector<double> spectrum(values.begin(), values.end());
  walsh_hadamard(spectrum);
  const double inv_n = 1.0 / static_cast<double>(spectrum.size());
  ParityCoefficients out{n_qubits, values[0], std::vector<double>(spectrum.size(), 0.0)};
  for (std::size_t s = 1; s < spectrum.size(); ++s) out.coeffs[s] = -2.0 * spectrum[s] * inv_n;
  return out;
}

ParityCoefficients phase_to_parity(std::span<const double> phases, int n_qubits) {
  check_length(phases.size(), n_qubits);
  std::vector<double> target(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) target[i] = -2.0 * phases[i];
  return parity_expansion(target, n_qubits);
}

double and_parity_expansion(std::uint64_t index, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("and_parity_expansion: bad n");
  const std::uint64_t n_subsets = std::uint64_t{1} << n_qubits;
  double sum = 0.0;
  for (std::uint64_t s = 1; s < n_subsets; ++s) {
    double sign = (std::popcount(s) % 2 == 1) ? 1.0 : -1.0;
    sum += sign * parity(s & index);
  }
  return std::ldexp(sum, -(n_qubits - 1));
}

}  // namespace tempus
