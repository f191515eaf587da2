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

#ifndef TEMPUS_PARITY_HPP
#define TEMPUS_PARITY_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace tempus {

/// Subset masks use the basis-index bit layout: qubit k is bit (n-1-k), so
/// the parity of subset `mask` at basis index `b` is popcount(mask & b) mod 2.
inline constexpr std::uint64_t qubit_mask(int qubit, int n_qubits) {
  return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

/// Expansion f(b) = constant + sum_{s != 0} coeffs[s] * (XOR_{k in s} b_k).
struct ParityCoefficients {
  int n_qubits = 0;
  double constant = 0.0;
  std::vector<double> coeffs;  // indexed by subset mask; coeffs[0] is unused (0)

  double evaluate(std::uint64_t index) const;
};

/// In-place unnormalized Walsh-Hadamard transform; length must be 2^n.
void walsh_hadamard(std::span<double> values);

/// Parity expansion of the function b -> -2 * phases[b].
ParityCoefficients phase_to_parity(std::span<const double> phases, int n_qubits);

/// Parity expansion of an arbitrary function given by its truth table.
ParityCoefficients parity_expansion(std::span<const double> values, int n_qubits);

/// Arithmetic form of the n-bit AND:
///   2^{-(n-1)} * sum_{s != 0} (-1)^{|s|-1} XOR_{k in s} b_k.
double and_parity_expansion(std::uint64_t index, int n_qubits);

}  // namespace tempus

#endif  // TEMPUS_PARITY_HPP
