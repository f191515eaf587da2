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

#ifndef TEMPUS_CIRCUIT_HPP
#define TEMPUS_CIRCUIT_HPP

#include <span>
#include <vector>

#include "tempus/gate.hpp"
#include "tempus/state_vector.hpp"

namespace tempus {

/// circuit_to_unitary refuses registers above this size.
inline constexpr int kMaxUnitaryQubits = 12;

/// Ordered gate list over a fixed register.
class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int num_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends `gate`; throws if any of its qubits is outside the register.
  Circuit& append(const Gate& gate);

  /// Appends every gate of `other`, mapping its qubit q to mapping[q].
  Circuit& append(const Circuit& other, std::span<const int> mapping);
  Circuit& append(const Circuit& other);

  /// Copy on a (possibly larger) register with qubits relabeled.
  Circuit remapped(std::span<const int> mapping, int n_qubits) const;

  std::size_t count(GateKind kind) const;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

/// Applies `gate` in place.
void apply_gate_inplace(StateVector& state, const Gate& gate);

StateVector apply_gate(StateVector state, const Gate& gate);

StateVector run_circuit(StateVector state, const Circuit& circuit);

/// Dense 2^n x 2^n matrix of the circuit; column i is run_circuit(|i>).
Matrix circuit_to_unitary(const Circuit& circuit);

/// Same action with every Toffoli and SWAP lowered to CNOTs and single-qubit
/// gates (6 and 3 CNOTs respectively). The result is exactly equal, phase
/// included.
Circuit lower_to_cnot(const Circuit& circuit);

/// Gates implementing the Toffoli on (c0, c1, t) with six CNOTs.
std::vector<Gate> toffoli_decomposition(int c0, int c1, int t);

}  // namespace tempus

#endif  // TEMPUS_CIRCUIT_HPP
