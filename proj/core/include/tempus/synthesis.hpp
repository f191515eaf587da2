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

#ifndef TEMPUS_SYNTHESIS_HPP
#define TEMPUS_SYNTHESIS_HPP

// Conjugation circuits: for a known state |psi> = sum |psi_i| e^{i phi_i} |i>,
// build a unitary U_psi with U_psi |psi> = |psi*> by imprinting the phase
// -2 phi_i on each component.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tempus/circuit.hpp"
#include "tempus/parity.hpp"
#include "tempus/state_vector.hpp"

namespace tempus {

/// Magnitude/phase split of a state. Phases lie in (-pi, pi]; components
/// with |psi_i| <= kZeroMagnitude get phase 0.
struct PhaseSpec {
  int n_qubits = 0;
  std::vector<double> phases;
  std::vector<double> magnitudes;

  StateVector reconstruct() const;
};

inline constexpr double kZeroMagnitude = 1e-12;

PhaseSpec extract_phases(const StateVector& state);

enum class Scheme {
  Sparse,        // one qubit per component, single-qubit phase gates only
  DenseNaive,    // one ancilla-assisted controlled phase per component
  DenseAncilla,  // nested-block ordering of the same controlled phases
  Boolean,       // parity expansion on CNOT ladders, no ancillas
};

std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);

struct SynthesisReport {
  Circuit circuit{1};
  Scheme scheme = Scheme::Boolean;
  std::uint64_t n_cnot = 0;
  std::uint64_t n_toffoli = 0;
  int n_ancilla = 0;
  /// Sparse scheme only: component i lives at one-hot basis index encoding[i].
  std::vector<std::uint64_t> encoding;

  /// CNOT count with each Toffoli costed as six CNOTs.
  std::uint64_t cnot_equivalent() const { return n_cnot + 6 * n_toffoli; }

  /// {"scheme", "n_qubits", "n_cnot", "n_toffoli", "n_ancilla", "cnot_equivalent"}
  std::string to_json() const;
};

/// One qubit per basis component (2^n qubits); T(-2 phi_i) on qubit i.
SynthesisReport synth_sparse(const PhaseSpec& spec);

/// Maps a dense state onto the one-hot register used by synth_sparse.
StateVector one_hot_encode(const StateVector& state);

/// 2(n-1) Toffolis per component on n + (n-1) qubits; ancillas are the last
/// n-1 qubits and return to |0>. Requires n >= 2.
SynthesisReport synth_dense_naive(const PhaseSpec& spec);

/// Nested-block arrangement: 4(2^n - 2) Toffolis, n-1 ancillas. Requires n >= 2.
SynthesisReport synth_dense_ancilla(const PhaseSpec& spec);

/// Parity-ladder scheme on exactly n qubits with (n-1) 2^{n-1} CNOTs. The
/// circuit implements diag(e^{-2i phi_b}) exactly, global phase included.
SynthesisReport synth_boolean(const PhaseSpec& spec);

/// Circuit for an arbitrary diagonal phase function given in parity form.
Circuit parity_phase_circuit(const ParityCoefficients& coefficients);

SynthesisReport synthesize(const PhaseSpec& spec, Scheme scheme);

/// |<psi*|U_psi|psi>|^2 for a report synthesized from `state`, with the state
/// embedded as the scheme requires (one-hot register for sparse, ancillas in
/// |0...0> for the dense schemes).
double conjugation_fidelity(const StateVector& state, const SynthesisReport& report);

enum class CostModel { DenseNaive, DenseNested, Boolean, BooleanUnoptimized };

CostModel parse_cost_model(std::string_view name);
std::string_view cost_model_name(CostModel model);

/// Closed-form CNOT(-equivalent) counts:
///   dense_naive          12 (n-1) 2^n
///   dense_nested         24 (2^n - 2)
///   boolean              (n-1) 2^{n-1}
///   boolean_unoptimized  2^n (n-2) + 2
/// Throws for n < 1 or on 64-bit overflow.
std::uint64_t cnot_cost(CostModel model, int n);

}  // namespace tempus

#endif  // TEMPUS_SYNTHESIS_HPP
