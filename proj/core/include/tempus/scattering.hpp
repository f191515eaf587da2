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

#ifndef TEMPUS_SCATTERING_HPP
#define TEMPUS_SCATTERING_HPP

// Particles scattering off a two-level impurity (TLI). Logical qubit 0 is the
// impurity; qubits 1 and 2 are the particles. The particle scatters with S0
// or S1 depending on the impurity state, and the impurity precesses under
// H_i = omega (cos(alpha) sigma_z + sin(alpha) sigma_x) between scatterings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempus/circuit.hpp"
#include "tempus/noise.hpp"
#include "tempus/sampling.hpp"
#include "tempus/state_vector.hpp"

namespace tempus {

/// The default scattering matrices of the reference experiment.
Matrix default_s0();
Matrix default_s1();

struct TliParams {
  double omega_tau;
  double alpha;
  Matrix s0 = default_s0();
  Matrix s1 = default_s1();

  /// omega_tau = pi/6, alpha = pi/6, default S matrices.
  TliParams();
  TliParams(double omega_tau, double alpha);

  /// Throws unless both S matrices are 2x2, symmetric and unitary within 1e-10.
  void validate() const;

  /// {omega_tau, alpha, s0: {re, im}, s1: {re, im}}; missing keys take the
  /// defaults, unknown keys are rejected. Angles may be numbers or strings
  /// such as "pi/6".
  static TliParams from_json(const std::string& text);
  std::string to_json() const;
};

/// The four parameter sets of the reference experiment (omega_tau = pi/6).
std::vector<TliParams> reference_parameter_sets();

/// u = e^{i delta} U3(xi, eta, eta + pi).
struct SymmetricU3Decomposition {
  double delta = 0.0;
  double xi = 0.0;   // [0, pi]
  double eta = 0.0;  // (-pi, pi]

  Matrix reconstruct() const;
};

/// u = e^{i delta} U3(theta, a, b) for a general 2x2 unitary.
struct U3Decomposition {
  double delta = 0.0;
  double theta = 0.0;
  double a = 0.0;
  double b = 0.0;

  Matrix reconstruct() const;
};

/// exp(-i omega_tau (cos(alpha) sigma_z + sin(alpha) sigma_x)).
Matrix tli_evolution(const TliParams& params);

/// Throws std::invalid_argument unless `u` is a symmetric 2x2 unitary.
SymmetricU3Decomposition decompose_symmetric(const Matrix& u);

/// Throws std::invalid_argument unless `u` is a 2x2 unitary.
U3Decomposition decompose_u3(const Matrix& u);

/// Controlled-W on (control, target) with two CNOTs, exact including the
/// phase of W.
Circuit controlled_unitary_circuit(const Matrix& w, int control, int target, int n_qubits);

/// |0><0| (x) S0 + |1><1| (x) S1 up to a global phase, built as
/// Lambda(S1 S0^dagger) (1 (x) S0). Uses exactly two CNOTs.
Circuit s_psi_circuit(const TliParams& params, int control, int target, int n_qubits = 2);

/// [U_i (x) 1] S_psi [U_i (x) 1] on (impurity, particle).
Circuit u2bit_circuit(const TliParams& params);

/// U_i S^(2) U_i S^(1) U_i on (impurity, particle 1, particle 2). With
/// `swap_particles` the roles of the two particle qubits are exchanged,
/// which equals SWAP_12 U SWAP_12.
Circuit u3bit_circuit(const TliParams& params, bool swap_particles = false);

enum class ExperimentModel { TwoBit, ThreeBit };

std::string_view model_name(ExperimentModel model);
ExperimentModel parse_model(std::string_view name);
int model_qubits(ExperimentModel model);

/// Logical-to-physical qubit map used for the noise model:
/// 2bit {0->2, 1->1}, 3bit {0->2, 1->1, 2->0}.
std::vector<int> physical_map(ExperimentModel model);

/// The three stages of the reversal experiment.
struct ExperimentCircuits {
  Circuit forward{1};
  Circuit conjugation{1};  // boolean scheme for the state reached by `forward`
  Circuit backward{1};     // forward evolution, particles relabeled for 3bit
  StateVector reached{1};

  /// forward, conjugation and backward concatenated.
  Circuit full() const;
};

ExperimentCircuits build_experiment(ExperimentModel model, const TliParams& params);

/// Final state of the noiseless protocol; ideally |0...0>.
StateVector run_experiment_state(ExperimentModel model, const TliParams& params);

/// Runs the protocol `shots` times. Without noise this samples the final
/// state; with noise every shot goes through noisy_run on the physical map.
Histogram run_experiment(ExperimentModel model, const TliParams& params, std::uint64_t shots,
                         const std::optional<NoiseModel>& noise, std::uint64_t seed);

}  // namespace tempus

#endif  // TEMPUS_SCATTERING_HPP
