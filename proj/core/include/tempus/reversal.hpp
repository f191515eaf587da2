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

#ifndef TEMPUS_REVERSAL_HPP
#define TEMPUS_REVERSAL_HPP

#include <string>

#include "tempus/state_vector.hpp"

namespace tempus {

/// Hermitian generator on n qubits (hbar = 1).
class Hamiltonian {
 public:
  /// Accepts `matrix` if ||H - H^dagger||_max < 1e-10 and stores (H + H^dagger)/2.
  Hamiltonian(int n_qubits, const Matrix& matrix);

  /// {"n_qubits": n, "real": [[...]], "imag": [[...]]}; "imag" may be omitted.
  static Hamiltonian from_json(const std::string& text);

  int num_qubits() const { return n_qubits_; }
  const Matrix& matrix() const { return matrix_; }

  /// True when the imaginary part vanishes (max |Im H_ij| < 1e-14).
  bool is_real() const;

 private:
  int n_qubits_;
  Matrix matrix_;
};

inline constexpr double kHermiticityTolerance = 1e-10;

/// Unitary part of the anti-unitary reversal R = U_R K.
struct ReversalPlan {
  Matrix u_r;
  Matrix u_h;                  // H = U_H^dagger diag(E) U_H
  Eigen::VectorXd energies;    // ascending

  /// ||H - (U_R^dagger H U_R)^*||_max.
  double residual(const Hamiltonian& h) const;
};

/// U_R = U_H^dagger U_H^* from the eigendecomposition of H. Eigenvectors are
/// gauge-fixed so that their first largest-magnitude entry is real positive.
/// Real H is diagonalized over the reals, which makes U_R the identity.
ReversalPlan compute_reversal(const Hamiltonian& h);

/// exp(-i H tau) via eigendecomposition.
Matrix matrix_exponential(const Hamiltonian& h, double tau);

/// Amplitude-wise complex conjugation (the operator K).
StateVector conjugate_state(const StateVector& state);

/// R^{-1} U(tau) R |psi_tau> with R = U_R K; recovers psi(0) from
/// psi_tau = U(tau) psi(0).
StateVector reverse_protocol(const Matrix& u_forward, const ReversalPlan& plan,
                             const StateVector& psi_tau);

/// max_ij |(U^dagger U - I)_ij|.
double unitarity_defect(const Matrix& u);

}  // namespace tempus

#endif  // TEMPUS_REVERSAL_HPP
