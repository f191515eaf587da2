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

#ifndef TEMPUS_STATE_VECTOR_HPP
#define TEMPUS_STATE_VECTOR_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tempus {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Largest register a StateVector may hold. Dense unitaries are further
/// limited by kMaxUnitaryQubits.
inline constexpr int kMaxQubits = 20;

/// Tolerance on |<psi|psi> - 1| accepted by validating constructors.
inline constexpr double kNormTolerance = 1e-10;

/// Dense amplitude vector over n qubits.
///
/// Qubit 0 is the most significant bit of the basis index:
/// index = sum_k b_k 2^(n-1-k). The bit string of a basis state is written
/// b_0 b_1 ... b_{n-1}.
class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit StateVector(int n_qubits);

  static StateVector basis(int n_qubits, std::uint64_t index);

  /// Takes ownership of `amplitudes`. The length must be a power of two and
  /// the vector normalized within kNormTolerance.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  /// Like from_amplitudes but rescales to unit norm first. Throws on the zero
  /// vector.
  static StateVector normalized(std::vector<Complex> amplitudes);

  int num_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  std::vector<double> probabilities() const;

  Eigen::VectorXcd to_eigen() const;
  static StateVector from_eigen(const Eigen::VectorXcd& v);

 private:
  StateVector(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2; insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// Bit string b_0 ... b_{n-1} of a basis index.
std::string basis_label(std::uint64_t index, int n_qubits);

/// Inverse of basis_label; throws on characters other than 0/1.
std::uint64_t parse_basis_label(const std::string& label);

}  // namespace tempus

#endif  // TEMPUS_STATE_VECTOR_HPP
