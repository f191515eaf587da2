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

#ifndef TEMPUS_GATE_HPP
#define TEMPUS_GATE_HPP

#include <array>
#include <span>
#include <string_view>

#include "tempus/state_vector.hpp"

namespace tempus {

enum class GateKind {
  X,        // NOT
  T,        // relative phase diag(1, e^{i alpha})
  R,        // real rotation [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
  U3,       // T(alpha) R(theta) T(beta)
  TXTX,     // T(phi) X T(phibar) X = diag(e^{i phibar}, e^{i phi})
  CNOT,     // qubits = {control, target}
  Toffoli,  // qubits = {control, control, target}
  SWAP,
};

std::string_view gate_name(GateKind kind);

/// Number of qubits a gate of this kind acts on.
int gate_arity(GateKind kind);

/// Number of real parameters a gate of this kind carries.
int gate_param_count(GateKind kind);

/// One gate of a circuit. Parameters are angles in radians:
///   T(alpha), R(theta), U3(theta, alpha, beta), TXTX(phi, phibar).
class Gate {
 public:
  static Gate x(int q);
  static Gate t(int q, double alpha);
  static Gate r(int q, double theta);
  static Gate u3(int q, double theta, double alpha, double beta);
  static Gate txtx(int q, double phi, double phibar);
  static Gate cnot(int control, int target);
  static Gate toffoli(int control0, int control1, int target);
  static Gate swap(int a, int b);

  GateKind kind() const { return kind_; }
  int arity() const { return gate_arity(kind_); }
  std::span<const int> qubits() const { return {qubits_.data(), static_cast<std::size_t>(arity())}; }
  std::span<const double> params() const {
    return {params_.data(), static_cast<std::size_t>(gate_param_count(kind_))};
  }
  int qubit(int i) const { return qubits_[static_cast<std::size_t>(i)]; }
  double param(int i) const { return params_[static_cast<std::size_t>(i)]; }

  /// Same gate acting on relabeled qubits: new index = mapping[old index].
  Gate remapped(std::span<const int> mapping) const;

  /// Local 2^arity unitary. The first listed qubit is the most significant
  /// local bit.
  Matrix matrix() const;

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateKind kind, std::array<int, 3> qubits, std::array<double, 3> params);

  GateKind kind_;
  std::array<int, 3> qubits_;
  std::array<double, 3> params_;
};

/// Single-qubit matrices by name.
Matrix t_matrix(double alpha);
Matrix r_matrix(double theta);
Matrix u3_matrix(double theta, double alpha, double beta);
Matrix x_matrix();

}  // namespace tempus

#endif  // TEMPUS_GATE_HPP
