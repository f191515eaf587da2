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

#include "tempus/gate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tempus {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::T: return "T";
    case GateKind::R: return "R";
    case GateKind::U3: return "U3";
    case GateKind::TXTX: return "TXTX";
    case GateKind::CNOT: return "CNOT";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::SWAP: return 2;
    case GateKind::Toffoli: return 3;
    default: return 1;
  }
}

int gate_param_count(GateKind kind) {
  switch (kind) {
    case GateKind::T:
    case GateKind::R: return 1;
    case GateKind::U3: return 3;
    case GateKind::TXTX: return 2;
    default: return 0;
  }
}

Gate::Gate(GateKind kind, std::array<int, 3> qubits, std::array<double, 3> params)
    : kind_(kind), qubits_(qubits), params_(params) {
  for (double p : this->params()) {
    if (!std::isfinite(p)) {
      throw std::invalid_argument(std::string("Gate ") + std::string(gate_name(kind)) +
                                  ": non-finite angle");
    }
  }
  auto qs = this->qubits();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] < 0) throw std::invalid_argument("Gate: negative qubit index");
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw std::invalid_argument(std::string("Gate ") + std::string(gate_name(kind)) +
                                    ": repeated qubit " + std::to_string(qs[i]));
      }
    }
  }
}

Gate Gate::x(int q) { return Gate(GateKind::X, {q, 0, 0}, {}); }
Gate Gate::t(int q, double alpha) { return Gate(GateKind::T, {q, 0, 0}, {alpha, 0, 0}); }
Gate Gate::r(int q, double theta) { return Gate(GateKind::R, {q, 0, 0}, {theta, 0, 0}); }
Gate Gate::u3(int q, double theta, double alpha, double beta) {
  return Gate(GateKind::U3, {q, 0, 0}, {theta, alpha, beta});
}
Gate Gate::txtx(int q, double phi, double phibar) {
  return Gate(GateKind::TXTX, {q, 0, 0}, {phi, phibar, 0});
}
Gate Gate::cnot(int control, int target) { return Gate(GateKind::CNOT, {control, target, 0}, {}); }
Gate Gate::toffoli(int control0, int control1, int target) {
  return Gate(GateKind::Toffoli, {control0, control1, target}, {});
}
Gate Gate::swap(int a, int b) { return Gate(GateKind::SWAP, {a, b, 0}, {}); }

Gate Gate::remapped(std::span<const int> mapping) const {
  std::array<int, 3> qs = qubits_;
  for (int i = 0; i < arity(); ++i) {
    auto old = static_cast<std::size_t>(qs[static_cast<std::size_t>(i)]);
    if (old >= mapping.size()) throw std::out_of_range("Gate::remapped: qubit outside mapping");
    qs[static_cast<std::size_t>(i)] = mapping[old];
  }
  return Gate(kind_, qs, params_);
}

Matrix t_matrix(double alpha) {
  Matrix m = Matrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, alpha);
  return m;
}

Matrix r_matrix(double theta) {
  double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

Matrix u3_matrix(double theta, double alpha, double beta) {
  return t_matrix(alpha) * r_matrix(theta) * t_matrix(beta);
}

Matrix x_matrix() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Matrix Gate::matrix() const {
  switch (kind_) {
    case GateKind::X: return x_matrix();
    case GateKind::T: return t_matrix(params_[0]);
    case GateKind::R: return r_matrix(params_[0]);
    case GateKind::U3: return u3_matrix(params_[0], params_[1], params_[2]);
    case GateKind::TXTX: {
      Matrix m = Matrix::Zero(2, 2);
      m(0, 0) = std::polar(1.0, params_[1]);
      m(1, 1) = std::polar(1.0, params_[0]);
      return m;
    }
    case GateKind::CNOT: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      return m;
    }
    case GateKind::SWAP: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    }
    case GateKind::Toffoli: {
      Matrix m = Matrix::Identity(8, 8);
      m(6, 6) = m(7, 7) = 0.0;
      m(6, 7) = m(7, 6) = 1.0;
      return m;
    }
  }
  throw std::logic_error("Gate::matrix: unknown kind");
}

}  // namespace tempus
