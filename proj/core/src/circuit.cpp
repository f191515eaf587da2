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

#include "tempus/circuit.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace tempus {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("Circuit: qubit count " + std::to_string(n_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

Circuit& Circuit::append(const Gate& gate) {
  for (int q : gate.qubits()) {
    if (q >= n_qubits_) {
      throw std::out_of_range("Circuit::append: " + std::string(gate_name(gate.kind())) +
                              " on qubit " + std::to_string(q) + " of a " +
                              std::to_string(n_qubits_) + "-qubit register");
    }
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other, std::span<const int> mapping) {
  if (mapping.size() != static_cast<std::size_t>(other.num_qubits())) {
    throw std::invalid_argument("Circuit::append: mapping size does not match circuit");
  }
  for (const Gate& g : other.gates()) append(g.remapped(mapping));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  std::vector<int> identity(static_cast<std::size_t>(other.num_qubits()));
  std::iota(identity.begin(), identity.end(), 0);
  return append(other, identity);
}

Circuit Circuit::remapped(std::span<const int> mapping, int n_qubits) const {
  Circuit out(n_qubits);
  out.append(*this, mapping);
  return out;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind() == kind; }));
}

namespace {

using Index = std::size_t;

Index bit_of(int qubit, int n_qubits) { return Index{1} << (n_qubits - 1 - qubit); }

void apply_single(std::span<Complex> amps, Index bit, const Complex m00, const Complex m01,
                  const Complex m10, const Complex m11) {
  const Index dim = amps.size();
  for (Index base = 0; base < dim; base += 2 * bit) {
    for (Index i = base; i < base + bit; ++i) {
      Complex a0 = amps[i];
      Complex a1 = amps[i + bit];
      amps[i] = m00 * a0 + m01 * a1;
      amps[i + bit] = m10 * a0 + m11 * a1;
    }
  }
}

void apply_diagonal(std::span<Complex> amps, Index bit, Complex d0, Complex d1) {
  for (Index i = 0; i < amps.size(); ++i) amps[i] *= (i & bit) ? d1 : d0;
}

}  // namespace

void apply_gate_inplace(StateVector& state, const Gate& gate) {
  const int n = state.num_qubits();
  for (int q : gate.qubits()) {
    if (q >= n) {
      throw std::out_of_range("apply_gate: " + std::string(gate_name(gate.kind())) + " on qubit " +
                              std::to_string(q) + " of a " + std::to_string(n) + "-qubit state");
    }
  }
  std::span<Complex> amps = state.mutable_amplitudes();
  const Index dim = amps.size();
  switch (gate.kind()) {
    case GateKind::X: {
      Index bit = bit_of(gate.qubit(0), n);
      for (Index i = 0; i < dim; ++i) {
        if (!(i & bit)) std::swap(amps[i], amps[i | bit]);
      }
      return;
    }
    case GateKind::T:
      apply_diagonal(amps, bit_of(gate.qubit(0), n), 1.0, std::polar(1.0, gate.param(0)));
      return;
    case GateKind::TXTX:
      apply_diagonal(amps, bit_of(gate.qubit(0), n), std::polar(1.0, gate.param(1)),
                     std::polar(1.0, gate.param(0)));
      return;
    case GateKind::R:
    case GateKind::U3: {
      Matrix m = gate.matrix();
      apply_single(amps, bit_of(gate.qubit(0), n), m(0, 0), m(0, 1), m(1, 0), m(1, 1));
      return;
    }
    case GateKind::CNOT: {
      Index c = bit_of(gate.qubit(0), n), t = bit_of(gate.qubit(1), n);
      for (Index i = 0; i < dim; ++i) {
        if ((i & c) && !(i & t)) std::swap(amps[i], amps[i | t]);
      }
      return;
    }
    case GateKind::Toffoli: {
      Index c0 = bit_of(gate.qubit(0), n), c1 = bit_of(gate.qubit(1), n);
      Index t = bit_of(gate.qubit(2), n);
      for (Index i = 0; i < dim; ++i) {
        if ((i & c0) && (i & c1) && !(i & t)) std::swap(amps[i], amps[i | t]);
      }
      return;
    }
    case GateKind::SWAP: {
      Index a = bit_of(gate.qubit(0), n), b = bit_of(gate.qubit(1), n);
      for (Index i = 0; i < dim; ++i) {
        if ((i & a) && !(i & b)) std::swap(amps[i], amps[(i & ~a) | b]);
      }
      return;
    }
  }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
  apply_gate_inplace(state, gate);
  return state;
}

StateVector run_circuit(StateVector state, const Circuit& circuit) {
  if (state.num_qubits() != circuit.num_qubits()) {
    throw std::invalid_argument("run_circuit: circuit has " + std::to_string(circuit.num_qubits()) +
                                " qubits, state has " + std::to_string(state.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) apply_gate_inplace(state, g);
  return state;
}

Matrix circuit_to_unitary(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  if (n > kMaxUnitaryQubits) {
    throw std::invalid_argument("circuit_to_unitary: " + std::to_string(n) +
                                " qubits exceeds the limit of " + std::to_string(kMaxUnitaryQubits));
  }
  const auto dim = static_cast<Eigen::Index>(Index{1} << n);
  Matrix u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    StateVector s = run_circuit(StateVector::basis(n, static_cast<std::uint64_t>(col)), circuit);
    for (Eigen::Index row = 0; row < dim; ++row) u(row, col) = s[static_cast<Index>(row)];
  }
  return u;
}

std::vector<Gate> toffoli_decomposition(int c0, int c1, int t) {
  constexpr double kQuarter = std::numbers::pi / 4;
  const Gate h = Gate::u3(t, std::numbers::pi / 2, 0.0, std::numbers::pi);
  return {
      h,
      Gate::cnot(c1, t), Gate::t(t, -kQuarter),
      Gate::cnot(c0, t), Gate::t(t, kQuarter),
      Gate::cnot(c1, t), Gate::t(t, -kQuarter),
      Gate::cnot(c0, t), Gate::t(c1, kQuarter), Gate::t(t, kQuarter),
      h,
      Gate::cnot(c0, c1), Gate::t(c0, kQuarter), Gate::t(c1, -kQuarter),
      Gate::cnot(c0, c1),
  };
}

Circuit lower_to_cnot(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::Toffoli:
        for (const Gate& sub : toffoli_decomposition(g.qubit(0), g.qubit(1), g.qubit(2))) out.append(sub);
        break;
      case GateKind::SWAP:
        out.append(Gate::cnot(g.qubit(0), g.qubit(1)));
        out.append(Gate::cnot(g.qubit(1), g.qubit(0)));
        out.append(Gate::cnot(g.qubit(0), g.qubit(1)));
        break;
      default:
        out.append(g);
    }
  }
  return out;
}

}  // namespace tempus
