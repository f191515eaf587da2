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

#include "tempus/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tempus {

namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: qubit count " + std::to_string(n_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

int qubits_for_length(std::size_t length) {
  if (length < 2 || !std::has_single_bit(length)) {
    throw std::invalid_argument("StateVector: amplitude count " + std::to_string(length) +
                                " is not a power of two >= 2");
  }
  int n = std::countr_zero(length);
  check_qubit_count(n);
  return n;
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dimension()) {
    throw std::out_of_range("StateVector::basis: index " + std::to_string(index) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  int n = qubits_for_length(amplitudes.size());
  StateVector s(n, std::move(amplitudes));
  for (const Complex& a : s.amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("StateVector: non-finite amplitude");
    }
  }
  double norm = s.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("StateVector: amplitudes not normalized (norm^2 = " +
                                std::to_string(norm) + ")");
  }
  return s;
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  int n = qubits_for_length(amplitudes.size());
  double sum = 0.0;
  for (const Complex& a : amplitudes) sum += std::norm(a);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw std::invalid_argument("StateVector::normalized: zero or non-finite vector");
  }
  double scale = 1.0 / std::sqrt(sum);
  for (Complex& a : amplitudes) a *= scale;
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
  return p;
}

Eigen::VectorXcd StateVector::to_eigen() const {
  return Eigen::Map<const Eigen::VectorXcd>(amplitudes_.data(),
                                            static_cast<Eigen::Index>(amplitudes_.size()));
}

StateVector StateVector::from_eigen(const Eigen::VectorXcd& v) {
  return from_amplitudes(std::vector<Complex>(v.data(), v.data() + v.size()));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

std::string basis_label(std::uint64_t index, int n_qubits) {
  std::string label(static_cast<std::size_t>(n_qubits), '0');
  for (int k = 0; k < n_qubits; ++k) {
    if ((index >> (n_qubits - 1 - k)) & 1u) label[static_cast<std::size_t>(k)] = '1';
  }
  return label;
}

std::uint64_t parse_basis_label(const std::string& label) {
  if (label.empty() || label.size() > 63) {
    throw std::invalid_argument("basis label must have 1..63 characters");
  }
  std::uint64_t index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis label '" + label + "' contains non-binary characters");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return index;
}

}  // namespace tempus
