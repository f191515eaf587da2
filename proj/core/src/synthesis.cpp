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

#include "tempus/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tempus/angle.hpp"

namespace tempus {

StateVector PhaseSpec::reconstruct() const {
  std::vector<Complex> amps(phases.size());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = std::polar(magnitudes[i], phases[i]);
  return StateVector::from_amplitudes(std::move(amps));
}

PhaseSpec extract_phases(const StateVector& state) {
  PhaseSpec spec{state.num_qubits(), std::vector<double>(state.dimension()),
                 std::vector<double>(state.dimension())};
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    double magnitude = std::abs(state[i]);
    spec.magnitudes[i] = magnitude;
    spec.phases[i] = magnitude > kZeroMagnitude ? wrap_angle(std::arg(state[i])) : 0.0;
  }
  return spec;
}

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Sparse: return "sparse";
    case Scheme::DenseNaive: return "dense_naive";
    case Scheme::DenseAncilla: return "dense_ancilla";
    case Scheme::Boolean: return "boolean";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::Sparse, Scheme::DenseNaive, Scheme::DenseAncilla, Scheme::Boolean}) {
    if (scheme_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown synthesis scheme '" + std::string(name) + "'");
}

std::string SynthesisReport::to_json() const {
  nlohmann::json j{
      {"scheme", scheme_name(scheme)},
      {"n_qubits", circuit.num_qubits()},
      {"n_cnot", n_cnot},
      {"n_toffoli", n_toffoli},
      {"n_ancilla", n_ancilla},
      {"cnot_equivalent", cnot_equivalent()},
  };
  return j.dump(2);
}

namespace {

SynthesisReport finish(Circuit circuit, Scheme scheme, int n_ancilla) {
  SynthesisReport report{std::move(circuit), scheme, 0, 0, n_ancilla, {}};
  report.n_cnot = report.circuit.count(GateKind::CNOT);
  report.n_toffoli = report.circuit.count(GateKind::Toffoli);
  return report;
}

void check_spec(const PhaseSpec& spec) {
  const std::size_t dim = std::size_t{1} << spec.n_qubits;
  if (spec.n_qubits < 1 || spec.phases.size() != dim || spec.magnitudes.size() != dim) {
    throw std::invalid_argument("PhaseSpec: arrays must have length 2^n_qubits");
  }
}

/// Ancilla holding the AND of the first `level` register bits (level >= 2).
int and_ancilla(int n, int level) { return n + level - 2; }

void flip_zero_bits(Circuit& c, std::uint64_t pattern, int first, int last, int n) {
  for (int k = first; k < last; ++k) {
    if (!((pattern >> (n - 1 - k)) & 1u)) c.append(Gate::x(k));
  }
}

// Block that has already checked bits 0..level-1 (AND stored in
// and_ancilla(level)) and branches on the remaining ones.
void nested_block(Circuit& c, const PhaseSpec& spec, int level, std::uint64_t prefix) {
  const int n = spec.n_qubits;
  if (level == n) {
    c.append(Gate::t(and_ancilla(n, n), -2.0 * spec.phases[prefix]));
    return;
  }
  for (std::uint64_t bit : {1u, 0u}) {
    if (bit == 0) c.append(Gate::x(level));
    c.append(Gate::toffoli(and_ancilla(n, level), level, and_ancilla(n, level + 1)));
    nested_block(c, spec, level + 1, (prefix << 1) | bit);
    c.append(Gate::toffoli(and_ancilla(n, level), level, and_ancilla(n, level + 1)));
    if (bit == 0) c.append(Gate::x(level));
  }
}

}  // namespace

SynthesisReport synth_sparse(const PhaseSpec& spec) {
  check_spec(spec);
  const int components = 1 << spec.n_qubits;
  if (components > kMaxQubits) {
    throw std::invalid_argument("synth_sparse: " + std::to_string(components) +
                                " one-hot qubits exceed the register limit");
  }
  Circuit c(components);
  std::vector<std::uint64_t> encoding(static_cast<std::size_t>(components));
  for (int i = 0; i < components; ++i) {
    c.append(Gate::t(i, -2.0 * spec.phases[static_cast<std::size_t>(i)]));
    encoding[static_cast<std::size_t>(i)] = std::uint64_t{1} << (components - 1 - i);
  }
  SynthesisReport report = finish(std::move(c), Scheme::Sparse, 0);
  report.encoding = std::move(encoding);
  return report;
}

StateVector one_hot_encode(const StateVector& state) {
  const auto components = static_cast<int>(state.dimension());
  if (components > kMaxQubits) {
    throw std::invalid_argument("one_hot_encode: state has too many components");
  }
  std::vector<Complex> amps(std::size_t{1} << components);
  for (int i = 0; i < components; ++i) {
    amps[std::size_t{1} << (components - 1 - i)] = state[static_cast<std::size_t>(i)];
  }
  return StateVector::from_amplitudes(std::move(amps));
}

SynthesisReport synth_dense_naive(const PhaseSpec& spec) {
  check_spec(spec);
  const int n = spec.n_qubits;
  if (n < 2) throw std::invalid_argument("synth_dense_naive: needs n >= 2");
  Circuit c(2 * n - 1);
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < dim; ++k) {
    flip_zero_bits(c, k, 0, n, n);
    c.append(Gate::toffoli(0, 1, and_ancilla(n, 2)));
    for (int level = 2; level < n; ++level) {
      c.append(Gate::toffoli(and_ancilla(n, level), level, and_ancilla(n, level + 1)));
    }
    c.append(Gate::t(and_ancilla(n, n), -2.0 * spec.phases[k]));
    for (int level = n - 1; level >= 2; --level) {
      c.append(Gate::toffoli(and_ancilla(n, level), level, and_ancilla(n, level + 1)));
    }
    c.append(Gate::toffoli(0, 1, and_ancilla(n, 2)));
    flip_zero_bits(c, k, 0, n, n);
  }
  return finish(std::move(c), Scheme::DenseNaive, n - 1);
}

SynthesisReport synth_dense_ancilla(const PhaseSpec& spec) {
  check_spec(spec);
  const int n = spec.n_qubits;
  if (n < 2) throw std::invalid_argument("synth_dense_ancilla: needs n >= 2");
  Circuit c(2 * n - 1);
  for (std::uint64_t top : {3u, 2u, 1u, 0u}) {
    flip_zero_bits(c, top << (n - 2), 0, 2, n);
    c.append(Gate::toffoli(0, 1, and_ancilla(n, 2)));
    nested_block(c, spec, 2, top);
    c.append(Gate::toffoli(0, 1, and_ancilla(n, 2)));
    flip_zero_bits(c, top << (n - 2), 0, 2, n);
  }
  return finish(std::move(c), Scheme::DenseAncilla, n - 1);
}

Circuit parity_phase_circuit(const ParityCoefficients& coefficients) {
  const int n = coefficients.n_qubits;
  Circuit c(n);
  auto coeff = [&](std::uint64_t mask) { return coefficients.coeffs[mask]; };

  // Single-bit terms need no CNOTs. The constant rides on the last qubit's
  // TXTX so the circuit carries no stray global phase.
  for (int k = 0; k < n; ++k) {
    double phase = coeff(qubit_mask(k, n));
    if (k == n - 1) {
      c.append(Gate::txtx(k, phase + coefficients.constant, coefficients.constant));
    } else {
      c.append(Gate::txtx(k, phase, 0.0));
    }
  }

  // Every multi-bit term s belongs to the ladder headed by
  // s U {max(s)+1, ..., n-1}. A head i_1 < ... < i_k costs 2(k-1) CNOTs and
  // serves each prefix whose completion is the head.
  for (int first = 0; first + 1 < n; ++first) {
    const int free_bits = n - 2 - first;  // qubits strictly between first and n-1
    std::vector<std::vector<int>> heads;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << free_bits); ++choice) {
      std::vector<int> head{first};
      for (int j = 0; j < free_bits; ++j) {
        if ((choice >> (free_bits - 1 - j)) & 1u) head.push_back(first + 1 + j);
      }
      head.push_back(n - 1);
      heads.push_back(std::move(head));
    }
    std::sort(heads.begin(), heads.end());

    for (const std::vector<int>& head : heads) {
      const std::size_t k = head.size();
      std::uint64_t prefix_mask = qubit_mask(head[0], n);
      for (std::size_t j = 1; j < k; ++j) {
        c.append(Gate::cnot(head[j - 1], head[j]));
        prefix_mask |= qubit_mask(head[j], n);
        // The prefix is served here iff the rest of the head is the
        // consecutive run head[j]+1 .. n-1.
        bool completes = static_cast<int>(k - 1 - j) == n - 1 - head[j];
        if (completes) c.append(Gate::txtx(head[j], coeff(prefix_mask), 0.0));
      }
      for (std::size_t j = k - 1; j >= 1; --j) c.append(Gate::cnot(head[j - 1], head[j]));
    }
  }
  return c;
}

SynthesisReport synth_boolean(const PhaseSpec& spec) {
  check_spec(spec);
  return finish(parity_phase_circuit(phase_to_parity(spec.phases, spec.n_qubits)), Scheme::Boolean, 0);
}

SynthesisReport synthesize(const PhaseSpec& spec, Scheme scheme) {
  switch (scheme) {
    case Scheme::Sparse: return synth_sparse(spec);
    case Scheme::DenseNaive: return synth_dense_naive(spec);
    case Scheme::DenseAncilla: return synth_dense_ancilla(spec);
    case Scheme::Boolean: return synth_boolean(spec);
  }
  throw std::logic_error("synthesize: unknown scheme");
}

double conjugation_fidelity(const StateVector& state, const SynthesisReport& report) {
  const int n = state.num_qubits();
  const std::size_t dim = state.dimension();
  if (report.scheme == Scheme::Sparse) {
    StateVector out = run_circuit(one_hot_encode(state), report.circuit);
    std::vector<Complex> target(state.amplitudes().begin(), state.amplitudes().end());
    for (Complex& a : target) a = std::conj(a);
    return fidelity(one_hot_encode(StateVector::from_amplitudes(std::move(target))), out);
  }
  const int extra = report.circuit.num_qubits() - n;
  if (extra < 0) throw std::invalid_argument("conjugation_fidelity: circuit smaller than the state");
  std::vector<Complex> embedded(dim << extra);
  for (std::size_t i = 0; i < dim; ++i) embedded[i << extra] = state[i];
  StateVector out = run_circuit(StateVector::from_amplitudes(std::move(embedded)), report.circuit);
  // <psi*| is conj(conj(psi_i)) = psi_i on the ancilla-zero block.
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < dim; ++i) overlap += state[i] * out[i << extra];
  return std::norm(overlap);
}

std::string_view cost_model_name(CostModel model) {
  switch (model) {
    case CostModel::DenseNaive: return "dense_naive";
    case CostModel::DenseNested: return "dense_nested";
    case CostModel::Boolean: return "boolean";
    case CostModel::BooleanUnoptimized: return "boolean_unoptimized";
  }
  return "?";
}

CostModel parse_cost_model(std::string_view name) {
  for (CostModel m : {CostModel::DenseNaive, CostModel::DenseNested, CostModel::Boolean,
                      CostModel::BooleanUnoptimized}) {
    if (cost_model_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown cost model '" + std::string(name) + "'");
}

std::uint64_t cnot_cost(CostModel model, int n) {
  if (n < 1) throw std::invalid_argument("cnot_cost: n must be >= 1");
  if (n > 56) throw std::overflow_error("cnot_cost: n too large for 64-bit counts");
  const std::uint64_t pow2 = std::uint64_t{1} << n;
  const auto un = static_cast<std::uint64_t>(n);
  switch (model) {
    case CostModel::DenseNaive: return 12 * (un - 1) * pow2;
    case CostModel::DenseNested: return 24 * (pow2 - 2);
    case CostModel::Boolean: return (un - 1) * (pow2 / 2);
    case CostModel::BooleanUnoptimized:
      // 2^n (n-2) + 2, which is 0 at n = 1.
      return n == 1 ? 0 : pow2 * (un - 2) + 2;
  }
  throw std::logic_error("cnot_cost: unknown model");
}

}  // namespace tempus
