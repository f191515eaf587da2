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

#include "tempus/scattering.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "tempus/angle.hpp"
#include "tempus/gate.hpp"
#include "tempus/synthesis.hpp"

namespace tempus {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-12;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

void check_unitary_2x2(const Matrix& u, const char* what) {
  if (u.rows() != 2 || u.cols() != 2) throw std::invalid_argument(std::string(what) + ": expected a 2x2 matrix");
  if (!u.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite entries");
  if (max_abs(u.adjoint() * u - Matrix::Identity(2, 2)) > 1e-10) {
    throw std::invalid_argument(std::string(what) + ": matrix is not unitary");
  }
}

double json_angle(const json& value) {
  return value.is_string() ? parse_angle(value.get<std::string>()) : value.get<double>();
}

Matrix json_matrix(const json& value) {
  for (const auto& [key, v] : value.items()) {
    if (key != "re" && key != "im") throw std::invalid_argument("TliParams: unknown matrix key '" + key + "'");
  }
  auto re = value.at("re").get<std::vector<std::vector<double>>>();
  std::vector<std::vector<double>> im(2, std::vector<double>(2, 0.0));
  if (value.contains("im")) im = value["im"].get<std::vector<std::vector<double>>>();
  if (re.size() != 2 || im.size() != 2 || re[0].size() != 2 || re[1].size() != 2 || im[0].size() != 2 ||
      im[1].size() != 2) {
    throw std::invalid_argument("TliParams: scattering matrices must be 2x2");
  }
  Matrix m(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m(r, c) = Complex(re[r][c], im[r][c]);
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < 2; ++r) {
    re.push_back({m(r, 0).real(), m(r, 1).real()});
    im.push_back({m(r, 0).imag(), m(r, 1).imag()});
  }
  return {{"re", re}, {"im", im}};
}

Gate u3_gate(int q, const SymmetricU3Decomposition& d) { return Gate::u3(q, d.xi, d.eta, d.eta + kPi); }

}  // namespace

Matrix default_s0() {
  const double h = std::sqrt(3.0) / 2.0;
  Matrix s(2, 2);
  s << 0.5, h, h, -0.5;
  return s;
}

Matrix default_s1() {
  const double h = std::sqrt(3.0) / 2.0;
  const Complex off = 0.5 * std::polar(1.0, kPi / 3.0);
  Matrix s(2, 2);
  s << h, off, off, -h * std::polar(1.0, 2.0 * kPi / 3.0);
  return s;
}

TliParams::TliParams() : TliParams(kPi / 6.0, kPi / 6.0) {}

TliParams::TliParams(double omega_tau_in, double alpha_in) : omega_tau(omega_tau_in), alpha(alpha_in) {
  if (!std::isfinite(omega_tau) || !std::isfinite(alpha)) throw std::invalid_argument("TliParams: non-finite angle");
}

void TliParams::validate() const {
  if (!std::isfinite(omega_tau) || !std::isfinite(alpha)) throw std::invalid_argument("TliParams: non-finite angle");
  for (const Matrix* s : {&s0, &s1}) {
    check_unitary_2x2(*s, "TliParams");
    if (max_abs(*s - s->transpose()) > 1e-10) throw std::invalid_argument("TliParams: S matrix is not symmetric");
  }
}

TliParams TliParams::from_json(const std::string& text) {
  json j = json::parse(text);
  TliParams p;
  for (const auto& [key, value] : j.items()) {
    if (key == "omega_tau") {
      p.omega_tau = json_angle(value);
    } else if (key == "alpha") {
      p.alpha = json_angle(value);
    } else if (key == "s0") {
      p.s0 = json_matrix(value);
    } else if (key == "s1") {
      p.s1 = json_matrix(value);
    } else {
      throw std::invalid_argument("TliParams: unknown key '" + key + "'");
    }
  }
  p.validate();
  return p;
}

std::string TliParams::to_json() const {
  json j{{"omega_tau", omega_tau}, {"alpha", alpha}, {"s0", matrix_json(s0)}, {"s1", matrix_json(s1)}};
  return j.dump(2);
}

std::vector<TliParams> reference_parameter_sets() {
  std::vector<TliParams> sets;
  for (double alpha : {kPi / 6.0, kPi / 4.0, kPi / 3.0, kPi / 2.0}) sets.emplace_back(kPi / 6.0, alpha);
  return sets;
}

Matrix SymmetricU3Decomposition::reconstruct() const {
  return std::polar(1.0, delta) * u3_matrix(xi, eta, eta + kPi);
}

Matrix U3Decomposition::reconstruct() const { return std::polar(1.0, delta) * u3_matrix(theta, a, b); }

Matrix tli_evolution(const TliParams& params) {
  const double c = std::cos(params.omega_tau), s = std::sin(params.omega_tau);
  const double ca = std::cos(params.alpha), sa = std::sin(params.alpha);
  const Complex i(0.0, 1.0);
  Matrix u(2, 2);
  u << c - i * s * ca, -i * s * sa, -i * s * sa, c + i * s * ca;
  return u;
}

SymmetricU3Decomposition decompose_symmetric(const Matrix& u) {
  check_unitary_2x2(u, "decompose_symmetric");
  if (std::abs(u(0, 1) - u(1, 0)) > 1e-10) throw std::invalid_argument("decompose_symmetric: matrix is not symmetric");
  // e^{i delta} U3(xi, eta, eta + pi) = e^{i delta} [[c, s e^{i eta}], [s e^{i eta}, -c e^{2 i eta}]].
  const double c = std::min(1.0, std::abs(u(0, 0)));
  const double s = std::abs(u(0, 1));
  SymmetricU3Decomposition d;
  d.xi = 2.0 * std::atan2(s, c);  // acos(c) loses half the digits near c = 1
  if (c > kTiny) {
    d.delta = std::arg(u(0, 0));
    d.eta = s > kTiny ? std::arg(u(0, 1)) - d.delta : (std::arg(-u(1, 1)) - d.delta) / 2.0;
  } else {
    d.delta = std::arg(u(0, 1));
    d.eta = 0.0;
  }
  d.delta = wrap_angle(d.delta);
  d.eta = wrap_angle(d.eta);
  return d;
}

U3Decomposition decompose_u3(const Matrix& u) {
  check_unitary_2x2(u, "decompose_u3");
  // e^{i delta} U3(theta, a, b) = e^{i delta} [[c, -s e^{ib}], [s e^{ia}, c e^{i(a+b)}]].
  const double c = std::min(1.0, std::abs(u(0, 0)));
  const double s = std::abs(u(1, 0));
  U3Decomposition d;
  d.theta = 2.0 * std::atan2(s, c);
  if (c > kTiny) {
    d.delta = std::arg(u(0, 0));
    if (s > kTiny) {
      d.a = std::arg(u(1, 0)) - d.delta;
      d.b = std::arg(-u(0, 1)) - d.delta;
    } else {
      d.b = std::arg(u(1, 1)) - d.delta;
    }
  } else {
    d.delta = std::arg(u(1, 0));
    d.b = std::arg(-u(0, 1)) - d.delta;
  }
  d.delta = wrap_angle(d.delta);
  d.a = wrap_angle(d.a);
  d.b = wrap_angle(d.b);
  return d;
}

Circuit controlled_unitary_circuit(const Matrix& w, int control, int target, int n_qubits) {
  const U3Decomposition d = decompose_u3(w);
  // W = e^{i delta} A X B X C with A B C = 1:
  //   A = U3(theta/2, a, 0), B = U3(-theta/2, 0, -(a+b)/2), C = T((b-a)/2),
  // and A X B X C = e^{-i(a+b)/2} U3(theta, a, b), so the control carries
  // T(delta + (a+b)/2).
  Circuit c(n_qubits);
  c.append(Gate::t(target, (d.b - d.a) / 2.0));
  c.append(Gate::cnot(control, target));
  c.append(Gate::u3(target, -d.theta / 2.0, 0.0, -(d.a + d.b) / 2.0));
  c.append(Gate::cnot(control, target));
  c.append(Gate::u3(target, d.theta / 2.0, d.a, 0.0));
  c.append(Gate::t(control, d.delta + (d.a + d.b) / 2.0));
  return c;
}

Circuit s_psi_circuit(const TliParams& params, int control, int target, int n_qubits) {
  params.validate();
  Circuit c(n_qubits);
  c.append(u3_gate(target, decompose_symmetric(params.s0)));
  c.append(controlled_unitary_circuit(params.s1 * params.s0.adjoint(), control, target, n_qubits));
  return c;
}

Circuit u2bit_circuit(const TliParams& params) {
  const Gate evolution = u3_gate(0, decompose_symmetric(tli_evolution(params)));
  Circuit c(2);
  c.append(evolution);
  c.append(s_psi_circuit(params, 0, 1, 2));
  c.append(evolution);
  return c;
}

Circuit u3bit_circuit(const TliParams& params, bool swap_particles) {
  const Gate evolution = u3_gate(0, decompose_symmetric(tli_evolution(params)));
  const int first = swap_particles ? 2 : 1;
  const int second = swap_particles ? 1 : 2;
  Circuit c(3);
  c.append(evolution);
  c.append(s_psi_circuit(params, 0, first, 3));
  c.append(evolution);
  c.append(s_psi_circuit(params, 0, second, 3));
  c.append(evolution);
  return c;
}

std::string_view model_name(ExperimentModel model) {
  return model == ExperimentModel::TwoBit ? "2bit" : "3bit";
}

ExperimentModel parse_model(std::string_view name) {
  if (name == "2bit") return ExperimentModel::TwoBit;
  if (name == "3bit") return ExperimentModel::ThreeBit;
  throw std::invalid_argument("unknown experiment model '" + std::string(name) + "' (expected 2bit or 3bit)");
}

int model_qubits(ExperimentModel model) { return model == ExperimentModel::TwoBit ? 2 : 3; }

std::vector<int> physical_map(ExperimentModel model) {
  if (model == ExperimentModel::TwoBit) return {2, 1};
  return {2, 1, 0};
}

Circuit ExperimentCircuits::full() const {
  Circuit c(forward.num_qubits());
  c.append(forward);
  c.append(conjugation);
  c.append(backward);
  return c;
}

ExperimentCircuits build_experiment(ExperimentModel model, const TliParams& params) {
  params.validate();
  ExperimentCircuits e;
  if (model == ExperimentModel::TwoBit) {
    // U_2bit is symmetric, so U_R = 1 and the backward stage is U_2bit itself.
    e.forward = u2bit_circuit(params);
    e.backward = e.forward;
  } else {
    // SWAP_12 U_3bit SWAP_12 = U_3bit^T, so U_R = SWAP_12; the swaps are
    // absorbed by exchanging the particle qubits in the backward stage.
    e.forward = u3bit_circuit(params, false);
    e.backward = u3bit_circuit(params, true);
  }
  e.reached = run_circuit(StateVector(model_qubits(model)), e.forward);
  e.conjugation = synth_boolean(extract_phases(e.reached)).circuit;
  return e;
}

StateVector run_experiment_state(ExperimentModel model, const TliParams& params) {
  ExperimentCircuits e = build_experiment(model, params);
  return run_circuit(run_circuit(e.reached, e.conjugation), e.backward);
}

Histogram run_experiment(ExperimentModel model, const TliParams& params, std::uint64_t shots,
                         const std::optional<NoiseModel>& noise, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("run_experiment: shots must be >= 1");
  if (!noise) return sample(run_experiment_state(model, params), shots, seed);
  NoisyRunOptions options;
  options.mapping = physical_map(model);
  return noisy_run(build_experiment(model, params).full(), *noise, shots, seed, options);
}

}  // namespace tempus
