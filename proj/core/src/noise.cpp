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

#include "tempus/noise.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "tempus/random.hpp"
#include "tempus/reference.hpp"

namespace tempus {

namespace {

using nlohmann::json;

void check_rate(double rate, const std::string& what) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw std::invalid_argument("NoiseModel: " + what + " rate " + std::to_string(rate) +
                                " outside [0, 1]");
  }
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
      throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
  }
}

std::vector<int> resolve_mapping(std::span<const int> mapping, int n_qubits) {
  if (mapping.empty()) {
    std::vector<int> identity(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) identity[static_cast<std::size_t>(q)] = q;
    return identity;
  }
  if (static_cast<int>(mapping.size()) != n_qubits) {
    throw std::invalid_argument("qubit mapping must have one entry per logical qubit");
  }
  return {mapping.begin(), mapping.end()};
}

void apply_pauli(StateVector& state, int qubit, std::uint32_t pauli) {
  // 0 = I, 1 = X, 2 = Y (as XZ up to phase), 3 = Z.
  if (pauli == 2 || pauli == 3) apply_gate_inplace(state, Gate::t(qubit, std::numbers::pi));
  if (pauli == 1 || pauli == 2) apply_gate_inplace(state, Gate::x(qubit));
}

}  // namespace

double NoiseModel::cnot_error(int control, int target) const {
  if (auto it = cnot_errors.find({control, target}); it != cnot_errors.end()) return it->second;
  if (auto it = cnot_errors.find({target, control}); it != cnot_errors.end()) return it->second;
  throw std::out_of_range("NoiseModel '" + name + "': no CNOT error for qubits (" + std::to_string(control) +
                          ", " + std::to_string(target) + ")");
}

double NoiseModel::readout_error(int qubit) const {
  auto it = readout_errors.find(qubit);
  if (it == readout_errors.end()) {
    throw std::out_of_range("NoiseModel '" + name + "': no readout error for qubit " + std::to_string(qubit));
  }
  return it->second;
}

void NoiseModel::validate() const {
  for (const auto& [pair, rate] : cnot_errors) {
    if (pair.first == pair.second || pair.first < 0 || pair.second < 0) {
      throw std::invalid_argument("NoiseModel: invalid CNOT pair");
    }
    check_rate(rate, "CNOT");
  }
  for (const auto& [q, rate] : readout_errors) check_rate(rate, "readout");
  for (const auto& [q, rate] : single_qubit_errors) check_rate(rate, "single-qubit");
  for (const auto* times : {&t1_us, &t2_us}) {
    for (const auto& [q, t] : *times) {
      if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("NoiseModel: coherence times must be positive");
    }
  }
}

NoiseModel NoiseModel::uniform(int n_qubits, double cnot_error, double readout_error) {
  NoiseModel model;
  model.name = "uniform";
  for (int a = 0; a < n_qubits; ++a) {
    model.readout_errors[a] = readout_error;
    for (int b = 0; b < n_qubits; ++b) {
      if (a != b) model.cnot_errors[{a, b}] = cnot_error;
    }
  }
  model.validate();
  return model;
}

NoiseModel NoiseModel::from_json(const std::string& text) {
  json j = json::parse(text);
  reject_unknown(j, {"name", "cnot_errors", "qubits"}, "noise profile");
  NoiseModel model;
  model.name = j.value("name", std::string("custom"));
  for (const json& entry : j.value("cnot_errors", json::array())) {
    reject_unknown(entry, {"control", "target", "rate"}, "noise profile cnot_errors");
    model.cnot_errors[{entry.at("control").get<int>(), entry.at("target").get<int>()}] =
        entry.at("rate").get<double>();
  }
  for (const json& entry : j.value("qubits", json::array())) {
    reject_unknown(entry, {"qubit", "eps_r", "eps_1", "t1_us", "t2_us"}, "noise profile qubits");
    int q = entry.at("qubit").get<int>();
    if (entry.contains("eps_r")) model.readout_errors[q] = entry["eps_r"].get<double>();
    if (entry.contains("eps_1")) model.single_qubit_errors[q] = entry["eps_1"].get<double>();
    if (entry.contains("t1_us")) model.t1_us[q] = entry["t1_us"].get<double>();
    if (entry.contains("t2_us")) model.t2_us[q] = entry["t2_us"].get<double>();
  }
  model.validate();
  return model;
}

std::string NoiseModel::to_json() const {
  json j;
  j["name"] = name;
  j["cnot_errors"] = json::array();
  for (const auto& [pair, rate] : cnot_errors) {
    j["cnot_errors"].push_back({{"control", pair.first}, {"target", pair.second}, {"rate", rate}});
  }
  std::map<int, json> qubits;
  auto put = [&](const std::map<int, double>& source, const char* key) {
    for (const auto& [q, v] : source) {
      qubits[q]["qubit"] = q;
      qubits[q][key] = v;
    }
  };
  put(readout_errors, "eps_r");
  put(single_qubit_errors, "eps_1");
  put(t1_us, "t1_us");
  put(t2_us, "t2_us");
  j["qubits"] = json::array();
  for (auto& [q, entry] : qubits) j["qubits"].push_back(entry);
  return j.dump(2);
}

NoiseModel appendix_f_profile() {
  NoiseModel m;
  m.name = "appendixF";
  m.cnot_errors = {{{2, 1}, 0.0268}, {{2, 0}, 0.0191}, {{1, 0}, 0.0170}};
  m.t1_us = {{0, 52.4}, {1, 58.0}, {2, 46.9}};
  m.t2_us = {{0, 47.3}, {1, 40.6}, {2, 47.4}};
  m.readout_errors = {{0, 0.042}, {1, 0.036}, {2, 0.028}};
  m.single_qubit_errors = {{0, 0.00077}, {1, 0.00103}, {2, 0.00137}};
  return m;
}

NoiseModel maintext_profile() {
  NoiseModel m;
  m.name = "maintext";
  m.cnot_errors = {{{2, 1}, 0.02786}, {{2, 0}, 0.02460}, {{1, 0}, 0.01683}};
  m.t2_us = {{0, 39.4}, {1, 41.0}, {2, 43.5}};
  m.readout_errors = {{0, 0.048}, {1, 0.033}, {2, 0.029}};
  return m;
}

NoiseModel load_noise_profile(const std::string& name_or_path) {
  std::filesystem::path path(name_or_path);
  if (!std::filesystem::is_regular_file(path)) path = data_dir() / (name_or_path + ".json");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open noise profile '" + name_or_path + "' (" + path.string() + ")");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return NoiseModel::from_json(buffer.str());
}

FidelityLayout layout_from_circuit(const Circuit& circuit, std::span<const int> mapping) {
  std::vector<int> map = resolve_mapping(mapping, circuit.num_qubits());
  FidelityLayout layout;
  for (const Gate& g : lower_to_cnot(circuit).gates()) {
    if (g.kind() == GateKind::CNOT) layout.cnots.emplace_back(map[static_cast<std::size_t>(g.qubit(0))],
                                                             map[static_cast<std::size_t>(g.qubit(1))]);
  }
  layout.measured = map;
  return layout;
}

double fidelity_formula(const FidelityLayout& layout, const NoiseModel& noise) {
  double f = 1.0;
  for (const auto& [c, t] : layout.cnots) f *= 1.0 - noise.cnot_error(c, t);
  for (int q : layout.measured) f *= 1.0 - noise.readout_error(q);
  return f;
}

Histogram noisy_run(const Circuit& circuit, const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                    const NoisyRunOptions& options) {
  if (shots < 1) throw std::invalid_argument("noisy_run: shots must be >= 1");
  noise.validate();
  const int n = circuit.num_qubits();
  const std::vector<int> map = resolve_mapping(options.mapping, n);
  const Circuit lowered = lower_to_cnot(circuit);

  // Failure probability per gate (0 for single-qubit gates) and per readout.
  std::vector<double> gate_error(lowered.size(), 0.0);
  for (std::size_t i = 0; i < lowered.size(); ++i) {
    const Gate& g = lowered.gates()[i];
    if (g.kind() == GateKind::CNOT) {
      gate_error[i] = noise.cnot_error(map[static_cast<std::size_t>(g.qubit(0))],
                                       map[static_cast<std::size_t>(g.qubit(1))]);
    }
  }
  std::vector<double> flip(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) flip[static_cast<std::size_t>(q)] = noise.readout_error(map[static_cast<std::size_t>(q)]);

  auto run_shots = [&](std::uint64_t begin, std::uint64_t end, Histogram& hist) {
    std::vector<double> cumulative;
    for (std::uint64_t shot = begin; shot < end; ++shot) {
      PhiloxStream rng(seed, shot);
      StateVector state(n);
      for (std::size_t i = 0; i < lowered.size(); ++i) {
        const Gate& g = lowered.gates()[i];
        apply_gate_inplace(state, g);
        if (gate_error[i] > 0.0 && rng.uniform() < gate_error[i]) {
          std::uint32_t pauli = rng.below(16);
          apply_pauli(state, g.qubit(0), pauli >> 2);
          apply_pauli(state, g.qubit(1), pauli & 3u);
        }
      }
      cumulative.resize(state.dimension());
      double total = 0.0;
      for (std::size_t k = 0; k < state.dimension(); ++k) {
        total += std::norm(state[k]);
        cumulative[k] = total;
      }
      std::uint64_t outcome = draw_from_cdf(cumulative, rng.uniform());
      for (int q = 0; q < n; ++q) {
        if (rng.uniform() < flip[static_cast<std::size_t>(q)]) outcome ^= std::uint64_t{1} << (n - 1 - q);
      }
      hist.record(outcome);
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(shots, 256))));
  std::vector<Histogram> partial(threads, Histogram{n, 0, {}});
  if (threads == 1) {
    run_shots(0, shots, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t begin = shots * t / threads, end = shots * (t + 1) / threads;
      workers.emplace_back(run_shots, begin, end, std::ref(partial[t]));
    }
    for (std::thread& w : workers) w.join();
  }
  Histogram merged{n, 0, {}};
  for (const Histogram& h : partial) {
    merged.shots += h.shots;
    for (const auto& [label, count] : h.counts) merged.counts[label] += count;
  }
  return merged;
}

}  // namespace tempus
