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

#ifndef TEMPUS_NOISE_HPP
#define TEMPUS_NOISE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tempus/circuit.hpp"
#include "tempus/sampling.hpp"

namespace tempus {

/// Error rates of a device, keyed by physical qubit. CNOT errors belong to a
/// qubit pair; a lookup for (c, t) falls back to (t, c) so calibration data
/// quoted per coupler applies to both directions.
struct NoiseModel {
  std::string name;
  std::map<std::pair<int, int>, double> cnot_errors;
  std::map<int, double> readout_errors;
  std::map<int, double> single_qubit_errors;  // stored, not simulated
  std::map<int, double> t1_us;                // stored, not simulated
  std::map<int, double> t2_us;                // stored, not simulated

  /// Throws std::out_of_range when the pair has no rate.
  double cnot_error(int control, int target) const;
  /// Throws std::out_of_range when the qubit has no rate.
  double readout_error(int qubit) const;

  /// Throws unless every rate lies in [0, 1] and every time is positive.
  void validate() const;

  /// Same rates on every ordered pair and qubit of an n-qubit register.
  static NoiseModel uniform(int n_qubits, double cnot_error, double readout_error);

  /// {"name", "cnot_errors": [{"control","target","rate"}], "qubits":
  /// [{"qubit","eps_r","eps_1","t1_us","t2_us"}]}. Unknown keys are rejected.
  static NoiseModel from_json(const std::string& text);
  std::string to_json() const;
};

/// Calibrated device rates with the higher CNOT error set (profile "appendixF").
NoiseModel appendix_f_profile();
/// Lower CNOT and readout error set (profile "maintext").
NoiseModel maintext_profile();

/// Loads a profile by name (`appendixF`, `maintext`) from `<data>/<name>.json`,
/// or from a path if `name_or_path` names an existing file.
NoiseModel load_noise_profile(const std::string& name_or_path);

/// Physical CNOT placements and measured qubits of a run.
struct FidelityLayout {
  std::vector<std::pair<int, int>> cnots;
  std::vector<int> measured;
};

/// Layout of `circuit` after lowering Toffoli/SWAP to CNOTs; logical qubit q
/// sits on physical qubit mapping[q], and every qubit is measured. An empty
/// mapping means the identity.
FidelityLayout layout_from_circuit(const Circuit& circuit, std::span<const int> mapping = {});

/// prod (1 - eps_g) over CNOTs times prod (1 - eps_r) over measured qubits.
double fidelity_formula(const FidelityLayout& layout, const NoiseModel& noise);

struct NoisyRunOptions {
  std::vector<int> mapping;  // logical -> physical; empty = identity
  unsigned threads = 1;
};

/// Shot-by-shot simulation from |0...0>. After every CNOT of the lowered
/// circuit a failure with probability eps_g applies a uniformly drawn
/// two-qubit Pauli (identity included) to the pair; each measured bit flips
/// with probability eps_r. Shot k uses PhiloxStream(seed, k), so the result
/// does not depend on `threads`.
Histogram noisy_run(const Circuit& circuit, const NoiseModel& noise, std::uint64_t shots,
                    std::uint64_t seed, const NoisyRunOptions& options = {});

}  // namespace tempus

#endif  // TEMPUS_NOISE_HPP
