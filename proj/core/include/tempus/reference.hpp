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

#ifndef TEMPUS_REFERENCE_HPP
#define TEMPUS_REFERENCE_HPP

// Hardware counts shipped under data/. They document the gap between the
// noise model and a real device and are never treated as pass/fail targets.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tempus/noise.hpp"
#include "tempus/sampling.hpp"

namespace tempus {

/// $TEMPUS_DATA_DIR if set, else the source-tree data directory, else the
/// installed share/tempus directory.
std::filesystem::path data_dir();

struct ReferenceRow {
  double omega_tau = 0.0;
  double alpha = 0.0;
  std::map<std::string, std::uint64_t> counts;

  std::uint64_t shots() const;
  /// Rate of the all-zeros outcome.
  double fidelity() const;
  /// Binomial standard error of fidelity().
  double fidelity_error() const;
  Histogram histogram() const;
};

struct ReferenceTable {
  int n_qubits = 0;
  std::vector<ReferenceRow> rows;

  /// Row whose angles match within `tolerance`; throws std::out_of_range.
  const ReferenceRow& find(double omega_tau, double alpha, double tolerance = 1e-3) const;
};

/// Reads `omega_tau,alpha,state,count` CSV. Every row must list the same
/// set of n-bit states.
ReferenceTable load_reference_csv(const std::filesystem::path& path);

/// `table1` (2 qubits) or `table2` (3 qubits) from data_dir(), or a path.
ReferenceTable load_reference_table(const std::string& name_or_path);

/// Reads `qubit,t1_us,t2_us,eps_r,eps_1` CSV into the per-qubit fields of a
/// NoiseModel (no CNOT rates).
NoiseModel load_calibration(const std::filesystem::path& path);

struct ComparisonReport {
  double tv_distance = 0.0;
  /// simulated minus reference probability, per state.
  std::map<std::string, double> deltas;

  std::string to_json() const;
};

/// Throws std::invalid_argument when the two state sets differ.
ComparisonReport compare_reference(const Histogram& hist, const ReferenceRow& row);

}  // namespace tempus

#endif  // TEMPUS_REFERENCE_HPP
