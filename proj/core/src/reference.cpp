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

#include "tempus/reference.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tempus/angle.hpp"

namespace tempus {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    fields.push_back(field);
  }
  return fields;
}

// Returns the data lines after checking the header.
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path, const std::string& header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || split_csv_line(line) != split_csv_line(header)) {
    throw std::runtime_error(path.string() + ": expected header '" + header + "'");
  }
  std::vector<std::vector<std::string>> rows;
  const std::size_t width = split_csv_line(header).size();
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != width) {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected " +
                               std::to_string(width) + " fields");
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

double to_double(const std::string& text) {
  std::size_t used = 0;
  double value = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("malformed number '" + text + "'");
  return value;
}

}  // namespace

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TEMPUS_DATA_DIR"); env != nullptr && *env != '\0') return env;
  std::filesystem::path source(TEMPUS_DATA_DIR_DEFAULT);
  if (std::filesystem::is_directory(source)) return source;
  return TEMPUS_DATA_DIR_INSTALLED;
}

std::uint64_t ReferenceRow::shots() const {
  std::uint64_t total = 0;
  for (const auto& [label, count] : counts) total += count;
  return total;
}

double ReferenceRow::fidelity() const {
  if (counts.empty()) return 0.0;
  const std::string zeros(counts.begin()->first.size(), '0');
  auto it = counts.find(zeros);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(shots());
}

double ReferenceRow::fidelity_error() const {
  const double f = fidelity();
  return std::sqrt(f * (1.0 - f) / static_cast<double>(shots()));
}

Histogram ReferenceRow::histogram() const {
  Histogram h;
  h.n_qubits = counts.empty() ? 0 : static_cast<int>(counts.begin()->first.size());
  h.shots = shots();
  h.counts = counts;
  return h;
}

const ReferenceRow& ReferenceTable::find(double omega_tau, double alpha, double tolerance) const {
  for (const ReferenceRow& row : rows) {
    if (std::abs(row.omega_tau - omega_tau) <= tolerance && std::abs(row.alpha - alpha) <= tolerance) return row;
  }
  throw std::out_of_range("no reference row for omega_tau=" + std::to_string(omega_tau) +
                          ", alpha=" + std::to_string(alpha));
}

ReferenceTable load_reference_csv(const std::filesystem::path& path) {
  ReferenceTable table;
  for (const auto& fields : read_csv(path, "omega_tau,alpha,state,count")) {
    const double omega_tau = parse_angle(fields[0]);
    const double alpha = parse_angle(fields[1]);
    const std::string& state = fields[2];
    if (state.empty() || state.find_first_not_of("01") != std::string::npos) {
      throw std::runtime_error(path.string() + ": bad state label '" + state + "'");
    }
    if (table.n_qubits == 0) table.n_qubits = static_cast<int>(state.size());
    if (static_cast<int>(state.size()) != table.n_qubits) {
      throw std::runtime_error(path.string() + ": inconsistent state width");
    }
    if (table.rows.empty() || table.rows.back().omega_tau != omega_tau || table.rows.back().alpha != alpha) {
      table.rows.push_back({omega_tau, alpha, {}});
    }
    auto [it, inserted] = table.rows.back().counts.emplace(state, std::stoull(fields[3]));
    if (!inserted) throw std::runtime_error(path.string() + ": duplicate state '" + state + "'");
  }
  const std::size_t expected = std::size_t{1} << table.n_qubits;
  for (const ReferenceRow& row : table.rows) {
    if (row.counts.size() != expected) throw std::runtime_error(path.string() + ": every row needs all basis states");
  }
  return table;
}

ReferenceTable load_reference_table(const std::string& name_or_path) {
  if (name_or_path == "table1") return load_reference_csv(data_dir() / "table1_2qubit.csv");
  if (name_or_path == "table2") return load_reference_csv(data_dir() / "table2_3qubit.csv");
  return load_reference_csv(name_or_path);
}

NoiseModel load_calibration(const std::filesystem::path& path) {
  NoiseModel model;
  model.name = path.stem().string();
  for (const auto& fields : read_csv(path, "qubit,t1_us,t2_us,eps_r,eps_1")) {
    const int q = std::stoi(fields[0]);
    model.t1_us[q] = to_double(fields[1]);
    model.t2_us[q] = to_double(fields[2]);
    model.readout_errors[q] = to_double(fields[3]);
    model.single_qubit_errors[q] = to_double(fields[4]);
  }
  model.validate();
  return model;
}

std::string ComparisonReport::to_json() const {
  nlohmann::json j{{"tv_distance", tv_distance}, {"deltas", deltas}};
  return j.dump(2);
}

ComparisonReport compare_reference(const Histogram& hist, const ReferenceRow& row) {
  const std::size_t dim = std::size_t{1} << hist.n_qubits;
  std::set<std::string> ref_states;
  for (const auto& [label, count] : row.counts) ref_states.insert(label);
  if (ref_states.size() != dim) throw std::invalid_argument("compare_reference: state sets differ");
  for (const std::string& label : ref_states) {
    if (static_cast<int>(label.size()) != hist.n_qubits) throw std::invalid_argument("compare_reference: state sets differ");
  }
  for (const auto& [label, count] : hist.counts) {
    if (!ref_states.count(label)) throw std::invalid_argument("compare_reference: state sets differ");
  }
  ComparisonReport report;
  const double ref_shots = static_cast<double>(row.shots());
  double total = 0.0;
  for (const std::string& label : ref_states) {
    double delta = hist.probability(label) - static_cast<double>(row.counts.at(label)) / ref_shots;
    report.deltas[label] = delta;
    total += std::abs(delta);
  }
  report.tv_distance = total / 2.0;
  return report;
}

}  // namespace tempus
