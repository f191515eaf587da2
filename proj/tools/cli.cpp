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

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "tempus/angle.hpp"
#include "tempus/circuit.hpp"
#include "tempus/noise.hpp"
#include "tempus/qasm.hpp"
#include "tempus/random.hpp"
#include "tempus/reference.hpp"
#include "tempus/reversal.hpp"
#include "tempus/sampling.hpp"
#include "tempus/scattering.hpp"
#include "tempus/synthesis.hpp"
#include "tempus/wavepacket.hpp"

namespace tempus::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CommonOptions {
  std::uint64_t seed = 0;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--seed", common.seed, "Seed of the counter-based RNG")->capture_default_str();
  cmd->add_flag("--force", common.force, "Overwrite existing output files");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content, bool force) {
  if (fs::exists(path) && !force) {
    throw std::runtime_error(path.string() + " exists; pass --force to overwrite");
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  out << content;
  if (!out) throw std::runtime_error("failed to write " + path.string());
}

// Every file a command would write, checked before any is touched.
void check_writable(const std::vector<fs::path>& paths, bool force) {
  if (force) return;
  for (const fs::path& p : paths) {
    if (fs::exists(p)) throw std::runtime_error(p.string() + " exists; pass --force to overwrite");
  }
}

json matrix_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row_re = json::array(), row_im = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row_re.push_back(m(r, c).real());
      row_im.push_back(m(r, c).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  return {{"re", re}, {"im", im}};
}

json state_json(const StateVector& s) {
  json re = json::array(), im = json::array();
  for (const Complex& a : s.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return {{"n_qubits", s.num_qubits()}, {"real", re}, {"imag", im}};
}

/// {"n_qubits"?, "real": [...], "imag"?: [...]}; must be normalized.
StateVector load_state(const fs::path& path) {
  json j = json::parse(read_file(path));
  for (const auto& [key, value] : j.items()) {
    if (key != "n_qubits" && key != "real" && key != "imag") {
      throw std::invalid_argument(path.string() + ": unknown key '" + key + "'");
    }
  }
  auto re = j.at("real").get<std::vector<double>>();
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("imag")) im = j["imag"].get<std::vector<double>>();
  if (im.size() != re.size()) throw std::invalid_argument(path.string() + ": real and imag lengths differ");
  std::vector<Complex> amps(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) amps[i] = Complex(re[i], im[i]);
  StateVector state = StateVector::from_amplitudes(std::move(amps));
  if (j.contains("n_qubits") && j["n_qubits"].get<int>() != state.num_qubits()) {
    throw std::invalid_argument(path.string() + ": n_qubits does not match the amplitude count");
  }
  return state;
}

StateVector random_state(int n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > 10) throw std::invalid_argument("random state: qubit count outside [1, 10]");
  PhiloxStream rng(seed, 0);
  std::normal_distribution<double> normal;
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (Complex& a : amps) a = Complex(normal(rng), normal(rng));
  return StateVector::normalized(std::move(amps));
}

Histogram read_histogram_csv(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::getline(in, line);
  if (line.rfind("state,count", 0) != 0) throw std::runtime_error(path.string() + ": expected a state,count header");
  Histogram h;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string state, count;
    std::getline(fields, state, ',');
    std::getline(fields, count, ',');
    if (h.n_qubits == 0) h.n_qubits = static_cast<int>(state.size());
    const std::uint64_t c = std::stoull(count);
    if (c > 0) h.counts[state] += c;
    h.shots += c;
  }
  return h;
}

std::optional<NoiseModel> resolve_noise(const std::string& name) {
  if (name.empty() || name == "none") return std::nullopt;
  return load_noise_profile(name);
}

// ---------------------------------------------------------------- experiment

struct ExperimentArgs {
  std::string model = "2bit";
  std::string omega_tau = "pi/6";
  std::string alpha = "pi/6";
  std::string params_file;
  std::uint64_t shots = 8192;
  std::string noise;
  unsigned threads = 1;
  std::string out;
};

int cmd_experiment(const ExperimentArgs& a, const CommonOptions& common, std::ostream& out) {
  const ExperimentModel model = parse_model(a.model);
  TliParams params(parse_angle(a.omega_tau), parse_angle(a.alpha));
  if (!a.params_file.empty()) params = TliParams::from_json(read_file(a.params_file));
  params.validate();
  if (a.shots < 1) throw std::invalid_argument("--shots must be >= 1");

  const std::optional<NoiseModel> noise = resolve_noise(a.noise);
  const ExperimentCircuits circuits = build_experiment(model, params);
  const Circuit full = circuits.full();
  const StateVector final_state = run_circuit(run_circuit(circuits.reached, circuits.conjugation), circuits.backward);
  const double state_fidelity = std::norm(final_state[0]);

  Histogram hist;
  if (noise) {
    NoisyRunOptions options;
    options.mapping = physical_map(model);
    options.threads = a.threads;
    hist = noisy_run(full, *noise, a.shots, common.seed, options);
  } else {
    hist = sample(final_state, a.shots, common.seed);
  }
  const std::string zeros(static_cast<std::size_t>(model_qubits(model)), '0');
  const FidelityLayout layout = layout_from_circuit(full, physical_map(model));

  json summary{{"model", model_name(model)},
               {"omega_tau", params.omega_tau},
               {"alpha", params.alpha},
               {"shots", a.shots},
               {"seed", common.seed},
               {"noise", noise ? noise->name : "none"},
               {"fidelity", hist.probability(zeros)},
               {"state_fidelity", state_fidelity},
               {"formula_fidelity", noise ? fidelity_formula(layout, *noise) : 1.0},
               {"n_cnot", layout.cnots.size()},
               {"n_cnot_conjugation", circuits.conjugation.count(GateKind::CNOT)}};
  try {
    const ReferenceTable table = load_reference_table(model == ExperimentModel::TwoBit ? "table1" : "table2");
    const ReferenceRow& row = table.find(params.omega_tau, params.alpha);
    summary["tv_vs_reference"] = compare_reference(hist, row).tv_distance;
    summary["reference_fidelity"] = row.fidelity();
  } catch (const std::out_of_range&) {
    summary["tv_vs_reference"] = nullptr;
  }

  const std::string text = summary.dump(2) + "\n";
  if (!a.out.empty()) {
    const fs::path dir(a.out);
    check_writable({dir / "histogram.csv", dir / "summary.json", dir / "circuit.qasm"}, common.force);
    write_file(dir / "histogram.csv", hist.to_csv(), common.force);
    write_file(dir / "summary.json", text, common.force);
    write_file(dir / "circuit.qasm", to_qasm(full), common.force);
  }
  out << text;
  return state_fidelity >= 1.0 - 1e-9 ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------------- synth

struct SynthArgs {
  std::string state_file;
  int random_qubits = 0;
  std::string scheme = "boolean";
  std::string out_qasm;
  std::string report;
};

CostModel cost_model_for(Scheme scheme) {
  switch (scheme) {
    case Scheme::DenseNaive: return CostModel::DenseNaive;
    case Scheme::DenseAncilla: return CostModel::DenseNested;
    default: return CostModel::Boolean;
  }
}

int cmd_synth(const SynthArgs& a, const CommonOptions& common, std::ostream& out) {
  if (a.state_file.empty() == (a.random_qubits == 0)) {
    throw std::invalid_argument("synth: give exactly one of --state or --random-qubits");
  }
  const StateVector state = a.state_file.empty() ? random_state(a.random_qubits, common.seed) : load_state(a.state_file);
  const Scheme scheme = parse_scheme(a.scheme);
  const SynthesisReport report = synthesize(extract_phases(state), scheme);
  const double fid = conjugation_fidelity(state, report);

  json summary = json::parse(report.to_json());
  summary["n_state_qubits"] = state.num_qubits();
  summary["conjugation_fidelity"] = fid;
  if (scheme == Scheme::Sparse) {
    summary["cost_formula"] = 0;
    summary["encoding"] = report.encoding;
  } else {
    summary["cost_formula"] = cnot_cost(cost_model_for(scheme), state.num_qubits());
  }
  const std::string text = summary.dump(2) + "\n";
  check_writable({a.out_qasm, a.report}, common.force);
  if (!a.out_qasm.empty()) write_file(a.out_qasm, to_qasm(report.circuit), common.force);
  if (!a.report.empty()) write_file(a.report, text, common.force);
  out << text;
  return fid >= 1.0 - 1e-9 ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------- reverse

struct ReverseArgs {
  std::string hamiltonian;
  std::string state_file;
  std::string tau = "1";
  std::string out;
};

int cmd_reverse(const ReverseArgs& a, const CommonOptions& common, std::ostream& out) {
  const Hamiltonian h = Hamiltonian::from_json(read_file(a.hamiltonian));
  const StateVector psi0 = a.state_file.empty() ? random_state(h.num_qubits(), common.seed) : load_state(a.state_file);
  if (psi0.num_qubits() != h.num_qubits()) throw std::invalid_argument("reverse: state and Hamiltonian sizes differ");
  const double tau = parse_angle(a.tau);
  const Matrix u = matrix_exponential(h, tau);
  const StateVector psi_tau = StateVector::normalized(
      [&] {
        Eigen::VectorXcd v = u * psi0.to_eigen();
        return std::vector<Complex>(v.data(), v.data() + v.size());
      }());
  const ReversalPlan plan = compute_reversal(h);
  const StateVector recovered = reverse_protocol(u, plan, psi_tau);
  const double fid = fidelity(recovered, psi0);
  const double residual = plan.residual(h);

  std::vector<double> energies(plan.energies.data(), plan.energies.data() + plan.energies.size());
  json summary{{"n_qubits", h.num_qubits()},
               {"tau", tau},
               {"seed", common.seed},
               {"fidelity", fid},
               {"residual", residual},
               {"unitarity_defect", unitarity_defect(plan.u_r)},
               {"energies", energies},
               {"u_r", matrix_json(plan.u_r)},
               {"psi_tau", state_json(psi_tau)},
               {"recovered", state_json(recovered)}};
  const std::string text = summary.dump(2) + "\n";
  if (!a.out.empty()) write_file(a.out, text, common.force);
  out << text;
  return (fid >= 1.0 - 1e-9 && residual < 1e-8) ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- wavepacket

struct WavepacketArgs {
  double sigma = 1.0;
  double tau = 3.0;
  std::size_t cells = 0;
  double epsilon = 0.0;
  bool scan = false;
  std::size_t scan_max = 64;
  double target = 0.86;
  std::size_t stride = 8;
  std::string out;
};

int cmd_wavepacket(const WavepacketArgs& a, const CommonOptions& common, std::ostream& out) {
  const int modes = (a.cells > 0) + (a.epsilon > 0.0) + (a.scan ? 1 : 0);
  if (modes != 1) throw std::invalid_argument("wavepacket: give exactly one of --cells, --epsilon, --scan");
  if (!(a.sigma > 0.0) || !(a.tau >= 0.0)) throw std::invalid_argument("wavepacket: need sigma > 0, tau >= 0");

  const Grid grid = default_grid(a.sigma, a.tau);
  const GridWavefunction spread = evolve_gaussian(a.sigma, a.tau, grid);
  const double lambda = lambda_functional(spread);
  json summary{{"sigma", a.sigma}, {"tau", a.tau}, {"lambda", lambda}, {"seed", common.seed}};

  std::size_t cells = a.cells;
  if (a.epsilon > 0.0) {
    cells = optimal_partition(spread, a.epsilon).cells();
    summary["epsilon"] = a.epsilon;
    summary["closed_form_cells"] = cell_count(a.epsilon, lambda, 1);
  }
  if (a.scan) {
    if (a.scan_max < 1) throw std::invalid_argument("--scan-max must be >= 1");
    json scan = json::array();
    double best_gap = INFINITY;
    for (std::size_t n = 1; n <= a.scan_max; ++n) {
      const WavepacketReversal r = run_wavepacket_reversal(a.sigma, a.tau, n);
      scan.push_back({{"N", n}, {"overlap", r.overlap}});
      if (std::abs(r.overlap - a.target) < best_gap) {
        best_gap = std::abs(r.overlap - a.target);
        cells = n;
      }
    }
    summary["scan"] = scan;
    summary["target"] = a.target;
  }

  const WavepacketReversal run = run_wavepacket_reversal(a.sigma, a.tau, cells);
  summary["N"] = run.cells;
  summary["overlap"] = run.overlap;
  summary["overlap_fft"] = run.overlap_fft;
  summary["overlap_estimate"] = run.estimate;
  summary["max_g"] = run.max_g;
  const std::string text = summary.dump(2) + "\n";

  if (!a.out.empty()) {
    const fs::path dir(a.out);
    const std::vector<std::pair<const char*, const GridWavefunction*>> stages{
        {"stage_initial.csv", &run.initial},
        {"stage_spread.csv", &run.spread},
        {"stage_conjugated.csv", &run.conjugated},
        {"stage_refocused.csv", &run.refocused}};
    std::vector<fs::path> paths{dir / "summary.json"};
    for (const auto& [name, psi] : stages) paths.push_back(dir / name);
    check_writable(paths, common.force);
    for (const auto& [name, psi] : stages) write_file(dir / name, psi->to_csv(a.stride), common.force);
    write_file(dir / "summary.json", text, common.force);
  }
  out << text;
  const bool consistent = std::abs(run.overlap - run.overlap_fft) < 1e-6;
  return consistent ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------ estimate

struct EstimateArgs {
  double t_universe = 4.3e17;
  double temperature = 2.72;
  double epsilon = kSpontaneousEpsilon;
  std::string out;
};

int cmd_estimate(const EstimateArgs& a, const CommonOptions& common, std::ostream& out) {
  const double tau = spontaneous_reversal_time(a.t_universe, a.temperature, a.epsilon);
  const double cells = kBoltzmann * a.temperature * tau / kHbar / std::sqrt(a.epsilon);
  const double ratio = tau / a.t_universe;
  const double residual = std::abs(std::exp2(-cells) - ratio) / ratio;
  json summary{{"t_universe", a.t_universe}, {"temperature", a.temperature}, {"epsilon", a.epsilon},
               {"k_B", kBoltzmann},          {"hbar", kHbar},               {"tau", tau},
               {"N", cells},                 {"residual", residual}};
  const std::string text = summary.dump(2) + "\n";
  if (!a.out.empty()) write_file(a.out, text, common.force);
  out << text;
  return residual < 1e-6 ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------- compare

struct CompareArgs {
  std::string table = "table1";
  std::string omega_tau = "pi/6";
  std::string alpha = "pi/6";
  std::string histogram;
  std::string noise;
  std::uint64_t shots = 8192;
  std::string out;
};

int cmd_compare(const CompareArgs& a, const CommonOptions& common, std::ostream& out) {
  const ReferenceTable table = load_reference_table(a.table);
  const double omega_tau = parse_angle(a.omega_tau), alpha = parse_angle(a.alpha);
  const ReferenceRow& row = table.find(omega_tau, alpha);
  Histogram hist;
  if (!a.histogram.empty()) {
    hist = read_histogram_csv(a.histogram);
  } else {
    const ExperimentModel model = table.n_qubits == 2 ? ExperimentModel::TwoBit : ExperimentModel::ThreeBit;
    hist = run_experiment(model, TliParams(omega_tau, alpha), a.shots, resolve_noise(a.noise), common.seed);
  }
  const ComparisonReport report = compare_reference(hist, row);
  json summary = json::parse(report.to_json());
  summary["reference_fidelity"] = row.fidelity();
  summary["reference_fidelity_error"] = row.fidelity_error();
  summary["simulated_fidelity"] = hist.probability(std::string(static_cast<std::size_t>(table.n_qubits), '0'));
  summary["omega_tau"] = row.omega_tau;
  summary["alpha"] = row.alpha;
  const std::string text = summary.dump(2) + "\n";
  if (!a.out.empty()) write_file(a.out, text, common.force);
  out << text;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tempus: time-reversal circuits, scattering experiment and wave-packet lab"};
  app.require_subcommand(1);

  CommonOptions common;
  ExperimentArgs exp;
  auto* experiment = app.add_subcommand("experiment", "Run the impurity-scattering reversal experiment");
  experiment->add_option("--model", exp.model, "2bit or 3bit")->capture_default_str();
  experiment->add_option("--omega-tau", exp.omega_tau, "omega*tau in radians (pi/6 accepted)")->capture_default_str();
  experiment->add_option("--alpha", exp.alpha, "Mixing angle in radians")->capture_default_str();
  experiment->add_option("--params", exp.params_file, "TliParams JSON (overrides the angles)");
  experiment->add_option("--shots", exp.shots, "Number of measurement shots")->capture_default_str();
  experiment->add_option("--noise", exp.noise, "Noise profile name or JSON file (none by default)");
  experiment->add_option("--threads", exp.threads, "Worker threads for noisy sampling")->capture_default_str();
  experiment->add_option("--out", exp.out, "Output directory");
  add_common(experiment, common);

  SynthArgs syn;
  auto* synth = app.add_subcommand("synth", "Synthesize the conjugation circuit of a state");
  synth->add_option("--state", syn.state_file, "State JSON {real, imag}");
  synth->add_option("--random-qubits", syn.random_qubits, "Use a seeded random state instead");
  synth->add_option("--scheme", syn.scheme, "sparse, dense_naive, dense_ancilla or boolean")->capture_default_str();
  synth->add_option("--qasm", syn.out_qasm, "QASM output file");
  synth->add_option("--report", syn.report, "Report JSON output file");
  add_common(synth, common);

  ReverseArgs rev;
  auto* reverse = app.add_subcommand("reverse", "Reverse the evolution of a state under a Hamiltonian");
  reverse->add_option("--hamiltonian", rev.hamiltonian, "Hamiltonian JSON {n_qubits, real, imag}")->required();
  reverse->add_option("--state", rev.state_file, "Initial state JSON (seeded random state if omitted)");
  reverse->add_option("--tau", rev.tau, "Evolution time")->capture_default_str();
  reverse->add_option("--out", rev.out, "Summary JSON output file");
  add_common(reverse, common);

  WavepacketArgs wp;
  auto* wavepacket = app.add_subcommand("wavepacket", "Stepwise phase conjugation of a spread Gaussian");
  wavepacket->add_option("--sigma", wp.sigma, "Initial packet width")->capture_default_str();
  wavepacket->add_option("--tau", wp.tau, "Free evolution time (hbar = m = 1)")->capture_default_str();
  wavepacket->add_option("--cells", wp.cells, "Number of cells");
  wavepacket->add_option("--epsilon", wp.epsilon, "Target conjugation error (sets the cell count)");
  wavepacket->add_flag("--scan", wp.scan, "Scan N = 1..scan-max for the overlap closest to --target");
  wavepacket->add_option("--scan-max", wp.scan_max, "Largest cell count tried by --scan")->capture_default_str();
  wavepacket->add_option("--target", wp.target, "Overlap sought by --scan")->capture_default_str();
  wavepacket->add_option("--stride", wp.stride, "Grid stride of the profile CSVs")->capture_default_str();
  wavepacket->add_option("--out", wp.out, "Output directory");
  add_common(wavepacket, common);

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Spontaneous reversal time estimate");
  estimate->add_option("--t-universe", est.t_universe, "Seconds")->capture_default_str();
  estimate->add_option("--temperature", est.temperature, "Kelvin")->capture_default_str();
  estimate->add_option("--epsilon", est.epsilon, "Tolerated conjugation error per step")->capture_default_str();
  estimate->add_option("--out", est.out, "Summary JSON output file");
  add_common(estimate, common);

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare", "Compare a histogram with the hardware reference tables");
  compare->add_option("--table", cmp.table, "table1, table2 or a CSV path")->capture_default_str();
  compare->add_option("--omega-tau", cmp.omega_tau, "omega*tau of the reference row")->capture_default_str();
  compare->add_option("--alpha", cmp.alpha, "Mixing angle of the reference row")->capture_default_str();
  compare->add_option("--histogram", cmp.histogram, "Histogram CSV (simulates when omitted)");
  compare->add_option("--noise", cmp.noise, "Noise profile for the simulation");
  compare->add_option("--shots", cmp.shots, "Shots when simulating")->capture_default_str();
  compare->add_option("--out", cmp.out, "Report JSON output file");
  add_common(compare, common);

  std::vector<std::string> storage{"tempus"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*experiment) return cmd_experiment(exp, common, out);
    if (*synth) return cmd_synth(syn, common, out);
    if (*reverse) return cmd_reverse(rev, common, out);
    if (*wavepacket) return cmd_wavepacket(wp, common, out);
    if (*estimate) return cmd_estimate(est, common, out);
    if (*compare) return cmd_compare(cmp, common, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace tempus::cli
