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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace tempus::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tempus_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

TEST_F(CliTest, ExperimentWritesArtifactsAndRespectsForce) {
  const std::vector<std::string> args{"experiment", "--model", "2bit", "--alpha", "pi/4", "--out", path("run")};
  Result first = invoke(args);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  for (const char* name : {"histogram.csv", "summary.json", "circuit.qasm"}) EXPECT_TRUE(fs::exists(dir_ / "run" / name));
  json summary = json::parse(first.out);
  EXPECT_EQ(summary.at("fidelity"), 1.0);
  EXPECT_EQ(summary.at("formula_fidelity"), 1.0);
  EXPECT_EQ(summary.at("seed"), 0);
  EXPECT_GT(summary.at("tv_vs_reference").get<double>(), 0.1);

  Result again = invoke(args);
  EXPECT_EQ(again.code, kExitError);
  EXPECT_NE(again.err.find("--force"), std::string::npos);
  std::vector<std::string> forced = args;
  forced.push_back("--force");
  EXPECT_EQ(invoke(forced).code, kExitOk);
}

TEST_F(CliTest, NoisyExperimentIsDeterministicPerSeed) {
  const std::vector<std::string> args{"experiment", "--model", "3bit", "--noise", "appendixF", "--shots", "2000",
                                      "--seed", "5"};
  Result a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NEAR(json::parse(a.out).at("formula_fidelity").get<double>(), 0.634, 1e-3);
}

TEST_F(CliTest, RejectsUnknownFlagsAndKeys) {
  EXPECT_EQ(invoke({"experiment", "--colour", "blue"}).code, kExitError);
  EXPECT_EQ(invoke({}).code, kExitError);
  write("params.json", R"({"omega_tau": "pi/6", "charm": 1})");
  Result r = invoke({"experiment", "--params", path("params.json")});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("charm"), std::string::npos);
  EXPECT_EQ(invoke({"experiment", "--alpha", "pi/zero"}).code, kExitError);
}

TEST_F(CliTest, SynthRandomState) {
  Result r = invoke({"synth", "--random-qubits", "3", "--qasm", path("c.qasm"), "--report", path("r.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json report = json::parse(r.out);
  EXPECT_EQ(report.at("n_cnot"), 8);
  EXPECT_EQ(report.at("cost_formula"), 8);
  EXPECT_NEAR(report.at("conjugation_fidelity").get<double>(), 1.0, 1e-9);
  EXPECT_TRUE(fs::exists(dir_ / "c.qasm"));
  EXPECT_EQ(invoke({"synth", "--random-qubits", "3", "--qasm", path("c.qasm")}).code, kExitError);
}

TEST_F(CliTest, SynthStateFileAndSchemes) {
  write("state.json", R"({"real": [0.5, 0.5, 0.5, 0], "imag": [0, 0, 0, 0.5]})");
  for (const char* scheme : {"sparse", "dense_naive", "dense_ancilla", "boolean"}) {
    Result r = invoke({"synth", "--state", path("state.json"), "--scheme", scheme});
    ASSERT_EQ(r.code, kExitOk) << scheme << ": " << r.err;
    EXPECT_NEAR(json::parse(r.out).at("conjugation_fidelity").get<double>(), 1.0, 1e-9);
  }
  json dense = json::parse(invoke({"synth", "--state", path("state.json"), "--scheme", "dense_ancilla"}).out);
  EXPECT_EQ(dense.at("cost_formula"), 48);
  EXPECT_EQ(invoke({"synth", "--state", path("state.json"), "--scheme", "magic"}).code, kExitError);
  write("bad.json", R"({"real": [1, 0], "phase": [0, 0]})");
  EXPECT_EQ(invoke({"synth", "--state", path("bad.json")}).code, kExitError);
  EXPECT_EQ(invoke({"synth"}).code, kExitError);
}

TEST_F(CliTest, SingleQubitBooleanNeedsNoCnot) {
  write("one.json", R"({"real": [0.6, 0], "imag": [0, 0.8]})");
  Result r = invoke({"synth", "--state", path("one.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out).at("n_cnot"), 0);
}

TEST_F(CliTest, ReverseRecoversState) {
  write("h.json", R"({"n_qubits": 1, "real": [[1, 0.5], [0.5, -1]], "imag": [[0, 0.3], [-0.3, 0]]})");
  Result r = invoke({"reverse", "--hamiltonian", path("h.json"), "--tau", "pi/3", "--out", path("rev.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json summary = json::parse(r.out);
  EXPECT_NEAR(summary.at("fidelity").get<double>(), 1.0, 1e-9);
  EXPECT_LT(summary.at("residual").get<double>(), 1e-8);
  EXPECT_TRUE(fs::exists(dir_ / "rev.json"));
  write("nh.json", R"({"n_qubits": 1, "real": [[1, 0.5], [0.2, -1]]})");
  EXPECT_EQ(invoke({"reverse", "--hamiltonian", path("nh.json")}).code, kExitError);
}

TEST_F(CliTest, WavepacketStages) {
  Result r = invoke({"wavepacket", "--tau", "0", "--cells", "3", "--out", path("wp")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(json::parse(r.out).at("overlap").get<double>(), 1.0, 1e-12);
  for (const char* name : {"stage_initial.csv", "stage_spread.csv", "stage_conjugated.csv", "stage_refocused.csv",
                           "summary.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "wp" / name)) << name;
  }
  std::ifstream csv(dir_ / "wp" / "stage_spread.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "x,re,im,prob");
}

TEST_F(CliTest, WavepacketModes) {
  Result eps = invoke({"wavepacket", "--epsilon", "0.05"});
  ASSERT_EQ(eps.code, kExitOk) << eps.err;
  json summary = json::parse(eps.out);
  EXPECT_EQ(summary.at("N").get<double>(), std::ceil(summary.at("closed_form_cells").get<double>()));
  Result scan = invoke({"wavepacket", "--scan", "--scan-max", "24"});
  ASSERT_EQ(scan.code, kExitOk) << scan.err;
  EXPECT_NEAR(json::parse(scan.out).at("overlap").get<double>(), 0.86, 0.02);
  EXPECT_EQ(invoke({"wavepacket"}).code, kExitError);
  EXPECT_EQ(invoke({"wavepacket", "--cells", "4", "--epsilon", "0.1"}).code, kExitError);
  EXPECT_EQ(invoke({"wavepacket", "--sigma", "-1", "--cells", "4"}).code, kExitError);
}

TEST_F(CliTest, Estimate) {
  Result r = invoke({"estimate"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json summary = json::parse(r.out);
  EXPECT_GE(summary.at("tau").get<double>(), 3e-11);
  EXPECT_LE(summary.at("tau").get<double>(), 1.2e-10);
  EXPECT_LT(summary.at("residual").get<double>(), 1e-6);
}

TEST_F(CliTest, CompareWithHistogramAndSimulation) {
  ASSERT_EQ(invoke({"experiment", "--out", path("run")}).code, kExitOk);
  Result r = invoke({"compare", "--table", "table1", "--histogram", path("run/histogram.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  json report = json::parse(r.out);
  EXPECT_NEAR(report.at("reference_fidelity").get<double>(), 0.848, 5e-4);
  EXPECT_GT(report.at("tv_distance").get<double>(), 0.1);
  Result sim = invoke({"compare", "--table", "table2", "--alpha", "pi/2", "--noise", "appendixF"});
  ASSERT_EQ(sim.code, kExitOk) << sim.err;
  EXPECT_EQ(json::parse(sim.out).at("deltas").size(), 8u);
  EXPECT_EQ(invoke({"compare", "--alpha", "1.0"}).code, kExitError);
}

TEST_F(CliTest, DataDirEnvironmentOverride) {
  const char* old = std::getenv("TEMPUS_DATA_DIR");
  const std::string saved = old ? old : "";
  setenv("TEMPUS_DATA_DIR", path("empty").c_str(), 1);
  EXPECT_EQ(invoke({"compare"}).code, kExitError);
  fs::create_directories(dir_ / "empty");
  std::ofstream(dir_ / "empty" / "table1_2qubit.csv")
      << "omega_tau,alpha,state,count\npi/6,pi/6,00,1\npi/6,pi/6,01,0\npi/6,pi/6,10,0\npi/6,pi/6,11,0\n";
  Result r = invoke({"compare"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(json::parse(r.out).at("tv_distance").get<double>(), 0.0, 1e-12);
  if (old) {
    setenv("TEMPUS_DATA_DIR", saved.c_str(), 1);
  } else {
    unsetenv("TEMPUS_DATA_DIR");
  }
}

}  // namespace
}  // namespace tempus::cli
