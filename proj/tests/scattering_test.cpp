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


#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>
#include <json.hpp>
#include <unsupported/Eigen/KroneckerProduct>

#include "tempus/angle.hpp"
#include "tempus/circuit.hpp"
#include "tempus/scattering.hpp"
#include "tempus/synthesis.hpp"
#include "test_support.hpp"

namespace tempus {
namespace {

using std::numbers::pi;
using testing::distance_up_to_phase;
using testing::max_abs;

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

Matrix random_symmetric_unitary(std::mt19937_64& rng) {
  // V D V^T is symmetric and unitary for any unitary V and diagonal phases D.
  Matrix v = testing::random_unitary(2, rng);
  std::uniform_real_distribution<double> angle(-pi, pi);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = std::polar(1.0, angle(rng));
  d(1, 1) = std::polar(1.0, angle(rng));
  return v * d * v.transpose();
}

Matrix swap_matrix_12() {
  Matrix s = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    const int b0 = (i >> 2) & 1, b1 = (i >> 1) & 1, b2 = i & 1;
    s((b0 << 2) | (b2 << 1) | b1, i) = 1.0;
  }
  return s;
}

TEST(TliParamsTest, DefaultsAreValid) {
  TliParams p;
  EXPECT_DOUBLE_EQ(p.omega_tau, pi / 6);
  EXPECT_DOUBLE_EQ(p.alpha, pi / 6);
  EXPECT_NO_THROW(p.validate());
  EXPECT_LT(max_abs(p.s0 - p.s0.transpose()), 1e-10);
  EXPECT_LT(max_abs(p.s1 * p.s1.adjoint() - Matrix::Identity(2, 2)), 1e-10);
}

TEST(TliParamsTest, ValidateRejectsBadMatrices) {
  TliParams p;
  p.s0 = Matrix::Zero(2, 2);
  p.s0(0, 1) = 1.0;
  p.s0(1, 0) = Complex(0, 1);  // unitary, not symmetric
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.s0 = 2.0 * Matrix::Identity(2, 2);
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.s0 = Matrix::Identity(3, 3);
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(TliParamsTest, JsonRoundTripAndStrictKeys) {
  TliParams p(0.4, pi / 3);
  TliParams q = TliParams::from_json(p.to_json());
  EXPECT_DOUBLE_EQ(q.omega_tau, 0.4);
  EXPECT_DOUBLE_EQ(q.alpha, pi / 3);
  EXPECT_LT(max_abs(q.s1 - p.s1), 1e-15);
  EXPECT_DOUBLE_EQ(TliParams::from_json(R"({"alpha": "pi/4"})").alpha, pi / 4);
  EXPECT_THROW(TliParams::from_json(R"({"alpha": 1, "beta": 2})"), std::invalid_argument);
}

TEST(TliEvolutionTest, LimitsAndSymmetry) {
  TliParams p(0.0, 0.3);
  EXPECT_LT(max_abs(tli_evolution(p) - Matrix::Identity(2, 2)), 1e-15);
  const double wt = 0.7;
  Matrix expected(2, 2);
  expected << std::cos(wt), Complex(0, -std::sin(wt)), Complex(0, -std::sin(wt)), std::cos(wt);
  EXPECT_LT(max_abs(tli_evolution(TliParams(wt, pi / 2)) - expected), 1e-12);
  for (const TliParams& ref : reference_parameter_sets()) {
    Matrix u = tli_evolution(ref);
    EXPECT_LT(max_abs(u - u.transpose()), 1e-10);
  }
}

TEST(DecomposeTest, ReferenceAngles) {
  const std::vector<std::pair<double, double>> expected{
      {0.505, -1.107}, {0.723, -1.183}, {0.896, -1.290}, {1.047, -pi / 2}};
  const auto sets = reference_parameter_sets();
  ASSERT_EQ(sets.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    SymmetricU3Decomposition d = decompose_symmetric(tli_evolution(sets[i]));
    EXPECT_NEAR(d.xi, expected[i].first, 5e-3) << "set " << i;
    EXPECT_NEAR(d.eta, expected[i].second, 5e-3) << "set " << i;
  }
}

TEST(DecomposeTest, SymmetricReconstructionProperty) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    Matrix u = random_symmetric_unitary(rng);
    SymmetricU3Decomposition d = decompose_symmetric(u);
    ASSERT_LT(max_abs(d.reconstruct() - u), 1e-9);
    ASSERT_GE(d.xi, 0.0);
    ASSERT_LE(d.xi, pi);
    ASSERT_GT(d.eta, -pi);
    ASSERT_LE(d.eta, pi);
  }
}

TEST(DecomposeTest, DiagonalAndAntiDiagonalBranches) {
  Matrix id = Matrix::Identity(2, 2);
  SymmetricU3Decomposition d = decompose_symmetric(id);
  EXPECT_NEAR(d.xi, 0.0, 1e-15);
  EXPECT_LT(max_abs(d.reconstruct() - id), 1e-12);
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = Complex(0, 1);
  x(1, 0) = Complex(0, 1);
  d = decompose_symmetric(x);
  EXPECT_NEAR(d.xi, pi, 1e-12);
  EXPECT_LT(max_abs(d.reconstruct() - x), 1e-12);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = 0.1;
  EXPECT_THROW(decompose_symmetric(bad), std::invalid_argument);
}

TEST(DecomposeTest, GeneralU3ReconstructionProperty) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    Matrix u = testing::random_unitary(2, rng);
    ASSERT_LT(max_abs(decompose_u3(u).reconstruct() - u), 1e-9);
  }
  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = std::polar(1.0, 0.3);
  diag(1, 1) = std::polar(1.0, -1.2);
  EXPECT_LT(max_abs(decompose_u3(diag).reconstruct() - diag), 1e-12);
  Matrix anti = Matrix::Zero(2, 2);
  anti(0, 1) = std::polar(1.0, 0.5);
  anti(1, 0) = std::polar(1.0, 2.0);
  EXPECT_LT(max_abs(decompose_u3(anti).reconstruct() - anti), 1e-12);
  EXPECT_THROW(decompose_u3(2.0 * Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST(ControlledUnitaryTest, ExactIncludingPhase) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix w = testing::random_unitary(2, rng);
    Circuit c = controlled_unitary_circuit(w, 0, 1, 2);
    EXPECT_EQ(c.count(GateKind::CNOT), 2u);
    Matrix expected = Matrix::Identity(4, 4);
    expected.bottomRightCorner(2, 2) = w;
    ASSERT_LT(max_abs(circuit_to_unitary(c) - expected), 1e-9);
  }
}

TEST(SPsiTest, MatchesBlockMatrix) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    TliParams p;
    p.s0 = random_symmetric_unitary(rng);
    p.s1 = random_symmetric_unitary(rng);
    Circuit c = s_psi_circuit(p, 0, 1);
    EXPECT_EQ(c.count(GateKind::CNOT), 2u);
    Matrix block = Matrix::Zero(4, 4);
    block.topLeftCorner(2, 2) = p.s0;
    block.bottomRightCorner(2, 2) = p.s1;
    ASSERT_LT(distance_up_to_phase(circuit_to_unitary(c), block), 1e-9);
  }
}

TEST(SPsiTest, EqualScatteringMatricesGiveProductOperator) {
  TliParams p;
  p.s1 = p.s0;
  EXPECT_LT(distance_up_to_phase(circuit_to_unitary(s_psi_circuit(p, 0, 1)), kron(Matrix::Identity(2, 2), p.s0)),
            1e-9);
}

TEST(SPsiTest, RejectsInvalidParams) {
  TliParams p;
  p.s1 = 2.0 * Matrix::Identity(2, 2);
  EXPECT_THROW(s_psi_circuit(p, 0, 1), std::invalid_argument);
}

// The default circuit follows the printed structure: U3 on the target, the
// controlled part with a CNOT pair, and a T(~1.047) phase on the control.
TEST(SPsiTest, DefaultGateOrder) {
  const Circuit c = s_psi_circuit(TliParams(), 0, 1);
  ASSERT_GE(c.size(), 4u);
  EXPECT_EQ(c.gates().front().kind(), GateKind::U3);
  EXPECT_EQ(c.gates().front().qubit(0), 1);
  std::vector<std::size_t> cnots;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.gates()[i].kind() == GateKind::CNOT) {
      cnots.push_back(i);
      EXPECT_EQ(c.gates()[i].qubit(0), 0);
      EXPECT_EQ(c.gates()[i].qubit(1), 1);
    }
  }
  ASSERT_EQ(cnots.size(), 2u);
  const Gate& last = c.gates().back();
  EXPECT_EQ(last.kind(), GateKind::T);
  EXPECT_EQ(last.qubit(0), 0);
  EXPECT_NEAR(std::abs(wrap_angle(last.param(0))), 1.047, 5e-3);
}

TEST(ModelCircuitTest, TwoBitSymmetricThreeBitSwapTranspose) {
  const Matrix swap = swap_matrix_12();
  for (const TliParams& p : reference_parameter_sets()) {
    Matrix u2 = circuit_to_unitary(u2bit_circuit(p));
    EXPECT_LT(max_abs(u2 - u2.transpose()), 1e-9);
    Matrix u3 = circuit_to_unitary(u3bit_circuit(p));
    EXPECT_LT(max_abs(swap * u3 * swap - u3.transpose()), 1e-9);
    Matrix relabeled = circuit_to_unitary(u3bit_circuit(p, true));
    EXPECT_LT(max_abs(relabeled - swap * u3 * swap), 1e-9);
  }
}

TEST(ModelCircuitTest, TrivialParametersGiveIdentity) {
  TliParams p(0.0, 0.3);
  p.s0 = Matrix::Identity(2, 2);
  p.s1 = Matrix::Identity(2, 2);
  EXPECT_LT(distance_up_to_phase(circuit_to_unitary(u2bit_circuit(p)), Matrix::Identity(4, 4)), 1e-9);
  EXPECT_LT(distance_up_to_phase(circuit_to_unitary(u3bit_circuit(p)), Matrix::Identity(8, 8)), 1e-9);
}

TEST(ModelCircuitTest, TwoBitMatchesKroneckerProducts) {
  TliParams p(0.9, 0.4);
  Matrix ui = kron(tli_evolution(p), Matrix::Identity(2, 2));
  Matrix block = Matrix::Zero(4, 4);
  block.topLeftCorner(2, 2) = p.s0;
  block.bottomRightCorner(2, 2) = p.s1;
  EXPECT_LT(distance_up_to_phase(circuit_to_unitary(u2bit_circuit(p)), ui * block * ui), 1e-9);
}

TEST(ExperimentTest, NoiselessReturnsToZero) {
  for (ExperimentModel model : {ExperimentModel::TwoBit, ExperimentModel::ThreeBit}) {
    for (const TliParams& p : reference_parameter_sets()) {
      EXPECT_NEAR(std::norm(run_experiment_state(model, p)[0]), 1.0, 1e-9);
      Histogram h = run_experiment(model, p, 8192, std::nullopt, 0);
      EXPECT_EQ(h.count(std::string(static_cast<std::size_t>(model_qubits(model)), '0')), 8192u);
    }
  }
}

TEST(ExperimentTest, ConjugationCnotCounts) {
  TliParams p;
  ExperimentCircuits two = build_experiment(ExperimentModel::TwoBit, p);
  EXPECT_EQ(two.conjugation.count(GateKind::CNOT), 2u);
  EXPECT_EQ(two.full().count(GateKind::CNOT), 6u);
  ExperimentCircuits three = build_experiment(ExperimentModel::ThreeBit, p);
  EXPECT_EQ(three.conjugation.count(GateKind::CNOT), 8u);
  EXPECT_EQ(three.full().count(GateKind::SWAP), 0u);
}

TEST(ExperimentTest, RelabelingEqualsExplicitSwap) {
  for (const TliParams& p : reference_parameter_sets()) {
    ExperimentCircuits e = build_experiment(ExperimentModel::ThreeBit, p);
    Circuit explicit_swap(3);
    explicit_swap.append(e.forward).append(e.conjugation);
    explicit_swap.append(Gate::swap(1, 2)).append(u3bit_circuit(p)).append(Gate::swap(1, 2));
    StateVector a = run_circuit(StateVector(3), e.full());
    StateVector b = run_circuit(StateVector(3), explicit_swap);
    EXPECT_NEAR(fidelity(a, b), 1.0, 1e-9);
  }
}

TEST(ExperimentTest, ConjugationIsBooleanSchemeOfReachedState) {
  ExperimentCircuits e = build_experiment(ExperimentModel::TwoBit, TliParams(0.5, 1.0));
  StateVector reached = run_circuit(StateVector(2), e.forward);
  EXPECT_NEAR(fidelity(reached, e.reached), 1.0, 1e-12);
  StateVector conj = run_circuit(reached, e.conjugation);
  std::vector<Complex> expected(reached.amplitudes().begin(), reached.amplitudes().end());
  for (Complex& z : expected) z = std::conj(z);
  EXPECT_NEAR(fidelity(conj, StateVector::from_amplitudes(expected)), 1.0, 1e-9);
}

TEST(ExperimentTest, ModelNames) {
  EXPECT_EQ(parse_model("2bit"), ExperimentModel::TwoBit);
  EXPECT_EQ(model_name(ExperimentModel::ThreeBit), "3bit");
  EXPECT_THROW(parse_model("4bit"), std::invalid_argument);
  EXPECT_EQ(physical_map(ExperimentModel::TwoBit), (std::vector<int>{2, 1}));
  EXPECT_EQ(physical_map(ExperimentModel::ThreeBit), (std::vector<int>{2, 1, 0}));
}

}  // namespace
}  // namespace tempus
