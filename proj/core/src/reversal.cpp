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

#include "tempus/reversal.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace tempus {

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Columns of `vectors` are eigenvectors; rescale each by a unit phase so the
// first entry within 1e-9 of the column's largest magnitude is real positive.
void fix_gauge(Matrix& vectors) {
  for (Eigen::Index col = 0; col < vectors.cols(); ++col) {
    double largest = vectors.col(col).cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    for (Eigen::Index row = 0; row < vectors.rows(); ++row) {
      if (std::abs(vectors(row, col)) >= largest * (1.0 - 1e-9)) {
        pivot = row;
        break;
      }
    }
    Complex entry = vectors(pivot, col);
    vectors.col(col) *= std::conj(entry) / std::abs(entry);
  }
}

struct Eigensystem {
  Eigen::VectorXd energies;
  Matrix vectors;  // H = V diag(E) V^dagger
};

Eigensystem diagonalize(const Hamiltonian& h) {
  if (h.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix().real());
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return {solver.eigenvalues(), solver.eigenvectors().cast<Complex>()};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  Matrix vectors = solver.eigenvectors();
  fix_gauge(vectors);
  return {solver.eigenvalues(), vectors};
}

}  // namespace

Hamiltonian::Hamiltonian(int n_qubits, const Matrix& matrix) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 12) throw std::invalid_argument("Hamiltonian: qubit count outside [1, 12]");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (matrix.rows() != dim || matrix.cols() != dim) {
    throw std::invalid_argument("Hamiltonian: matrix must be 2^n x 2^n");
  }
  if (!matrix.allFinite()) throw std::invalid_argument("Hamiltonian: non-finite entries");
  double defect = max_abs(matrix - matrix.adjoint());
  if (defect >= kHermiticityTolerance) {
    throw std::invalid_argument("Hamiltonian: not Hermitian (||H - H^dagger||_max = " +
                                std::to_string(defect) + ")");
  }
  matrix_ = (matrix + matrix.adjoint()) / 2.0;
}

Hamiltonian Hamiltonian::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n_qubits").get<int>();
  auto real = j.at("real").get<std::vector<std::vector<double>>>();
  std::vector<std::vector<double>> imag;
  if (j.contains("imag")) imag = j.at("imag").get<std::vector<std::vector<double>>>();
  const auto dim = real.size();
  if (!imag.empty() && imag.size() != dim) throw std::invalid_argument("Hamiltonian JSON: imag shape mismatch");
  Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    if (real[r].size() != dim || (!imag.empty() && imag[r].size() != dim)) {
      throw std::invalid_argument("Hamiltonian JSON: rows must be square");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(real[r][c], imag.empty() ? 0.0 : imag[r][c]);
    }
  }
  return Hamiltonian(n, m);
}

bool Hamiltonian::is_real() const { return matrix_.imag().cwiseAbs().maxCoeff() < 1e-14; }

double ReversalPlan::residual(const Hamiltonian& h) const {
  Matrix rotated = (u_r.adjoint() * h.matrix() * u_r).conjugate();
  return max_abs(h.matrix() - rotated);
}

ReversalPlan compute_reversal(const Hamiltonian& h) {
  Eigensystem eig = diagonalize(h);
  // U_H = V^dagger, so U_H^dagger U_H^* = V V^T.
  Matrix u_h = eig.vectors.adjoint();
  Matrix u_r = u_h.adjoint() * u_h.conjugate();
  return {u_r, u_h, eig.energies};
}

Matrix matrix_exponential(const Hamiltonian& h, double tau) {
  if (!std::isfinite(tau)) throw std::invalid_argument("matrix_exponential: non-finite time");
  Eigensystem eig = diagonalize(h);
  Eigen::VectorXcd phases(eig.energies.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, -eig.energies(i) * tau);
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

StateVector conjugate_state(const StateVector& state) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (Complex& a : amps) a = std::conj(a);
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector reverse_protocol(const Matrix& u_forward, const ReversalPlan& plan, const StateVector& psi_tau) {
  const auto dim = static_cast<Eigen::Index>(psi_tau.dimension());
  if (u_forward.rows() != dim || u_forward.cols() != dim || plan.u_r.rows() != dim || plan.u_r.cols() != dim) {
    throw std::invalid_argument("reverse_protocol: dimension mismatch");
  }
  Eigen::VectorXcd v = psi_tau.to_eigen().conjugate();        // K
  v = plan.u_r * v;                                            // U_R
  v = u_forward * v;                                           // U(tau)
  v = (plan.u_r.adjoint() * v).conjugate();                    // R^{-1} = K U_R^dagger
  return StateVector::normalized(std::vector<Complex>(v.data(), v.data() + v.size()));
}

double unitarity_defect(const Matrix& u) {
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

}  // namespace tempus
