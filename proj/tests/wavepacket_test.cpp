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
#include <functional>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "tempus/wavepacket.hpp"

namespace tempus {
namespace {

using std::numbers::pi;

// Composite Simpson rule, written here so the oracles share no code with the library.
double simpson(const std::function<double(double)>& f, double a, double b, int steps = 200000) {
  const double h = (b - a) / steps;
  double sum = f(a) + f(b);
  for (int i = 1; i < steps; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// lambda of the spread Gaussian from its analytic density and phase gradient.
double lambda_oracle(double sigma, double tau, int d) {
  const double t = tau / (sigma * sigma);
  const double w = sigma * std::sqrt(1 + t * t);
  const double exponent = d / (d + 2.0);
  auto integrand = [&](double r) {
    const double p = std::exp(-r * r / (w * w)) / std::pow(std::sqrt(pi) * w, d);
    const double grad = r * t / (sigma * sigma * (1 + t * t));
    const double shell = d == 1 ? 2.0 : (d == 2 ? 2 * pi * r : 4 * pi * r * r);
    return shell * std::pow(p * grad * grad, exponent);
  };
  return simpson(integrand, 0.0, 14 * w);
}

TEST(GridTest, Layout) {
  Grid g = Grid::symmetric(4.0, 8);
  EXPECT_DOUBLE_EQ(g.dx(), 1.0);
  EXPECT_DOUBLE_EQ(g.x(0), -4.0);
  EXPECT_DOUBLE_EQ(g.x(7), 3.0);
  Grid d = default_grid(1.0, 3.0);
  EXPECT_EQ(d.n_points, kDefaultGridPoints);
  EXPECT_NEAR(d.x_max, 8 * std::sqrt(10.0), 1e-12);
}

TEST(GridWavefunctionTest, NormInvariant) {
  Grid g = Grid::symmetric(1.0, 4);
  EXPECT_THROW(GridWavefunction(g, {1.0, 0.0, 0.0, 0.0}), std::invalid_argument);  // norm^2 dx = 0.5
  EXPECT_THROW(GridWavefunction(g, {1.0, 1.0}), std::invalid_argument);
  GridWavefunction psi(g, {Complex(1, 1), Complex(0, 0), 0.0, 0.0});
  EXPECT_NEAR(psi.norm(), 1.0, 1e-15);
  EXPECT_EQ(psi.conjugate()[0], Complex(1, -1));
}

TEST(GridWavefunctionTest, CsvStride) {
  GridWavefunction psi = evolve_gaussian(1.0, 0.0, Grid::symmetric(8.0, 64));
  std::istringstream csv(psi.to_csv(16));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "x,re,im,prob");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(EvolveTest, SpreadWidthAtThreeTimeUnits) {
  const double sigma = 1.0, tau = 3.0;
  GridWavefunction psi = evolve_gaussian(sigma, tau, default_grid(sigma, tau));
  EXPECT_NEAR(spread_width(sigma, tau), sigma * std::sqrt(10.0), 1e-12);
  EXPECT_NEAR(measured_width(psi), sigma * std::sqrt(10.0), 1e-6);
  EXPECT_NEAR(psi.norm(), 1.0, 1e-8);
}

TEST(EvolveTest, ZeroTimeIsRealGaussian) {
  GridWavefunction psi = evolve_gaussian(0.7, 0.0, default_grid(0.7, 0.0));
  for (std::size_t k = 0; k < psi.size(); k += 997) {
    const double x = psi.grid().x(k);
    const double expected = std::pow(pi * 0.49, -0.25) * std::exp(-x * x / (2 * 0.49));
    EXPECT_NEAR(psi[k].real(), expected, 1e-12);
    EXPECT_EQ(psi[k].imag(), 0.0);
  }
}

TEST(EvolveTest, RejectsSmallGridAndBadParameters) {
  EXPECT_THROW(evolve_gaussian(1.0, 3.0, Grid::symmetric(4.0, 1024)), std::invalid_argument);
  EXPECT_THROW(evolve_gaussian(0.0, 1.0, default_grid(1.0, 1.0)), std::invalid_argument);
  EXPECT_THROW(evolve_gaussian(1.0, -1.0, default_grid(1.0, 1.0)), std::invalid_argument);
}

TEST(EvolveTest, MatchesFftPropagation) {
  const Grid grid = default_grid(1.0, 3.0);
  GridWavefunction psi0 = evolve_gaussian(1.0, 0.0, grid);
  GridWavefunction exact = evolve_gaussian(1.0, 3.0, grid);
  GridWavefunction fft = free_propagate(psi0, 3.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.n_points; ++k) worst = std::max(worst, std::abs(fft[k] - exact[k]));
  EXPECT_LT(worst, 1e-8);
}

TEST(EvolveTest, AsymptoticFormAtLargeTime) {
  // The stationary-phase form differs from the exact packet by a phase
  // x^2 / (2 T^3) sigma^2 that grows in the tails, so the comparison is in L2.
  double previous = 1.0;
  for (double tau : {30.0, 100.0}) {
    const Grid grid = default_grid(1.0, tau);
    GridWavefunction psi = evolve_gaussian(1.0, tau, grid);
    const double d = relative_distance_up_to_phase(psi.values(), asymptotic_gaussian(1.0, tau, grid));
    EXPECT_LT(d, previous);
    previous = d;
  }
  EXPECT_LT(previous, 0.01);
  EXPECT_THROW(asymptotic_gaussian(1.0, 0.0, default_grid(1.0, 1.0)), std::invalid_argument);
}

TEST(LambdaTest, GridFunctionalMatchesQuadratureOracle) {
  for (double tau : {1.0, 3.0, 10.0}) {
    GridWavefunction psi = evolve_gaussian(1.0, tau, default_grid(1.0, tau));
    const double oracle = lambda_oracle(1.0, tau, 1);
    EXPECT_NEAR(lambda_functional(psi) / oracle, 1.0, 1e-4) << "tau=" << tau;
    EXPECT_NEAR(gaussian_lambda(1.0, tau, 1) / oracle, 1.0, 1e-6) << "tau=" << tau;
  }
  GridWavefunction still = evolve_gaussian(1.0, 0.0, default_grid(1.0, 0.0));
  EXPECT_EQ(lambda_functional(still), 0.0);
}

TEST(LambdaTest, HigherDimensionalOracle) {
  for (int d : {2, 3}) {
    EXPECT_NEAR(gaussian_lambda(1.3, 4.0, d) / lambda_oracle(1.3, 4.0, d), 1.0, 1e-6) << "d=" << d;
  }
}

TEST(CellCountTest, Formula) {
  EXPECT_NEAR(cell_count(1.0, 3.0, 1), 3.0, 1e-12);
  EXPECT_NEAR(cell_count(0.01, 2.0, 1) / cell_count(0.04, 2.0, 1), 2.0, 1e-12);
  EXPECT_THROW(cell_count(0.0, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(cell_count(0.1, 1.0, 0), std::invalid_argument);
}

TEST(CellCountTest, TenfoldSpreadScenario) {
  // L_tau / L_0 = 10 means T = sqrt(99).
  const double tau = std::sqrt(99.0), eps = 0.01;
  const double lambda = lambda_oracle(1.0, tau, 1);
  const double expected = lambda * std::sqrt(lambda / (3 * eps));
  EXPECT_NEAR(cell_count(eps, gaussian_lambda(1.0, tau, 1), 1) / expected, 1.0, 1e-5);
  GridWavefunction psi = evolve_gaussian(1.0, tau, default_grid(1.0, tau));
  EXPECT_EQ(optimal_partition(psi, eps).cells(), static_cast<std::size_t>(std::ceil(
                                                     std::sqrt(std::pow(lambda_functional(psi), 3) / (3 * eps)))));
}

TEST(CellCountTest, PolynomialGrowthInSpread) {
  // lambda_d scales exactly as T^{2d/(d+2)}, so N_d scales as T^d.
  for (int d : {1, 2, 3}) {
    const double n1 = cell_count(0.01, gaussian_lambda(1.0, 5.0, d), d);
    for (double tau : {10.0, 20.0}) {
      const double n = cell_count(0.01, gaussian_lambda(1.0, tau, d), d);
      EXPECT_NEAR(n / n1, std::pow(tau / 5.0, d), 1e-6 * std::pow(tau / 5.0, d)) << "d=" << d;
    }
  }
}

TEST(PartitionTest, CoversGridAndFallsBackWhenPhaseFree) {
  GridWavefunction psi = evolve_gaussian(1.0, 3.0, default_grid(1.0, 3.0));
  PartitionPlan plan = partition_with_cells(psi, 32);
  ASSERT_EQ(plan.cells(), 32u);
  ASSERT_EQ(plan.cell_edges.size(), 33u);
  EXPECT_DOUBLE_EQ(plan.cell_edges.front(), psi.grid().x_min);
  for (std::size_t n = 0; n < 32; ++n) EXPECT_LT(plan.cell_edges[n], plan.cell_edges[n + 1]);
  // Optimal density packs cells where p phi'^2 is large, away from the centre.
  const double centre = plan.cell_edges[17] - plan.cell_edges[16];
  EXPECT_GT(plan.cell_edges[32] - plan.cell_edges[31], centre);

  GridWavefunction still = evolve_gaussian(1.0, 0.0, default_grid(1.0, 0.0));
  PartitionPlan uniform = partition_with_cells(still, 8);
  const double width = uniform.cell_edges[1] - uniform.cell_edges[0];
  for (std::size_t n = 0; n < 8; ++n) {
    EXPECT_NEAR(uniform.cell_edges[n + 1] - uniform.cell_edges[n], width, 1e-9);
  }
  EXPECT_THROW(partition_with_cells(psi, 0), std::invalid_argument);
  EXPECT_THROW(optimal_partition(psi, 0.0), std::invalid_argument);
  EXPECT_THROW(optimal_partition(psi, 1.0), std::invalid_argument);
}

TEST(PartitionTest, StepwiseConjugateNeedsCoverage) {
  GridWavefunction psi = evolve_gaussian(1.0, 3.0, default_grid(1.0, 3.0));
  PartitionPlan plan = partition_with_cells(psi, 16);
  plan.cell_edges.front() = 0.0;
  plan.cell_centers.front() = 0.5 * (plan.cell_edges[0] + plan.cell_edges[1]);
  EXPECT_THROW(stepwise_conjugate(psi, plan), std::invalid_argument);
}

TEST(OverlapTest, GridMismatchThrows) {
  GridWavefunction a = evolve_gaussian(1.0, 0.0, default_grid(1.0, 0.0));
  GridWavefunction b = evolve_gaussian(1.0, 0.0, Grid::symmetric(9.0, 1024));
  EXPECT_THROW(overlap_probability(a, b), std::invalid_argument);
  EXPECT_NEAR(overlap_probability(a, a), 1.0, 1e-12);
}

TEST(ReversalProtocolTest, ZeroTimeIsPerfectForAnyCellCount) {
  for (std::size_t n : {1, 2, 7, 64}) {
    WavepacketReversal r = run_wavepacket_reversal(1.0, 0.0, n);
    EXPECT_NEAR(r.overlap, 1.0, 1e-12) << n;
  }
}

TEST(ReversalProtocolTest, NormConservedThroughEveryStage) {
  WavepacketReversal r = run_wavepacket_reversal(1.0, 3.0, 24);
  for (const GridWavefunction* psi : {&r.initial, &r.spread, &r.conjugated, &r.refocused}) {
    EXPECT_NEAR(psi->norm(), 1.0, 1e-8);
  }
}

TEST(ReversalProtocolTest, FftCrossCheckAndRefinementLimit) {
  WavepacketReversal r = run_wavepacket_reversal(1.0, 3.0, 4096);
  EXPECT_GT(r.overlap, 0.999);
  EXPECT_NEAR(r.overlap, r.overlap_fft, 1e-6);
}

TEST(ReversalProtocolTest, MonotoneInCellCount) {
  double previous = 0.0;
  for (std::size_t n = 8; n <= 1024; n *= 2) {
    const double overlap = run_wavepacket_reversal(1.0, 3.0, n).overlap;
    EXPECT_GE(overlap, previous) << "N=" << n;
    previous = overlap;
  }
}

TEST(ReversalProtocolTest, SomeCellCountGivesEightySixPercent) {
  bool found = false;
  for (std::size_t n = 1; n <= 64 && !found; ++n) {
    found = std::abs(run_wavepacket_reversal(1.0, 3.0, n).overlap - 0.86) <= 0.02;
  }
  EXPECT_TRUE(found);
}

TEST(ReversalProtocolTest, EstimateAgreesWhenPhaseStepsAreSmall) {
  int checked = 0;
  for (double tau : {0.05, 0.1, 0.3}) {
    for (std::size_t n : {1024, 4096, 8192}) {
      WavepacketReversal r = run_wavepacket_reversal(1.0, tau, n);
      if (r.max_g > 0.1) continue;
      ++checked;
      EXPECT_NEAR(r.estimate, r.overlap, 1e-3) << "tau=" << tau << " N=" << n;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(ReversalProtocolTest, CellCountLinearInTime) {
  std::vector<double> t, n;
  for (double tau = 2.0; tau <= 20.0; tau += 2.0) {
    GridWavefunction psi = evolve_gaussian(1.0, tau, default_grid(1.0, tau));
    t.push_back(tau);
    n.push_back(static_cast<double>(optimal_partition(psi, 0.01).cells()));
  }
  const double k = static_cast<double>(t.size());
  double st = 0, sn = 0, stt = 0, stn = 0, snn = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sn += n[i];
    stt += t[i] * t[i];
    stn += t[i] * n[i];
    snn += n[i] * n[i];
  }
  const double r = (k * stn - st * sn) / std::sqrt((k * stt - st * st) * (k * snn - sn * sn));
  EXPECT_GT(r * r, 0.99);
}

TEST(SpontaneousReversalTest, ReferenceEstimate) {
  const double tau = spontaneous_reversal_time(4.3e17, 2.72);
  EXPECT_GE(tau, 3e-11);
  EXPECT_LE(tau, 1.2e-10);
  const double n = kBoltzmann * 2.72 * tau / kHbar / std::sqrt(kSpontaneousEpsilon);
  EXPECT_LT(std::abs(std::exp2(-n) - tau / 4.3e17) / (tau / 4.3e17), 1e-6);
}

TEST(SpontaneousReversalTest, ZeroTemperatureGivesUniverseAge) {
  EXPECT_DOUBLE_EQ(spontaneous_reversal_time(4.3e17, 0.0), 4.3e17);
  EXPECT_THROW(spontaneous_reversal_time(-1.0, 2.72), std::invalid_argument);
  EXPECT_THROW(spontaneous_reversal_time(4.3e17, 2.72, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace tempus
