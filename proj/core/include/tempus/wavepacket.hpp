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

#ifndef TEMPUS_WAVEPACKET_HPP
#define TEMPUS_WAVEPACKET_HPP

// One-dimensional free particle in units hbar = m = 1. A Gaussian packet of
// width sigma spreads for a time tau, a stepwise potential kick conjugates
// its phase cell by cell, and a second free evolution refocuses it.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace tempus {

using Complex = std::complex<double>;

/// Uniform grid x_k = x_min + k dx, k = 0 .. n_points - 1, dx = (x_max - x_min) / n_points.
/// The right end is excluded so the grid is also a valid periodic FFT grid.
struct Grid {
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t n_points = 2;

  double dx() const { return (x_max - x_min) / static_cast<double>(n_points); }
  double x(std::size_t k) const { return x_min + static_cast<double>(k) * dx(); }

  /// [-half_width, half_width) with `n_points` points (a power of two).
  static Grid symmetric(double half_width, std::size_t n_points = std::size_t{1} << 14);

  bool operator==(const Grid&) const = default;
};

inline constexpr std::size_t kDefaultGridPoints = std::size_t{1} << 14;

/// Width sigma sqrt(1 + (tau / sigma^2)^2) of the spread Gaussian.
double spread_width(double sigma, double tau);

/// +-8 max(sigma, spread_width(sigma, tau)) with 2^14 points.
Grid default_grid(double sigma, double tau);

class GridWavefunction {
 public:
  /// Throws unless `values` has one entry per grid point and
  /// sum |psi|^2 dx = 1 within 1e-8.
  GridWavefunction(Grid grid, std::vector<Complex> values);

  const Grid& grid() const { return grid_; }
  const std::vector<Complex>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Complex& operator[](std::size_t k) const { return values_[k]; }

  /// sum |psi|^2 dx
  double norm() const;
  double density(std::size_t k) const { return std::norm(values_[k]); }

  GridWavefunction conjugate() const;

  /// `x,re,im,prob` with one line per grid point, taking every `stride`-th point.
  std::string to_csv(std::size_t stride = 1) const;

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

/// Tolerance of the GridWavefunction norm invariant.
inline constexpr double kGridNormTolerance = 1e-8;

/// Exact free evolution of psi0 = (pi sigma^2)^{-1/4} exp(-x^2 / (2 sigma^2)):
/// psi(x, t) = (pi sigma^2)^{-1/4} (1 + iT)^{-1/2} exp(-x^2 / (2 sigma^2 (1 + iT))),
/// T = t / sigma^2. Throws if more than 1e-6 of the probability lies outside
/// the grid.
GridWavefunction evolve_gaussian(double sigma, double tau, const Grid& grid);

/// Large-time stationary-phase form f(x/t) exp(i x^2 / 2t) / sqrt(2 pi t),
/// f the Fourier image of psi0. Requires tau > 0. Not normalized exactly.
std::vector<Complex> asymptotic_gaussian(double sigma, double tau, const Grid& grid);

/// sqrt(2 (<x^2> - <x>^2)), which equals spread_width for the Gaussian.
double measured_width(const GridWavefunction& psi);

/// min over global phases c of ||a - c b|| / ||a|| on a common grid.
double relative_distance_up_to_phase(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// phi'(x_k) = Im(psi* psi') / |psi|^2 by central differences; 0 where
/// |psi|^2 underflows.
std::vector<double> phase_gradient(const GridWavefunction& psi);

/// lambda(psi) = integral of (|psi|^2 phi'^2)^{1/3} dx (trapezoid rule).
double lambda_functional(const GridWavefunction& psi);

/// Stepwise phase kick: cell n spans [cell_edges[n], cell_edges[n+1]) and
/// receives cell_phases[n] = -2 phi(cell_centers[n]).
struct PartitionPlan {
  std::vector<double> cell_edges;
  std::vector<double> cell_centers;
  std::vector<double> cell_phases;

  std::size_t cells() const { return cell_centers.size(); }
};

/// `cells` cells with widths following the optimal density
/// (|psi|^2 phi'^2)^{1/3}, i.e. g(x) = phi' dx proportional to (phi'/p)^{1/3}.
/// A phase-free state falls back to equal widths. The edges span the grid.
PartitionPlan partition_with_cells(const GridWavefunction& psi, std::size_t cells);

/// partition_with_cells with N = ceil((lambda^3 / 3 epsilon)^{1/2}).
/// Throws unless 0 < epsilon < 1.
PartitionPlan optimal_partition(const GridWavefunction& psi, double epsilon);

/// psi(x) exp(i cell_phases[n]) for x in cell n. Throws if more than 1e-12 of
/// the probability lies outside the partition.
GridWavefunction stepwise_conjugate(const GridWavefunction& psi, const PartitionPlan& plan);

/// |integral a* b dx|^2; throws on grid mismatch.
double overlap_probability(const GridWavefunction& a, const GridWavefunction& b);

/// 1 - (1/3) sum p(x_n) dx_n (phi'(x_n) dx_n)^2 for the plan.
double overlap_estimate(const GridWavefunction& psi, const PartitionPlan& plan);

/// Cells holding less probability than this carry no weight in the overlap
/// and are skipped by max_cell_phase_step.
inline constexpr double kNegligibleCellMass = 1e-9;

/// max_n |phi'(x_n)| dx_n over cells holding at least `min_mass` of the
/// probability. The partition spans the whole grid, so the far-tail cells are
/// wide but empty.
double max_cell_phase_step(const GridWavefunction& psi, const PartitionPlan& plan,
                           double min_mass = kNegligibleCellMass);

/// N_d = lambda (lambda / 3 epsilon)^{d/2}. Throws for epsilon <= 0, d < 1.
double cell_count(double epsilon, double lambda, int d);

/// lambda for an isotropic d-dimensional spread Gaussian,
/// integral (|psi|^2 |grad phi|^2)^{d/(d+2)} d^d x, by radial quadrature.
double gaussian_lambda(double sigma, double tau, int d);

/// Free evolution exp(-i k^2 t / 2) on the periodic grid (FFTW).
GridWavefunction free_propagate(const GridWavefunction& psi, double t);

/// The full reversal protocol for the Gaussian with `cells` optimal cells.
struct WavepacketReversal {
  std::size_t cells = 0;
  double overlap = 0.0;      // |<psi(tau)* | psi_tilde>|^2
  double overlap_fft = 0.0;  // |<psi(0) | U(tau) psi_tilde>|^2 via FFT propagation
  double estimate = 0.0;     // overlap_estimate of the plan
  double max_g = 0.0;
  GridWavefunction initial;
  GridWavefunction spread;
  GridWavefunction conjugated;
  GridWavefunction refocused;
};

WavepacketReversal run_wavepacket_reversal(double sigma, double tau, std::size_t cells);

/// Boltzmann constant (J/K) and reduced Planck constant (J s), CODATA 2018.
inline constexpr double kBoltzmann = 1.380649e-23;
inline constexpr double kHbar = 1.054571817e-34;

/// Default conjugation error used for the spontaneous reversal estimate.
inline constexpr double kSpontaneousEpsilon = 0.05;

/// tau solving 2^{-N(tau)} = tau / t_universe with
/// N(tau) = epsilon^{-1/2} k_B T tau / hbar, by bisection on log tau.
double spontaneous_reversal_time(double t_universe, double temperature, double epsilon = kSpontaneousEpsilon);

}  // namespace tempus

#endif  // TEMPUS_WAVEPACKET_HPP
