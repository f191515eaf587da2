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

#include "tempus/wavepacket.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <fftw3.h>

namespace tempus {

namespace {

constexpr double kPi = std::numbers::pi;
// Below this density the phase is numerically meaningless.
constexpr double kDensityFloor = 1e-280;

void check_grid(const Grid& grid) {
  if (!(grid.x_max > grid.x_min) || !std::isfinite(grid.x_min) || !std::isfinite(grid.x_max)) {
    throw std::invalid_argument("Grid: need finite x_min < x_max");
  }
  if (grid.n_points < 2 || !std::has_single_bit(grid.n_points)) {
    throw std::invalid_argument("Grid: n_points must be a power of two >= 2");
  }
}

void check_sigma_tau(double sigma, double tau) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("sigma must be positive");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be non-negative");
}

// Linear interpolation of samples y on the grid at position x (clamped).
template <typename T>
T interpolate(const Grid& grid, const std::vector<T>& y, double x) {
  double s = (x - grid.x_min) / grid.dx();
  if (s <= 0.0) return y.front();
  if (s >= static_cast<double>(y.size() - 1)) return y.back();
  auto k = static_cast<std::size_t>(s);
  double frac = s - static_cast<double>(k);
  return y[k] * (1.0 - frac) + y[k + 1] * frac;
}

}  // namespace

Grid Grid::symmetric(double half_width, std::size_t n_points) {
  Grid grid{-half_width, half_width, n_points};
  check_grid(grid);
  return grid;
}

double spread_width(double sigma, double tau) {
  check_sigma_tau(sigma, tau);
  const double t = tau / (sigma * sigma);
  return sigma * std::sqrt(1.0 + t * t);
}

Grid default_grid(double sigma, double tau) {
  return Grid::symmetric(8.0 * std::max(sigma, spread_width(sigma, tau)), kDefaultGridPoints);
}

GridWavefunction::GridWavefunction(Grid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  check_grid(grid_);
  if (values_.size() != grid_.n_points) throw std::invalid_argument("GridWavefunction: size does not match grid");
  if (std::abs(norm() - 1.0) > kGridNormTolerance) {
    throw std::invalid_argument("GridWavefunction: norm " + std::to_string(norm()) + " differs from 1");
  }
}

double GridWavefunction::norm() const {
  double sum = 0.0;
  for (const Complex& v : values_) sum += std::norm(v);
  return sum * grid_.dx();
}

GridWavefunction GridWavefunction::conjugate() const {
  std::vector<Complex> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](const Complex& v) { return std::conj(v); });
  return {grid_, std::move(out)};
}

std::string GridWavefunction::to_csv(std::size_t stride) const {
  if (stride == 0) throw std::invalid_argument("to_csv: stride must be positive");
  std::ostringstream out;
  out.precision(10);
  out << "x,re,im,prob\n";
  for (std::size_t k = 0; k < values_.size(); k += stride) {
    out << grid_.x(k) << ',' << values_[k].real() << ',' << values_[k].imag() << ',' << density(k) << '\n';
  }
  return out.str();
}

GridWavefunction evolve_gaussian(double sigma, double tau, const Grid& grid) {
  check_sigma_tau(sigma, tau);
  check_grid(grid);
  const double width = spread_width(sigma, tau);
  // |psi|^2 = exp(-x^2 / w^2) / (sqrt(pi) w), so the mass beyond |x| > L is erfc(L / w).
  const double x_last = grid.x(grid.n_points - 1);
  const double outside = 0.5 * std::erfc(-grid.x_min / width) + 0.5 * std::erfc(x_last / width);
  if (outside > 1e-6) {
    throw std::invalid_argument("evolve_gaussian: grid too small, " + std::to_string(outside) +
                                " of the probability lies outside");
  }
  const Complex denom(1.0, tau / (sigma * sigma));
  const Complex prefactor = std::pow(kPi * sigma * sigma, -0.25) / std::sqrt(denom);
  std::vector<Complex> values(grid.n_points);
  for (std::size_t k = 0; k < grid.n_points; ++k) {
    const double x = grid.x(k);
    values[k] = prefactor * std::exp(-x * x / (2.0 * sigma * sigma * denom));
  }
  // The grid sum of a well-resolved Gaussian matches the integral far below
  // the norm tolerance; renormalizing only removes rounding.
  double sum = 0.0;
  for (const Complex& v : values) sum += std::norm(v);
  const double scale = 1.0 / std::sqrt(sum * grid.dx());
  if (std::abs(scale - 1.0) > 1e-9) throw std::invalid_argument("evolve_gaussian: grid does not resolve the packet");
  for (Complex& v : values) v *= scale;
  return {grid, std::move(values)};
}

std::vector<Complex> asymptotic_gaussian(double sigma, double tau, const Grid& grid) {
  check_sigma_tau(sigma, tau);
  if (tau <= 0.0) throw std::invalid_argument("asymptotic_gaussian: tau must be positive");
  check_grid(grid);
  // f(k) = integral psi0(x) e^{-ikx} dx = (pi sigma^2)^{-1/4} sqrt(2 pi) sigma exp(-k^2 sigma^2 / 2).
  const double f0 = std::pow(kPi * sigma * sigma, -0.25) * std::sqrt(2.0 * kPi) * sigma;
  std::vector<Complex> values(grid.n_points);
  for (std::size_t k = 0; k < grid.n_points; ++k) {
    const double x = grid.x(k);
    const double q = x / tau;
    values[k] = f0 * std::exp(-q * q * sigma * sigma / 2.0) / std::sqrt(2.0 * kPi * tau) *
                std::polar(1.0, x * x / (2.0 * tau));
  }
  return values;
}

double measured_width(const GridWavefunction& psi) {
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double x = psi.grid().x(k);
    m1 += x * psi.density(k);
    m2 += x * x * psi.density(k);
  }
  const double dx = psi.grid().dx();
  m1 *= dx;
  m2 *= dx;
  return std::sqrt(2.0 * (m2 - m1 * m1));
}

double relative_distance_up_to_phase(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("relative_distance_up_to_phase: size mismatch");
  Complex cross = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    cross += std::conj(b[k]) * a[k];
    na += std::norm(a[k]);
    nb += std::norm(b[k]);
  }
  if (na == 0.0) throw std::invalid_argument("relative_distance_up_to_phase: zero reference");
  // ||a - c b||^2 with |c| = 1 is minimized at c = cross / |cross|.
  const double d2 = std::max(0.0, na + nb - 2.0 * std::abs(cross));
  return std::sqrt(d2 / na);
}

std::vector<double> phase_gradient(const GridWavefunction& psi) {
  const std::size_t n = psi.size();
  const double dx = psi.grid().dx();
  std::vector<double> grad(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = psi.density(k);
    if (p < kDensityFloor) continue;
    Complex derivative;
    if (k == 0) {
      derivative = (psi[1] - psi[0]) / dx;
    } else if (k == n - 1) {
      derivative = (psi[n - 1] - psi[n - 2]) / dx;
    } else {
      derivative = (psi[k + 1] - psi[k - 1]) / (2.0 * dx);
    }
    grad[k] = std::imag(std::conj(psi[k]) * derivative) / p;
  }
  return grad;
}

namespace {

std::vector<double> optimal_density(const GridWavefunction& psi) {
  const std::vector<double> grad = phase_gradient(psi);
  std::vector<double> rho(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) rho[k] = std::cbrt(psi.density(k) * grad[k] * grad[k]);
  return rho;
}

double trapezoid(const std::vector<double>& y, double dx) {
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < y.size(); ++k) sum += 0.5 * (y[k] + y[k + 1]);
  return sum * dx;
}

}  // namespace

double lambda_functional(const GridWavefunction& psi) { return trapezoid(optimal_density(psi), psi.grid().dx()); }

PartitionPlan partition_with_cells(const GridWavefunction& psi, std::size_t cells) {
  if (cells < 1) throw std::invalid_argument("partition_with_cells: need at least one cell");
  const Grid& grid = psi.grid();
  const double dx = grid.dx();
  std::vector<double> rho = optimal_density(psi);
  if (trapezoid(rho, dx) <= 0.0) std::fill(rho.begin(), rho.end(), 1.0);

  // Cumulative density at x_min + k dx, k = 0..n, inverted piecewise linearly.
  // The grid is periodic, so the point at x_max repeats the one at x_min.
  rho.push_back(rho.front());
  std::vector<double> cumulative(rho.size(), 0.0);
  for (std::size_t k = 1; k < rho.size(); ++k) cumulative[k] = cumulative[k - 1] + 0.5 * (rho[k - 1] + rho[k]) * dx;
  const double total = cumulative.back();

  PartitionPlan plan;
  plan.cell_edges.reserve(cells + 1);
  plan.cell_edges.push_back(grid.x_min);
  std::size_t k = 0;
  for (std::size_t n = 1; n < cells; ++n) {
    const double target = total * static_cast<double>(n) / static_cast<double>(cells);
    while (k + 1 < cumulative.size() && cumulative[k + 1] < target) ++k;
    const double step = cumulative[k + 1] - cumulative[k];
    const double frac = step > 0.0 ? (target - cumulative[k]) / step : 0.0;
    const double edge = grid.x_min + (static_cast<double>(k) + frac) * dx;
    plan.cell_edges.push_back(std::max(edge, plan.cell_edges.back()));
  }
  plan.cell_edges.push_back(grid.x_max);

  const std::vector<Complex>& values = psi.values();
  for (std::size_t n = 0; n < cells; ++n) {
    const double center = 0.5 * (plan.cell_edges[n] + plan.cell_edges[n + 1]);
    plan.cell_centers.push_back(center);
    plan.cell_phases.push_back(-2.0 * std::arg(interpolate(grid, values, center)));
  }
  return plan;
}

PartitionPlan optimal_partition(const GridWavefunction& psi, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("optimal_partition: epsilon must lie in (0, 1)");
  const double n = std::ceil(cell_count(epsilon, lambda_functional(psi), 1));
  return partition_with_cells(psi, std::max<std::size_t>(1, static_cast<std::size_t>(n)));
}

GridWavefunction stepwise_conjugate(const GridWavefunction& psi, const PartitionPlan& plan) {
  const std::size_t cells = plan.cells();
  if (cells == 0 || plan.cell_edges.size() != cells + 1 || plan.cell_phases.size() != cells) {
    throw std::invalid_argument("stepwise_conjugate: malformed partition");
  }
  const Grid& grid = psi.grid();
  std::vector<Complex> out(psi.values());
  double uncovered = 0.0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double x = grid.x(k);
    if (x < plan.cell_edges.front() || x > plan.cell_edges.back()) {
      uncovered += psi.density(k) * grid.dx();
      continue;
    }
    while (n + 1 < cells && x >= plan.cell_edges[n + 1]) ++n;
    out[k] *= std::polar(1.0, plan.cell_phases[n]);
  }
  if (uncovered > 1e-12) throw std::invalid_argument("stepwise_conjugate: partition does not cover the packet");
  return {grid, std::move(out)};
}

double overlap_probability(const GridWavefunction& a, const GridWavefunction& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("overlap_probability: grid mismatch");
  Complex sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::conj(a[k]) * b[k];
  return std::norm(sum * a.grid().dx());
}

namespace {

template <typename Visit>
void for_each_cell(const GridWavefunction& psi, const PartitionPlan& plan, Visit visit) {
  const std::vector<double> grad = phase_gradient(psi);
  std::vector<double> density(psi.size());
  for (std::size_t k = 0; k < psi.size(); ++k) density[k] = psi.density(k);
  for (std::size_t n = 0; n < plan.cells(); ++n) {
    const double width = plan.cell_edges[n + 1] - plan.cell_edges[n];
    const double x = plan.cell_centers[n];
    visit(interpolate(psi.grid(), density, x), width, interpolate(psi.grid(), grad, x));
  }
}

}  // namespace

double overlap_estimate(const GridWavefunction& psi, const PartitionPlan& plan) {
  double sum = 0.0;
  for_each_cell(psi, plan, [&](double p, double width, double grad) {
    const double g = grad * width;
    sum += p * width * g * g;
  });
  return 1.0 - sum / 3.0;
}

double max_cell_phase_step(const GridWavefunction& psi, const PartitionPlan& plan, double min_mass) {
  // Probability actually held by each cell, summed over the grid points it
  // contains. Wide tail cells can reach into the bulk, so p(x_n) dx_n would
  // underestimate it.
  const Grid& grid = psi.grid();
  std::vector<double> mass(plan.cells(), 0.0);
  std::size_t cell = 0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double x = grid.x(k);
    while (cell < plan.cells() && x >= plan.cell_edges[cell + 1]) ++cell;
    if (cell == plan.cells()) break;
    if (x >= plan.cell_edges[cell]) mass[cell] += psi.density(k) * grid.dx();
  }
  double largest = 0.0;
  std::size_t n = 0;
  for_each_cell(psi, plan, [&](double, double width, double grad) {
    if (mass[n++] >= min_mass) largest = std::max(largest, std::abs(grad * width));
  });
  return largest;
}

double cell_count(double epsilon, double lambda, int d) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("cell_count: epsilon must be positive");
  if (d < 1) throw std::invalid_argument("cell_count: dimension must be >= 1");
  if (!(lambda >= 0.0)) throw std::invalid_argument("cell_count: lambda must be non-negative");
  return lambda * std::pow(lambda / (3.0 * epsilon), d / 2.0);
}

double gaussian_lambda(double sigma, double tau, int d) {
  check_sigma_tau(sigma, tau);
  if (d < 1) throw std::invalid_argument("gaussian_lambda: dimension must be >= 1");
  const double t = tau / (sigma * sigma);
  const double w = spread_width(sigma, tau);
  const double slope = t / (sigma * sigma * (1.0 + t * t));  // grad phi = slope * r
  const double exponent = static_cast<double>(d) / (d + 2.0);
  const double surface = 2.0 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0);
  // Composite Simpson on r in [0, 12 w].
  const int steps = 20000;
  const double h = 12.0 * w / steps;
  auto integrand = [&](double r) {
    const double p = std::pow(kPi * w * w, -d / 2.0) * std::exp(-r * r / (w * w));
    return std::pow(r, d - 1) * std::pow(p * slope * slope * r * r, exponent);
  };
  double sum = integrand(0.0) + integrand(steps * h);
  for (int i = 1; i < steps; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * h);
  return surface * sum * h / 3.0;
}

GridWavefunction free_propagate(const GridWavefunction& psi, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("free_propagate: non-finite time");
  const std::size_t n = psi.size();
  const double dx = psi.grid().dx();
  std::vector<Complex> buffer(psi.values());
  auto* data = reinterpret_cast<fftw_complex*>(buffer.data());
  const int size = static_cast<int>(n);
  fftw_plan forward = fftw_plan_dft_1d(size, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan backward = fftw_plan_dft_1d(size, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(forward);
  const double dk = 2.0 * kPi / (static_cast<double>(n) * dx);
  for (std::size_t j = 0; j < n; ++j) {
    const double k = dk * (j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n));
    buffer[j] *= std::polar(1.0 / static_cast<double>(n), -0.5 * k * k * t);
  }
  fftw_execute(backward);
  fftw_destroy_plan(forward);
  fftw_destroy_plan(backward);
  return {psi.grid(), std::move(buffer)};
}

WavepacketReversal run_wavepacket_reversal(double sigma, double tau, std::size_t cells) {
  const Grid grid = default_grid(sigma, tau);
  GridWavefunction initial = evolve_gaussian(sigma, 0.0, grid);
  GridWavefunction spread = evolve_gaussian(sigma, tau, grid);
  const PartitionPlan plan = partition_with_cells(spread, cells);
  GridWavefunction conjugated = stepwise_conjugate(spread, plan);
  GridWavefunction refocused = free_propagate(conjugated, tau);
  // U(tau) is real-symmetric in x, so <psi0|U psi~> = <U^dagger psi0|psi~> = <psi(tau)*|psi~>.
  const double overlap = overlap_probability(spread.conjugate(), conjugated);
  const double overlap_fft = overlap_probability(initial, refocused);
  return {cells,
          overlap,
          overlap_fft,
          overlap_estimate(spread, plan),
          max_cell_phase_step(spread, plan),
          std::move(initial),
          std::move(spread),
          std::move(conjugated),
          std::move(refocused)};
}

double spontaneous_reversal_time(double t_universe, double temperature, double epsilon) {
  if (!(t_universe > 0.0) || !std::isfinite(t_universe)) throw std::invalid_argument("t_universe must be positive");
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) throw std::invalid_argument("temperature must be >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double rate = kBoltzmann * temperature / kHbar / std::sqrt(epsilon);  // N per second
  // f(log tau) = N(tau) ln 2 + log tau - log t_U is increasing; f(log t_U) >= 0.
  auto f = [&](double log_tau) { return rate * std::exp(log_tau) * std::numbers::ln2 + log_tau - std::log(t_universe); };
  double hi = std::log(t_universe);
  if (f(hi) == 0.0) return t_universe;
  double lo = hi - 2000.0;
  if (f(lo) > 0.0) throw std::runtime_error("spontaneous_reversal_time: no root in bracket");
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace tempus
