// Copyright 2026 The fermsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thermal states of the fermionic XY chain
//
//   H = 1/2 sum_n (a_n^dag a_{n+1} + h.c.) - lambda sum_n a_n^dag a_n
//       + gamma sum_n (a_n^dag a_{n+1}^dag + h.c.)
//
// and the reduced state of two adjacent sites. With eps = cos(phi) - lambda,
// Lambda = sqrt(eps^2 + 4 gamma^2 sin^2 phi) and t = tanh(beta Lambda / 2):
//
//   <a_n^dag a_n>     = avg_phi 1/2 (1 - t eps / Lambda)
//   <a_n^dag a_{n+1}> = avg_phi cos(phi) 1/2 (1 - t eps / Lambda)
//   <a_n a_{n+1}>     = avg_phi t gamma sin^2(phi) / Lambda
//
// t / Lambda is continued by beta / 2 at gapless momenta.

#pragma once

#include <iosfwd>
#include <vector>

#include "fermsep/fermion_algebra.hpp"
#include "fermsep/types.hpp"

namespace fermsep::xy {

inline constexpr int kDefaultQuadPoints = 4096;
inline constexpr int kMinQuadPoints = 64;
inline constexpr int kMaxQuadPoints = 1 << 20;
inline constexpr double kConvergenceTolerance = 1e-9;

struct XYParams {
  double lambda = 0.0;
  double gamma = 0.0;
  double beta = 0.0;

  /// Throws InvalidArgument unless all fields are finite and beta >= 0.
  void validate() const;
};

struct AdjacentCorrelators {
  double n_occ = 0.5;  // <a_n^dag a_n>
  Complex hop{};       // <a_n^dag a_{n+1}>
  Complex pair{};      // <a_n a_{n+1}>
};

struct QuadratureResult {
  AdjacentCorrelators value;
  int quad_points = 0;   // grid actually used for `value`
  double shift = 0.0;    // max change of any component under one doubling
  bool converged = false;
};

double dispersion(double phi, const XYParams& p);

/// theta in [0, pi/2] with cos 2theta = eps / Lambda and sin 2theta = 2 gamma sin(phi) / Lambda
/// up to the sign of gamma sin(phi). Throws InvalidArgument where Lambda = 0.
double bogoliubov_angle(double phi, const XYParams& p);

/// Trapezoid rule over phi_j = -pi + 2 pi j / M. With `adaptive`, M is doubled
/// from quad_points until one doubling moves every component by at most 1e-9
/// (or kMaxQuadPoints is reached); otherwise the single comparison against 2M
/// only sets the flag. quad_points must be a power of two >= 64.
QuadratureResult correlators_infinite(const XYParams& p, int quad_points = kDefaultQuadPoints,
                                      bool adaptive = true);

/// Chain of N >= 2 sites on the momentum grid phi_k = 2 pi k / N,
/// k = -(N-1)/2 ... (N-1)/2 (periodic for odd N, antiperiodic for even N).
AdjacentCorrelators correlators_finite(int n_sites, const XYParams& p);

/// Majorana covariance of modes with <a_j^dag a_l> = g(j, l) and
/// <a_j a_l> = f(j, l). Throws InvalidArgument on a non-real result.
fermion::MajoranaCovariance covariance_from_correlators(const ComplexMatrix& g,
                                                        const ComplexMatrix& f,
                                                        double tol = kDefaultTolerance);

fermion::MajoranaCovariance adjacent_covariance(const AdjacentCorrelators& c);

DensityMatrix rdm_from_correlators(const AdjacentCorrelators& c, double tol = kDefaultTolerance);

struct ThermalRdm {
  DensityMatrix rho;
  QuadratureResult quadrature;
};

ThermalRdm rdm_two_adjacent(const XYParams& p, int quad_points = kDefaultQuadPoints,
                            bool adaptive = true);

// --- Scans --------------------------------------------------------------------

struct ScanOptions {
  int quad_points = kDefaultQuadPoints;
  bool adaptive = true;
  int workers = 1;
  double tol = kDefaultTolerance;
  int bisection_steps = 50;
};

struct ScanRow {
  XYParams params;
  double x = 0.0;  // occupation of each site
  double z = 0.0;  // <n_1 n_2>
  Complex s{};     // |01><10| coherence
  Complex r{};     // |00><11| coherence
  double ppt_witness = 0.0;
  bool s2prime = false;
  bool s2 = false;
  double ef = 0.0;
  double ef_pi = 0.0;
  bool converged = false;
};

struct Boundary {
  double gamma = 0.0;
  std::vector<double> crossings;  // beta values where the PPT witness changes sign
  bool non_monotone = false;      // more than one crossing
};

struct ScanTable {
  double lambda = 0.0;
  std::vector<ScanRow> rows;  // gamma-major, beta-minor, in grid order
  std::vector<Boundary> boundaries;
};

/// Evaluates one grid point: reduced state, PPT witness, S2'pi / S2pi
/// verdicts and both entanglements of formation.
ScanRow evaluate_point(const XYParams& p, const ScanOptions& options = {});

ScanTable scan_regions(double lambda, const std::vector<double>& gamma_grid,
                       const std::vector<double>& beta_grid, const ScanOptions& options = {});

struct EofRow {
  double beta = 0.0;
  double ef = 0.0;
  double ef_pi = 0.0;
  bool converged = false;
};

std::vector<EofRow> eof_curve(double lambda, double gamma, const std::vector<double>& beta_grid,
                              const ScanOptions& options = {});

void write_scan_csv(std::ostream& out, const ScanTable& table);
void write_eof_csv(std::ostream& out, const std::vector<EofRow>& rows);

}  // namespace fermsep::xy
