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

#include "fermsep/xychain.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <thread>

#include "fermsep/classification.hpp"
#include "fermsep/measures.hpp"

namespace fermsep::xy {

namespace {

using Index = Eigen::Index;

// tanh(beta L / 2) / L, continued to beta / 2 at L = 0.
double tanh_ratio(double lambda_k, double beta) {
  const double arg = 0.5 * beta * lambda_k;
  if (arg < 1e-8) return 0.5 * beta;
  return std::tanh(arg) / lambda_k;
}

struct Accumulator {
  double n = 0.0;
  double hop = 0.0;
  double pair = 0.0;

  void add(double phi, const XYParams& p) {
    const double eps = std::cos(phi) - p.lambda;
    const double sin_phi = std::sin(phi);
    const double ratio = tanh_ratio(dispersion(phi, p), p.beta);
    const double occupation = 0.5 * (1.0 - ratio * eps);
    n += occupation;
    hop += std::cos(phi) * occupation;
    pair += ratio * p.gamma * sin_phi * sin_phi;
  }

  AdjacentCorrelators mean(int count) const {
    const double inv = 1.0 / count;
    return {n * inv, Complex(hop * inv, 0.0), Complex(pair * inv, 0.0)};
  }
};

AdjacentCorrelators trapezoid(const XYParams& p, int points) {
  if (p.beta == 0.0) return {};
  Accumulator acc;
  const double pi = std::numbers::pi;
  for (int j = 0; j < points; ++j) acc.add(-pi + 2.0 * pi * j / points, p);
  return acc.mean(points);
}

double max_shift(const AdjacentCorrelators& a, const AdjacentCorrelators& b) {
  return std::max({std::abs(a.n_occ - b.n_occ), std::abs(a.hop - b.hop), std::abs(a.pair - b.pair)});
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Runs fn(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(std::min(threads, count));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < errors.size(); ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_grid(const std::vector<double>& grid, const char* name) {
  for (double v : grid) {
    if (!std::isfinite(v)) throw InvalidArgument(std::string(name) + " grid has a non-finite entry");
  }
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void XYParams::validate() const {
  if (!std::isfinite(lambda) || !std::isfinite(gamma) || !std::isfinite(beta)) {
    throw InvalidArgument("XYParams: parameters must be finite");
  }
  if (beta < 0.0) throw InvalidArgument("XYParams: beta must be non-negative");
}

double dispersion(double phi, const XYParams& p) {
  const double eps = std::cos(phi) - p.lambda;
  const double pairing = 2.0 * p.gamma * std::sin(phi);
  return std::sqrt(eps * eps + pairing * pairing);
}

double bogoliubov_angle(double phi, const XYParams& p) {
  const double big_lambda = dispersion(phi, p);
  if (big_lambda == 0.0) throw InvalidArgument("bogoliubov_angle: gapless momentum");
  const double cos2 = std::clamp((std::cos(phi) - p.lambda) / big_lambda, -1.0, 1.0);
  return 0.5 * std::acos(cos2);
}

QuadratureResult correlators_infinite(const XYParams& p, int quad_points, bool adaptive) {
  p.validate();
  if (quad_points < kMinQuadPoints || !is_power_of_two(quad_points)) {
    throw InvalidArgument("correlators_infinite: quad_points must be a power of two >= 64");
  }
  QuadratureResult result;
  int points = quad_points;
  AdjacentCorrelators coarse = trapezoid(p, points);
  while (true) {
    const AdjacentCorrelators fine = trapezoid(p, 2 * points);
    result.shift = max_shift(coarse, fine);
    result.converged = result.shift <= kConvergenceTolerance;
    if (!adaptive || result.converged || 2 * points >= kMaxQuadPoints) {
      // The refined value is kept only in adaptive mode.
      result.value = adaptive ? fine : coarse;
      result.quad_points = adaptive ? 2 * points : points;
      return result;
    }
    points *= 2;
    coarse = fine;
  }
}

AdjacentCorrelators correlators_finite(int n_sites, const XYParams& p) {
  p.validate();
  if (n_sites < 2) throw InvalidArgument("correlators_finite: need at least two sites");
  if (p.beta == 0.0) return {};
  Accumulator acc;
  const double pi = std::numbers::pi;
  for (int j = 0; j < n_sites; ++j) {
    const double k = j - 0.5 * (n_sites - 1);
    acc.add(2.0 * pi * k / n_sites, p);
  }
  return acc.mean(n_sites);
}

fermion::MajoranaCovariance covariance_from_correlators(const ComplexMatrix& g, const ComplexMatrix& f,
                                                        double tol) {
  const Index m = g.rows();
  if (g.cols() != m || f.rows() != m || f.cols() != m) {
    throw InvalidArgument("covariance_from_correlators: shape mismatch");
  }
  // c_{2j-1} = a_j + a_j^dag, c_{2j} = i a_j - i a_j^dag.
  const Complex i(0.0, 1.0);
  ComplexMatrix u = ComplexMatrix::Zero(2 * m, m);  // coefficient of a_j
  ComplexMatrix v = ComplexMatrix::Zero(2 * m, m);  // coefficient of a_j^dag
  for (Index j = 0; j < m; ++j) {
    u(2 * j, j) = 1.0;
    v(2 * j, j) = 1.0;
    u(2 * j + 1, j) = i;
    v(2 * j + 1, j) = -i;
  }
  // <a_j a_l>, <a_j a_l^dag>, <a_j^dag a_l>, <a_j^dag a_l^dag>
  const ComplexMatrix aa = f;
  const ComplexMatrix a_ad = ComplexMatrix::Identity(m, m) - g.transpose();
  const ComplexMatrix ad_a = g;
  const ComplexMatrix ad_ad = f.adjoint();
  const ComplexMatrix cc = u * aa * u.transpose() + u * a_ad * v.transpose() +
                           v * ad_a * u.transpose() + v * ad_ad * v.transpose();
  const ComplexMatrix gamma = i * cc;
  RealMatrix out = RealMatrix::Zero(2 * m, 2 * m);
  for (Index k = 0; k < 2 * m; ++k) {
    for (Index l = 0; l < 2 * m; ++l) {
      if (k == l) continue;
      if (std::abs(gamma(k, l).imag()) > tol) {
        throw InvalidArgument("covariance_from_correlators: correlators give a complex covariance");
      }
      out(k, l) = gamma(k, l).real();
    }
  }
  return {0.5 * (out - out.transpose())};
}

fermion::MajoranaCovariance adjacent_covariance(const AdjacentCorrelators& c) {
  ComplexMatrix g(2, 2);
  g << c.n_occ, c.hop, std::conj(c.hop), c.n_occ;
  ComplexMatrix f(2, 2);
  f << 0.0, c.pair, -c.pair, 0.0;
  return covariance_from_correlators(g, f);
}

DensityMatrix rdm_from_correlators(const AdjacentCorrelators& c, double tol) {
  return fermion::gaussian_state_from_covariance(adjacent_covariance(c), tol);
}

ThermalRdm rdm_two_adjacent(const XYParams& p, int quad_points, bool adaptive) {
  ThermalRdm out;
  out.quadrature = correlators_infinite(p, quad_points, adaptive);
  out.rho = rdm_from_correlators(out.quadrature.value);
  return out;
}

ScanRow evaluate_point(const XYParams& p, const ScanOptions& options) {
  const ThermalRdm rdm = rdm_two_adjacent(p, options.quad_points, options.adaptive);
  const ModeBipartition split(1, 1);
  const classify::Tolerances tol{options.tol, kMembershipTolerance};
  const auto params = classify::XStateParams::from_matrix(rdm.rho);

  ScanRow row;
  row.params = p;
  row.x = params.x;
  row.z = params.z;
  row.s = params.s;
  row.r = params.r;
  row.ppt_witness = classify::is_ppt(rdm.rho, split, options.tol).witness;
  row.s2prime = classify::in_S2prime(rdm.rho, split, tol).verdict == classify::Verdict::Member;
  row.s2 = classify::in_S2(rdm.rho, split, tol).verdict == classify::Verdict::Member;
  row.ef = measures::eof(rdm.rho, options.tol);
  row.ef_pi = measures::eof_parity(rdm.rho, options.tol);
  row.converged = rdm.quadrature.converged;
  return row;
}

ScanTable scan_regions(double lambda, const std::vector<double>& gamma_grid,
                       const std::vector<double>& beta_grid, const ScanOptions& options) {
  check_grid(gamma_grid, "gamma");
  check_grid(beta_grid, "beta");
  ScanTable table;
  table.lambda = lambda;
  const std::size_t nb = beta_grid.size();
  table.rows.resize(gamma_grid.size() * nb);
  parallel_for(table.rows.size(), options.workers, [&](std::size_t idx) {
    const XYParams p{lambda, gamma_grid[idx / nb], beta_grid[idx % nb]};
    table.rows[idx] = evaluate_point(p, options);
  });

  table.boundaries.resize(gamma_grid.size());
  parallel_for(gamma_grid.size(), options.workers, [&](std::size_t g) {
    Boundary& b = table.boundaries[g];
    b.gamma = gamma_grid[g];
    for (std::size_t k = 0; k + 1 < nb; ++k) {
      const ScanRow& lo_row = table.rows[g * nb + k];
      const ScanRow& hi_row = table.rows[g * nb + k + 1];
      if (lo_row.s2prime == hi_row.s2prime) continue;
      double lo = beta_grid[k];
      double hi = beta_grid[k + 1];
      for (int step = 0; step < options.bisection_steps; ++step) {
        const double mid = 0.5 * (lo + hi);
        const ThermalRdm rdm = rdm_two_adjacent({lambda, b.gamma, mid}, options.quad_points, options.adaptive);
        const bool sep = classify::is_ppt(rdm.rho, ModeBipartition(1, 1), options.tol).member;
        (sep == lo_row.s2prime ? lo : hi) = mid;
      }
      b.crossings.push_back(0.5 * (lo + hi));
    }
    b.non_monotone = b.crossings.size() > 1;
  });
  return table;
}

std::vector<EofRow> eof_curve(double lambda, double gamma, const std::vector<double>& beta_grid,
                              const ScanOptions& options) {
  check_grid(beta_grid, "beta");
  std::vector<EofRow> rows(beta_grid.size());
  parallel_for(rows.size(), options.workers, [&](std::size_t k) {
    const ThermalRdm rdm = rdm_two_adjacent({lambda, gamma, beta_grid[k]}, options.quad_points, options.adaptive);
    rows[k] = {beta_grid[k], measures::eof(rdm.rho, options.tol), measures::eof_parity(rdm.rho, options.tol),
               rdm.quadrature.converged};
  });
  return rows;
}

void write_scan_csv(std::ostream& out, const ScanTable& table) {
  out << "lambda,gamma,beta,x,z,re_s,im_s,re_r,im_r,ppt_witness,s2prime,s2,ef,ef_pi,status\n";
  for (const ScanRow& row : table.rows) {
    const double values[] = {row.params.lambda, row.params.gamma, row.params.beta, row.x,
                             row.z,             row.s.real(),     row.s.imag(),     row.r.real(),
                             row.r.imag(),      row.ppt_witness};
    for (double v : values) out << format_double(v) << ',';
    out << (row.s2prime ? 1 : 0) << ',' << (row.s2 ? 1 : 0) << ',' << format_double(row.ef) << ','
        << format_double(row.ef_pi) << ',' << (row.converged ? "ok" : "unconverged") << '\n';
  }
}

void write_eof_csv(std::ostream& out, const std::vector<EofRow>& rows) {
  out << "beta,ef,ef_pi\n";
  for (const EofRow& row : rows) {
    out << format_double(row.beta) << ',' << format_double(row.ef) << ',' << format_double(row.ef_pi)
        << '\n';
  }
}

}  // namespace fermsep::xy
