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

#include "fermsep/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fermsep/fermion_algebra.hpp"
#include "fermsep/linalg.hpp"
#include "fermsep/random_states.hpp"

namespace fermsep::measures {

namespace {

using Index = Eigen::Index;

void require_two_qubit(const DensityMatrix& rho, const char* who) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw InvalidArgument(std::string(who) + ": expected a 4x4 (1x1-mode) state");
  }
}

using Vec4 = Eigen::Vector4cd;
using Members = Eigen::Matrix<Complex, 4, Eigen::Dynamic>;

// Pure-state cost of one unnormalized ensemble member: ||psi||^2 E(psi/||psi||).
double member_cost(const Vec4& psi) {
  const double weight = psi.squaredNorm();
  if (weight <= 1e-300) return 0.0;
  const double c = std::min(1.0, 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2)) / weight);
  return weight * eof_from_concurrence(c);
}

// Minimizes the ensemble cost over U(2) mixings of column pairs of `psi`
// (columns are unnormalized ensemble members; psi psi^dagger is invariant).
class PairwiseMinimizer {
 public:
  static constexpr int kGlobalSweeps = 3;

  explicit PairwiseMinimizer(Members psi) : psi_(std::move(psi)) {}

  double cost() const {
    double total = 0.0;
    for (Index i = 0; i < psi_.cols(); ++i) total += member_cost(psi_.col(i));
    return total;
  }

  const Members& members() const { return psi_; }

  double run(int max_sweeps) {
    double current = cost();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      const double before = current;
      const bool global = sweep < kGlobalSweeps;
      for (Index i = 0; i < psi_.cols(); ++i) {
        for (Index j = i + 1; j < psi_.cols(); ++j) {
          if (global) {
            optimize_pair(i, j);
          } else {
            newton_pair(i, j);
          }
        }
      }
      current = cost();
      if (!global && before - current < 1e-14) break;
    }
    return current;
  }

 private:
  double pair_cost(Index i, Index j, double theta, double phi) const {
    const Complex phase = std::polar(1.0, phi);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Vec4 a = c * psi_.col(i) + s * phase * psi_.col(j);
    const Vec4 b = -s * std::conj(phase) * psi_.col(i) + c * psi_.col(j);
    return member_cost(a) + member_cost(b);
  }

  // Rotation generated by z = a + ib: angle |z|, relative phase arg z.
  double pair_cost_z(Index i, Index j, double a, double b) const {
    const double theta = std::hypot(a, b);
    if (theta == 0.0) return member_cost(psi_.col(i)) + member_cost(psi_.col(j));
    return pair_cost(i, j, theta, std::atan2(b, a));
  }

  void apply(Index i, Index j, double theta, double phi) {
    const Complex phase = std::polar(1.0, phi);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Vec4 a = c * psi_.col(i) + s * phase * psi_.col(j);
    const Vec4 b = -s * std::conj(phase) * psi_.col(i) + c * psi_.col(j);
    psi_.col(i) = a;
    psi_.col(j) = b;
  }

  // One damped Newton step in (a, b) from finite differences.
  void newton_pair(Index i, Index j) {
    constexpr double h = 1e-4;
    const double f0 = pair_cost_z(i, j, 0.0, 0.0);
    const double fxp = pair_cost_z(i, j, h, 0.0);
    const double fxm = pair_cost_z(i, j, -h, 0.0);
    const double fyp = pair_cost_z(i, j, 0.0, h);
    const double fym = pair_cost_z(i, j, 0.0, -h);
    const double fxy = pair_cost_z(i, j, h, h);
    const Eigen::Vector2d g((fxp - fxm) / (2 * h), (fyp - fym) / (2 * h));
    if (g.norm() < 1e-12) return;
    Eigen::Matrix2d hess;
    hess(0, 0) = (fxp - 2 * f0 + fxm) / (h * h);
    hess(1, 1) = (fyp - 2 * f0 + fym) / (h * h);
    hess(0, 1) = hess(1, 0) = (fxy - fxp - fyp + f0) / (h * h);
    Eigen::Vector2d step;
    const Eigen::LLT<Eigen::Matrix2d> llt(hess);
    if (llt.info() == Eigen::Success && hess.determinant() > 0.0) {
      step = -llt.solve(g);
    } else {
      step = -g * (0.1 / std::max(1.0, g.norm()));
    }
    if (step.norm() > 0.5) step *= 0.5 / step.norm();
    for (int k = 0; k < 20; ++k, step *= 0.5) {
      if (pair_cost_z(i, j, step(0), step(1)) < f0 - 1e-16) {
        apply(i, j, step.norm(), std::atan2(step(1), step(0)));
        return;
      }
    }
  }

  // Golden-section search of f over [lo, hi] starting from a bracketing guess.
  template <typename F>
  static double golden(F&& f, double lo, double hi, int iters) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - ratio * (hi - lo);
    double x2 = lo + ratio * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int k = 0; k < iters; ++k) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - ratio * (hi - lo);
        f1 = f(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + ratio * (hi - lo);
        f2 = f(x2);
      }
    }
    return f1 < f2 ? x1 : x2;
  }

  void optimize_pair(Index i, Index j) {
    constexpr int kThetaGrid = 12;
    constexpr int kPhiGrid = 6;
    const double pi = std::numbers::pi;
    const double base = pair_cost(i, j, 0.0, 0.0);
    double best = base;
    double best_theta = 0.0;
    double best_phi = 0.0;
    for (int a = 1; a < kThetaGrid; ++a) {
      const double theta = pi * a / kThetaGrid;
      for (int b = 0; b < kPhiGrid; ++b) {
        const double phi = 2.0 * pi * b / kPhiGrid;
        const double value = pair_cost(i, j, theta, phi);
        if (value < best) {
          best = value;
          best_theta = theta;
          best_phi = phi;
        }
      }
    }
    const double dtheta = pi / kThetaGrid;
    const double dphi = 2.0 * pi / kPhiGrid;
    for (int round = 0; round < 3; ++round) {
      best_theta = golden([&](double t) { return pair_cost(i, j, t, best_phi); },
                          best_theta - dtheta, best_theta + dtheta, 30);
      best_phi = golden([&](double p) { return pair_cost(i, j, best_theta, p); },
                        best_phi - dphi, best_phi + dphi, 30);
    }
    best = pair_cost(i, j, best_theta, best_phi);
    if (best < base - 1e-15) apply(i, j, best_theta, best_phi);
  }

  Members psi_;
};

// Weighted eigenvectors sqrt(l_j) v_j of a PSD matrix, dropping null directions.
ComplexMatrix weighted_eigenvectors(const ComplexMatrix& rho, double tol) {
  const linalg::HermEigResult eig = linalg::herm_eig(rho, tol);
  std::vector<Index> keep;
  for (Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) > 1e-14) keep.push_back(k);
  }
  ComplexMatrix v(rho.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    v.col(static_cast<Index>(c)) = std::sqrt(eig.values(keep[c])) * eig.vectors.col(keep[c]);
  }
  return v;
}

struct SectorResult {
  double value = 0.0;
  ComplexMatrix members;
};

SectorResult minimize_sector(const ComplexMatrix& rho_part, const OracleOptions& options,
                             random::Engine& rng, double tol) {
  const ComplexMatrix v = weighted_eigenvectors(rho_part, tol);
  SectorResult best{0.0, ComplexMatrix::Zero(rho_part.rows(), 0)};
  if (v.cols() == 0) return best;
  const Index k = std::max<Index>(options.ensemble_size, v.cols());
  bool first = true;
  for (int restart = 0; restart < options.restarts; ++restart) {
    const ComplexMatrix u = random::haar_unitary(k, rng).leftCols(v.cols());
    PairwiseMinimizer minimizer(v * u.transpose());
    const double value = minimizer.run(options.max_sweeps);
    if (first || value < best.value) {
      best = {value, minimizer.members()};
      first = false;
    }
  }
  return best;
}

void append_members(const ComplexMatrix& members, EnsembleDecomposition& out) {
  for (Index i = 0; i < members.cols(); ++i) {
    const double w = members.col(i).squaredNorm();
    if (w <= 1e-300) continue;
    out.weights.push_back(w);
    out.vectors.push_back(members.col(i) / std::sqrt(w));
  }
}

}  // namespace

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double eof_from_concurrence(double concurrence) {
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double concurrence(const DensityMatrix& rho, double tol) {
  require_two_qubit(rho, "concurrence");
  fermion::validate_density_matrix(rho, tol);
  // sigma_y (x) sigma_y in the occupation basis.
  ComplexMatrix flip = ComplexMatrix::Zero(4, 4);
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const linalg::HermEigResult eig = linalg::herm_eig(rho, tol);
  const RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix sqrt_rho = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  const ComplexMatrix tilde = flip * rho.conjugate() * flip;
  const ComplexMatrix r = sqrt_rho * tilde * sqrt_rho;
  const linalg::HermEigResult reig = linalg::herm_eig(0.5 * (r + r.adjoint()), 1e-6);
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) l[static_cast<std::size_t>(k)] = std::sqrt(std::max(0.0, reig.values(k)));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double eof(const DensityMatrix& rho, double tol) {
  return eof_from_concurrence(concurrence(rho, tol));
}

double eof_parity(const DensityMatrix& rho, double tol) {
  require_two_qubit(rho, "eof_parity");
  if (!fermion::is_physical(rho, tol)) {
    throw InvalidState("eof_parity: state does not commute with parity");
  }
  // Even block spans |00>,|11> with coherence r; odd block |01>,|10> with s.
  double total = 0.0;
  const std::array<std::array<Index, 2>, 2> blocks = {{{0, 3}, {1, 2}}};
  for (const auto& [i, j] : blocks) {
    const double weight = rho(i, i).real() + rho(j, j).real();
    if (weight <= tol) continue;
    const double c = std::min(1.0, 2.0 * std::abs(rho(i, j)) / weight);
    total += weight * eof_from_concurrence(c);
  }
  return total;
}

double pure_state_entanglement(const StateVector& psi) {
  if (psi.size() != 4) throw InvalidArgument("pure_state_entanglement: expected 4 amplitudes");
  const double weight = psi.squaredNorm();
  if (weight == 0.0) throw InvalidArgument("pure_state_entanglement: zero vector");
  return member_cost(Vec4(psi)) / weight;
}

OracleResult eof_oracle(const DensityMatrix& rho, const OracleOptions& options, double tol) {
  require_two_qubit(rho, "eof_oracle");
  if (options.ensemble_size < 4) {
    throw InvalidArgument("eof_oracle: ensemble_size must be at least 4");
  }
  if (options.restarts < 1) throw InvalidArgument("eof_oracle: need at least one restart");
  fermion::validate_density_matrix(rho, tol);
  random::Engine rng(options.seed);

  OracleResult result;
  result.best.parity_definite = options.parity_constrained;
  if (!options.parity_constrained) {
    const SectorResult s = minimize_sector(rho, options, rng, tol);
    result.value = s.value;
    append_members(s.members, result.best);
    return result;
  }
  if (fermion::parity_commutator_norm(rho) > tol) {
    throw InvalidState("eof_oracle: parity-constrained minimization needs a physical state");
  }
  for (int parity = 0; parity < 2; ++parity) {
    const SectorResult s = minimize_sector(fermion::global_parity_block(rho, parity), options, rng, tol);
    result.value += s.value;
    append_members(s.members, result.best);
  }
  return result;
}

}  // namespace fermsep::measures
