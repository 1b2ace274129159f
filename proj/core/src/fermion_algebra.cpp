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

#include "fermsep/fermion_algebra.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fermsep/linalg.hpp"

namespace fermsep::fermion {

namespace {

using Index = Eigen::Index;
constexpr Complex kI{0.0, 1.0};

void require_modes(int modes, const char* who) {
  if (modes < 1 || modes > kMaxModes) {
    throw InvalidArgument(std::string(who) + ": mode count " + std::to_string(modes) +
                          " outside 1.." + std::to_string(kMaxModes));
  }
}

int modes_of(const ComplexMatrix& rho, const char* who) {
  if (rho.rows() != rho.cols() || rho.rows() < 2) {
    throw InvalidArgument(std::string(who) + ": expected a square 2^m matrix");
  }
  const auto dim = static_cast<std::uint64_t>(rho.rows());
  if ((dim & (dim - 1)) != 0) {
    throw InvalidArgument(std::string(who) + ": dimension " + std::to_string(dim) +
                          " is not a power of two");
  }
  int modes = 0;
  while ((std::uint64_t{1} << modes) < dim) ++modes;
  require_modes(modes, who);
  return modes;
}

void require_split(const ComplexMatrix& rho, const ModeBipartition& split, const char* who) {
  if (rho.rows() != split.dim() || rho.cols() != split.dim()) {
    throw InvalidArgument(std::string(who) + ": matrix dimension " + std::to_string(rho.rows()) +
                          " does not match 2^" + std::to_string(split.modes()));
  }
}

// Single-mode factors in basis (|0>, |1>).
ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}
ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix string_operator(int site, int modes, const ComplexMatrix& local) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  const ComplexMatrix z = pauli_z();
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  for (int j = 1; j <= modes; ++j) {
    out = linalg::kron(out, j < site ? z : (j == site ? local : id));
  }
  return out;
}

}  // namespace

int local_parity_a(std::uint64_t index, const ModeBipartition& split) {
  return occupation(index >> split.modes_b()) & 1;
}

int local_parity_b(std::uint64_t index, const ModeBipartition& split) {
  const std::uint64_t mask = (std::uint64_t{1} << split.modes_b()) - 1;
  return occupation(index & mask) & 1;
}

ComplexMatrix majorana(int k, int modes) {
  require_modes(modes, "majorana");
  if (k < 1 || k > 2 * modes) {
    throw InvalidArgument("majorana: index " + std::to_string(k) + " outside 1.." +
                          std::to_string(2 * modes));
  }
  const int site = (k + 1) / 2;
  if (k % 2 == 1) return string_operator(site, modes, pauli_x());
  return string_operator(site, modes, -pauli_y());
}

ComplexMatrix creation(int k, int modes) {
  require_modes(modes, "creation");
  if (k < 1 || k > modes) {
    throw InvalidArgument("creation: mode " + std::to_string(k) + " outside 1.." +
                          std::to_string(modes));
  }
  return 0.5 * (majorana(2 * k - 1, modes) + kI * majorana(2 * k, modes));
}

ComplexMatrix annihilation(int k, int modes) { return creation(k, modes).adjoint(); }

ComplexMatrix majorana_monomial(std::uint64_t mask, int modes) {
  require_modes(modes, "majorana_monomial");
  if (mask >> (2 * modes) != 0) {
    throw InvalidArgument("majorana_monomial: mask has bits beyond 2m");
  }
  const Index dim = Index{1} << modes;
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (int j = 0; j < 2 * modes; ++j) {
    if ((mask >> j) & 1) out = out * majorana(j + 1, modes);
  }
  return out;
}

ComplexMatrix parity_operator(int modes) {
  require_modes(modes, "parity_operator");
  const Index dim = Index{1} << modes;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    out(i, i) = (occupation(static_cast<std::uint64_t>(i)) & 1) ? -1.0 : 1.0;
  }
  return out;
}

ParityProjectors parity_projectors(const ModeBipartition& split, ParityScope scope) {
  const Index dim = split.dim();
  ParityProjectors p{ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim)};
  for (Index i = 0; i < dim; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    int parity = 0;
    switch (scope) {
      case ParityScope::Global: parity = occupation(idx) & 1; break;
      case ParityScope::A: parity = local_parity_a(idx, split); break;
      case ParityScope::B: parity = local_parity_b(idx, split); break;
    }
    (parity == 0 ? p.even : p.odd)(i, i) = 1.0;
  }
  return p;
}

DensityMatrix block_diagonal_part(const DensityMatrix& rho, const ModeBipartition& split) {
  require_split(rho, split, "block_diagonal_part");
  DensityMatrix out = rho;
  for (Index r = 0; r < rho.rows(); ++r) {
    const auto ri = static_cast<std::uint64_t>(r);
    for (Index c = 0; c < rho.cols(); ++c) {
      const auto ci = static_cast<std::uint64_t>(c);
      if (local_parity_a(ri, split) != local_parity_a(ci, split) ||
          local_parity_b(ri, split) != local_parity_b(ci, split)) {
        out(r, c) = 0.0;
      }
    }
  }
  return out;
}

DensityMatrix global_parity_block(const DensityMatrix& rho, int parity) {
  modes_of(rho, "global_parity_block");
  DensityMatrix out = DensityMatrix::Zero(rho.rows(), rho.cols());
  for (Index r = 0; r < rho.rows(); ++r) {
    if ((occupation(static_cast<std::uint64_t>(r)) & 1) != parity) continue;
    for (Index c = 0; c < rho.cols(); ++c) {
      if ((occupation(static_cast<std::uint64_t>(c)) & 1) == parity) out(r, c) = rho(r, c);
    }
  }
  return out;
}

void validate_density_matrix(const DensityMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw InvalidState("density matrix must be square and non-empty");
  }
  const double herm = linalg::hermiticity_residual(rho);
  if (herm > tol) {
    throw InvalidState("density matrix is not Hermitian (residual " + std::to_string(herm) + ")");
  }
  const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_err > tol * static_cast<double>(rho.rows())) {
    throw InvalidState("density matrix trace differs from 1 by " + std::to_string(trace_err));
  }
  const double min_eig = linalg::min_eigenvalue(rho, tol);
  if (min_eig < -tol) {
    throw InvalidState("density matrix is not positive semidefinite (min eigenvalue " +
                       std::to_string(min_eig) + ")");
  }
}

double parity_commutator_norm(const ComplexMatrix& rho) {
  modes_of(rho, "parity_commutator_norm");
  // [rho, Pi]_rc = rho_rc (pi_c - pi_r): nonzero only across parity sectors.
  double worst = 0.0;
  for (Index r = 0; r < rho.rows(); ++r) {
    const int pr = occupation(static_cast<std::uint64_t>(r)) & 1;
    for (Index c = 0; c < rho.cols(); ++c) {
      if ((occupation(static_cast<std::uint64_t>(c)) & 1) != pr) {
        worst = std::max(worst, 2.0 * std::abs(rho(r, c)));
      }
    }
  }
  return worst;
}

bool is_physical(const DensityMatrix& rho, double tol) {
  modes_of(rho, "is_physical");
  validate_density_matrix(rho, tol);
  return parity_commutator_norm(rho) <= tol;
}

MajoranaCovariance covariance_matrix(const DensityMatrix& rho, double tol) {
  const int modes = modes_of(rho, "covariance_matrix");
  const int n = 2 * modes;
  std::vector<ComplexMatrix> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) c.push_back(majorana(k, modes));

  RealMatrix gamma = RealMatrix::Zero(n, n);
  double imag_residue = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      const auto& ck = c[static_cast<std::size_t>(k)];
      const auto& cl = c[static_cast<std::size_t>(l)];
      const Complex value = 0.5 * kI * (rho * (ck * cl - cl * ck)).trace();
      imag_residue = std::max(imag_residue, std::abs(value.imag()));
      gamma(k, l) = value.real();
      gamma(l, k) = -value.real();
    }
  }
  if (imag_residue > tol) {
    throw InvalidState("covariance_matrix: complex residue " + std::to_string(imag_residue) +
                       " (input is not a physical Hermitian state)");
  }
  return {gamma};
}

DensityMatrix gaussian_state_from_covariance(const MajoranaCovariance& cov, double tol) {
  const RealMatrix& gamma = cov.gamma;
  if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0 || gamma.rows() == 0) {
    throw InvalidArgument("gaussian_state_from_covariance: covariance must be 2m x 2m");
  }
  const int modes = cov.modes();
  require_modes(modes, "gaussian_state_from_covariance");
  if (2 * modes > 8) {
    throw InvalidArgument("gaussian_state_from_covariance: at most 8 Majorana indices");
  }
  if ((gamma + gamma.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw InvalidArgument("gaussian_state_from_covariance: covariance is not antisymmetric");
  }
  // i Gamma is Hermitian; its spectrum must lie in [-1, 1].
  const ComplexMatrix i_gamma = kI * gamma.cast<Complex>();
  const linalg::HermEigResult eig = linalg::herm_eig(i_gamma, tol);
  if (eig.values.maxCoeff() > 1.0 + tol) {
    throw InvalidState("gaussian_state_from_covariance: i*Gamma exceeds identity (max eigenvalue " +
                       std::to_string(eig.values.maxCoeff()) + ")");
  }

  const int n = 2 * modes;
  std::vector<ComplexMatrix> c;
  c.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) c.push_back(majorana(k, modes));

  const Index dim = Index{1} << modes;
  DensityMatrix rho = DensityMatrix::Zero(dim, dim);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = occupation(mask);
    if (size % 2 != 0) continue;
    std::vector<Index> idx;
    for (int j = 0; j < n; ++j) {
      if ((mask >> j) & 1) idx.push_back(j);
    }
    RealMatrix sub(size, size);
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) sub(a, b) = gamma(idx[a], idx[b]);
    }
    const double pf = linalg::pfaffian(sub, tol);
    if (pf == 0.0) continue;
    ComplexMatrix monomial = ComplexMatrix::Identity(dim, dim);
    for (Index j : idx) monomial = monomial * c[static_cast<std::size_t>(j)];
    static const Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    rho += kPowersOfI[(size / 2) % 4] * pf * monomial;
  }
  rho /= static_cast<double>(dim);
  return rho;
}

}  // namespace fermsep::fermion
