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

#include "fermsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace fermsep::linalg {

namespace {

using Index = Eigen::Index;

void require_square(const ComplexMatrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw InvalidArgument(std::string(who) + ": expected a non-empty square matrix, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_bipartite(const ComplexMatrix& a, Index dim_a, Index dim_b, const char* who) {
  require_square(a, who);
  if (dim_a < 1 || dim_b < 1 || a.rows() != dim_a * dim_b) {
    throw InvalidArgument(std::string(who) + ": matrix dimension " + std::to_string(a.rows()) +
                          " does not match " + std::to_string(dim_a) + " x " +
                          std::to_string(dim_b));
  }
}

// Expansion along the first row; used for n <= 6.
double pfaffian_expand(const RealMatrix& a) {
  const Index n = a.rows();
  if (n == 0) return 1.0;
  if (n == 2) return a(0, 1);
  double total = 0.0;
  double sign = 1.0;
  for (Index j = 1; j < n; ++j, sign = -sign) {
    if (a(0, j) == 0.0) continue;
    std::vector<Index> rest;
    rest.reserve(static_cast<std::size_t>(n - 2));
    for (Index k = 1; k < n; ++k) {
      if (k != j) rest.push_back(k);
    }
    RealMatrix minor(n - 2, n - 2);
    for (Index r = 0; r < n - 2; ++r) {
      for (Index c = 0; c < n - 2; ++c) minor(r, c) = a(rest[r], rest[c]);
    }
    total += sign * a(0, j) * pfaffian_expand(minor);
  }
  return total;
}

// Parlett-Reid reduction to tridiagonal antisymmetric form with pivoting.
double pfaffian_parlett_reid(RealMatrix a) {
  const Index n = a.rows();
  double result = 1.0;
  for (Index k = 0; k + 1 < n; k += 2) {
    Index pivot = k + 1;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&pivot);
    pivot += k + 1;
    if (pivot != k + 1) {
      a.row(k + 1).swap(a.row(pivot));
      a.col(k + 1).swap(a.col(pivot));
      result = -result;
    }
    const double head = a(k, k + 1);
    if (head == 0.0) return 0.0;
    result *= head;
    if (k + 2 < n) {
      // Eliminate column k below the sub-diagonal; keeps antisymmetry.
      const RealVector tau = a.row(k).tail(n - k - 2) / head;
      const RealVector col = a.col(k + 1).tail(n - k - 2);
      a.bottomRightCorner(n - k - 2, n - k - 2) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return result;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& a) {
  require_square(a, "hermiticity_residual");
  return max_abs(a - a.adjoint());
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.rows() == a.cols() && a.rows() > 0 && hermiticity_residual(a) <= tol;
}

HermEigResult herm_eig(const ComplexMatrix& a, double tol) {
  require_square(a, "herm_eig");
  const double residual = hermiticity_residual(a);
  if (residual > tol) {
    throw InvalidArgument("herm_eig: matrix is not Hermitian (residual " +
                          std::to_string(residual) + ")");
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw InvalidArgument("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const ComplexMatrix& a, double tol) {
  require_square(a, "min_eigenvalue");
  const double residual = hermiticity_residual(a);
  if (residual > tol) {
    throw InvalidArgument("min_eigenvalue: matrix is not Hermitian (residual " +
                          std::to_string(residual) + ")");
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

ComplexMatrix partial_transpose(const ComplexMatrix& a, Index dim_a, Index dim_b) {
  require_bipartite(a, dim_a, dim_b, "partial_transpose");
  ComplexMatrix out(a.rows(), a.cols());
  for (Index ia = 0; ia < dim_a; ++ia) {
    for (Index ja = 0; ja < dim_a; ++ja) {
      out.block(ia * dim_b, ja * dim_b, dim_b, dim_b) =
          a.block(ia * dim_b, ja * dim_b, dim_b, dim_b).transpose();
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const ModeBipartition& split) {
  return partial_transpose(rho, split.dim_a(), split.dim_b());
}

ComplexMatrix partial_trace(const ComplexMatrix& a, Index dim_a, Index dim_b, Subsystem keep) {
  require_bipartite(a, dim_a, dim_b, "partial_trace");
  if (keep == Subsystem::A) {
    ComplexMatrix out(dim_a, dim_a);
    for (Index ia = 0; ia < dim_a; ++ia) {
      for (Index ja = 0; ja < dim_a; ++ja) {
        out(ia, ja) = a.block(ia * dim_b, ja * dim_b, dim_b, dim_b).trace();
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Index ia = 0; ia < dim_a; ++ia) {
    out += a.block(ia * dim_b, ia * dim_b, dim_b, dim_b);
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const ModeBipartition& split,
                            Subsystem keep) {
  return partial_trace(rho, split.dim_a(), split.dim_b(), keep);
}

ComplexMatrix permute_qubits(const ComplexMatrix& a, std::span<const int> perm) {
  require_square(a, "permute_qubits");
  const int n = static_cast<int>(perm.size());
  if (a.rows() != (Index{1} << n)) {
    throw InvalidArgument("permute_qubits: dimension is not 2^" + std::to_string(n));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw InvalidArgument("permute_qubits: not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  const Index dim = a.rows();
  std::vector<Index> map(static_cast<std::size_t>(dim));
  for (Index out_idx = 0; out_idx < dim; ++out_idx) {
    Index in_idx = 0;
    for (int j = 0; j < n; ++j) {
      const Index bit = (out_idx >> (n - 1 - j)) & 1;
      in_idx |= bit << (n - 1 - perm[static_cast<std::size_t>(j)]);
    }
    map[static_cast<std::size_t>(out_idx)] = in_idx;
  }
  ComplexMatrix out(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      out(r, c) = a(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

double pfaffian(const RealMatrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw InvalidArgument("pfaffian: matrix is not square");
  }
  if (a.rows() % 2 != 0) {
    throw InvalidArgument("pfaffian: odd dimension " + std::to_string(a.rows()));
  }
  if (a.rows() == 0) return 1.0;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double asym = (a + a.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol * scale) {
    throw InvalidArgument("pfaffian: matrix is not antisymmetric (residual " +
                          std::to_string(asym) + ")");
  }
  const RealMatrix anti = 0.5 * (a - a.transpose());
  if (anti.rows() <= 6) return pfaffian_expand(anti);
  return pfaffian_parlett_reid(anti);
}

}  // namespace fermsep::linalg
