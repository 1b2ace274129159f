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

// Dense complex matrix kernel. All functions are pure.

#pragma once

#include <span>

#include "fermsep/types.hpp"

namespace fermsep::linalg {

/// Eigenvalues ascending, eigenvectors as orthonormal columns.
struct HermEigResult {
  RealVector values;
  ComplexMatrix vectors;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest absolute entry.
double max_abs(const ComplexMatrix& a);

/// max |a_ij - conj(a_ji)|.
double hermiticity_residual(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// Throws InvalidArgument if a is not square or not Hermitian within tol.
HermEigResult herm_eig(const ComplexMatrix& a, double tol = kDefaultTolerance);

double min_eigenvalue(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// Transposes the indices of the right factor of a (dim_a*dim_b)^2 matrix.
ComplexMatrix partial_transpose(const ComplexMatrix& a, Eigen::Index dim_a, Eigen::Index dim_b);
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const ModeBipartition& split);

/// Returns the reduced matrix on `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& a, Eigen::Index dim_a, Eigen::Index dim_b,
                            Subsystem keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, const ModeBipartition& split,
                            Subsystem keep);

/// Reorders the qubit factors of a 2^n x 2^n matrix: output qubit j is input
/// qubit perm[j], qubit 0 being the most significant.
ComplexMatrix permute_qubits(const ComplexMatrix& a, std::span<const int> perm);

/// Pfaffian of a real antisymmetric matrix. Odd dimension or asymmetry
/// beyond tol throws InvalidArgument. The empty matrix has Pf = 1.
double pfaffian(const RealMatrix& a, double tol = kDefaultTolerance);

}  // namespace fermsep::linalg
