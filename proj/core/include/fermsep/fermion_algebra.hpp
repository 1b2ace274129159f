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

// Fermionic operators on Fock space via Jordan-Wigner.
//
// Conventions:
//  * Fock basis |n_1 ... n_m>, n_1 the most significant bit; the vacuum is
//    basis vector 0 and a_k^dagger = Z...Z sigma_minus (k-th factor).
//  * Majoranas c_{2k-1} = a_k^dag + a_k and c_{2k} = -i (a_k^dag - a_k).
//    Under the string above this gives c_{2k-1} = Z..Z X and
//    c_{2k} = -Z..Z Y, with {c_j, c_k} = 2 delta_jk.
//  * Parity Pi = i^m c_1 ... c_{2m} = diag((-1)^{sum n_k}), <0|Pi|0> = +1.

#pragma once

#include <cstdint>

#include "fermsep/types.hpp"

namespace fermsep::fermion {

/// Real antisymmetric 2m x 2m covariance Gamma_kl = (i/2) tr(rho [c_k, c_l]).
struct MajoranaCovariance {
  RealMatrix gamma;

  int modes() const { return static_cast<int>(gamma.rows() / 2); }
};

enum class ParityScope { Global, A, B };

struct ParityProjectors {
  ComplexMatrix even;
  ComplexMatrix odd;
};

/// Number of occupied modes in basis index `index` (popcount).
inline int occupation(std::uint64_t index) { return __builtin_popcountll(index); }

/// Parity (0 even, 1 odd) of the first `modes_a` modes / remaining modes of a
/// basis index on modes_a + modes_b modes.
int local_parity_a(std::uint64_t index, const ModeBipartition& split);
int local_parity_b(std::uint64_t index, const ModeBipartition& split);

/// k in 1..2m.
ComplexMatrix majorana(int k, int modes);
/// k in 1..m.
ComplexMatrix creation(int k, int modes);
ComplexMatrix annihilation(int k, int modes);

/// Product c_{s_1} c_{s_2} ... for a bitmask over Majorana indices (bit j is
/// c_{j+1}), in increasing index order. Empty mask gives the identity.
ComplexMatrix majorana_monomial(std::uint64_t mask, int modes);

ComplexMatrix parity_operator(int modes);
ParityProjectors parity_projectors(const ModeBipartition& split, ParityScope scope);

/// Pinching onto the simultaneous eigenspaces of Pi_A and Pi_B.
DensityMatrix block_diagonal_part(const DensityMatrix& rho, const ModeBipartition& split);

/// Global parity block P_alpha rho P_alpha (alpha = 0 even, 1 odd), unnormalized.
DensityMatrix global_parity_block(const DensityMatrix& rho, int parity);

/// Throws InvalidState unless rho is Hermitian, PSD and unit trace within tol.
void validate_density_matrix(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// Max entry of [rho, Pi]; no validity checks.
double parity_commutator_norm(const ComplexMatrix& rho);

/// Validates rho, then tests [rho, Pi] = 0 within tol.
bool is_physical(const DensityMatrix& rho, double tol = kDefaultTolerance);

MajoranaCovariance covariance_matrix(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// Fermionic Gaussian state with the given covariance, built from the Wick
/// expansion rho = 2^-m sum_{even S} i^{|S|/2} Pf(Gamma_S) c_S.
DensityMatrix gaussian_state_from_covariance(const MajoranaCovariance& cov,
                                             double tol = kDefaultTolerance);

}  // namespace fermsep::fermion
