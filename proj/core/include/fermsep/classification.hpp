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

// Membership tests for the product sets P1, P2, P3 (and their physical
// restrictions), the separable sets S2pi subset S2'pi subset S1pi and the
// equivalence class Z1, plus the two-copy constructions.
//
// PPT is exact for two qubits only. On any larger split a passed PPT test is
// reported as Verdict::NecessaryOnly; a failed one is a definite
// non-membership.

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fermsep/types.hpp"

namespace fermsep::classify {

enum class Verdict {
  Member,
  NonMember,
  NecessaryOnly,  // passed a necessary test; membership undecided
};

enum class Criterion { Exact, Necessary };

enum class SetLabel { P1, P2, P3, P1pi, P2pi, S1pi, S2prime, S2, Z1 };

inline constexpr std::array<SetLabel, 9> kAllSets = {
    SetLabel::P1,   SetLabel::P2,      SetLabel::P3, SetLabel::P1pi, SetLabel::P2pi,
    SetLabel::S1pi, SetLabel::S2prime, SetLabel::S2, SetLabel::Z1};

std::string_view to_string(Verdict v);
std::string_view to_string(Criterion c);
std::string_view to_string(SetLabel s);

struct ProductTest {
  bool member = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct PptTest {
  bool member = false;
  double witness = 0.0;  // minimum eigenvalue of the partial transpose
  double tolerance = 0.0;
};

struct SetVerdict {
  SetLabel set = SetLabel::P1;
  Verdict verdict = Verdict::NonMember;
  double witness = 0.0;
  double tolerance = 0.0;
  Criterion criterion = Criterion::Exact;
};

struct Tolerances {
  double state = kDefaultTolerance;         // Hermiticity, PSD, PPT eigenvalues
  double membership = kMembershipTolerance;  // factorization residuals
};

struct ClassificationReport {
  int modes_a = 1;
  int modes_b = 1;
  bool physical = false;
  double parity_residual = 0.0;
  std::vector<SetVerdict> sets;

  const SetVerdict& at(SetLabel label) const;
};

/// The nine parameters of the generic 1x1 state in basis (|00>,|01>,|10>,|11>):
///
///   [ 1-x-y+z   p      q      r ]
///   [ p*        x-z    s      t ]
///   [ q*        s*     y-z    w ]
///   [ r*        t*     w*     z ]
///
/// x is the occupation of mode B, y that of mode A, z = <n_A n_B>.
struct XStateParams {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  Complex p{}, q{}, r{}, s{}, t{}, w{};

  DensityMatrix to_matrix() const;
  static XStateParams from_matrix(const DensityMatrix& rho);
};

/// rho = tr_B(rho) (x) tr_A(rho) within tol (max-entry residual).
ProductTest is_product_P2(const DensityMatrix& rho, const ModeBipartition& split,
                          double tol = kMembershipTolerance);

/// The local-parity pinching of rho is a product of parity-commuting factors.
ProductTest is_product_P1(const DensityMatrix& rho, const ModeBipartition& split,
                          double tol = kMembershipTolerance);

/// <M_A M_B> = <M_A><M_B> over all Majorana monomials of both subsystems.
/// Limited to m <= 4.
ProductTest is_product_P3(const DensityMatrix& rho, const ModeBipartition& split,
                          double tol = kMembershipTolerance);

inline constexpr int kMaxModesP3 = 4;

/// Pure state with definite global parity; member iff its Schmidt rank is one.
/// Throws InvalidState if psi is not a parity eigenvector.
bool is_product_pure(const StateVector& psi, const ModeBipartition& split,
                     double tol = kMembershipTolerance);

PptTest is_ppt(const DensityMatrix& rho, const ModeBipartition& split,
               double tol = kDefaultTolerance);

SetVerdict in_S2prime(const DensityMatrix& rho, const ModeBipartition& split,
                      const Tolerances& tol = {});
SetVerdict in_S2(const DensityMatrix& rho, const ModeBipartition& split,
                 const Tolerances& tol = {});
SetVerdict in_S1(const DensityMatrix& rho, const ModeBipartition& split,
                 const Tolerances& tol = {});
SetVerdict in_Z1(const DensityMatrix& rho, const ModeBipartition& split,
                 const Tolerances& tol = {});

/// Full report. Throws InvalidState if rho is not a valid density matrix.
ClassificationReport classify(const DensityMatrix& rho, const ModeBipartition& split,
                              const Tolerances& tol = {});

// --- Two copies -------------------------------------------------------------

/// rho (x) rho regrouped as A1 A2 | B1 B2 (plain Kronecker product, qubit
/// reordering only).
struct TwoCopies {
  DensityMatrix rho;
  ModeBipartition split;
};
TwoCopies two_copies(const DensityMatrix& rho, const ModeBipartition& split);

/// Even-even local-parity block of the two-copy state. Rows are indexed by
/// (alpha, i_1, i_2) on the A side and (beta, j_1, j_2) on the B side, where
/// i_k, j_k run over the local parity sector alpha/beta of copy k; diagonal
/// blocks are rho_ab (x) rho_ab and the couplings are C (x) C and D (x) D.
struct TwoCopyBlock {
  ComplexMatrix matrix;  // unnormalized
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;
};
TwoCopyBlock two_copy_ee_block(const DensityMatrix& rho, const ModeBipartition& split,
                               double tol = kDefaultTolerance);

struct MultiCopyReport {
  PptTest single_copy;        // PPT of rho, i.e. rho in S2'pi at 1x1
  PptTest ee_block;           // PPT of the two-copy ee block
  SetVerdict two_copy_z1;     // Z1 test on rho (x) rho over (2, 2) modes
  bool ee_block_entries_squared = false;  // entries of the 1x1 block are squares of rho's
  bool agree = false;         // both directions of the 1x1 equivalence hold
};

/// 1x1 physical states only.
MultiCopyReport check_multicopy_theorems(const DensityMatrix& rho, const Tolerances& tol = {});

// --- Randomized search for a P1pi state with NPPT ----------------------------

struct SearchOptions {
  int modes_a = 2;
  int modes_b = 2;
  std::uint64_t seed = 1;
  std::uint64_t max_iters = 100000;
  double min_violation = 1e-6;  // required depth of the negative PT eigenvalue
  double concentration = 0.5;   // Dirichlet parameter for local spectra
};

struct SearchResult {
  bool found = false;
  std::uint64_t iterations = 0;
  DensityMatrix state;
  double ppt_witness = 0.0;
  double p1_residual = 0.0;
  double epsilon = 0.0;
};

/// Draws even rho_A (x) rho_B, adds eps*R with R Hermitian, supported on the
/// parity-preserving blocks that couple different local-parity pairs, halving
/// eps until PSD, and stops at the first state whose partial transpose has an
/// eigenvalue <= -min_violation. Deterministic for a given seed.
SearchResult search_p1_nppt_counterexample(const SearchOptions& options);

}  // namespace fermsep::classify
