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

#include "fermsep/classification.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "fermsep/fermion_algebra.hpp"
#include "fermsep/linalg.hpp"

namespace fermsep::classify {

namespace {

using Index = Eigen::Index;

void require_split(const ComplexMatrix& rho, const ModeBipartition& split, const char* who) {
  if (rho.rows() != split.dim() || rho.cols() != split.dim()) {
    throw InvalidArgument(std::string(who) + ": matrix dimension " + std::to_string(rho.rows()) +
                          " does not match 2^" + std::to_string(split.modes()));
  }
}

bool is_two_qubit(const ModeBipartition& split) {
  return split.modes_a() == 1 && split.modes_b() == 1;
}

// Basis indices of the local parity sector `parity` on `modes` modes.
std::vector<Index> sector_indices(int modes, int parity) {
  std::vector<Index> out;
  for (Index i = 0; i < (Index{1} << modes); ++i) {
    if ((fermion::occupation(static_cast<std::uint64_t>(i)) & 1) == parity) out.push_back(i);
  }
  return out;
}

// Verdict for a set whose only available test is PPT-type: failing is final,
// passing is final only where PPT is exact.
SetVerdict ppt_based(SetLabel label, double witness, double tol, bool exact) {
  SetVerdict v{label, Verdict::NonMember, witness, tol, Criterion::Exact};
  if (witness >= -tol) {
    v.verdict = exact ? Verdict::Member : Verdict::NecessaryOnly;
    v.criterion = exact ? Criterion::Exact : Criterion::Necessary;
  }
  return v;
}

SetVerdict non_physical(SetLabel label, double parity_residual, double tol) {
  return {label, Verdict::NonMember, parity_residual, tol, Criterion::Exact};
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::NecessaryOnly: return "necessary-test-only";
  }
  return "unknown";
}

std::string_view to_string(Criterion c) {
  return c == Criterion::Exact ? "exact" : "necessary";
}

std::string_view to_string(SetLabel s) {
  switch (s) {
    case SetLabel::P1: return "P1";
    case SetLabel::P2: return "P2";
    case SetLabel::P3: return "P3";
    case SetLabel::P1pi: return "P1pi";
    case SetLabel::P2pi: return "P2pi";
    case SetLabel::S1pi: return "S1pi";
    case SetLabel::S2prime: return "S2prime";
    case SetLabel::S2: return "S2";
    case SetLabel::Z1: return "Z1";
  }
  return "unknown";
}

const SetVerdict& ClassificationReport::at(SetLabel label) const {
  for (const auto& v : sets) {
    if (v.set == label) return v;
  }
  throw InvalidArgument("ClassificationReport: set " + std::string(to_string(label)) +
                        " not present");
}

DensityMatrix XStateParams::to_matrix() const {
  DensityMatrix rho(4, 4);
  rho << 1 - x - y + z, p, q, r,
         std::conj(p), x - z, s, t,
         std::conj(q), std::conj(s), y - z, w,
         std::conj(r), std::conj(t), std::conj(w), z;
  return rho;
}

XStateParams XStateParams::from_matrix(const DensityMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw InvalidArgument("XStateParams::from_matrix: expected a 4x4 matrix");
  }
  XStateParams out;
  out.z = rho(3, 3).real();
  out.x = rho(1, 1).real() + out.z;
  out.y = rho(2, 2).real() + out.z;
  out.p = rho(0, 1);
  out.q = rho(0, 2);
  out.r = rho(0, 3);
  out.s = rho(1, 2);
  out.t = rho(1, 3);
  out.w = rho(2, 3);
  return out;
}

ProductTest is_product_P2(const DensityMatrix& rho, const ModeBipartition& split, double tol) {
  require_split(rho, split, "is_product_P2");
  const ComplexMatrix rho_a = linalg::partial_trace(rho, split, Subsystem::A);
  const ComplexMatrix rho_b = linalg::partial_trace(rho, split, Subsystem::B);
  const double residual = linalg::max_abs(rho - linalg::kron(rho_a, rho_b));
  return {residual <= tol, residual, tol};
}

ProductTest is_product_P1(const DensityMatrix& rho, const ModeBipartition& split, double tol) {
  require_split(rho, split, "is_product_P1");
  return is_product_P2(fermion::block_diagonal_part(rho, split), split, tol);
}

ProductTest is_product_P3(const DensityMatrix& rho, const ModeBipartition& split, double tol) {
  require_split(rho, split, "is_product_P3");
  const int m = split.modes();
  if (m > kMaxModesP3) {
    throw InvalidArgument("is_product_P3: supported up to " + std::to_string(kMaxModesP3) +
                          " modes, got " + std::to_string(m));
  }
  const int n = 2 * m;
  const int n_a = 2 * split.modes_a();
  std::vector<ComplexMatrix> c;
  for (int k = 1; k <= n; ++k) c.push_back(fermion::majorana(k, m));

  // Expectation value of every monomial; mono(mask) = mono(mask minus top bit) * c_top.
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<ComplexMatrix> mono(count);
  std::vector<Complex> expect(count);
  mono[0] = ComplexMatrix::Identity(split.dim(), split.dim());
  expect[0] = rho.trace();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    int top = 63 - __builtin_clzll(mask);
    mono[mask] = mono[mask & ~(std::uint64_t{1} << top)] * c[static_cast<std::size_t>(top)];
    expect[mask] = (rho.transpose().cwiseProduct(mono[mask])).sum();
  }

  const std::uint64_t a_masks = std::uint64_t{1} << n_a;
  const std::uint64_t b_masks = std::uint64_t{1} << (n - n_a);
  double residual = 0.0;
  for (std::uint64_t ma = 1; ma < a_masks; ++ma) {
    for (std::uint64_t mb = 1; mb < b_masks; ++mb) {
      const std::uint64_t joint = ma | (mb << n_a);
      residual = std::max(residual, std::abs(expect[joint] - expect[ma] * expect[mb << n_a]));
    }
  }
  return {residual <= tol, residual, tol};
}

bool is_product_pure(const StateVector& psi, const ModeBipartition& split, double tol) {
  if (psi.size() != split.dim()) {
    throw InvalidArgument("is_product_pure: vector dimension " + std::to_string(psi.size()) +
                          " does not match 2^" + std::to_string(split.modes()));
  }
  const double norm = psi.norm();
  if (norm == 0.0) throw InvalidState("is_product_pure: zero vector");
  const StateVector unit = psi / norm;
  double even_weight = 0.0;
  for (Index i = 0; i < unit.size(); ++i) {
    if ((fermion::occupation(static_cast<std::uint64_t>(i)) & 1) == 0) {
      even_weight += std::norm(unit(i));
    }
  }
  if (std::min(even_weight, 1.0 - even_weight) > tol) {
    throw InvalidState("is_product_pure: vector has no definite parity");
  }
  // Schmidt coefficients over both local-parity sectors at once.
  ComplexMatrix coeffs(split.dim_a(), split.dim_b());
  for (Index ia = 0; ia < split.dim_a(); ++ia) {
    for (Index ib = 0; ib < split.dim_b(); ++ib) coeffs(ia, ib) = unit(ia * split.dim_b() + ib);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(coeffs);
  const RealVector& sv = svd.singularValues();
  return sv.size() < 2 || sv(1) <= tol;
}

PptTest is_ppt(const DensityMatrix& rho, const ModeBipartition& split, double tol) {
  require_split(rho, split, "is_ppt");
  const double witness = linalg::min_eigenvalue(linalg::partial_transpose(rho, split), tol);
  return {witness >= -tol, witness, tol};
}

SetVerdict in_S2prime(const DensityMatrix& rho, const ModeBipartition& split,
                      const Tolerances& tol) {
  require_split(rho, split, "in_S2prime");
  const double parity = fermion::parity_commutator_norm(rho);
  if (parity > tol.state) return non_physical(SetLabel::S2prime, parity, tol.state);
  const PptTest ppt = is_ppt(rho, split, tol.state);
  SetVerdict v = ppt_based(SetLabel::S2prime, ppt.witness, tol.state, is_two_qubit(split));
  if (v.verdict == Verdict::NecessaryOnly && is_product_P2(rho, split, tol.membership).member) {
    v.verdict = Verdict::Member;
    v.criterion = Criterion::Exact;
  }
  return v;
}

SetVerdict in_S2(const DensityMatrix& rho, const ModeBipartition& split, const Tolerances& tol) {
  require_split(rho, split, "in_S2");
  const double parity = fermion::parity_commutator_norm(rho);
  if (parity > tol.state) return non_physical(SetLabel::S2, parity, tol.state);
  double witness = 0.0;
  bool first = true;
  for (int block_parity = 0; block_parity < 2; ++block_parity) {
    const DensityMatrix block = fermion::global_parity_block(rho, block_parity);
    const double weight = block.trace().real();
    if (weight <= tol.state) continue;
    const PptTest ppt = is_ppt(block / weight, split, tol.state);
    witness = first ? ppt.witness : std::min(witness, ppt.witness);
    first = false;
  }
  SetVerdict v = ppt_based(SetLabel::S2, witness, tol.state, is_two_qubit(split));
  if (v.verdict == Verdict::NecessaryOnly && is_product_P2(rho, split, tol.membership).member) {
    v.verdict = Verdict::Member;
    v.criterion = Criterion::Exact;
  }
  return v;
}

SetVerdict in_Z1(const DensityMatrix& rho, const ModeBipartition& split, const Tolerances& tol) {
  require_split(rho, split, "in_Z1");
  const DensityMatrix pinched = fermion::block_diagonal_part(rho, split);
  const PptTest ppt = is_ppt(pinched, split, tol.state);
  SetVerdict v = ppt_based(SetLabel::Z1, ppt.witness, tol.state, is_two_qubit(split));
  if (v.verdict == Verdict::NecessaryOnly && is_product_P2(pinched, split, tol.membership).member) {
    v.verdict = Verdict::Member;
    v.criterion = Criterion::Exact;
  }
  return v;
}

SetVerdict in_S1(const DensityMatrix& rho, const ModeBipartition& split, const Tolerances& tol) {
  require_split(rho, split, "in_S1");
  const double parity = fermion::parity_commutator_norm(rho);
  if (parity > tol.state) return non_physical(SetLabel::S1pi, parity, tol.state);
  if (is_two_qubit(split)) {
    // S1pi and S2'pi coincide for 1x1 modes.
    SetVerdict v = in_S2prime(rho, split, tol);
    v.set = SetLabel::S1pi;
    return v;
  }
  if (is_product_P1(rho, split, tol.membership).member) {
    return {SetLabel::S1pi, Verdict::Member, 0.0, tol.membership, Criterion::Exact};
  }
  // Z1 contains S1pi, so its PPT test is necessary.
  SetVerdict v = in_Z1(rho, split, tol);
  v.set = SetLabel::S1pi;
  if (v.verdict == Verdict::Member) {
    v.verdict = Verdict::NecessaryOnly;
    v.criterion = Criterion::Necessary;
  }
  return v;
}

ClassificationReport classify(const DensityMatrix& rho, const ModeBipartition& split,
                              const Tolerances& tol) {
  require_split(rho, split, "classify");
  fermion::validate_density_matrix(rho, tol.state);

  ClassificationReport report;
  report.modes_a = split.modes_a();
  report.modes_b = split.modes_b();
  report.parity_residual = fermion::parity_commutator_norm(rho);
  report.physical = report.parity_residual <= tol.state;

  const auto as_verdict = [&](SetLabel label, const ProductTest& t) {
    return SetVerdict{label, t.member ? Verdict::Member : Verdict::NonMember, t.residual,
                      t.tolerance, Criterion::Exact};
  };

  const ProductTest p1 = is_product_P1(rho, split, tol.membership);
  const ProductTest p2 = is_product_P2(rho, split, tol.membership);
  report.sets.push_back(as_verdict(SetLabel::P1, p1));
  report.sets.push_back(as_verdict(SetLabel::P2, p2));

  if (split.modes() <= kMaxModesP3) {
    report.sets.push_back(as_verdict(SetLabel::P3, is_product_P3(rho, split, tol.membership)));
  } else if (report.physical) {
    // P3 and P2 coincide on physical states.
    SetVerdict v = as_verdict(SetLabel::P3, p2);
    report.sets.push_back(v);
  } else {
    // P3 is contained in P1.
    report.sets.push_back(
        SetVerdict{SetLabel::P3, p1.member ? Verdict::NecessaryOnly : Verdict::NonMember,
                   p1.residual, p1.tolerance, p1.member ? Criterion::Necessary : Criterion::Exact});
  }

  if (report.physical) {
    report.sets.push_back(as_verdict(SetLabel::P1pi, p1));
    report.sets.push_back(as_verdict(SetLabel::P2pi, p2));
  } else {
    report.sets.push_back(non_physical(SetLabel::P1pi, report.parity_residual, tol.state));
    report.sets.push_back(non_physical(SetLabel::P2pi, report.parity_residual, tol.state));
  }
  report.sets.push_back(in_S1(rho, split, tol));
  report.sets.push_back(in_S2prime(rho, split, tol));
  report.sets.push_back(in_S2(rho, split, tol));
  report.sets.push_back(in_Z1(rho, split, tol));
  return report;
}

TwoCopies two_copies(const DensityMatrix& rho, const ModeBipartition& split) {
  require_split(rho, split, "two_copies");
  const ModeBipartition doubled(2 * split.modes_a(), 2 * split.modes_b());
  const int ma = split.modes_a();
  const int mb = split.modes_b();
  // Kronecker order A1 B1 A2 B2 -> A1 A2 B1 B2.
  std::vector<int> perm;
  for (int j = 0; j < ma; ++j) perm.push_back(j);
  for (int j = 0; j < ma; ++j) perm.push_back(ma + mb + j);
  for (int j = 0; j < mb; ++j) perm.push_back(ma + j);
  for (int j = 0; j < mb; ++j) perm.push_back(2 * ma + mb + j);
  return {linalg::permute_qubits(linalg::kron(rho, rho), perm), doubled};
}

TwoCopyBlock two_copy_ee_block(const DensityMatrix& rho, const ModeBipartition& split,
                               double tol) {
  require_split(rho, split, "two_copy_ee_block");
  const double parity = fermion::parity_commutator_norm(rho);
  if (parity > tol) {
    throw InvalidState("two_copy_ee_block: state does not commute with parity (residual " +
                       std::to_string(parity) + ")");
  }
  const std::array<std::vector<Index>, 2> sec_a = {sector_indices(split.modes_a(), 0),
                                                   sector_indices(split.modes_a(), 1)};
  const std::array<std::vector<Index>, 2> sec_b = {sector_indices(split.modes_b(), 0),
                                                   sector_indices(split.modes_b(), 1)};

  // Two-copy A-side labels (alpha, i1, i2) and B-side labels (beta, j1, j2).
  struct Label {
    Index first;
    Index second;
  };
  const auto build = [](const std::array<std::vector<Index>, 2>& sec) {
    std::vector<Label> out;
    for (const auto& s : sec) {
      for (Index i1 : s) {
        for (Index i2 : s) out.push_back({i1, i2});
      }
    }
    return out;
  };
  const std::vector<Label> la = build(sec_a);
  const std::vector<Label> lb = build(sec_b);
  const auto da = static_cast<Index>(la.size());
  const auto db = static_cast<Index>(lb.size());
  const Index dim_b = split.dim_b();

  ComplexMatrix out(da * db, da * db);
  for (Index ra = 0; ra < da; ++ra) {
    for (Index rb = 0; rb < db; ++rb) {
      const Index row1 = la[ra].first * dim_b + lb[rb].first;
      const Index row2 = la[ra].second * dim_b + lb[rb].second;
      for (Index ca = 0; ca < da; ++ca) {
        for (Index cb = 0; cb < db; ++cb) {
          const Index col1 = la[ca].first * dim_b + lb[cb].first;
          const Index col2 = la[ca].second * dim_b + lb[cb].second;
          out(ra * db + rb, ca * db + cb) = rho(row1, col1) * rho(row2, col2);
        }
      }
    }
  }
  return {out, da, db};
}

MultiCopyReport check_multicopy_theorems(const DensityMatrix& rho, const Tolerances& tol) {
  const ModeBipartition split(1, 1);
  require_split(rho, split, "check_multicopy_theorems");
  fermion::validate_density_matrix(rho, tol.state);
  if (fermion::parity_commutator_norm(rho) > tol.state) {
    throw InvalidState("check_multicopy_theorems: state is not physical");
  }

  MultiCopyReport report;
  report.single_copy = is_ppt(rho, split, tol.state);

  const TwoCopyBlock block = two_copy_ee_block(rho, split, tol.state);
  const double witness = linalg::min_eigenvalue(
      linalg::partial_transpose(block.matrix, block.dim_a, block.dim_b), tol.state);
  report.ee_block = {witness >= -tol.state, witness, tol.state};

  const TwoCopies copies = two_copies(rho, split);
  report.two_copy_z1 = in_Z1(copies.rho, copies.split, tol);

  const XStateParams prm = XStateParams::from_matrix(rho);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = std::pow(1 - prm.x - prm.y + prm.z, 2);
  expected(1, 1) = std::pow(prm.x - prm.z, 2);
  expected(2, 2) = std::pow(prm.y - prm.z, 2);
  expected(3, 3) = prm.z * prm.z;
  expected(0, 3) = prm.r * prm.r;
  expected(3, 0) = std::conj(prm.r * prm.r);
  expected(1, 2) = prm.s * prm.s;
  expected(2, 1) = std::conj(prm.s * prm.s);
  report.ee_block_entries_squared = linalg::max_abs(block.matrix - expected) <= tol.state;

  // rho in S2'pi  =>  two copies in Z1 (never reported outside), and
  // two copies in Z1  =>  ee block PPT  <=>  rho PPT.
  const bool two_copy_outside = report.two_copy_z1.verdict == Verdict::NonMember;
  const bool forward = !report.single_copy.member || !two_copy_outside;
  const bool backward = report.single_copy.member || two_copy_outside;
  report.agree = forward && backward && (report.ee_block.member == report.single_copy.member);
  return report;
}

}  // namespace fermsep::classify
