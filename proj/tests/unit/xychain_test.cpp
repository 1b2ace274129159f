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

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

#include "fermsep/classification.hpp"
#include "fermsep/fermion_algebra.hpp"
#include "fermsep/linalg.hpp"
#include "test_support.hpp"

namespace fermsep {
namespace {

using xy::XYParams;

constexpr double kPi = std::numbers::pi;

TEST(Dispersion, ClosedForms) {
  EXPECT_NEAR(xy::dispersion(0.0, {1.0, 0.7, 1.0}), 0.0, 1e-15);
  for (double phi : {-2.0, 0.3, 1.9}) EXPECT_NEAR(xy::dispersion(phi, {0.0, 0.5, 1.0}), 1.0, 1e-15);
  EXPECT_NEAR(xy::dispersion(kPi / 2, {0.5, 0.3, 1.0}), std::sqrt(0.61), 1e-15);
}

TEST(BogoliubovAngle, Limits) {
  EXPECT_NEAR(xy::bogoliubov_angle(0.2, {0.5, 1e-12, 1.0}), 0.0, 1e-9);
  const double phi = std::acos(0.4);
  EXPECT_NEAR(xy::bogoliubov_angle(phi, {0.4, 0.3, 1.0}), kPi / 4, 1e-12);
  EXPECT_THROW(xy::bogoliubov_angle(0.0, {1.0, 0.3, 1.0}), InvalidArgument);
}

TEST(XYParams, Validation) {
  EXPECT_THROW((XYParams{0.5, 0.5, -1.0}.validate()), InvalidArgument);
  EXPECT_THROW((XYParams{NAN, 0.5, 1.0}.validate()), InvalidArgument);
  EXPECT_NO_THROW((XYParams{0.5, 0.5, 0.0}.validate()));
}

TEST(CorrelatorsInfinite, InfiniteTemperature) {
  const auto q = xy::correlators_infinite({0.3, 0.7, 0.0});
  EXPECT_EQ(q.value.n_occ, 0.5);
  EXPECT_EQ(q.value.hop, Complex(0.0));
  EXPECT_EQ(q.value.pair, Complex(0.0));
  EXPECT_TRUE(q.converged);
}

TEST(CorrelatorsInfinite, FullBandBelowTheField) {
  // gamma = 0 and lambda > 1: every mode has cos(phi) - lambda < 0.
  const auto q = xy::correlators_infinite({1.5, 0.0, 200.0});
  EXPECT_NEAR(q.value.n_occ, 1.0, 1e-12);
  EXPECT_NEAR(std::abs(q.value.pair), 0.0, 1e-15);
  const auto q_above = xy::correlators_infinite({-1.5, 0.0, 200.0});
  EXPECT_NEAR(q_above.value.n_occ, 0.0, 1e-12);
}

TEST(CorrelatorsInfinite, MatchesLargeFiniteChain) {
  const XYParams p{0.5, 0.4, 2.0};
  const auto inf = xy::correlators_infinite(p);
  const auto fin = xy::correlators_finite(500, p);
  EXPECT_NEAR(inf.value.n_occ, fin.n_occ, 1e-6);
  EXPECT_NEAR(std::abs(inf.value.hop - fin.hop), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(inf.value.pair - fin.pair), 0.0, 1e-6);
}

TEST(CorrelatorsInfinite, CoarseGridFlagsNonConvergence) {
  const auto q = xy::correlators_infinite({0.95, 1.0, 20.0}, 64, false);
  EXPECT_FALSE(q.converged);
  EXPECT_GT(q.shift, xy::kConvergenceTolerance);
  const auto refined = xy::correlators_infinite({0.95, 1.0, 20.0}, 64, true);
  EXPECT_TRUE(refined.converged);
  EXPECT_GT(refined.quad_points, 64);
}

TEST(CorrelatorsInfinite, RejectsBadGrid) {
  EXPECT_THROW(xy::correlators_infinite({0.5, 0.5, 1.0}, 32), InvalidArgument);
  EXPECT_THROW(xy::correlators_infinite({0.5, 0.5, 1.0}, 100), InvalidArgument);
}

TEST(CorrelatorsInfinite, GaplessPointIsSmooth) {
  const auto q = xy::correlators_infinite({1.0, 0.5, 3.0});
  EXPECT_TRUE(q.converged);
  EXPECT_TRUE(std::isfinite(q.value.n_occ));
}

TEST(CorrelatorsFinite, InfiniteTemperature) {
  EXPECT_EQ(xy::correlators_finite(3, {0.5, 0.5, 0.0}).n_occ, 0.5);
}

TEST(CorrelatorsFinite, SelfConvergence) {
  const XYParams p{0.5, 0.4, 2.0};
  const auto a = xy::correlators_finite(201, p);
  const auto b = xy::correlators_finite(401, p);
  EXPECT_NEAR(a.n_occ, b.n_occ, 1e-5);
  EXPECT_NEAR(std::abs(a.hop - b.hop), 0.0, 1e-5);
  EXPECT_NEAR(std::abs(a.pair - b.pair), 0.0, 1e-5);
}

TEST(CorrelatorsFinite, RejectsTinyChains) {
  EXPECT_THROW(xy::correlators_finite(1, {0.5, 0.5, 1.0}), InvalidArgument);
}

TEST(CovarianceFromCorrelators, VacuumAndFilled) {
  ComplexMatrix g = ComplexMatrix::Zero(1, 1);
  ComplexMatrix f = ComplexMatrix::Zero(1, 1);
  DensityMatrix vacuum = ComplexMatrix::Zero(2, 2);
  vacuum(0, 0) = 1.0;
  EXPECT_LT((xy::covariance_from_correlators(g, f).gamma - fermion::covariance_matrix(vacuum).gamma)
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  g(0, 0) = 1.0;
  DensityMatrix filled = ComplexMatrix::Zero(2, 2);
  filled(1, 1) = 1.0;
  EXPECT_LT((xy::covariance_from_correlators(g, f).gamma - fermion::covariance_matrix(filled).gamma)
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
}

TEST(RdmFromCorrelators, ReproducesInputCorrelators) {
  const xy::AdjacentCorrelators c{0.62, Complex(-0.17, 0.0), Complex(0.15, 0.0)};
  const DensityMatrix rho = xy::rdm_from_correlators(c);
  const ComplexMatrix a1 = fermion::annihilation(1, 2);
  const ComplexMatrix a2 = fermion::annihilation(2, 2);
  EXPECT_NEAR((rho * a1.adjoint() * a1).trace().real(), 0.62, 1e-12);
  EXPECT_NEAR((rho * a2.adjoint() * a2).trace().real(), 0.62, 1e-12);
  EXPECT_NEAR(std::abs((rho * a1.adjoint() * a2).trace() - c.hop), 0.0, 1e-12);
  EXPECT_NEAR(std::abs((rho * a1 * a2).trace() - c.pair), 0.0, 1e-12);
}

TEST(RdmTwoAdjacent, InfiniteTemperatureIsMaximallyMixed) {
  EXPECT_EQ(testing::max_diff(xy::rdm_two_adjacent({0.8, 0.3, 0.0}).rho, testing::maximally_mixed(4)), 0.0);
}

TEST(RdmTwoAdjacent, XFormAndWickRelation) {
  for (double lambda : {0.25, 0.95, 1.4}) {
    for (double gamma : {0.1, 0.6}) {
      for (double beta : {0.3, 2.0, 15.0}) {
        const auto rdm = xy::rdm_two_adjacent({lambda, gamma, beta});
        const auto p = classify::XStateParams::from_matrix(rdm.rho);
        EXPECT_EQ(p.p, Complex(0.0));
        EXPECT_EQ(p.q, Complex(0.0));
        EXPECT_EQ(p.t, Complex(0.0));
        EXPECT_EQ(p.w, Complex(0.0));
        EXPECT_NEAR(p.x, p.y, 1e-14);
        EXPECT_NEAR(p.x, rdm.quadrature.value.n_occ, 1e-14);
        EXPECT_NEAR(p.z, p.x * p.y - std::norm(p.s) + std::norm(p.r), 1e-14);
        EXPECT_NEAR(std::abs(p.s), std::abs(rdm.quadrature.value.hop), 1e-14);
        EXPECT_NEAR(std::abs(p.r), std::abs(rdm.quadrature.value.pair), 1e-14);
      }
    }
  }
}

TEST(RdmTwoAdjacent, ValidPhysicalState) {
  const auto rdm = xy::rdm_two_adjacent({0.5, 0.4, 4.0});
  EXPECT_TRUE(linalg::is_hermitian(rdm.rho, 1e-14));
  EXPECT_GE(linalg::min_eigenvalue(rdm.rho), -1e-10);
  EXPECT_NEAR(rdm.rho.trace().real(), 1.0, 1e-10);
  EXPECT_TRUE(fermion::is_physical(rdm.rho, 1e-14));
}

TEST(ScanRegions, InfiniteTemperatureRowsAreS2) {
  const auto table = xy::scan_regions(0.5, {0.2, 0.6}, {0.0, 0.5, 4.0});
  ASSERT_EQ(table.rows.size(), 6u);
  for (const auto& row : table.rows) {
    EXPECT_EQ(row.s2, row.params.beta == 0.0);
    if (row.params.beta == 0.0) EXPECT_TRUE(row.s2prime);
    EXPECT_LE(row.ef, row.ef_pi + 1e-12);
  }
  EXPECT_EQ(table.rows[4].params.gamma, 0.6);
  EXPECT_EQ(table.rows[4].params.beta, 0.5);
}

TEST(ScanRegions, BoundaryBisection) {
  const auto table = xy::scan_regions(0.5, {0.5}, {0.5, 1.0, 2.0, 3.0, 5.0});
  ASSERT_EQ(table.boundaries.size(), 1u);
  ASSERT_EQ(table.boundaries[0].crossings.size(), 1u);
  const double beta_star = table.boundaries[0].crossings[0];
  EXPECT_FALSE(table.boundaries[0].non_monotone);
  const auto below = xy::evaluate_point({0.5, 0.5, beta_star - 1e-6});
  const auto above = xy::evaluate_point({0.5, 0.5, beta_star + 1e-6});
  EXPECT_NE(below.s2prime, above.s2prime);
}

TEST(ScanRegions, WorkerCountDoesNotChangeOutput) {
  xy::ScanOptions serial;
  xy::ScanOptions parallel;
  parallel.workers = 4;
  std::ostringstream a;
  std::ostringstream b;
  xy::write_scan_csv(a, xy::scan_regions(0.95, {0.1, 0.2}, {0.0, 3.0, 12.0}, serial));
  xy::write_scan_csv(b, xy::scan_regions(0.95, {0.1, 0.2}, {0.0, 3.0, 12.0}, parallel));
  EXPECT_EQ(a.str(), b.str());
}

TEST(ScanCsv, HeaderAndFormat) {
  std::ostringstream out;
  xy::write_scan_csv(out, xy::scan_regions(0.5, {0.5}, {0.0}));
  std::istringstream in(out.str());
  std::string header;
  std::string row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "lambda,gamma,beta,x,z,re_s,im_s,re_r,im_r,ppt_witness,s2prime,s2,ef,ef_pi,status");
  EXPECT_EQ(row, "0.5,0.5,0,0.5,0.25,0,0,0,0,0.25,1,1,0,0,ok");
}

TEST(EofCurve, StructureAndCsv) {
  const auto rows = xy::eof_curve(0.5, 0.5, {0.0, 0.5, 6.0});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].ef, 0.0);
  EXPECT_EQ(rows[0].ef_pi, 0.0);
  EXPECT_GT(rows[1].ef_pi, 0.0);
  for (const auto& r : rows) EXPECT_LE(r.ef, r.ef_pi);
  std::ostringstream out;
  xy::write_eof_csv(out, rows);
  EXPECT_EQ(out.str().substr(0, 14), "beta,ef,ef_pi\n");
}

}  // namespace
}  // namespace fermsep
