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


#include "fermsep/random_states.hpp"

#include <gtest/gtest.h>

#include "fermsep/fermion_algebra.hpp"
#include "fermsep/linalg.hpp"
#include "test_support.hpp"

namespace fermsep {
namespace {

TEST(RandomStates, HaarUnitaryIsUnitary) {
  random::Engine rng(1);
  for (Eigen::Index dim : {1, 2, 5, 8}) {
    const ComplexMatrix u = random::haar_unitary(dim, rng);
    EXPECT_LT(testing::max_diff(u.adjoint() * u, ComplexMatrix::Identity(dim, dim)), 1e-13);
  }
}

TEST(RandomStates, DirichletOnSimplex) {
  random::Engine rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const RealVector w = random::dirichlet(6, 0.5, rng);
    EXPECT_NEAR(w.sum(), 1.0, 1e-14);
    EXPECT_GE(w.minCoeff(), 0.0);
  }
}

TEST(RandomStates, DensityMatrixIsValid) {
  random::Engine rng(3);
  for (Eigen::Index rank : {1, 2, 4}) {
    const DensityMatrix rho = random::random_density_matrix(4, rank, rng);
    EXPECT_NO_THROW(fermion::validate_density_matrix(rho));
    const linalg::HermEigResult eig = linalg::herm_eig(rho);
    EXPECT_EQ((eig.values.array() > 1e-12).count(), rank);
  }
}

TEST(RandomStates, EvenStatesArePhysical) {
  random::Engine rng(4);
  for (int modes = 1; modes <= 3; ++modes) {
    for (int trial = 0; trial < 10; ++trial) {
      EXPECT_TRUE(fermion::is_physical(random::random_even_state(modes, 0.5, rng)));
    }
  }
}

TEST(RandomStates, EvenOneByOneCoversBothPptRegions) {
  random::Engine rng(5);
  int npt = 0;
  int ppt = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho = random::random_even_1x1(rng);
    ASSERT_TRUE(fermion::is_physical(rho));
    (linalg::min_eigenvalue(linalg::partial_transpose(rho, 2, 2)) < 0.0 ? npt : ppt)++;
  }
  EXPECT_GT(npt, 20);
  EXPECT_GT(ppt, 20);
}

TEST(RandomStates, DefiniteParityPureStates) {
  random::Engine rng(6);
  const ModeBipartition split(2, 1);
  const ComplexMatrix parity = fermion::parity_operator(3);
  for (int kind = 0; kind < 4; ++kind) {
    for (int trial = 0; trial < 20; ++trial) {
      const StateVector psi = random::random_definite_parity_pure(split, kind, rng);
      EXPECT_NEAR(psi.norm(), 1.0, 1e-13);
      const Complex eig = psi.dot(parity * psi);
      EXPECT_NEAR(std::abs(eig), 1.0, 1e-12) << "kind " << kind;
    }
  }
}

TEST(RandomStates, SeedReproducibility) {
  random::Engine a(99);
  random::Engine b(99);
  EXPECT_EQ(testing::max_diff(random::random_even_state(2, 0.5, a), random::random_even_state(2, 0.5, b)),
            0.0);
}

}  // namespace
}  // namespace fermsep
