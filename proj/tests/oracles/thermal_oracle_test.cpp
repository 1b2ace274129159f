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


#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <vector>

#include "fermsep/fermion_algebra.hpp"
#include "fermsep/linalg.hpp"
#include "fermsep/xychain.hpp"
#include "chain_oracle.hpp"
#include "test_support.hpp"

namespace fermsep {
namespace {

struct Case {
  double lambda, gamma, beta;
};

const Case kCases[] = {{0.5, 0.4, 2.0}, {0.95, 0.15, 3.0}, {1.3, 0.7, 1.0}, {0.25, 1.0, 5.0}, {-0.4, 0.2, 0.7}};

TEST(ThermalOracle, SixSiteCorrelatorsExact) {
  const int n = 6;
  for (const Case& c : kCases) {
    const xy::XYParams p{c.lambda, c.gamma, c.beta};
    const DensityMatrix rho = testing::thermal_state(testing::chain_hamiltonian(n, p), c.beta);
    const ComplexMatrix a1 = fermion::annihilation(1, n);
    const ComplexMatrix a2 = fermion::annihilation(2, n);
    const auto fin = xy::correlators_finite(n, p);
    EXPECT_NEAR((rho * a1.adjoint() * a1).trace().real(), fin.n_occ, 1e-12);
    EXPECT_NEAR(std::abs((rho * a1.adjoint() * a2).trace() - fin.hop), 0.0, 1e-12);
    EXPECT_NEAR(std::abs((rho * a1 * a2).trace() - fin.pair), 0.0, 1e-12);
  }
}

TEST(ThermalOracle, SixSiteReducedStateExact) {
  const int n = 6;
  for (const Case& c : kCases) {
    const xy::XYParams p{c.lambda, c.gamma, c.beta};
    const DensityMatrix brute = testing::first_two_sites(testing::thermal_state(testing::chain_hamiltonian(n, p), c.beta), n);
    const DensityMatrix wick = xy::rdm_from_correlators(xy::correlators_finite(n, p));
    EXPECT_LT(testing::max_diff(brute, wick), 1e-12)
        << "lambda=" << c.lambda << " gamma=" << c.gamma << " beta=" << c.beta;
  }
}

TEST(ThermalOracle, FiveSitePeriodicChain) {
  const int n = 5;
  for (const Case& c : kCases) {
    const xy::XYParams p{c.lambda, c.gamma, c.beta};
    const DensityMatrix brute = testing::first_two_sites(testing::thermal_state(testing::chain_hamiltonian(n, p), c.beta), n);
    const DensityMatrix wick = xy::rdm_from_correlators(xy::correlators_finite(n, p));
    EXPECT_LT(testing::max_diff(brute, wick), 1e-12);
  }
}

TEST(ThermalOracle, InfiniteChainCloseAtHighTemperature) {
  const int n = 6;
  for (double beta : {0.5, 1.0}) {
    const xy::XYParams p{0.5, 0.5, beta};
    const DensityMatrix brute = testing::first_two_sites(testing::thermal_state(testing::chain_hamiltonian(n, p), beta), n);
    EXPECT_LT(testing::max_diff(brute, xy::rdm_two_adjacent(p).rho), 1e-3) << "beta=" << beta;
  }
}

TEST(ThermalOracle, QuasiparticleSpectrum) {
  // Many-body excitation energies are the subset sums of Lambda_k.
  const int n = 8;
  const double pi = std::numbers::pi;
  for (const Case& c : kCases) {
    const xy::XYParams p{c.lambda, c.gamma, 1.0};
    const auto eig = linalg::herm_eig(testing::chain_hamiltonian(n, p));
    std::vector<double> lambdas;
    for (int j = 0; j < n; ++j) {
      const double k = j - 0.5 * (n - 1);
      lambdas.push_back(xy::dispersion(2.0 * pi * k / n, p));
    }
    std::vector<double> sums;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      double e = 0.0;
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) e += lambdas[static_cast<std::size_t>(j)];
      }
      sums.push_back(e);
    }
    std::sort(sums.begin(), sums.end());
    const double e0 = eig.values(0);
    for (std::size_t k = 0; k < sums.size(); ++k) {
      EXPECT_NEAR(eig.values(static_cast<Eigen::Index>(k)) - e0, sums[k], 1e-10);
    }
    for (double l : lambdas) EXPECT_GE(l, 0.0);
  }
}

TEST(ThermalOracle, EmptyAndFullBandsOnLongChains) {
  // gamma = 0: occupations are Fermi functions of cos(phi) - lambda.
  const auto full = xy::correlators_finite(200, {1.5, 0.0, 100.0});
  EXPECT_NEAR(full.n_occ, 1.0, 1e-12);
  const auto empty = xy::correlators_finite(200, {-1.5, 0.0, 100.0});
  EXPECT_NEAR(empty.n_occ, 0.0, 1e-12);
  const auto inf = xy::correlators_infinite({1.5, 0.0, 100.0});
  EXPECT_NEAR(inf.value.n_occ, full.n_occ, 1e-12);
}

}  // namespace
}  // namespace fermsep
