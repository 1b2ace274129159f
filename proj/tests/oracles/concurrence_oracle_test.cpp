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


// Concurrence against closed forms that do not go through the Wootters
// spectral construction.

#include <gtest/gtest.h>

#include <random>

#include "fermsep/measures.hpp"
#include "fermsep/random_states.hpp"
#include "test_support.hpp"

namespace fermsep {
namespace {

TEST(ConcurrenceOracle, WernerFamily) {
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    const DensityMatrix rho = p * testing::bell_even() + (1.0 - p) * testing::maximally_mixed(4);
    EXPECT_NEAR(measures::concurrence(rho), std::max(0.0, (3.0 * p - 1.0) / 2.0), 1e-7) << "p=" << p;
  }
}

TEST(ConcurrenceOracle, PureStatesFromAmplitudes) {
  random::Engine rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    const StateVector psi = random::random_unit_vector(4, rng);
    const double expected = 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
    EXPECT_NEAR(measures::concurrence(testing::projector(psi)), expected, 1e-6);
  }
}

TEST(ConcurrenceOracle, XStateClosedForm) {
  // C = 2 max(0, |r| - sqrt(rho_11 rho_22), |s| - sqrt(rho_00 rho_33)).
  random::Engine rng(402);
  for (int trial = 0; trial < 500; ++trial) {
    const DensityMatrix rho = random::random_even_1x1(rng);
    const double a = rho(0, 0).real(), b = rho(1, 1).real(), c = rho(2, 2).real(), d = rho(3, 3).real();
    const double expected = 2.0 * std::max({0.0, std::abs(rho(0, 3)) - std::sqrt(b * c),
                                            std::abs(rho(1, 2)) - std::sqrt(a * d)});
    EXPECT_NEAR(measures::concurrence(rho), expected, 1e-6);
  }
}

TEST(ConcurrenceOracle, EofOfWernerStates) {
  for (double p : {0.5, 0.8, 1.0}) {
    const DensityMatrix rho = p * testing::bell_even() + (1.0 - p) * testing::maximally_mixed(4);
    const double c = (3.0 * p - 1.0) / 2.0;
    const double x = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
    const double h = x >= 1.0 ? 0.0 : -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    EXPECT_NEAR(measures::eof(rho), h, 1e-6);
  }
}

}  // namespace
}  // namespace fermsep
