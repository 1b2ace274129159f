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


#include "fermsep/measures.hpp"

#include <gtest/gtest.h>

#include "fermsep/classification.hpp"
#include "fermsep/random_states.hpp"
#include "test_support.hpp"

namespace fermsep {
namespace {

TEST(BinaryEntropy, Endpoints) {
  EXPECT_EQ(measures::binary_entropy(0.0), 0.0);
  EXPECT_EQ(measures::binary_entropy(1.0), 0.0);
  EXPECT_DOUBLE_EQ(measures::binary_entropy(0.5), 1.0);
}

TEST(EofFromConcurrence, Endpoints) {
  EXPECT_DOUBLE_EQ(measures::eof_from_concurrence(1.0), 1.0);
  EXPECT_EQ(measures::eof_from_concurrence(0.0), 0.0);
}

TEST(Concurrence, BellAndMaximallyMixed) {
  EXPECT_NEAR(measures::concurrence(testing::bell_even()), 1.0, 1e-7);
  EXPECT_NEAR(measures::concurrence(testing::bell_odd()), 1.0, 1e-7);
  EXPECT_NEAR(measures::concurrence(testing::maximally_mixed(4)), 0.0, 1e-12);
}

TEST(Concurrence, RejectsWrongShape) {
  EXPECT_THROW(measures::concurrence(testing::maximally_mixed(8)), InvalidArgument);
}

TEST(Eof, BellIsOne) { EXPECT_NEAR(measures::eof(testing::bell_even()), 1.0, 1e-6); }

TEST(EofParity, DiagonalIsZero) {
  DensityMatrix rho = ComplexMatrix::Zero(4, 4);
  rho.diagonal() << 0.1, 0.2, 0.3, 0.4;
  EXPECT_EQ(measures::eof_parity(rho), 0.0);
}

TEST(EofParity, BellIsOne) { EXPECT_NEAR(measures::eof_parity(testing::bell_even()), 1.0, 1e-12); }

TEST(EofParity, RequiresPhysicalState) {
  classify::XStateParams p;
  p.x = p.y = 0.5;
  p.z = 0.25;
  p.p = 0.1;
  EXPECT_THROW(measures::eof_parity(p.to_matrix()), InvalidState);
}

TEST(PureStateEntanglement, ProductAndBell) {
  StateVector product = StateVector::Zero(4);
  product(1) = 2.0;
  EXPECT_EQ(measures::pure_state_entanglement(product), 0.0);
  StateVector bell = StateVector::Zero(4);
  bell(0) = 1.0;
  bell(3) = 1.0;
  EXPECT_NEAR(measures::pure_state_entanglement(bell), 1.0, 1e-12);
}

TEST(Oracle, BellAndMaximallyMixed) {
  measures::OracleOptions options;
  options.restarts = 5;
  EXPECT_NEAR(measures::eof_oracle(testing::bell_even(), options).value, 1.0, 1e-4);
  EXPECT_NEAR(measures::eof_oracle(testing::maximally_mixed(4), options).value, 0.0, 1e-4);
  options.parity_constrained = true;
  EXPECT_NEAR(measures::eof_oracle(testing::maximally_mixed(4), options).value, 0.0, 1e-4);
}

TEST(Oracle, EnsembleReproducesState) {
  random::Engine rng(2);
  const DensityMatrix rho = random::random_even_1x1(rng);
  for (bool constrained : {false, true}) {
    measures::OracleOptions options;
    options.restarts = 3;
    options.parity_constrained = constrained;
    const auto result = measures::eof_oracle(rho, options);
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    double cost = 0.0;
    for (std::size_t i = 0; i < result.best.weights.size(); ++i) {
      sum += result.best.weights[i] * result.best.vectors[i] * result.best.vectors[i].adjoint();
      cost += result.best.weights[i] * measures::pure_state_entanglement(result.best.vectors[i]);
    }
    EXPECT_LT(testing::max_diff(sum, rho), 1e-12);
    EXPECT_NEAR(cost, result.value, 1e-12);
    EXPECT_EQ(result.best.parity_definite, constrained);
  }
}

TEST(Oracle, OptionValidation) {
  measures::OracleOptions options;
  options.ensemble_size = 2;
  EXPECT_THROW(measures::eof_oracle(testing::bell_even(), options), InvalidArgument);
}

TEST(Oracle, MatchesClosedFormsOnRandomStates) {
  random::Engine rng(3);
  measures::OracleOptions options;
  options.restarts = 5;
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random::random_even_1x1(rng);
    options.parity_constrained = false;
    EXPECT_NEAR(measures::eof_oracle(rho, options).value, measures::eof(rho), 1e-4);
    options.parity_constrained = true;
    EXPECT_NEAR(measures::eof_oracle(rho, options).value, measures::eof_parity(rho), 1e-4);
  }
}

}  // namespace
}  // namespace fermsep
