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

// Entanglement of formation for 1x1-mode (two-qubit) states, with and without
// the restriction to ensembles of definite-parity pure states. Entropies are
// in bits, so a maximally entangled pair has E_F = 1.

#pragma once

#include <cstdint>
#include <vector>

#include "fermsep/types.hpp"

namespace fermsep::measures {

/// -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

/// E_F as a function of the concurrence, h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double concurrence);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4).
double concurrence(const DensityMatrix& rho, double tol = kDefaultTolerance);

double eof(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// Parity-constrained E_F for a physical 1x1 state: weighted E_F of the
/// renormalized global-parity blocks.
double eof_parity(const DensityMatrix& rho, double tol = kDefaultTolerance);

/// Entropy of entanglement of an (unnormalized, nonzero) two-qubit vector.
double pure_state_entanglement(const StateVector& psi);

struct EnsembleDecomposition {
  std::vector<double> weights;
  std::vector<StateVector> vectors;  // normalized
  bool parity_definite = false;
};

struct OracleOptions {
  bool parity_constrained = false;
  int restarts = 50;
  int ensemble_size = 8;
  std::uint64_t seed = 7;
  int max_sweeps = 2000;
};

struct OracleResult {
  double value = 0.0;  // an upper bound on the true minimum
  EnsembleDecomposition best;
};

/// Direct minimization of sum_i p_i E(psi_i) over ensembles realizing rho,
/// parametrized by an isometry acting on the weighted eigenvectors. With the
/// parity constraint every ensemble member lives in one global-parity sector
/// (requires a physical state). Restarts are independent and seeded.
OracleResult eof_oracle(const DensityMatrix& rho, const OracleOptions& options = {},
                        double tol = kDefaultTolerance);

}  // namespace fermsep::measures
