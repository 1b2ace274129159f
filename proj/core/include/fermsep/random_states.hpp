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

// Seeded random states. Every generator takes the engine explicitly so that a
// single 64-bit seed reproduces a whole run.

#pragma once

#include <random>

#include "fermsep/types.hpp"

namespace fermsep::random {

using Engine = std::mt19937_64;

/// Haar-distributed unitary of the given dimension (QR of a Ginibre matrix).
ComplexMatrix haar_unitary(Eigen::Index dim, Engine& rng);

/// Flat Dirichlet sample scaled by `concentration` (smaller gives sparser
/// weights).
RealVector dirichlet(Eigen::Index n, double concentration, Engine& rng);

/// Random unit vector of the given dimension.
StateVector random_unit_vector(Eigen::Index dim, Engine& rng);

/// Ginibre-induced mixed state of the given rank.
DensityMatrix random_density_matrix(Eigen::Index dim, Eigen::Index rank, Engine& rng);

/// Random state on `modes` modes commuting with the parity operator: Haar
/// eigenvectors inside each parity block, Dirichlet eigenvalues.
DensityMatrix random_even_state(int modes, double concentration, Engine& rng);

/// Random physical 1x1 X-state with a mixture of vanishing, small and
/// saturated coherences, spanning both PPT and NPPT regions.
DensityMatrix random_even_1x1(Engine& rng);

/// Pure state with definite global parity on the split. `kind` picks the
/// structure: 0 local-parity product, 1 single local-parity sector,
/// 2 superposition across the ee/oo (or eo/oe) sectors, anything else mixes.
StateVector random_definite_parity_pure(const ModeBipartition& split, int kind, Engine& rng);

}  // namespace fermsep::random
