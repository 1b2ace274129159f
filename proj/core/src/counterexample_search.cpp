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

#include <random>
#include <vector>

#include "fermsep/classification.hpp"
#include "fermsep/fermion_algebra.hpp"
#include "fermsep/linalg.hpp"
#include "fermsep/random_states.hpp"

namespace fermsep::classify {

namespace {

using Index = Eigen::Index;

constexpr int kMaxHalvings = 60;

// Entries (r, c), r < c, with equal global parity but different local parity
// pairs: the C and D couplings of a physical state.
std::vector<std::pair<Index, Index>> coupling_support(const ModeBipartition& split) {
  std::vector<std::pair<Index, Index>> out;
  for (Index r = 0; r < split.dim(); ++r) {
    const auto ri = static_cast<std::uint64_t>(r);
    for (Index c = r + 1; c < split.dim(); ++c) {
      const auto ci = static_cast<std::uint64_t>(c);
      const bool same_global = (fermion::occupation(ri) & 1) == (fermion::occupation(ci) & 1);
      const bool same_local = fermion::local_parity_a(ri, split) == fermion::local_parity_a(ci, split);
      if (same_global && !same_local) out.emplace_back(r, c);
    }
  }
  return out;
}

}  // namespace

SearchResult search_p1_nppt_counterexample(const SearchOptions& options) {
  const ModeBipartition split(options.modes_a, options.modes_b);
  const auto support = coupling_support(split);
  random::Engine rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  SearchResult result;
  for (std::uint64_t iter = 0; iter < options.max_iters; ++iter) {
    result.iterations = iter + 1;
    const DensityMatrix rho_a = random::random_even_state(split.modes_a(), options.concentration, rng);
    const DensityMatrix rho_b = random::random_even_state(split.modes_b(), options.concentration, rng);
    const DensityMatrix base = linalg::kron(rho_a, rho_b);

    ComplexMatrix coupling = ComplexMatrix::Zero(split.dim(), split.dim());
    for (const auto& [r, c] : support) {
      const double re = normal(rng);
      const double im = normal(rng);
      coupling(r, c) = Complex(re, im);
      coupling(c, r) = Complex(re, -im);
    }
    const double scale = linalg::max_abs(coupling);
    if (scale == 0.0) continue;
    coupling /= scale;

    double eps = 1.0;
    DensityMatrix candidate = base + eps * coupling;
    int halvings = 0;
    while (linalg::min_eigenvalue(candidate) < 0.0 && halvings < kMaxHalvings) {
      eps *= 0.5;
      candidate = base + eps * coupling;
      ++halvings;
    }
    if (halvings == kMaxHalvings) continue;

    const double witness = linalg::min_eigenvalue(linalg::partial_transpose(candidate, split));
    if (witness <= -options.min_violation) {
      result.found = true;
      result.state = candidate;
      result.ppt_witness = witness;
      result.p1_residual = is_product_P1(candidate, split).residual;
      result.epsilon = eps;
      return result;
    }
  }
  return result;
}

}  // namespace fermsep::classify
