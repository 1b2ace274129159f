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

#include <cmath>
#include <numbers>
#include <vector>

#include "fermsep/fermion_algebra.hpp"
#include "fermsep/linalg.hpp"

namespace fermsep::random {

namespace {

using Index = Eigen::Index;

Complex gaussian_complex(Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Complex random_phase(Engine& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

// Random unit vector supported on the basis indices in `support`.
StateVector vector_on(const std::vector<Index>& support, Index dim, Engine& rng) {
  StateVector v = StateVector::Zero(dim);
  for (Index i : support) v(i) = gaussian_complex(rng);
  return v / v.norm();
}

std::vector<Index> local_sector(int modes, int parity) {
  std::vector<Index> out;
  for (Index i = 0; i < (Index{1} << modes); ++i) {
    if ((fermion::occupation(static_cast<std::uint64_t>(i)) & 1) == parity) out.push_back(i);
  }
  return out;
}

std::vector<Index> bipartite_sector(const ModeBipartition& split, int parity_a, int parity_b) {
  std::vector<Index> out;
  for (Index i = 0; i < split.dim(); ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (fermion::local_parity_a(idx, split) == parity_a &&
        fermion::local_parity_b(idx, split) == parity_b) {
      out.push_back(i);
    }
  }
  return out;
}

StateVector product_in_sector(const ModeBipartition& split, int parity_a, int parity_b,
                              Engine& rng) {
  const StateVector a = vector_on(local_sector(split.modes_a(), parity_a), split.dim_a(), rng);
  const StateVector b = vector_on(local_sector(split.modes_b(), parity_b), split.dim_b(), rng);
  return linalg::kron(a, b);
}

}  // namespace

ComplexMatrix haar_unitary(Index dim, Engine& rng) {
  ComplexMatrix g(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) g(r, c) = gaussian_complex(rng);
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index c = 0; c < dim; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  return q;
}

RealVector dirichlet(Index n, double concentration, Engine& rng) {
  std::gamma_distribution<double> gamma(concentration, 1.0);
  RealVector w(n);
  for (Index i = 0; i < n; ++i) w(i) = gamma(rng);
  const double total = w.sum();
  if (total <= 0.0) {
    w.setZero();
    w(0) = 1.0;
    return w;
  }
  return w / total;
}

StateVector random_unit_vector(Index dim, Engine& rng) {
  StateVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = gaussian_complex(rng);
  return v / v.norm();
}

DensityMatrix random_density_matrix(Index dim, Index rank, Engine& rng) {
  ComplexMatrix g(dim, rank);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < rank; ++c) g(r, c) = gaussian_complex(rng);
  }
  DensityMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

DensityMatrix random_even_state(int modes, double concentration, Engine& rng) {
  const Index dim = Index{1} << modes;
  DensityMatrix rho = DensityMatrix::Zero(dim, dim);
  const RealVector weights = dirichlet(dim, concentration, rng);
  Index w = 0;
  for (int parity = 0; parity < 2; ++parity) {
    const std::vector<Index> sector = local_sector(modes, parity);
    const auto n = static_cast<Index>(sector.size());
    const ComplexMatrix u = haar_unitary(n, rng);
    ComplexMatrix block = ComplexMatrix::Zero(n, n);
    for (Index k = 0; k < n; ++k, ++w) block += weights(w) * u.col(k) * u.col(k).adjoint();
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) rho(sector[r], sector[c]) = block(r, c);
    }
  }
  return rho;
}

DensityMatrix random_even_1x1(Engine& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const RealVector p = dirichlet(4, 1.0, rng);
  // Coherence magnitude: zero, bounded by the PPT scale, or up to saturation.
  auto coherence = [&](double psd_bound) -> Complex {
    const double pick = unit(rng);
    if (pick < 0.2) return 0.0;
    return unit(rng) * psd_bound * random_phase(rng);
  };
  DensityMatrix rho = DensityMatrix::Zero(4, 4);
  rho.diagonal() = p.cast<Complex>();
  const Complex r = coherence(std::sqrt(p(0) * p(3)));
  const Complex s = coherence(std::sqrt(p(1) * p(2)));
  rho(0, 3) = r;
  rho(3, 0) = std::conj(r);
  rho(1, 2) = s;
  rho(2, 1) = std::conj(s);
  return rho;
}

StateVector random_definite_parity_pure(const ModeBipartition& split, int kind, Engine& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  const int global = bit(rng);
  const int pa = bit(rng);
  const int pb = pa ^ global;
  switch (kind) {
    case 0:
      return product_in_sector(split, pa, pb, rng);
    case 1:
      return vector_on(bipartite_sector(split, pa, pb), split.dim(), rng);
    case 2: {
      std::uniform_real_distribution<double> angle(0.05, 0.5 * std::numbers::pi - 0.05);
      const double theta = angle(rng);
      const bool entangled_parts = bit(rng) == 1;
      const StateVector first = entangled_parts
                                    ? vector_on(bipartite_sector(split, pa, pb), split.dim(), rng)
                                    : product_in_sector(split, pa, pb, rng);
      const StateVector second =
          entangled_parts ? vector_on(bipartite_sector(split, 1 - pa, 1 - pb), split.dim(), rng)
                          : product_in_sector(split, 1 - pa, 1 - pb, rng);
      return std::cos(theta) * first + std::sin(theta) * random_phase(rng) * second;
    }
    default: {
      std::vector<Index> sector = bipartite_sector(split, pa, pb);
      const std::vector<Index> other = bipartite_sector(split, 1 - pa, 1 - pb);
      sector.insert(sector.end(), other.begin(), other.end());
      return vector_on(sector, split.dim(), rng);
    }
  }
}

}  // namespace fermsep::random
