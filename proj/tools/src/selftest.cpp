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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "commands.hpp"
#include "fermsep/linalg.hpp"
#include "fermsep/measures.hpp"
#include "fermsep/random_states.hpp"

namespace fermsep::cli {

namespace {

constexpr double kQuadratureFactor = 1.0;
constexpr double kEofFactor = 1e3;
constexpr double kPfaffianFactor = 1.0;
constexpr int kFiniteSites = 500;

double correlator_gap(const xy::AdjacentCorrelators& a, const xy::AdjacentCorrelators& b) {
  return std::max({std::abs(a.n_occ - b.n_occ), std::abs(a.hop - b.hop), std::abs(a.pair - b.pair)});
}

SuiteResult quadrature_suite(const RunConfig& config) {
  SuiteResult s{"quadrature", true, 0.0, kQuadratureFactor * config.tolerance, ""};
  int unconverged = 0;
  for (double lambda : {0.25, 0.5, 0.95}) {
    for (double gamma : {0.2, 0.5, 1.0}) {
      for (double beta : {0.5, 2.0, 5.0, 20.0}) {
        const xy::XYParams p{lambda, gamma, beta};
        const xy::QuadratureResult q = xy::correlators_infinite(p, config.quad_points, false);
        if (!q.converged) ++unconverged;
        if (beta <= 5.0) {
          s.residual = std::max(s.residual, correlator_gap(q.value, xy::correlators_finite(kFiniteSites, p)));
        }
      }
    }
  }
  s.passed = unconverged == 0 && s.residual <= s.threshold;
  if (unconverged > 0) s.detail = "unconverged=" + std::to_string(unconverged);
  return s;
}

SuiteResult eof_suite(const RunConfig& config) {
  SuiteResult s{"eof", true, 0.0, kEofFactor * config.tolerance, ""};
  random::Engine rng(config.seed);
  std::vector<DensityMatrix> states;
  for (int k = 0; k < 4; ++k) states.push_back(random::random_even_1x1(rng));
  for (double beta : {1.0, 4.0}) {
    states.push_back(xy::rdm_two_adjacent({0.5, 0.5, beta}).rho);
  }
  measures::OracleOptions options;
  options.restarts = 8;
  options.seed = config.seed;
  for (const DensityMatrix& rho : states) {
    options.parity_constrained = false;
    const double free = measures::eof_oracle(rho, options).value;
    options.parity_constrained = true;
    const double constrained = measures::eof_oracle(rho, options).value;
    s.residual = std::max({s.residual, std::abs(free - measures::eof(rho)),
                           std::abs(constrained - measures::eof_parity(rho))});
  }
  s.passed = s.residual <= s.threshold;
  return s;
}

SuiteResult pfaffian_suite(const RunConfig& config) {
  SuiteResult s{"pfaffian", true, 0.0, kPfaffianFactor * config.tolerance, ""};
  random::Engine rng(config.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int dim = 2; dim <= 12; dim += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      RealMatrix a = RealMatrix::Zero(dim, dim);
      for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
          a(i, j) = normal(rng);
          a(j, i) = -a(i, j);
        }
      }
      const double pf = linalg::pfaffian(a);
      const double det = a.determinant();
      s.residual = std::max(s.residual, std::abs(pf * pf - det) / std::max(1.0, std::abs(det)));
    }
  }
  s.passed = s.residual <= s.threshold;
  return s;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const RunConfig& config) {
  return {quadrature_suite(config), eof_suite(config), pfaffian_suite(config)};
}

}  // namespace fermsep::cli
