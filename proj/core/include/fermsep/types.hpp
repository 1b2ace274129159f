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

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fermsep {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using StateVector = Eigen::VectorXcd;

/// A density matrix on the 2^m dimensional Fock space, occupation basis
/// |n_1 ... n_m> with n_1 as the most significant bit.
using DensityMatrix = Eigen::MatrixXcd;

/// Absolute tolerance on Hermiticity and on the minimum eigenvalue.
inline constexpr double kDefaultTolerance = 1e-9;
/// Tolerance for factorization residuals in membership tests.
inline constexpr double kMembershipTolerance = 1e-8;
/// Largest supported total number of modes (256 x 256 matrices).
inline constexpr int kMaxModes = 8;

/// Dimension mismatch, out-of-range index, or an otherwise malformed request.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is not a valid quantum state (not Hermitian, not PSD, trace != 1,
/// or violates a physicality precondition).
class InvalidState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Subsystem { A, B };

/// Split of m = modes_a + modes_b fermionic modes into A = 1..modes_a (left
/// Kronecker factor) and B = modes_a+1..m.
class ModeBipartition {
 public:
  ModeBipartition(int modes_a, int modes_b) : modes_a_(modes_a), modes_b_(modes_b) {
    if (modes_a < 1 || modes_b < 1 || modes_a + modes_b > kMaxModes) {
      throw InvalidArgument("ModeBipartition: need modes_a, modes_b >= 1 and total <= " +
                            std::to_string(kMaxModes) + ", got (" + std::to_string(modes_a) +
                            ", " + std::to_string(modes_b) + ")");
    }
  }

  int modes_a() const { return modes_a_; }
  int modes_b() const { return modes_b_; }
  int modes() const { return modes_a_ + modes_b_; }

  Eigen::Index dim_a() const { return Eigen::Index{1} << modes_a_; }
  Eigen::Index dim_b() const { return Eigen::Index{1} << modes_b_; }
  Eigen::Index dim() const { return Eigen::Index{1} << modes(); }

  bool operator==(const ModeBipartition&) const = default;

 private:
  int modes_a_;
  int modes_b_;
};

}  // namespace fermsep
