// Copyright 2026 The cvtangle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Constructors and seeded samplers for the Gaussian state families used
// throughout the library.

#include <array>
#include <cstdint>
#include <random>

#include "cvtangle/symplectic.hpp"

namespace cvtangle {

CovarianceMatrix vacuum(int modes);

/// Standard form: cosh(2r) I on the diagonal blocks, diag(sinh 2r, -sinh 2r)
/// off the diagonal.
CovarianceMatrix two_mode_squeezed(double r);

/// Pure N-mode state invariant under mode permutations, fixed by the
/// single-mode mixedness a_loc. a_loc = 1 is the vacuum.
struct FullySymmetricSpec {
  int modes;
  double a_loc;
};

struct SymmetricCorrelations {
  double e_plus;
  double e_minus;
};

/// Off-diagonal block diag(e+, e-) solving (a - e+)(a - e-) = 1 and
/// (a + (N-1) e+)(a + (N-1) e-) = 1 with e+ >= 0 >= e-.
SymmetricCorrelations fully_symmetric_correlations(const FullySymmetricSpec& spec);

CovarianceMatrix fully_symmetric_pure(const FullySymmetricSpec& spec);

/// Local mixednesses of a pure three-mode state. Physical iff
/// |a_j - a_k| + 1 <= a_i <= a_j + a_k - 1 for every labelling.
struct ThreeModePureSpec {
  double a1;
  double a2;
  double a3;

  std::array<double, 3> values() const { return {a1, a2, a3}; }
  bool satisfies_triangle(double slack = 1e-9) const;
  /// Throws TriangleViolation.
  void check() const;
};

/// Pure three-mode state in standard form (diagonal blocks a_i I, off-diagonal
/// blocks diag(e+_ij, e-_ij)). The result is verified to be pure with the
/// requested local mixednesses to 1e-6; NoSolution is thrown otherwise.
CovarianceMatrix three_mode_pure(const ThreeModePureSpec& spec);

/// Draws (a1, a2, a3) uniformly from [1, a_max]^3 restricted to the
/// triangle-inequality domain.
ThreeModePureSpec random_three_mode_spec(std::mt19937_64& rng, double a_max);

/// Seed of sample `index` in a stream started from `seed`; lets samples be
/// produced in any order.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Haar-random passive (photon-number preserving) symplectic.
Eigen::MatrixXd random_passive(int modes, std::mt19937_64& rng);

/// Single-mode squeezers diag(e^-r_i, e^r_i).
Eigen::MatrixXd squeezers(const Eigen::VectorXd& r);

/// P1 Z P2 with Haar passive P1, P2 and squeezings uniform in [-squeeze_max, squeeze_max].
Eigen::MatrixXd random_symplectic(int modes, std::uint64_t seed, double squeeze_max = 1.0);

struct SamplerConfig {
  int modes = 4;
  std::uint64_t seed = 0;
  double squeeze_max = 1.5;

  void check() const;
};

/// S S^T for S = random_symplectic(modes, seed, squeeze_max): a random pure state.
CovarianceMatrix random_pure(const SamplerConfig& config);

}  // namespace cvtangle
