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

// Covariance-matrix core for N-mode Gaussian states.
//
// Conventions: quadratures are interleaved (x1, p1, x2, p2, ..., xN, pN) and
// the vacuum has unit variance, so the vacuum covariance matrix is the
// identity and a state is physical iff every symplectic eigenvalue is >= 1.

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace cvtangle {

namespace tol {
inline constexpr double kSymmetry = 1e-10;
inline constexpr double kPhysical = 1e-8;
inline constexpr double kPairing = 1e-9;
inline constexpr double kPure = 1e-7;
}  // namespace tol

/// Real symmetric 2N x 2N covariance matrix of an N-mode Gaussian state.
///
/// Construction checks the shape and symmetry (within tol::kSymmetry); it
/// does not check physicality, use validate() for that.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXd matrix);

  int modes() const noexcept { return static_cast<int>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

  /// 2x2 block between modes i and j.
  Eigen::Matrix2d block(int i, int j) const;

  bool operator==(const CovarianceMatrix& other) const {
    return matrix_ == other.matrix_;
  }

 private:
  Eigen::MatrixXd matrix_;
};

/// Ordered pair of disjoint, non-empty mode sets defining a cut A|B.
struct Bipartition {
  std::vector<int> party_a;
  std::vector<int> party_b;

  /// Throws IndexOutOfRange/InvalidArgument unless the cut is valid for a
  /// state with the given number of modes.
  void check(int modes) const;

  /// Cut i|(all other modes).
  static Bipartition one_vs_rest(int reference, int modes);

  bool is_one_by_n() const noexcept {
    return party_a.size() == 1 || party_b.size() == 1;
  }
};

/// Symplectic eigenvalues, sorted ascending.
struct SymplecticSpectrum {
  std::vector<double> values;

  double min() const { return values.front(); }
  double product() const;
};

struct ValidationReport {
  bool symmetric = false;
  bool physical = false;
  bool pure = false;
  double min_symplectic_eigenvalue = 0.0;
  // Offending symplectic eigenvalue (< 1 - tol::kPhysical) if unphysical.
  std::optional<double> offending;
};

/// Omega = (+)_i [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int modes);

ValidationReport validate(const Eigen::MatrixXd& matrix);
ValidationReport validate(const CovarianceMatrix& cm);

/// Throws Unphysical if validate() reports the state as unphysical.
void require_physical(const CovarianceMatrix& cm);

/// Symplectic spectrum from the eigenvalues of (Omega sigma)^2, computed on
/// the Cholesky-congruent symmetric form L^T Omega^T sigma Omega L.
/// Requires a positive-definite matrix.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm);

/// 1/sqrt(det sigma).
double purity(const CovarianceMatrix& cm);

/// sqrt(det sigma) of the reduction onto a single mode (1/purity).
double local_mixedness(const CovarianceMatrix& cm, int mode);

bool is_pure(const CovarianceMatrix& cm);

/// Principal submatrix on the given modes, in the given order.
CovarianceMatrix reduce(const CovarianceMatrix& cm, const std::vector<int>& modes);

/// Mirror reflection p -> -p on every mode of the smaller party of the cut
/// (party A on ties). Modes outside the cut are left untouched.
CovarianceMatrix partial_transpose(const CovarianceMatrix& cm,
                                   const Bipartition& cut);

/// Congruence S sigma S^T.
CovarianceMatrix transform(const CovarianceMatrix& cm, const Eigen::MatrixXd& s);

/// max |S^T Omega S - Omega|, zero for an exactly symplectic S.
double symplectic_defect(const Eigen::MatrixXd& s);

}  // namespace cvtangle
