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

#include "cvtangle/symplectic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cvtangle/error.hpp"

namespace cvtangle {

namespace {

void check_shape(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    std::ostringstream os;
    os << "covariance matrix must be 2N x 2N with N >= 1, got " << m.rows()
       << " x " << m.cols();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

double asymmetry(const Eigen::MatrixXd& m) {
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

// Squared symplectic eigenvalues (each appearing twice) of a
// positive-definite matrix, ascending. Empty if not positive definite.
std::optional<Eigen::VectorXd> squared_spectrum(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) return std::nullopt;
  const Eigen::MatrixXd l = llt.matrixL();
  const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(m.rows() / 2));
  // A = L^T Omega L is antisymmetric with eigenvalues +-i nu.
  const Eigen::MatrixXd a = l.transpose() * omega * l;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NumericalFailure, "symplectic eigensolve did not converge");
  }
  return es.eigenvalues();
}

std::vector<double> pair_up(const Eigen::VectorXd& squared) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(squared.size() / 2));
  for (Eigen::Index i = 0; i + 1 < squared.size(); i += 2) {
    const double lo = std::max(squared(i), 0.0);
    const double hi = std::max(squared(i + 1), 0.0);
    if (hi - lo > tol::kPairing * std::max(1.0, hi)) {
      std::ostringstream os;
      os << "unpaired symplectic eigenvalues " << std::sqrt(lo) << " and "
         << std::sqrt(hi);
      throw Error(ErrorCode::NumericalFailure, os.str());
    }
    values.push_back(std::sqrt(0.5 * (lo + hi)));
  }
  return values;
}

// Moduli of the eigenvalues of i Omega sigma for any (possibly indefinite)
// symmetric matrix; used only to report unphysical input.
std::vector<double> indefinite_spectrum(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(m.rows() / 2));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(
      std::complex<double>(0.0, 1.0) * (omega * m).cast<std::complex<double>>(), false);
  std::vector<double> mods;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    mods.push_back(std::abs(es.eigenvalues()(i)));
  }
  std::sort(mods.begin(), mods.end());
  std::vector<double> values;
  for (std::size_t i = 0; i + 1 < mods.size(); i += 2) values.push_back(mods[i]);
  return values;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  check_shape(matrix_);
  const double asym = asymmetry(matrix_);
  if (!(asym <= tol::kSymmetry)) {
    std::ostringstream os;
    os << "matrix asymmetric by " << asym;
    throw Error(ErrorCode::NotSymmetric, os.str());
  }
}

Eigen::Matrix2d CovarianceMatrix::block(int i, int j) const {
  if (i < 0 || j < 0 || i >= modes() || j >= modes()) {
    throw Error(ErrorCode::IndexOutOfRange, "block index out of range");
  }
  return matrix_.block<2, 2>(2 * i, 2 * j);
}

void Bipartition::check(int modes) const {
  if (party_a.empty() || party_b.empty()) {
    throw Error(ErrorCode::InvalidArgument, "both parties of a cut must be non-empty");
  }
  std::vector<int> all(party_a);
  all.insert(all.end(), party_b.begin(), party_b.end());
  for (int m : all) {
    if (m < 0 || m >= modes) {
      std::ostringstream os;
      os << "mode " << m << " out of range for a " << modes << "-mode state";
      throw Error(ErrorCode::IndexOutOfRange, os.str());
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(ErrorCode::InvalidArgument, "cut parties must be disjoint");
  }
}

Bipartition Bipartition::one_vs_rest(int reference, int modes) {
  Bipartition cut{{reference}, {}};
  for (int m = 0; m < modes; ++m) {
    if (m != reference) cut.party_b.push_back(m);
  }
  cut.check(modes);
  return cut;
}

double SymplecticSpectrum::product() const {
  return std::accumulate(values.begin(), values.end(), 1.0, std::multiplies<>());
}

Eigen::MatrixXd symplectic_form(int modes) {
  if (modes < 1) throw Error(ErrorCode::InvalidArgument, "modes must be >= 1");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int i = 0; i < modes; ++i) {
    omega(2 * i, 2 * i + 1) = 1.0;
    omega(2 * i + 1, 2 * i) = -1.0;
  }
  return omega;
}

ValidationReport validate(const Eigen::MatrixXd& matrix) {
  check_shape(matrix);
  ValidationReport report;
  report.symmetric = asymmetry(matrix) <= tol::kSymmetry;
  const Eigen::MatrixXd sym = 0.5 * (matrix + matrix.transpose());

  std::vector<double> nu;
  bool positive_definite = false;
  if (auto sq = squared_spectrum(sym)) {
    positive_definite = true;
    nu = pair_up(*sq);
  } else {
    nu = indefinite_spectrum(sym);
  }
  report.min_symplectic_eigenvalue = *std::min_element(nu.begin(), nu.end());
  report.physical = report.symmetric && positive_definite &&
                    report.min_symplectic_eigenvalue >= 1.0 - tol::kPhysical;
  if (!report.physical && report.symmetric) {
    report.offending = report.min_symplectic_eigenvalue;
  }
  if (report.physical) {
    const double mu = 1.0 / std::sqrt(sym.determinant());
    report.pure = std::abs(mu - 1.0) <= tol::kPure;
  }
  return report;
}

ValidationReport validate(const CovarianceMatrix& cm) { return validate(cm.matrix()); }

void require_physical(const CovarianceMatrix& cm) {
  const auto report = validate(cm);
  if (!report.physical) {
    std::ostringstream os;
    os << "state is unphysical: smallest symplectic eigenvalue "
       << report.min_symplectic_eigenvalue << " < 1";
    throw Error(ErrorCode::Unphysical, os.str());
  }
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm) {
  auto sq = squared_spectrum(cm.matrix());
  if (!sq) {
    throw Error(ErrorCode::NumericalFailure,
                "symplectic spectrum requires a positive-definite matrix");
  }
  return SymplecticSpectrum{pair_up(*sq)};
}

double purity(const CovarianceMatrix& cm) {
  const double det = cm.matrix().determinant();
  if (!(det > 0.0)) {
    throw Error(ErrorCode::NonPositiveDeterminant, "det sigma <= 0");
  }
  return 1.0 / std::sqrt(det);
}

double local_mixedness(const CovarianceMatrix& cm, int mode) {
  const double det = cm.block(mode, mode).determinant();
  if (!(det > 0.0)) {
    throw Error(ErrorCode::NonPositiveDeterminant, "single-mode det <= 0");
  }
  return std::sqrt(det);
}

bool is_pure(const CovarianceMatrix& cm) {
  return std::abs(purity(cm) - 1.0) <= tol::kPure;
}

CovarianceMatrix reduce(const CovarianceMatrix& cm, const std::vector<int>& modes) {
  if (modes.empty()) throw Error(ErrorCode::InvalidArgument, "empty mode set");
  std::vector<Eigen::Index> idx;
  for (int m : modes) {
    if (m < 0 || m >= cm.modes()) {
      std::ostringstream os;
      os << "mode " << m << " out of range for a " << cm.modes() << "-mode state";
      throw Error(ErrorCode::IndexOutOfRange, os.str());
    }
    if (std::find(idx.begin(), idx.end(), 2 * m) != idx.end()) {
      throw Error(ErrorCode::InvalidArgument, "mode " + std::to_string(m) + " listed twice");
    }
    idx.push_back(2 * m);
    idx.push_back(2 * m + 1);
  }
  const auto n = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = cm(idx[i], idx[j]);
  }
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cm, const Bipartition& cut) {
  cut.check(cm.modes());
  const auto& reflected =
      cut.party_b.size() < cut.party_a.size() ? cut.party_b : cut.party_a;
  Eigen::MatrixXd out = cm.matrix();
  for (int m : reflected) {
    out.row(2 * m + 1) *= -1.0;
    out.col(2 * m + 1) *= -1.0;
  }
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix transform(const CovarianceMatrix& cm, const Eigen::MatrixXd& s) {
  if (s.rows() != cm.matrix().rows() || s.cols() != cm.matrix().cols()) {
    throw Error(ErrorCode::DimensionMismatch, "transformation size mismatch");
  }
  Eigen::MatrixXd out = s * cm.matrix() * s.transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return CovarianceMatrix(std::move(out));
}

double symplectic_defect(const Eigen::MatrixXd& s) {
  const Eigen::MatrixXd omega = symplectic_form(static_cast<int>(s.rows() / 2));
  return (s.transpose() * omega * s - omega).cwiseAbs().maxCoeff();
}

}  // namespace cvtangle
