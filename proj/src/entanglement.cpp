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

#include "cvtangle/entanglement.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cvtangle/error.hpp"
#include "cvtangle/nelder_mead.hpp"

namespace cvtangle {

namespace {

constexpr double kZeroEntanglementM = 1e-12;

// Reduced state on the modes of the cut, with the cut relabelled to
// A = {0..|A|-1}, B = {|A|..}.
std::pair<CovarianceMatrix, Bipartition> restrict_to_cut(const CovarianceMatrix& cm,
                                                         const Bipartition& cut) {
  cut.check(cm.modes());
  std::vector<int> order(cut.party_a);
  order.insert(order.end(), cut.party_b.begin(), cut.party_b.end());
  Bipartition local;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    (i < static_cast<int>(cut.party_a.size()) ? local.party_a : local.party_b).push_back(i);
  }
  return {reduce(cm, order), std::move(local)};
}

void require_one_by_n(const Bipartition& cut) {
  if (!cut.is_one_by_n()) {
    throw Error(ErrorCode::UnsupportedCut,
                "PPT is only necessary for M x N cuts with M, N > 1; no verdict given");
  }
}

Eigen::Matrix2d sym_sqrt(const Eigen::Matrix2d& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(m);
  const Eigen::Vector2d w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
}

Eigen::Matrix2d rotation(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return r;
}

double contangle_from_m(double m) {
  if (!(m > 1.0 + kZeroEntanglementM)) return 0.0;
  const double e = std::acosh(m);
  return e * e;
}

double glems_m_unchecked(double a, double s, double d) {
  const double a2 = s + d;  // partner mode
  const double a3 = s - d;  // traced mode = global mixedness of the pair
  // a3 -> 1: the pair is pure, a2 = a, and m_- tends to a (0/0 otherwise).
  if (a3 - 1.0 <= 1e-12) return a;
  const double k_plus = a * a + a2 * a2;
  const double k_minus = (a - a2) * (a + a2);
  const double big_d =
      2.0 * a3 - std::sqrt(2.0 *
                           (k_minus * k_minus + 2.0 * k_plus +
                            std::abs(k_minus) * std::sqrt(k_minus * k_minus + 8.0 * k_plus)) /
                           k_plus);
  if (big_d <= 0.0) {
    return std::abs(k_minus) / ((a3 - 1.0) * (a3 + 1.0));
  }
  const double delta = (a - 2 * d - 1) * (a - 2 * d + 1) * (a + 2 * d - 1) * (a + 2 * d + 1) *
                       (a - 2 * s - 1) * (a - 2 * s + 1) * (a + 2 * s - 1) * (a + 2 * s + 1);
  const double inner = 2.0 * a * a * (1.0 + 2.0 * s * s + 2.0 * d * d) -
                       (4.0 * s * s - 1.0) * (4.0 * d * d - 1.0) - std::pow(a, 4) -
                       std::sqrt(std::max(delta, 0.0));
  return std::sqrt(2.0 * std::max(inner, 0.0)) / (4.0 * a3);
}

}  // namespace

const char* to_string(Measure m) noexcept {
  switch (m) {
    case Measure::LogNegativity: return "log_negativity";
    case Measure::Contangle: return "contangle";
    case Measure::GaussianContangle: return "gaussian_contangle";
  }
  return "unknown";
}

SymplecticSpectrum partial_transpose_spectrum(const CovarianceMatrix& cm,
                                              const Bipartition& cut) {
  auto [local, local_cut] = restrict_to_cut(cm, cut);
  return symplectic_spectrum(partial_transpose(local, local_cut));
}

bool ppt_separable(const CovarianceMatrix& cm, const Bipartition& cut) {
  cut.check(cm.modes());
  require_one_by_n(cut);
  require_physical(cm);
  return partial_transpose_spectrum(cm, cut).min() >= 1.0 - tol::kPhysical;
}

EntanglementValue log_negativity(const CovarianceMatrix& cm, const Bipartition& cut) {
  cut.check(cm.modes());
  require_one_by_n(cut);
  require_physical(cm);
  double e = 0.0;
  for (double nu : partial_transpose_spectrum(cm, cut).values) {
    if (nu < 1.0) e -= std::log(nu);
  }
  return {Measure::LogNegativity, e, cut};
}

double pure_contangle_from_mixedness(double a) {
  if (!(a >= 1.0 - tol::kPhysical)) {
    std::ostringstream os;
    os << "local mixedness " << a << " is below 1";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (a <= 1.0) return 0.0;
  const double e = std::acosh(a);
  return e * e;
}

EntanglementValue contangle_pure(const CovarianceMatrix& cm, const Bipartition& cut) {
  cut.check(cm.modes());
  if (!cut.is_one_by_n()) {
    throw Error(ErrorCode::UnsupportedCut, "pure-state contangle needs a single-mode party");
  }
  auto [local, local_cut] = restrict_to_cut(cm, cut);
  const int single = cut.party_a.size() == 1 ? 0 : local.modes() - 1;
  if (!is_pure(local)) {
    std::ostringstream os;
    os << "state on the cut has purity " << purity(local);
    throw Error(ErrorCode::NotPure, os.str());
  }
  return {Measure::Contangle, pure_contangle_from_mixedness(local_mixedness(local, single)), cut};
}

EntanglementValue contangle_symmetric_two_mode(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "expected a two-mode state");
  }
  const double det1 = cm.block(0, 0).determinant();
  const double det2 = cm.block(1, 1).determinant();
  if (std::abs(det1 - det2) > 1e-7 * std::max(1.0, std::abs(det1))) {
    std::ostringstream os;
    os << "local determinants differ: " << det1 << " vs " << det2;
    throw Error(ErrorCode::NotSymmetricState, os.str());
  }
  require_physical(cm);
  const Bipartition cut{{0}, {1}};
  const double e = std::max(0.0, -std::log(partial_transpose_spectrum(cm, cut).min()));
  return {Measure::Contangle, e * e, cut};
}

void GlemsParams::check_region() const {
  const bool ok = a >= 1.0 && s >= 0.5 * (a + 1.0) - 1e-12 &&
                  std::abs(d) <= (a * a - 1.0) / (4.0 * s) + 1e-12;
  if (!ok) {
    std::ostringstream os;
    os << "(a, s, d) = (" << a << ", " << s << ", " << d
       << ") outside s >= (a+1)/2, |d| <= (a^2-1)/(4s)";
    throw Error(ErrorCode::RegionViolation, os.str());
  }
}

double glems_m(const GlemsParams& p) {
  p.check_region();
  return std::max(1.0, glems_m_unchecked(p.a, p.s, p.d));
}

double glems_contangle(const GlemsParams& p) { return contangle_from_m(glems_m(p)); }

double glems_pair_sum(const GlemsParams& p) {
  return glems_contangle(p) + glems_contangle({p.a, p.s, -p.d});
}

double glems_pair_contangle(double a_ref, double a_partner, double a_traced) {
  const double s = 0.5 * (a_partner + a_traced);
  const double d = 0.5 * (a_partner - a_traced);
  // The reduction is entangled iff d > -(a^2 - 1)/(4 s).
  if (!(a_ref > 1.0) || d <= -(a_ref * a_ref - 1.0) / (4.0 * s)) return 0.0;
  return contangle_from_m(glems_m_unchecked(a_ref, s, d));
}

StandardForm standard_form(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "standard form needs a two-mode state");
  }
  const Eigen::Matrix2d a_blk = cm.block(0, 0);
  const Eigen::Matrix2d b_blk = cm.block(1, 1);
  const Eigen::Matrix2d c_blk = cm.block(0, 1);
  const double a = std::sqrt(a_blk.determinant());
  const double b = std::sqrt(b_blk.determinant());
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::NonPositiveDeterminant, "local blocks must be positive definite");
  }
  // (A/a)^(-1/2) is symmetric with unit determinant, hence symplectic.
  const Eigen::Matrix2d la = sym_sqrt(a_blk / a).inverse();
  const Eigen::Matrix2d lb = sym_sqrt(b_blk / b).inverse();
  const Eigen::Matrix2d c = la * c_blk * lb.transpose();

  Eigen::JacobiSVD<Eigen::Matrix2d> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU();
  Eigen::Matrix2d v = svd.matrixV();
  Eigen::Vector2d sv = svd.singularValues();
  if (u.determinant() < 0) {
    u.col(1) *= -1.0;
    sv(1) *= -1.0;
  }
  if (v.determinant() < 0) {
    v.col(1) *= -1.0;
    sv(1) *= -1.0;
  }
  StandardForm out{a, b, sv(0), sv(1), Eigen::Matrix4d::Zero()};
  out.transform.block<2, 2>(0, 0) = u.transpose() * la;
  out.transform.block<2, 2>(2, 2) = v.transpose() * lb;
  return out;
}

GaussianContangleResult gaussian_contangle_search(const CovarianceMatrix& cm,
                                                  const GaussianContangleOptions& options) {
  if (cm.modes() != 2) {
    throw Error(ErrorCode::DimensionMismatch, "expected a two-mode state");
  }
  require_physical(cm);
  if (options.starts < 1) throw Error(ErrorCode::InvalidArgument, "starts must be >= 1");

  const StandardForm sf = standard_form(cm);
  Eigen::Matrix2d sigma_x, sigma_p;
  sigma_x << sf.a, sf.c_plus, sf.c_plus, sf.b;
  sigma_p << sf.a, sf.c_minus, sf.c_minus, sf.b;
  const Eigen::Matrix2d lower = sigma_x.inverse();
  // sigma_p - sigma_x^-1 >= 0 is the uncertainty relation in standard form.
  const Eigen::Matrix2d gap = 0.5 * (sigma_p - lower + (sigma_p - lower).transpose());
  const Eigen::Matrix2d gap_half = sym_sqrt(gap);

  auto x_of = [&](const Eigen::VectorXd& t) -> Eigen::Matrix2d {
    const double q1 = 0.5 * (1.0 + std::sin(t(0)));
    const double q2 = 0.5 * (1.0 + std::sin(t(1)));
    const Eigen::Matrix2d r = rotation(t(2));
    const Eigen::Matrix2d q = r * Eigen::Vector2d(q1, q2).asDiagonal() * r.transpose();
    return lower + gap_half * q * gap_half;
  };
  // Squared correlation coefficient of X; the local mixedness of the pure
  // state is 1/sqrt(1 - rho^2).
  auto rho2 = [&](const Eigen::VectorXd& t) {
    const Eigen::Matrix2d x = x_of(t);
    return x(0, 1) * x(0, 1) / (x(0, 0) * x(1, 1));
  };

  optim::NelderMeadOptions nm;
  nm.f_tolerance = options.tolerance;
  nm.max_evaluations = options.max_evaluations;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

  optim::NelderMeadResult best;
  best.value = std::numeric_limits<double>::infinity();
  int evaluations = 0;
  for (int k = 0; k < options.starts; ++k) {
    Eigen::VectorXd t0(3);
    t0 << angle(rng), angle(rng), angle(rng);
    auto r = optim::nelder_mead(rho2, t0, nm);
    evaluations += r.evaluations;
    if (r.value < best.value) best = std::move(r);
  }
  if (!std::isfinite(best.value) || best.value >= 1.0) {
    std::ostringstream os;
    os << "no finite feasible point found (best rho^2 = " << best.value << ")";
    throw Error(ErrorCode::OptimizerFailure, os.str());
  }

  // Pure state X^-1 (+) X in (x1, x2, p1, p2), moved to interleaved order and
  // back to the input frame.
  const Eigen::Matrix2d x = x_of(best.x);
  const Eigen::Matrix2d x_inv = x.inverse();
  Eigen::Matrix4d gamma = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      gamma(2 * i, 2 * j) = x_inv(i, j);
      gamma(2 * i + 1, 2 * j + 1) = x(i, j);
    }
  }
  const Eigen::Matrix4d t_inv = sf.transform.inverse();
  Eigen::Matrix4d gamma_in = t_inv * gamma * t_inv.transpose();
  gamma_in = (0.5 * (gamma_in + gamma_in.transpose())).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(cm.matrix() - gamma_in,
                                                    Eigen::EigenvaluesOnly);
  const double margin = es.eigenvalues()(0);
  if (margin < -1e-6 * std::max(1.0, cm.matrix().cwiseAbs().maxCoeff())) {
    std::ostringstream os;
    os << "optimal pure state violates sigma_p <= sigma by " << -margin;
    throw Error(ErrorCode::OptimizerFailure, os.str());
  }

  const double e = std::atanh(std::sqrt(std::max(best.value, 0.0)));
  return {e * e, CovarianceMatrix(Eigen::MatrixXd(gamma_in)), margin, evaluations};
}

EntanglementValue gaussian_contangle_two_mode(const CovarianceMatrix& cm,
                                              const GaussianContangleOptions& options) {
  const Bipartition cut{{0}, {1}};
  if (cm.modes() == 2 && ppt_separable(cm, cut)) {
    return {Measure::GaussianContangle, 0.0, cut};
  }
  return {Measure::GaussianContangle, gaussian_contangle_search(cm, options).value, cut};
}

}  // namespace cvtangle
