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

#include "cvtangle/states.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "cvtangle/error.hpp"

namespace cvtangle {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CovarianceMatrix vacuum(int modes) {
  if (modes < 1) throw Error(ErrorCode::InvalidArgument, "modes must be >= 1");
  return CovarianceMatrix(Eigen::MatrixXd::Identity(2 * modes, 2 * modes));
}

CovarianceMatrix two_mode_squeezed(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "squeezing must be finite and >= 0");
  }
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Eigen::MatrixXd m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return CovarianceMatrix(std::move(m));
}

SymmetricCorrelations fully_symmetric_correlations(const FullySymmetricSpec& spec) {
  if (spec.modes < 2) throw Error(ErrorCode::InvalidArgument, "fully symmetric states need N >= 2");
  const double a = spec.a_loc;
  if (!(a >= 1.0) || !std::isfinite(a)) {
    std::ostringstream os;
    os << "a_loc must be >= 1, got " << a;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  const double n = spec.modes;
  // e+ + e- and e+ e- from the two purity conditions.
  const double sum = (a * a - 1.0) * (n - 2.0) / (a * (n - 1.0));
  const double prod = -(a * a - 1.0) / (n - 1.0);
  const double root = std::sqrt(std::max(sum * sum - 4.0 * prod, 0.0));
  return {0.5 * (sum + root), 0.5 * (sum - root)};
}

CovarianceMatrix fully_symmetric_pure(const FullySymmetricSpec& spec) {
  const auto [ep, em] = fully_symmetric_correlations(spec);
  const int n = spec.modes;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(2 * i, 2 * j) = i == j ? spec.a_loc : ep;
      m(2 * i + 1, 2 * j + 1) = i == j ? spec.a_loc : em;
    }
  }
  return CovarianceMatrix(std::move(m));
}

bool ThreeModePureSpec::satisfies_triangle(double slack) const {
  const auto a = values();
  for (int i = 0; i < 3; ++i) {
    const double aj = a[(i + 1) % 3];
    const double ak = a[(i + 2) % 3];
    if (!(a[i] >= 1.0 - slack)) return false;
    if (a[i] < std::abs(aj - ak) + 1.0 - slack) return false;
    if (a[i] > aj + ak - 1.0 + slack) return false;
  }
  return true;
}

void ThreeModePureSpec::check() const {
  if (!satisfies_triangle()) {
    std::ostringstream os;
    os << "(" << a1 << ", " << a2 << ", " << a3
       << ") violates |a_j - a_k| + 1 <= a_i <= a_j + a_k - 1";
    throw Error(ErrorCode::TriangleViolation, os.str());
  }
}

CovarianceMatrix three_mode_pure(const ThreeModePureSpec& spec) {
  spec.check();
  const auto a = spec.values();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 3; ++i) m.block<2, 2>(2 * i, 2 * i) = a[i] * Eigen::Matrix2d::Identity();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const int k = 3 - i - j;
      const double dm = (a[i] - a[j]) * (a[i] - a[j]);
      const double dp = (a[i] + a[j]) * (a[i] + a[j]);
      const double lo = (a[k] - 1.0) * (a[k] - 1.0);
      const double hi = (a[k] + 1.0) * (a[k] + 1.0);
      // Both products are >= 0 inside the triangle domain.
      const double f1 = std::sqrt(std::max((dm - lo) * (dm - hi), 0.0));
      const double f2 = std::sqrt(std::max((dp - lo) * (dp - hi), 0.0));
      const double norm = 4.0 * std::sqrt(a[i] * a[j]);
      const Eigen::Matrix2d e = Eigen::Vector2d((f1 + f2) / norm, (f1 - f2) / norm).asDiagonal();
      m.block<2, 2>(2 * i, 2 * j) = e;
      m.block<2, 2>(2 * j, 2 * i) = e;
    }
  }
  CovarianceMatrix cm(std::move(m));

  const auto nu = symplectic_spectrum(cm).values;
  double residual = 0.0;
  for (double v : nu) residual = std::max(residual, std::abs(v - 1.0));
  for (int i = 0; i < 3; ++i) {
    residual = std::max(residual, std::abs(local_mixedness(cm, i) - a[i]));
  }
  if (residual > 1e-6) {
    std::ostringstream os;
    os << "standard-form construction misses its constraints by " << residual;
    throw Error(ErrorCode::NoSolution, os.str());
  }
  return cm;
}

ThreeModePureSpec random_three_mode_spec(std::mt19937_64& rng, double a_max) {
  if (!(a_max > 1.0)) throw Error(ErrorCode::InvalidArgument, "a_max must exceed 1");
  std::uniform_real_distribution<double> u(1.0, a_max);
  while (true) {
    ThreeModePureSpec spec{u(rng), u(rng), u(rng)};
    if (spec.satisfies_triangle(0.0)) return spec;
  }
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Eigen::MatrixXd random_passive(int modes, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd z(modes, modes);
  for (int i = 0; i < modes; ++i) {
    for (int j = 0; j < modes; ++j) z(i, j) = {g(rng), g(rng)};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Phase fix making the distribution Haar.
  for (int j = 0; j < modes; ++j) {
    const double mod = std::abs(r(j, j));
    if (mod > 0.0) q.col(j) *= r(j, j) / mod;
  }
  // a -> U a on annihilation operators, written on (x_k, p_k).
  Eigen::MatrixXd p(2 * modes, 2 * modes);
  for (int j = 0; j < modes; ++j) {
    for (int k = 0; k < modes; ++k) {
      const double re = q(j, k).real();
      const double im = q(j, k).imag();
      p(2 * j, 2 * k) = re;
      p(2 * j, 2 * k + 1) = -im;
      p(2 * j + 1, 2 * k) = im;
      p(2 * j + 1, 2 * k + 1) = re;
    }
  }
  return p;
}

Eigen::MatrixXd squeezers(const Eigen::VectorXd& r) {
  const auto n = r.size();
  Eigen::MatrixXd z = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    z(2 * i, 2 * i) = std::exp(-r(i));
    z(2 * i + 1, 2 * i + 1) = std::exp(r(i));
  }
  return z;
}

Eigen::MatrixXd random_symplectic(int modes, std::uint64_t seed, double squeeze_max) {
  if (modes < 1) throw Error(ErrorCode::InvalidArgument, "modes must be >= 1");
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXd p1 = random_passive(modes, rng);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd r(modes);
  for (int i = 0; i < modes; ++i) r(i) = squeeze_max * u(rng);
  const Eigen::MatrixXd p2 = random_passive(modes, rng);
  return p1 * squeezers(r) * p2;
}

void SamplerConfig::check() const {
  if (modes < 1) throw Error(ErrorCode::InvalidArgument, "modes must be >= 1");
  if (!std::isfinite(squeeze_max) || squeeze_max < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "squeeze_max must be finite and >= 0");
  }
}

CovarianceMatrix random_pure(const SamplerConfig& config) {
  config.check();
  const Eigen::MatrixXd s = random_symplectic(config.modes, config.seed, config.squeeze_max);
  Eigen::MatrixXd m = s * s.transpose();
  m = (0.5 * (m + m.transpose())).eval();
  return CovarianceMatrix(std::move(m));
}

}  // namespace cvtangle
