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

// Reference computations used by the tests. They share no code with the
// library beyond the CovarianceMatrix container.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace cvtangle::test {

inline Eigen::MatrixXd omega(int modes) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    w(2 * k, 2 * k + 1) = 1.0;
    w(2 * k + 1, 2 * k) = -1.0;
  }
  return w;
}

// |eigenvalues| of i Omega sigma, ascending; each nu appears twice.
inline std::vector<double> dense_abs_eigenvalues(const Eigen::MatrixXd& sigma) {
  const int n = static_cast<int>(sigma.rows() / 2);
  const Eigen::MatrixXcd m =
      std::complex<double>(0.0, 1.0) * (omega(n) * sigma).cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<double> v;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    v.push_back(std::abs(solver.eigenvalues()(i)));
  }
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> dense_symplectic_spectrum(const Eigen::MatrixXd& sigma) {
  const auto all = dense_abs_eigenvalues(sigma);
  std::vector<double> nu;
  for (std::size_t i = 0; i < all.size(); i += 2) nu.push_back(0.5 * (all[i] + all[i + 1]));
  return nu;
}

inline Eigen::Matrix2d rotation(double t) {
  Eigen::Matrix2d r;
  r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return r;
}

inline Eigen::Matrix2d single_mode_symplectic(double theta, double r, double phi) {
  return rotation(theta) * Eigen::Vector2d(std::exp(-r), std::exp(r)).asDiagonal() *
         rotation(phi);
}

inline Eigen::Matrix2d random_single_mode_symplectic(std::mt19937_64& rng, double r_max = 1.0) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI), sq(-r_max, r_max);
  return single_mode_symplectic(angle(rng), sq(rng), angle(rng));
}

inline Eigen::MatrixXd direct_sum(const std::vector<Eigen::Matrix2d>& blocks) {
  const auto n = static_cast<Eigen::Index>(blocks.size());
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) s.block<2, 2>(2 * k, 2 * k) = blocks[k];
  return s;
}

// Symplectic built from two-mode beam splitters and squeezers.
inline Eigen::MatrixXd random_network(int modes, std::mt19937_64& rng, double r_max = 1.0) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  for (int layer = 0; layer < 3; ++layer) {
    std::vector<Eigen::Matrix2d> locals;
    for (int k = 0; k < modes; ++k) locals.push_back(random_single_mode_symplectic(rng, r_max));
    s = direct_sum(locals) * s;
    for (int i = 0; i + 1 < modes; ++i) {
      const double t = angle(rng);
      Eigen::MatrixXd b = Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
      b.block<2, 2>(2 * i, 2 * i) *= std::cos(t);
      b.block<2, 2>(2 * i + 2, 2 * i + 2) *= std::cos(t);
      b.block<2, 2>(2 * i, 2 * i + 2) = std::sin(t) * Eigen::Matrix2d::Identity();
      b.block<2, 2>(2 * i + 2, 2 * i) = -std::sin(t) * Eigen::Matrix2d::Identity();
      s = b * s;
    }
  }
  return s;
}

// S diag(nu) S^T with nu_k in [1, nu_max].
inline Eigen::MatrixXd random_physical(int modes, std::mt19937_64& rng, double nu_max = 4.0) {
  std::uniform_real_distribution<double> nu(1.0, nu_max);
  Eigen::VectorXd d(2 * modes);
  for (int k = 0; k < modes; ++k) d(2 * k) = d(2 * k + 1) = nu(rng);
  const Eigen::MatrixXd s = random_network(modes, rng);
  Eigen::MatrixXd sigma = s * d.asDiagonal() * s.transpose();
  return 0.5 * (sigma + sigma.transpose());
}

inline Eigen::Matrix4d tms_matrix(double r) {
  const double c = std::cosh(2 * r), s = std::sinh(2 * r);
  Eigen::Matrix4d m;
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return m;
}

// arccosh^2 written as ln^2(a - sqrt(a^2 - 1)), evaluated in long double.
inline double contangle_of_mixedness(double a) {
  const long double x = std::max(1.0, a);
  const long double l = std::log(x - std::sqrt(x * x - 1.0L));
  return static_cast<double>(l * l);
}

}  // namespace cvtangle::test
