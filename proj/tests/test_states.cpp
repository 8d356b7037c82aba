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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvtangle/entanglement.hpp"
#include "cvtangle/error.hpp"
#include "cvtangle/states.hpp"
#include "oracles.hpp"

using namespace cvtangle;
using doctest::Approx;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::Io;
}

Eigen::MatrixXd permute_modes(const Eigen::MatrixXd& m, const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Eigen::MatrixXd out(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = m.block<2, 2>(2 * perm[i], 2 * perm[j]);
    }
  }
  return out;
}

void check_pure(const CovarianceMatrix& cm) {
  const auto r = validate(cm);
  CHECK(r.physical);
  CHECK(r.pure);
  for (double nu : test::dense_symplectic_spectrum(cm.matrix())) CHECK(nu == Approx(1.0).epsilon(1e-7));
}

}  // namespace

TEST_CASE("vacuum") {
  CHECK(vacuum(1).matrix().isIdentity());
  CHECK(vacuum(3).matrix().isIdentity());
  CHECK(vacuum(3).modes() == 3);
  CHECK(purity(vacuum(4)) == 1.0);
  CHECK(code_of([] { vacuum(0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("two-mode squeezed") {
  CHECK(two_mode_squeezed(0.0) == vacuum(2));
  const auto t = two_mode_squeezed(1.0);
  check_pure(t);
  CHECK(t(0, 0) == Approx(std::cosh(2.0)));
  CHECK(t(0, 2) == Approx(std::sinh(2.0)));
  CHECK(t(1, 3) == Approx(-std::sinh(2.0)));
  CHECK(log_negativity(t, {{0}, {1}}).value == Approx(2.0).epsilon(1e-12));
  CHECK(code_of([] { two_mode_squeezed(-0.1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("fully symmetric pure states") {
  CHECK(fully_symmetric_pure({3, 1.0}).matrix().isApprox(vacuum(3).matrix()));

  const auto e = fully_symmetric_correlations({3, 2.0});
  // Defining system: both purity products equal 1.
  CHECK((2 - e.e_plus) * (2 - e.e_minus) == Approx(1.0).epsilon(1e-12));
  CHECK((2 + 2 * e.e_plus) * (2 + 2 * e.e_minus) == Approx(1.0).epsilon(1e-12));
  CHECK(e.e_plus == Approx(1.65587).epsilon(1e-5));
  CHECK(e.e_minus == Approx(-0.90587).epsilon(1e-5));

  check_pure(fully_symmetric_pure({4, 1.5}));
  for (int n = 2; n <= 8; ++n) {
    for (double a : {1.05, 2.0, 7.0}) {
      const auto cm = fully_symmetric_pure({n, a});
      check_pure(cm);
      for (int k = 0; k < n; ++k) CHECK(local_mixedness(cm, k) == Approx(a).epsilon(1e-12));
    }
  }

  const auto cm = fully_symmetric_pure({4, 2.5}).matrix();
  std::vector<int> perm{0, 1, 2, 3};
  while (std::next_permutation(perm.begin(), perm.end())) {
    CHECK(permute_modes(cm, perm) == cm);
  }
  CHECK(code_of([] { fully_symmetric_pure({3, 0.9}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { fully_symmetric_pure({1, 2.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("three-mode pure states from local mixednesses") {
  const auto vac = three_mode_pure({1, 1, 1});
  CHECK(vac.matrix().isApprox(vacuum(3).matrix()));

  // (a, a, 1): a two-mode squeezed state with cosh 2r = a next to a vacuum.
  const double a = 3.0;
  const auto t = three_mode_pure({a, a, 1});
  const auto tms = two_mode_squeezed(0.5 * std::acosh(a));
  CHECK(reduce(t, {2}).matrix().isApprox(Eigen::Matrix2d::Identity(), 1e-9));
  CHECK(t.block(0, 2).isZero(1e-9));
  CHECK(t.block(1, 2).isZero(1e-9));
  const auto pair = reduce(t, {0, 1});
  CHECK(symplectic_spectrum(pair).min() == Approx(1.0).epsilon(1e-9));
  CHECK(local_mixedness(pair, 0) == Approx(local_mixedness(tms, 0)).epsilon(1e-9));
  CHECK(partial_transpose_spectrum(pair, {{0}, {1}}).min() ==
        Approx(partial_transpose_spectrum(tms, {{0}, {1}}).min()).epsilon(1e-9));

  // (2, 2, 2) has the spectra of the fully symmetric state on every cut.
  const auto g = three_mode_pure({2, 2, 2});
  const auto f = fully_symmetric_pure({3, 2.0});
  const std::vector<Bipartition> cuts{{{0}, {1}}, {{0}, {2}}, {{1}, {2}},
                                      {{0}, {1, 2}}, {{1}, {0, 2}}, {{2}, {0, 1}}};
  for (const auto& cut : cuts) {
    const auto x = partial_transpose_spectrum(g, cut).values;
    const auto y = partial_transpose_spectrum(f, cut).values;
    REQUIRE(x.size() == y.size());
    for (std::size_t k = 0; k < x.size(); ++k) CHECK(x[k] == Approx(y[k]).epsilon(1e-9));
  }

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto spec = random_three_mode_spec(rng, 10.0);
    CHECK(spec.satisfies_triangle(0.0));
    const auto cm = three_mode_pure(spec);
    check_pure(cm);
    const auto v = spec.values();
    for (int k = 0; k < 3; ++k) {
      CHECK(reduce(cm, {k}).matrix().determinant() == Approx(v[k] * v[k]).epsilon(1e-6));
    }
  }
}

TEST_CASE("triangle inequality rejection") {
  CHECK(code_of([] { three_mode_pure({2, 1.5, 1.2}); }) == ErrorCode::TriangleViolation);
  CHECK(code_of([] { three_mode_pure({5, 1, 1}); }) == ErrorCode::TriangleViolation);
  CHECK(code_of([] { three_mode_pure({0.5, 1, 1}); }) == ErrorCode::TriangleViolation);
  // Within the 1e-9 slack.
  CHECK_NOTHROW(three_mode_pure({3 + 5e-10, 3, 1}));

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(1.0, 8.0);
  int rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const ThreeModePureSpec spec{u(rng), u(rng), u(rng)};
    const auto a = spec.values();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double j = a[(i + 1) % 3], k = a[(i + 2) % 3];
      worst = std::max({worst, std::abs(j - k) + 1 - a[i], a[i] - (j + k - 1)});
    }
    if (worst > 1e-9) {
      ++rejected;
      CHECK(code_of([&] { three_mode_pure(spec); }) == ErrorCode::TriangleViolation);
    }
  }
  CHECK(rejected > 100);
}

TEST_CASE("random symplectic and random pure states") {
  const auto s = random_symplectic(2, 7);
  CHECK(symplectic_defect(s) < 1e-10);
  const CovarianceMatrix moved(s * s.transpose());
  CHECK(purity(CovarianceMatrix(0.5 * (moved.matrix() + moved.matrix().transpose()))) ==
        Approx(1.0).epsilon(1e-10));
  CHECK_FALSE(random_symplectic(2, 8).isApprox(s));
  CHECK(random_symplectic(2, 7) == s);

  std::mt19937_64 rng(3);
  const auto p = random_passive(3, rng);
  CHECK(symplectic_defect(p) < 1e-10);
  CHECK((p * p.transpose()).isIdentity(1e-10));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto cm = random_pure({4, seed, 1.5});
    CHECK(purity(cm) == Approx(1.0).epsilon(1e-7));
  }
  CHECK(random_pure({4, 9, 1.5}) == random_pure({4, 9, 1.5}));

  // No squeezing: a passive transformation of the vacuum is the vacuum.
  const auto flat = random_pure({4, 5, 0.0});
  CHECK(flat.matrix().isIdentity(1e-10));
  for (int i = 0; i < 4; ++i) CHECK(ppt_separable(flat, Bipartition::one_vs_rest(i, 4)));

  CHECK(code_of([] { SamplerConfig{4, 0, -1.0}.check(); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SamplerConfig{0, 0, 1.0}.check(); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] {
          SamplerConfig{4, 0, std::numeric_limits<double>::infinity()}.check();
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("substream seeds") {
  CHECK(substream_seed(1, 0) == substream_seed(1, 0));
  CHECK(substream_seed(1, 0) != substream_seed(1, 1));
  CHECK(substream_seed(1, 0) != substream_seed(2, 0));
}

TEST_CASE("squeezers") {
  const auto z = squeezers(Eigen::Vector2d(0.3, -0.2));
  CHECK(z(0, 0) == Approx(std::exp(-0.3)));
  CHECK(z(1, 1) == Approx(std::exp(0.3)));
  CHECK(z(2, 2) == Approx(std::exp(0.2)));
  CHECK(symplectic_defect(z) < 1e-12);
}
