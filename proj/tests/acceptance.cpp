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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. `--long` runs criterion 3 at 60000 states.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "cvtangle/cli.hpp"
#include "cvtangle/entanglement.hpp"
#include "cvtangle/io.hpp"
#include "cvtangle/monogamy.hpp"
#include "oracles.hpp"

using namespace cvtangle;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_s) {
    o.pass = false;
    o.detail += "; over the " + io::format_number(budget_s) + " s budget";
  }
  failures += !o.pass;
  std::printf("%s  [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str(), dt);
  std::fflush(stdout);
}

std::string fmt(double x) { return io::format_number(x); }

// Unrationalized pairwise sum for the symmetric family, in long double.
double pairwise_oracle(double a_loc, int n_int) {
  const long double a2 = static_cast<long double>(a_loc) * a_loc, n = n_int;
  const long double x =
      (a2 * (n + 1) - 1 - std::sqrt((a2 - 1) * (a2 * (n + 1) * (n + 1) - (n - 1) * (n - 1)))) / n;
  return static_cast<double>(n / 4 * std::log(x) * std::log(x));
}

Outcome saturation() {
  double worst_q = 0.0, worst_r = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double a = 1.01 + (10.0 - 1.01) * k / 199.0;
    const double s = (a + 1) / 2, d = (a * a - 1) / (4 * s);
    const double target = test::contangle_of_mixedness(a);
    worst_q = std::max({worst_q, std::abs(glems_pair_sum({a, s, d}) - target),
                        std::abs(glems_pair_sum({a, s, -d}) - target)});
    worst_r = std::max(worst_r, std::abs(residual_contangle({a, a, 1}).value));
  }
  return {worst_q < 1e-9 && worst_r < 1e-6,
          "max |Q - ln^2(a - sqrt(a^2-1))| = " + fmt(worst_q) +
              ", max |residual(a,a,1)| = " + fmt(worst_r) + " over 200 a in [1.01, 10]"};
}

Outcome three_mode_theorem() {
  std::mt19937_64 rng(20240601);
  double lo = std::numeric_limits<double>::infinity();
  int violations = 0;
  for (int k = 0; k < 10000; ++k) {
    const auto r = residual_contangle(random_three_mode_spec(rng, 10.0));
    lo = std::min(lo, r.value);
    violations += r.value < -kMonogamyTolerance;
  }
  return {violations == 0,
          std::to_string(violations) + " violations in 10000 specs, min residual " + fmt(lo)};
}

Outcome four_mode_monte_carlo(std::size_t count) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("cvtangle_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto csv = (dir / "records.csv").string();
  const auto summary_path = (dir / "summary.json").string();
  std::ostringstream out, err;
  const int code = cli::run({"montecarlo", "--modes", "4", "--count", std::to_string(count), "--seed",
                             "42", "--out", csv, "--summary", summary_path},
                            out, err);
  if (code != 0) {
    std::filesystem::remove_all(dir);
    return {false, "montecarlo exited with " + std::to_string(code) + ": " + err.str()};
  }
  std::ifstream is(csv);
  const auto records = io::read_records_csv(is);
  std::ifstream ss(summary_path);
  const auto summary = nlohmann::json::parse(ss);
  std::filesystem::remove_all(dir);

  int above = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    const double excess = r.pair_sum() - r.global_contangle;
    worst = std::max(worst, excess);
    above += !(excess <= kMonogamyTolerance);
  }
  const std::size_t violations = summary["violations"];
  const std::size_t failed = summary["failures"];
  return {records.size() == count && violations == 0 && failed == 0 && above == 0,
          std::to_string(records.size()) + " states, " + std::to_string(violations) +
              " violations, " + std::to_string(failed) + " failures, max (sum pair - global) = " +
              fmt(worst) + ", min residual " + fmt(summary["min_residual"].get<double>())};
}

Outcome symmetric_family() {
  bool ok = true;
  double worst_eq = 0.0, lo = std::numeric_limits<double>::infinity();
  for (double a : {1.1, 2.0, 5.0}) {
    worst_eq = std::max(worst_eq, std::abs(symmetric_total_pairwise(a, 1) -
                                           symmetric_global_contangle(a, 1)));
    for (int n = 1; n <= 12; ++n) {
      lo = std::min(lo, symmetric_monogamy_residual(a, n));
      if (n > 1) ok &= symmetric_total_pairwise(a, n) < symmetric_total_pairwise(a, n - 1);
    }
  }
  // N = 1 is an exact equality, so >= 0 is checked to the same 1e-12.
  ok &= lo >= -1e-12 && worst_eq < 1e-12;
  const double v2 = symmetric_total_pairwise(2.0, 2), v3 = symmetric_total_pairwise(2.0, 3);
  const double o2 = pairwise_oracle(2.0, 2), o3 = pairwise_oracle(2.0, 3);
  ok &= std::abs(v2 - o2) < 1e-5 && std::abs(v3 - o3) < 1e-5;
  return {ok, "min residual " + fmt(lo) + " (>= -1e-12)" + ", strictly decreasing in N, |N=1 gap| = " + fmt(worst_eq) +
                  "; (a=2,N=2) " + fmt(v2) + " vs oracle " + fmt(o2) + ", (a=2,N=3) " + fmt(v3) +
                  " vs oracle " + fmt(o3)};
}

Outcome logneg_failure() {
  std::size_t en = 0, tau = 0;
  for (const auto& r : logneg_violation_scan(1.01, 3.0, 100, ScanMeasure::LogNegativity)) en += r.violated;
  for (const auto& r : logneg_violation_scan(1.01, 3.0, 100, ScanMeasure::Contangle)) tau += r.violated;
  return {en >= 1 && tau == 0, std::to_string(en) + " of 100 grid points violate with E_N, " +
                                   std::to_string(tau) + " with the contangle"};
}

CovarianceMatrix locally_rotated(const Eigen::MatrixXd& m, std::mt19937_64& rng) {
  std::vector<Eigen::Matrix2d> blocks;
  for (Eigen::Index k = 0; k < m.rows() / 2; ++k) blocks.push_back(test::random_single_mode_symplectic(rng));
  const auto s = test::direct_sum(blocks);
  const Eigen::MatrixXd out = s * m * s.transpose();
  return CovarianceMatrix(0.5 * (out + out.transpose()));
}

Outcome closed_form_cross_checks() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_sym = 0.0, worst_glems = 0.0;
  int sym_entangled = 0, glems_entangled = 0;
  for (int made = 0; made < 100;) {
    const double a = 1.0 + 3.0 * u(rng);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = a;
    m(0, 2) = m(2, 0) = a * u(rng);
    m(1, 3) = m(3, 1) = -a * u(rng);
    if (!validate(m).physical) continue;
    ++made;
    const auto cm = locally_rotated(m, rng);
    const double g = gaussian_contangle_two_mode(cm).value;
    const double c = contangle_symmetric_two_mode(cm).value;
    sym_entangled += c > 0;
    worst_sym = std::max(worst_sym, std::abs(g - c));
  }
  for (int k = 0; k < 100; ++k) {
    const auto spec = random_three_mode_spec(rng, 6.0);
    const auto a = spec.values();
    const auto full = locally_rotated(three_mode_pure(spec).matrix(), rng);
    const int j = 1 + k % 2;
    const double g = gaussian_contangle_two_mode(reduce(full, {0, j})).value;
    const double c = glems_pair_contangle(a[0], a[j], a[3 - j]);
    glems_entangled += c > 0;
    worst_glems = std::max(worst_glems, std::abs(g - c));
  }
  return {worst_sym < 1e-5 && worst_glems < 1e-5,
          "symmetric: max |diff| = " + fmt(worst_sym) + " (" + std::to_string(sym_entangled) +
              "/100 entangled); GLEMS: max |diff| = " + fmt(worst_glems) + " (" +
              std::to_string(glems_entangled) + "/100 entangled)"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(7);
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + k % 4;
    const CovarianceMatrix cm(test::random_physical(n, rng, 5.0));
    const auto nu = symplectic_spectrum(cm).values;
    const auto all = test::dense_abs_eigenvalues(cm.matrix());
    for (int i = 0; i < n; ++i) {
      worst = std::max({worst, std::abs(nu[i] - all[2 * i]) / all[2 * i],
                        std::abs(nu[i] - all[2 * i + 1]) / all[2 * i + 1]});
    }
  }
  return {worst < 1e-7, "max relative deviation " + fmt(worst) + " over 500 states, N <= 4"};
}

Outcome glocc_monotonicity() {
  std::mt19937_64 rng(314);
  const double h = 1e-4;
  double lo = std::numeric_limits<double>::infinity();
  for (int made = 0; made < 1000;) {
    const auto spec = random_three_mode_spec(rng, 10.0);
    auto a = spec.values();
    const int i = static_cast<int>(std::min_element(a.begin(), a.end()) - a.begin());
    bool interior = true;
    for (double shift : {-2 * h, 2 * h}) {
      auto b = a;
      b[i] += shift;
      interior &= ThreeModePureSpec{b[0], b[1], b[2]}.satisfies_triangle(0.0);
    }
    if (!interior) continue;
    ++made;
    lo = std::min(lo, glocc_monotonicity_probe(spec, h));
  }
  return {lo > -1e-6, "min slope " + fmt(lo) + " over 1000 interior specs"};
}

Outcome permutation_and_reference() {
  std::mt19937_64 rng(2718);
  double worst = 0.0;
  int wrong = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto spec = random_three_mode_spec(rng, 10.0);
    auto a = spec.values();
    const auto r = residual_contangle(spec);
    std::array<int, 3> p{0, 1, 2};
    while (std::next_permutation(p.begin(), p.end())) {
      worst = std::max(worst, std::abs(residual_contangle({a[p[0]], a[p[1]], a[p[2]]}).value - r.value));
    }
    wrong += a[r.argmin_reference] != *std::min_element(a.begin(), a.end());
  }
  return {worst < 1e-9 && wrong == 0, "max permutation deviation " + fmt(worst) + ", " +
                                          std::to_string(wrong) +
                                          " of 1000 argmin references without minimal a_i"};
}

}  // namespace

int main(int argc, char** argv) {
  const bool long_run = argc > 1 && std::string(argv[1]) == "--long";
  criterion(1, "saturation identity", 1.0, saturation);
  criterion(2, "three-mode monogamy theorem", 30.0, three_mode_theorem);
  const std::size_t count = long_run ? 60000 : 1000;
  criterion(3, "four-mode Monte Carlo (" + std::to_string(count) + " states)",
            long_run ? 36000.0 : 600.0, [&] { return four_mode_monte_carlo(count); });
  criterion(4, "symmetric N-mode monogamy", 1.0, symmetric_family);
  criterion(5, "log-negativity sharing failure", 5.0, logneg_failure);
  criterion(6, "closed-form cross-checks", 120.0, closed_form_cross_checks);
  criterion(7, "symplectic spectrum oracle equivalence", 30.0, oracle_equivalence);
  criterion(8, "GLOCC monotonicity", 60.0, glocc_monotonicity);
  criterion(9, "permutation invariance and reference-mode rule", 30.0, permutation_and_reference);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
