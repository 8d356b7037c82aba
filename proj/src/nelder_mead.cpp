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

#include "cvtangle/nelder_mead.hpp"

#include <cmath>
#include <mutex>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace cvtangle::optim {

namespace {

// GSL needs finite values; non-finite ones become a large finite penalty.
constexpr double kInfeasible = 1e300;

struct Problem {
  const std::function<double(const Eigen::VectorXd&)>* f;
  int evaluations = 0;
};

double call(const gsl_vector* x, void* params) {
  auto* p = static_cast<Problem*>(params);
  ++p->evaluations;
  const Eigen::Map<const Eigen::VectorXd, 0, Eigen::InnerStride<>> v(
      x->data, static_cast<Eigen::Index>(x->size), Eigen::InnerStride<>(static_cast<Eigen::Index>(x->stride)));
  const double value = (*p->f)(v);
  return std::isfinite(value) ? value : kInfeasible;
}

struct GslVector {
  explicit GslVector(std::size_t n) : v(gsl_vector_alloc(n)) {}
  ~GslVector() { gsl_vector_free(v); }
  GslVector(const GslVector&) = delete;
  GslVector& operator=(const GslVector&) = delete;
  gsl_vector* v;
};

struct Minimizer {
  explicit Minimizer(std::size_t n)
      : m(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n)) {}
  ~Minimizer() { gsl_multimin_fminimizer_free(m); }
  Minimizer(const Minimizer&) = delete;
  Minimizer& operator=(const Minimizer&) = delete;
  gsl_multimin_fminimizer* m;
};

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options) {
  static std::once_flag quiet;
  std::call_once(quiet, [] { gsl_set_error_handler_off(); });

  const auto n = static_cast<std::size_t>(x0.size());
  Problem problem{&f};
  gsl_multimin_function fn{&call, n, &problem};

  NelderMeadResult result;
  result.x = x0;
  result.value = f(x0);
  if (!std::isfinite(result.value)) result.value = kInfeasible;
  ++problem.evaluations;

  GslVector x(n), step(n);
  Minimizer minimizer(n);
  double step_size = options.initial_step;
  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.v, i, result.x(static_cast<Eigen::Index>(i)));
    gsl_vector_set_all(step.v, step_size);
    if (gsl_multimin_fminimizer_set(minimizer.m, &fn, x.v, step.v) != GSL_SUCCESS) break;

    bool converged = false;
    while (problem.evaluations < options.max_evaluations) {
      if (gsl_multimin_fminimizer_iterate(minimizer.m) != GSL_SUCCESS) break;
      if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(minimizer.m), options.x_tolerance) ==
          GSL_SUCCESS) {
        converged = true;
        break;
      }
    }
    const double best = gsl_multimin_fminimizer_minimum(minimizer.m);
    const double improvement = result.value - best;
    if (best <= result.value) {
      const gsl_vector* bx = gsl_multimin_fminimizer_x(minimizer.m);
      for (std::size_t i = 0; i < n; ++i) result.x(static_cast<Eigen::Index>(i)) = gsl_vector_get(bx, i);
      result.value = best;
    }
    result.converged = converged;
    // A restart that no longer improves the incumbent confirms convergence.
    if (!converged || improvement <= options.f_tolerance) break;
    step_size *= 0.25;
  }
  if (result.value >= kInfeasible) result.value = std::numeric_limits<double>::infinity();
  result.evaluations = problem.evaluations;
  return result;
}

}  // namespace cvtangle::optim
