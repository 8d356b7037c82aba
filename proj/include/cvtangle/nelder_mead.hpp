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

// Derivative-free local minimizer: GSL's Nelder-Mead simplex (nmsimplex2)
// with restarts from the incumbent.

#include <Eigen/Dense>

#include <functional>

namespace cvtangle::optim {

struct NelderMeadOptions {
  double initial_step = 0.5;
  double f_tolerance = 1e-9;   // improvement below which a restart stops
  double x_tolerance = 1e-10;  // characteristic simplex size
  int max_evaluations = 4000;
  int max_restarts = 3;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0,
                             const NelderMeadOptions& options = {});

}  // namespace cvtangle::optim
