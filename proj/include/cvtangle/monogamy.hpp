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

// Monogamy of the contangle: residual (tripartite) contangle of pure
// three-mode states, the fully symmetric N-mode family, and a Monte Carlo
// harness checking
//
//   E(i | rest) - sum_j E(i | j) >= 0
//
// on random pure states.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cvtangle/entanglement.hpp"
#include "cvtangle/states.hpp"

namespace cvtangle {

inline constexpr double kMonogamyTolerance = 1e-6;

struct MonogamyRecord {
  int reference_mode = 0;
  double global_contangle = 0.0;
  /// One entry per other mode, in increasing mode order.
  std::vector<double> pair_contangles;
  double residual = 0.0;
  bool violated = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t index = 0;
  /// Set when a pair optimization failed; the record is kept, not dropped.
  std::optional<std::string> failure;

  double pair_sum() const;
};

/// Tight settings used to re-check an apparent violation.
GaussianContangleOptions reverification_options(const GaussianContangleOptions& base);

/// Global term: pure-state contangle on reference | rest. Pair terms:
/// Gaussian contangle of each two-mode reduction (reference, j). Apparent
/// violations are recomputed with reverification_options() before being
/// reported. Throws NotPure for mixed input.
MonogamyRecord monogamy_record(const CovarianceMatrix& cm, int reference,
                               const GaussianContangleOptions& options = {});

struct ResidualResult {
  double value = 0.0;
  int argmin_reference = 0;
  std::array<MonogamyRecord, 3> per_reference;
};

/// E(i|jk) - E(i|j) - E(i|k) for a pure three-mode state, from closed forms.
MonogamyRecord reference_residual(const ThreeModePureSpec& spec, int reference);

/// Minimum over the three reference modes. Among references within 1e-10 of
/// the minimum, the one with the smallest local mixedness above 1 is reported
/// (lowest index on ties).
ResidualResult residual_contangle(const ThreeModePureSpec& spec);

/// ln^2(a - sqrt(a^2 - 1)): contangle of one mode against the other N in a
/// fully symmetric (N+1)-mode pure state. Independent of N.
double symmetric_global_contangle(double a_loc, int n);

/// N times the contangle of one two-mode reduction of a fully symmetric
/// (N+1)-mode pure state.
double symmetric_total_pairwise(double a_loc, int n);

double symmetric_monogamy_residual(double a_loc, int n);

enum class ScanMeasure { LogNegativity, Contangle };

struct ScanRow {
  double a_loc;
  double lhs;  // E(1|23)
  double rhs;  // E(1|2) + E(1|3)
  bool violated;
};

/// Evaluates the three-mode sharing inequality on fully symmetric pure
/// states for `steps` equally spaced a_loc in [a_from, a_to].
std::vector<ScanRow> logneg_violation_scan(double a_from, double a_to, int steps,
                                           ScanMeasure measure = ScanMeasure::LogNegativity);

/// Central-difference slope, in the local mixedness a_i of the reference mode
/// with the smallest a_i, of that reference's residual contangle. Central
/// when a_i +- 2h stay inside the triangle domain, one-sided on its faces;
/// RegionViolation if neither side fits.
double glocc_monotonicity_probe(const ThreeModePureSpec& spec, double h);

// ---------------------------------------------------------------------------
// Monte Carlo over random pure states.

struct MonteCarloOptions {
  int jobs = 1;
  int reference = 0;
  GaussianContangleOptions optimizer;
};

/// Record for sample `index` of the stream defined by `config`; the sample is
/// random_pure with seed substream_seed(config.seed, index).
MonogamyRecord monte_carlo_sample(const SamplerConfig& config, std::uint64_t index,
                                  const MonteCarloOptions& options = {});

/// Samples [first_index, first_index + count). The result is ordered by index
/// and identical for any number of jobs.
std::vector<MonogamyRecord> monte_carlo(const SamplerConfig& config, std::size_t count,
                                        const MonteCarloOptions& options = {},
                                        std::uint64_t first_index = 0);

struct MonteCarloSummary {
  std::size_t count = 0;
  std::size_t violations = 0;
  std::size_t failures = 0;
  double min_residual = 0.0;
  SamplerConfig config;
};

MonteCarloSummary summarize(const std::vector<MonogamyRecord>& records,
                            const SamplerConfig& config);

}  // namespace cvtangle
