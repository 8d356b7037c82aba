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

#include "cvtangle/monogamy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "cvtangle/error.hpp"

namespace cvtangle {

namespace {

void finish(MonogamyRecord& r) {
  r.residual = r.global_contangle - r.pair_sum();
  r.violated = r.residual < -kMonogamyTolerance;
}

std::vector<double> pair_terms(const CovarianceMatrix& cm, int reference,
                               const GaussianContangleOptions& options) {
  std::vector<double> pairs;
  for (int j = 0; j < cm.modes(); ++j) {
    if (j == reference) continue;
    pairs.push_back(gaussian_contangle_two_mode(reduce(cm, {reference, j}), options).value);
  }
  return pairs;
}

void check_symmetric_args(double a_loc, int n) {
  if (!(a_loc >= 1.0) || !std::isfinite(a_loc)) {
    throw Error(ErrorCode::InvalidArgument, "a_loc must be finite and >= 1");
  }
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
}

}  // namespace

double MonogamyRecord::pair_sum() const {
  return std::accumulate(pair_contangles.begin(), pair_contangles.end(), 0.0);
}

GaussianContangleOptions reverification_options(const GaussianContangleOptions& base) {
  GaussianContangleOptions tight = base;
  tight.starts = std::max(base.starts, 64);
  tight.tolerance = std::min(base.tolerance, 1e-11);
  tight.max_evaluations = std::max(base.max_evaluations, 20000);
  tight.seed = base.seed ^ 0x9e3779b97f4a7c15ULL;
  return tight;
}

MonogamyRecord monogamy_record(const CovarianceMatrix& cm, int reference,
                               const GaussianContangleOptions& options) {
  if (reference < 0 || reference >= cm.modes()) {
    throw Error(ErrorCode::IndexOutOfRange, "reference mode out of range");
  }
  require_physical(cm);
  MonogamyRecord r;
  r.reference_mode = reference;
  r.global_contangle = contangle_pure(cm, Bipartition::one_vs_rest(reference, cm.modes())).value;
  r.pair_contangles = pair_terms(cm, reference, options);
  finish(r);
  if (r.violated) {
    r.pair_contangles = pair_terms(cm, reference, reverification_options(options));
    finish(r);
  }
  return r;
}

MonogamyRecord reference_residual(const ThreeModePureSpec& spec, int reference) {
  spec.check();
  if (reference < 0 || reference > 2) {
    throw Error(ErrorCode::IndexOutOfRange, "reference mode must be 0, 1 or 2");
  }
  const auto a = spec.values();
  MonogamyRecord r;
  r.reference_mode = reference;
  r.global_contangle = pure_contangle_from_mixedness(a[reference]);
  for (int j = 0; j < 3; ++j) {
    if (j == reference) continue;
    const int k = 3 - reference - j;
    r.pair_contangles.push_back(glems_pair_contangle(a[reference], a[j], a[k]));
  }
  finish(r);
  return r;
}

ResidualResult residual_contangle(const ThreeModePureSpec& spec) {
  ResidualResult out;
  for (int i = 0; i < 3; ++i) out.per_reference[i] = reference_residual(spec, i);
  out.value = std::min({out.per_reference[0].residual, out.per_reference[1].residual,
                        out.per_reference[2].residual});

  const auto a = spec.values();
  int best = -1;
  for (int i = 0; i < 3; ++i) {
    if (out.per_reference[i].residual > out.value + 1e-10) continue;
    if (best < 0) {
      best = i;
      continue;
    }
    const bool i_entangled = a[i] > 1.0;
    const bool best_entangled = a[best] > 1.0;
    if (i_entangled != best_entangled) {
      if (i_entangled) best = i;
    } else if (a[i] < a[best]) {
      best = i;
    }
  }
  out.argmin_reference = best;
  return out;
}

double symmetric_global_contangle(double a_loc, int n) {
  check_symmetric_args(a_loc, n);
  return pure_contangle_from_mixedness(a_loc);
}

double symmetric_total_pairwise(double a_loc, int n) {
  check_symmetric_args(a_loc, n);
  const double a2 = a_loc * a_loc;
  const double nn = n;
  // [a^2 (N+1) - 1 - sqrt(P)] / N, with the difference rationalized:
  // (a^2(N+1) - 1)^2 - P = N (2 a^2 (N-1) - N + 2).
  const double big_a = a2 * (nn + 1.0) - 1.0;
  const double p = (a2 - 1.0) * (a2 * (nn + 1.0) * (nn + 1.0) - (nn - 1.0) * (nn - 1.0));
  const double x = (2.0 * a2 * (nn - 1.0) - nn + 2.0) / (big_a + std::sqrt(p));
  const double l = std::log(x);
  return 0.25 * nn * l * l;
}

double symmetric_monogamy_residual(double a_loc, int n) {
  return symmetric_global_contangle(a_loc, n) - symmetric_total_pairwise(a_loc, n);
}

std::vector<ScanRow> logneg_violation_scan(double a_from, double a_to, int steps,
                                           ScanMeasure measure) {
  if (!(a_from > 1.0) || !(a_to >= a_from) || !std::isfinite(a_to)) {
    throw Error(ErrorCode::InvalidArgument, "scan range must satisfy 1 < a_from <= a_to");
  }
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be >= 1");
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  const Bipartition global{{0}, {1, 2}};
  const Bipartition pair{{0}, {1}};
  for (int k = 0; k < steps; ++k) {
    const double a = steps == 1 ? a_from : a_from + (a_to - a_from) * k / (steps - 1);
    const CovarianceMatrix cm = fully_symmetric_pure({3, a});
    const CovarianceMatrix reduced = reduce(cm, {0, 1});
    ScanRow row{a, 0.0, 0.0, false};
    if (measure == ScanMeasure::LogNegativity) {
      row.lhs = log_negativity(cm, global).value;
      row.rhs = 2.0 * log_negativity(reduced, pair).value;
    } else {
      row.lhs = contangle_pure(cm, global).value;
      row.rhs = 2.0 * contangle_symmetric_two_mode(reduced).value;
    }
    row.violated = row.lhs - row.rhs < -kMonogamyTolerance;
    rows.push_back(row);
  }
  return rows;
}

double glocc_monotonicity_probe(const ThreeModePureSpec& spec, double h) {
  spec.check();
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  const auto a = spec.values();
  int i = 0;
  for (int k = 1; k < 3; ++k) {
    if (a[k] < a[i]) i = k;
  }
  auto with = [&](double ai) {
    auto v = a;
    v[i] = ai;
    return ThreeModePureSpec{v[0], v[1], v[2]};
  };
  auto inside = [&](double shift) { return with(a[i] + shift).satisfies_triangle(0.0); };
  auto f = [&](double shift) { return reference_residual(with(a[i] + shift), i).residual; };
  const bool below = inside(-h) && inside(-2.0 * h);
  const bool above = inside(h) && inside(2.0 * h);
  if (below && above) return (f(h) - f(-h)) / (2.0 * h);
  // On a face of the domain: second-order one-sided difference.
  if (above) return (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
  if (below) return (3.0 * f(0.0) - 4.0 * f(-h) + f(-2.0 * h)) / (2.0 * h);
  std::ostringstream os;
  os << "perturbing a_" << i << " by +-" << 2.0 * h << " leaves the physical domain";
  throw Error(ErrorCode::RegionViolation, os.str());
}

MonogamyRecord monte_carlo_sample(const SamplerConfig& config, std::uint64_t index,
                                  const MonteCarloOptions& options) {
  SamplerConfig sample = config;
  sample.seed = substream_seed(config.seed, index);
  MonogamyRecord r;
  try {
    const CovarianceMatrix cm = random_pure(sample);
    r = monogamy_record(cm, options.reference, options.optimizer);
  } catch (const Error& e) {
    r = MonogamyRecord{};
    r.reference_mode = options.reference;
    r.pair_contangles.assign(static_cast<std::size_t>(std::max(config.modes - 1, 0)),
                             std::numeric_limits<double>::quiet_NaN());
    r.global_contangle = std::numeric_limits<double>::quiet_NaN();
    r.residual = std::numeric_limits<double>::quiet_NaN();
    r.failure = e.what();
  }
  r.seed = sample.seed;
  r.index = index;
  return r;
}

std::vector<MonogamyRecord> monte_carlo(const SamplerConfig& config, std::size_t count,
                                        const MonteCarloOptions& options,
                                        std::uint64_t first_index) {
  config.check();
  if (config.modes < 2) throw Error(ErrorCode::InvalidArgument, "monte carlo needs >= 2 modes");
  if (options.reference < 0 || options.reference >= config.modes) {
    throw Error(ErrorCode::IndexOutOfRange, "reference mode out of range");
  }
  std::vector<MonogamyRecord> records(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      records[k] = monte_carlo_sample(config, first_index + k, options);
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(count)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return records;
}

MonteCarloSummary summarize(const std::vector<MonogamyRecord>& records,
                            const SamplerConfig& config) {
  MonteCarloSummary s;
  s.config = config;
  s.count = records.size();
  s.min_residual = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    if (r.failure) {
      ++s.failures;
      continue;
    }
    if (r.violated) ++s.violations;
    s.min_residual = std::min(s.min_residual, r.residual);
  }
  if (s.count == s.failures) s.min_residual = std::numeric_limits<double>::quiet_NaN();
  return s;
}

}  // namespace cvtangle
