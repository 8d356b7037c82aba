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

// Bipartite entanglement of Gaussian states: PPT test, logarithmic
// negativity, contangle (squared logarithmic negativity, extended by convex
// roof) and its Gaussian upper bound for two-mode states.
//
// Logarithmic negativities are in nats, contangles in nats^2.

#include <cstdint>

#include "cvtangle/symplectic.hpp"

namespace cvtangle {

enum class Measure { LogNegativity, Contangle, GaussianContangle };

const char* to_string(Measure m) noexcept;

struct EntanglementValue {
  Measure measure;
  double value;
  Bipartition cut;
};

/// Symplectic spectrum of the partially transposed state, restricted to the
/// modes the cut involves.
SymplecticSpectrum partial_transpose_spectrum(const CovarianceMatrix& cm,
                                              const Bipartition& cut);

/// PPT criterion; exact separability test for 1 x N cuts only.
/// Throws UnsupportedCut when both parties hold more than one mode.
bool ppt_separable(const CovarianceMatrix& cm, const Bipartition& cut);

/// E_N = -sum_{nu~ < 1} ln nu~.
EntanglementValue log_negativity(const CovarianceMatrix& cm, const Bipartition& cut);

/// Contangle of a pure state across a 1 x N cut:
/// ln^2(a - sqrt(a^2 - 1)) = arccosh^2(a), a the local mixedness of the
/// single-mode party.
EntanglementValue contangle_pure(const CovarianceMatrix& cm, const Bipartition& cut);

/// arccosh^2(a) for a local mixedness a >= 1 (InvalidArgument below).
double pure_contangle_from_mixedness(double a);

/// Closed form for symmetric two-mode states (det sigma_1 = det sigma_2):
/// [max(0, -ln nu~_-)]^2.
EntanglementValue contangle_symmetric_two_mode(const CovarianceMatrix& cm);

// ---------------------------------------------------------------------------
// Two-mode reductions of pure three-mode states.
//
// Such a reduction (modes 1 and l, mode k traced out) is a mixed state of
// partial minimum uncertainty fixed, up to local unitaries, by the local
// mixedness a of mode 1 and by s = (a_l + a_k)/2, d = (a_l - a_k)/2.

struct GlemsParams {
  double a;
  double s;
  double d;

  /// s >= (a + 1)/2 and |d| <= (a^2 - 1)/(4 s): both reductions 1|l and 1|k
  /// entangled. Throws RegionViolation otherwise.
  void check_region() const;
};

/// m = m_- if D <= 0, m_+ otherwise. Requires check_region().
double glems_m(const GlemsParams& p);

/// ln^2[m - sqrt(m^2 - 1)], zero for m <= 1 + 1e-12.
double glems_contangle(const GlemsParams& p);

/// Q = G(sigma_12) + G(sigma_13), i.e. glems_contangle at d and at -d.
double glems_pair_sum(const GlemsParams& p);

/// Gaussian contangle of the reduction on (reference, partner) of a pure
/// three-mode state with local mixednesses (a_ref, a_partner, a_traced).
/// Valid on the whole triangle-inequality domain: separable reductions give 0.
double glems_pair_contangle(double a_ref, double a_partner, double a_traced);

// ---------------------------------------------------------------------------
// Gaussian contangle of an arbitrary two-mode state.

struct GaussianContangleOptions {
  int starts = 16;
  double tolerance = 1e-9;
  std::uint64_t seed = 0x5eedc0deULL;
  int max_evaluations = 4000;
};

struct GaussianContangleResult {
  double value;
  /// Pure state attaining the bound, in the frame of the input.
  CovarianceMatrix optimal_pure;
  /// Smallest eigenvalue of sigma - sigma_p; >= -1e-9 for a feasible answer.
  double feasibility_margin;
  int evaluations;
};

/// G_tau(sigma) = min over pure sigma_p <= sigma of arccosh^2 of the local
/// mixedness of sigma_p.
///
/// The state is first brought to standard form by local symplectics. The
/// search then runs over pure states with uncorrelated quadratures,
/// sigma_p = X^-1 (+) X on (x1, x2) and (p1, p2), for which sigma_p <= sigma
/// becomes the operator interval sigma_x^-1 <= X <= sigma_p. Points of that
/// interval are parametrized as X = L + M^1/2 Q M^1/2 with 0 <= Q <= I, so
/// every iterate is feasible. Throws OptimizerFailure if no finite feasible
/// point is found.
GaussianContangleResult gaussian_contangle_search(const CovarianceMatrix& cm,
                                                  const GaussianContangleOptions& options = {});

EntanglementValue gaussian_contangle_two_mode(const CovarianceMatrix& cm,
                                              const GaussianContangleOptions& options = {});

/// Local symplectic T = T_1 (+) T_2 bringing a two-mode state to standard
/// form T sigma T^T = [[a I, diag(c+, c-)], [diag(c+, c-), b I]], c+ >= |c-|.
struct StandardForm {
  double a, b, c_plus, c_minus;
  Eigen::Matrix4d transform;
};

StandardForm standard_form(const CovarianceMatrix& cm);

}  // namespace cvtangle
