/*
 * Copyright 2026 The qsx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qsx/core.hpp"
#include "qsx/curves.hpp"

namespace qsx {

/// Interior margin required by every Finsler operation.
inline constexpr double kInteriorMargin = 1e-12;

struct FinslerEvaluation {
  double value = 0.0;
  std::size_t argmax = 0;
};

/// F(v) = max_i f'(p_i) v_i at the base point p of v.
/// Throws NotC1 for generators without a positive derivative and BoundaryPoint when
/// the base point is not strictly interior.
FinslerEvaluation finsler_F(const GeneratorFunction& f, const TangentVector& v);

/// Midpoint-rule quadrature of t -> F(gamma'(t)) over each C1 piece, doubling the
/// knots until the relative change drops below 1e-8 and a grid shifted inside each
/// cell agrees to the same accuracy. At 2^16 knots per piece the finest rule is
/// returned. Throws NotC1, BoundaryPoint, or NoConvergence for a non-finite integrand.
double finsler_length(const GeneratorFunction& f, const Curve& curve,
                      std::size_t knots_per_piece = 64);

/// Chord quotients D_f(P, P + t v) / t for each t. Throws LeavesSimplex when
/// P + t v has a negative coordinate, BoundaryPoint when P is not interior.
std::vector<double> bm_derivative(const GeneratorFunction& f, const TangentVector& v,
                                  std::span<const double> ts);

struct FinslerAxiomReport {
  std::size_t samples = 0;
  double worst_homogeneity = 0.0;
  double worst_subadditivity = 0.0;
  std::size_t nondegeneracy_violations = 0;

  bool ok() const noexcept {
    return worst_homogeneity <= 1e-12 && worst_subadditivity <= 1e-12 &&
           nondegeneracy_violations == 0;
  }
};

/// Random sweep of subadditivity, positive homogeneity and nondegeneracy at `base`.
FinslerAxiomReport finsler_axioms_check(const GeneratorFunction& f, const ProbVector& base,
                                        std::size_t samples, std::uint64_t seed);

struct ChordReport {
  bool found = false;
  double delta = 0.0;
  double worst_deviation = 0.0;
};

/// Searches (by halving) for a mesh delta such that every sampled chord quotient
/// D_f(gamma(s), gamma(t)) / (t - s) with 0 < t - s < delta lies within epsilon of
/// F(gamma'(s)). The delta found is empirical, not maximal.
/// Throws InvalidInput unless epsilon > 0.
ChordReport uniform_chord_check(const GeneratorFunction& f, const Curve& curve, double epsilon);

}  // namespace qsx
