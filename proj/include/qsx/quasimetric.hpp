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
#include <vector>

#include "qsx/core.hpp"

namespace qsx {

// Max-type quasimetric D_f(P,Q) = max_i (f(q_i) - f(p_i)) and its ball geometry.

struct QuasiDistance {
  double value = 0.0;
  /// Coordinate attaining the maximum; lowest index wins ties.
  std::size_t argmax = 0;
};

QuasiDistance quasi_dist_detail(const GeneratorFunction& f, const ProbVector& p,
                                const ProbVector& q);

/// D_f(P,Q). Nonnegative; zero exactly when P == Q. Throws DimensionMismatch.
double quasi_dist(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q);

/// max{D_f(P,Q), D_f(Q,P)}.
double symmetrize_max(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q);

/// (D_f(P,Q)^r + D_f(Q,P)^r)^{1/r} for r >= 1; throws InvalidExponent otherwise.
double symmetrize_power(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q,
                        double exponent);

enum class Direction { Forward, Backward };

struct BallSpec {
  ProbVector center;
  double radius = 0.0;
  Direction direction = Direction::Forward;
  bool closed = false;
};

struct BallBounds {
  /// p_i^+(r) = f^{-1}(min{f(p_i) + r, 1}).
  std::vector<double> upper;
  /// p_i^-(r) = f^{-1}(max{f(p_i) - r, 0}).
  std::vector<double> lower;
};

/// Throws InvalidInput unless radius > 0.
BallBounds ball_coordinate_bounds(const GeneratorFunction& f, const ProbVector& p, double radius);

/// Membership through the coordinate bounds p^±(r).
///
/// When f(p_i) + r exceeds 1 the upper bound on q_i is vacuous for the open
/// forward ball (likewise f(p_i) - r < 0 for the open backward ball); the clamped
/// bound p_i^+ = 1 alone would wrongly exclude q_i = 1.
bool ball_contains(const BallSpec& spec, const GeneratorFunction& f, const ProbVector& q);

/// Membership through the distance predicate D_f(P,Q) < r (forward) or D_f(Q,P) < r
/// (backward), with <= for closed balls.
bool ball_contains_by_distance(const BallSpec& spec, const GeneratorFunction& f,
                               const ProbVector& q);

struct BallGeometry {
  /// P^+(r) or P^-(r); generally off the simplex.
  std::vector<double> shifted_vertex;
  /// C_i = P^± + (1 - sum_j p_j^±) e_i, i = 0..N. Each lies on sum x = 1.
  std::vector<std::vector<double>> corners;
};

BallGeometry ball_geometry(const GeneratorFunction& f, const ProbVector& p, double radius,
                           Direction direction);

/// Boundary of the ball inside the 2-simplex as a closed polygon (first point
/// repeated at the end). The ball is the simplex clipped by the corner triangle.
/// Throws UnsupportedDimension unless N == 2.
std::vector<std::vector<double>> ball_boundary_polygon(const GeneratorFunction& f,
                                                       const ProbVector& p, double radius,
                                                       Direction direction);

struct ChebyshevBounds {
  double lower = 0.0;  ///< d_inf / N
  double value = 0.0;  ///< D_id(P,Q)
  double upper = 0.0;  ///< d_inf
  bool lower_ok = false;
  bool upper_ok = false;
  /// Lower bound attained (within 1e-15).
  bool saturated = false;
};

/// d_inf/N <= D_id(P,Q) <= d_inf, checked with slack 1e-12.
ChebyshevBounds chebyshev_bounds_check(const ProbVector& p, const ProbVector& q);

}  // namespace qsx
