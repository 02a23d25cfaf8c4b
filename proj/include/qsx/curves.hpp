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
#include <functional>
#include <vector>

#include "qsx/core.hpp"
#include "qsx/quasimetric.hpp"

namespace qsx {

enum class Smoothness { C0, PiecewiseC1, C1 };

/// A parametric path [a,b] -> simplex.
///
/// Evaluators must be pure and re-entrant: length routines evaluate the same
/// curve at many parameters and may do so from several threads.
class Curve {
 public:
  using Evaluator = std::function<ProbVector(double)>;
  /// Velocity components at a parameter (sum to zero).
  using Velocity = std::function<std::vector<double>(double)>;

  Curve(double a, double b, Evaluator evaluator, Smoothness smoothness = Smoothness::C0,
        std::vector<double> breakpoints = {}, Velocity velocity = {});

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }

  /// Throws OutOfDomain for parameters outside [a,b].
  ProbVector operator()(double t) const;
  ProbVector start() const { return (*this)(a_); }
  ProbVector finish() const { return (*this)(b_); }

  Smoothness smoothness() const noexcept { return smoothness_; }
  /// Interior parameters where C1 pieces join, sorted.
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  /// {a, breakpoints..., b}.
  std::vector<double> piece_bounds() const;

  bool has_velocity() const noexcept { return static_cast<bool>(velocity_); }
  const Velocity& velocity_evaluator() const noexcept { return velocity_; }
  const Evaluator& evaluator() const noexcept { return evaluator_; }

  /// Velocity at t within the C1 piece [lo, hi]: the supplied evaluator when
  /// present, otherwise a finite difference with step 1e-6 * width that turns
  /// one-sided near lo and hi.
  std::vector<double> velocity(double t, double lo, double hi) const;
  /// Velocity at t using the piece that contains t (the right one at breakpoints).
  TangentVector derivative(double t) const;

 private:
  double a_;
  double b_;
  Evaluator evaluator_;
  Smoothness smoothness_;
  std::vector<double> breakpoints_;
  Velocity velocity_;
};

Curve constant_curve(const ProbVector& p, double a = 0.0, double b = 1.0);
/// Affine segment from p (at a) to q (at b).
Curve segment(const ProbVector& p, const ProbVector& q, double a = 0.0, double b = 1.0);
/// Affine interpolation through `points` at strictly increasing `times`.
Curve polyline(std::vector<double> times, std::vector<ProbVector> points);

/// Worst relative disagreement between the supplied velocity and a central finite
/// difference, sampled at `samples` interior parameters away from breakpoints.
/// Returns 0 when the curve has no velocity evaluator.
double audit_curve_velocity(const Curve& curve, std::size_t samples = 64);

class Partition {
 public:
  /// Throws InvalidInput unless knots are strictly increasing with at least two entries.
  explicit Partition(std::vector<double> knots);

  const std::vector<double>& knots() const noexcept { return knots_; }
  /// |pi| = max_i (t_i - t_{i-1}).
  double modulus() const noexcept;

 private:
  std::vector<double> knots_;
};

/// Uniform partition with 2^level cells per C1 piece of `curve`.
Partition dyadic_partition(const Curve& curve, unsigned level);

/// sum_i D_f(gamma(t_{i-1}), gamma(t_i)) (arguments flipped for Backward).
/// Throws PartitionMismatch unless the partition spans the curve's domain.
double partition_sum(const GeneratorFunction& f, const Curve& curve, const Partition& partition,
                     Direction direction = Direction::Forward);

struct LengthResult {
  double value = 0.0;
  /// Knots in the final partition.
  std::size_t knots = 0;
  unsigned level = 0;
};

/// Knot cap for dyadic refinement.
inline constexpr std::size_t kMaxLengthKnots = std::size_t{1} << 20;

/// Forward length by dyadic refinement until successive sums differ by < tol and a
/// partition shifted inside every cell agrees with the last sum within tol.
/// Throws NoConvergence past kMaxLengthKnots, NotRectifiable on non-finite sums.
LengthResult forward_length(const GeneratorFunction& f, const Curve& curve, double tol);
LengthResult backward_length(const GeneratorFunction& f, const Curve& curve, double tol);
LengthResult curve_length(const GeneratorFunction& f, const Curve& curve, double tol,
                          Direction direction);

/// Curve traversing gamma1 then gamma2 (shifted to start at gamma1.b()).
/// Throws EndpointMismatch when gamma1's end and gamma2's start differ by > 1e-12.
Curve concat(const Curve& first, const Curve& second);

/// t -> gamma(a + b - t).
Curve reverse(const Curve& curve);

/// gamma restricted to [s, t].
Curve restrict(const Curve& curve, double s, double t);

/// gamma o rho for a monotone surjection rho: [a', b'] -> [a, b].
/// Throws NotMonotone on a sampled monotonicity violation or when rho does not map
/// the endpoints onto the curve's endpoints.
Curve reparametrize(const Curve& curve, std::function<double(double)> rho, double a_new,
                    double b_new, std::function<double(double)> rho_derivative = {});

/// L^+(gamma|[a,t]). Throws OutOfDomain.
double length_profile(const GeneratorFunction& f, const Curve& curve, double t, double tol);

/// Reparametrizes by f-length onto [0, L^+(gamma)].
///
/// Pregeodesics use the profile t -> D_f(gamma(a), gamma(t)); other curves use the
/// cumulative partition sums of the converged refinement. Zero-length curves map to
/// a point curve on [0,0]. Throws NotRectifiable or ProfileNotInvertible.
Curve reparametrize_by_flength(const GeneratorFunction& f, const Curve& curve, double tol);

struct GeodesicCheck {
  bool ok = false;
  double defect = 0.0;
};

/// max over grid pairs s < t of |D_f(gamma(s), gamma(t)) - (t - s)|, arguments
/// flipped for Backward (b-geodesic). Throws InvalidInput when grid_size < 2.
GeodesicCheck is_f_geodesic(const GeneratorFunction& f, const Curve& curve, std::size_t grid_size,
                            double tol, Direction direction = Direction::Forward);

/// L^+(gamma) <= D_f(gamma(a), gamma(b)) + tol.
bool is_f_pregeodesic(const GeneratorFunction& f, const Curve& curve, double tol);

/// The three equivalent characterizations of a geodesic, each checked on its own.
struct GeodesicConditions {
  GeodesicCheck geodesic;        ///< D(gamma(s), gamma(t)) = t - s on the grid
  GeodesicCheck additive;        ///< D(gamma(a), gamma(t)) = D(gamma(a), gamma(s)) + D(gamma(s), gamma(t))
  GeodesicCheck length_saturates;  ///< L^+(gamma) = D(gamma(a), gamma(b))
};

GeodesicConditions check_geodesic_conditions(const GeneratorFunction& f, const Curve& curve,
                                             std::size_t grid_size, double tol);

}  // namespace qsx
