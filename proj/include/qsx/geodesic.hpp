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

#include <memory>
#include <vector>

#include "qsx/core.hpp"
#include "qsx/curves.hpp"

namespace qsx {

// Explicit f-geodesics. For P != Q and r = D_f(P,Q), the curve
//
//   gamma_j(t) = f^{-1}( f(p_j) + t + mu(t) (f(q_j) - f(p_j) - r) ),  t in [0, r],
//
// where mu(t) in [0,1] is fixed by sum_j gamma_j(t) = 1, satisfies
// D_f(gamma(s), gamma(t)) = t - s for s <= t.

/// Solves sum_j f^{-1}(f(p_j) + t + x (f(q_j) - f(p_j) - r)) = 1 for x in [0,1] by
/// bisection to width `tol`; f^{-1} is clamped to [0,1] outside its domain.
/// Throws DegenerateEndpoints (P == Q), OutOfDomain (t outside [0,r]) or
/// BracketFailure (generator violates its invariants).
double solve_mu(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q, double t,
                double tol);

struct MuDerivative {
  /// -(sum_j 1/f'(gamma_j)) / (sum_j c_j / f'(gamma_j)), c_j = f(q_j) - f(p_j) - r.
  double formula = 0.0;
  /// Central difference of mu with step h, solved at tolerance 1e-15.
  double finite_difference = 0.0;
  double relative_error = 0.0;
};

class Geodesic {
 public:
  const GeneratorFunction& generator() const noexcept;
  /// Start and end of the traversal.
  const ProbVector& start() const noexcept;
  const ProbVector& finish() const noexcept;
  /// Parameter length: D_f(start, finish) for forward geodesics, D_f(finish, start)
  /// for backward ones.
  double r() const noexcept;
  double tolerance() const noexcept;
  bool is_backward() const noexcept;
  bool is_degenerate() const noexcept { return r() == 0.0; }

  /// mu of the underlying forward construction at the matching parameter. Results
  /// are memoized per exact parameter value.
  double mu(double t) const;
  ProbVector point(double t) const;
  /// Analytic velocity (1 + mu' c_j) / f'(gamma_j); needs a C1 generator and
  /// interior endpoints. Throws NotC1 or BoundaryPoint.
  std::vector<double> velocity(double t) const;

  /// The geodesic as a curve on [0, r]. Carries the analytic velocity when
  /// available.
  Curve as_curve() const;

 private:
  struct State;
  explicit Geodesic(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  friend Geodesic make_geodesic(const GeneratorFunction&, const ProbVector&, const ProbVector&,
                                double);
  friend Geodesic backward_geodesic(const GeneratorFunction&, const ProbVector&,
                                    const ProbVector&, double);
  friend MuDerivative mu_derivative(const Geodesic&, double, double);

  std::shared_ptr<const State> state_;
};

/// f-geodesic from p to q on [0, D_f(p,q)]. For p == q returns a point curve on
/// [0,0].
Geodesic make_geodesic(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q,
                       double tol = 1e-12);

/// b-geodesic from p to q: the f-geodesic from q to p traversed backwards, on
/// [0, D_f(q,p)], with D_f(gamma(t), gamma(s)) = t - s for s <= t.
Geodesic backward_geodesic(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q,
                           double tol = 1e-12);

/// d/dt mu(t) for t in (0, r). Throws OutOfDomain, NotC1, BoundaryPoint or
/// DegenerateEndpoints.
MuDerivative mu_derivative(const Geodesic& geodesic, double t, double h = 1e-6);

}  // namespace qsx
