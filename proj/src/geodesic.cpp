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

#include "qsx/geodesic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

#include "qsx/error.hpp"
#include "qsx/quasimetric.hpp"

namespace qsx {

namespace {

// Root of sum_j f^{-1}(fp_j + t + x c_j) = 1 on [0,1]. Every c_j <= 0, so the
// left-hand side is nonincreasing in x: >= 1 at x = 0 and <= 1 at x = 1.
double bisect_mu(const GeneratorFunction& f, const std::vector<double>& fp,
                 const std::vector<double>& coef, double r, double t, double tol) {
  if (t <= 0.0) return 0.0;
  if (t >= r) return 1.0;
  auto excess = [&](double x) {
    double sum = 0.0;
    for (std::size_t j = 0; j < fp.size(); ++j) sum += f.inverse(fp[j] + t + x * coef[j]);
    return sum - 1.0;
  };
  if (excess(0.0) < -1e-9 || excess(1.0) > 1e-9) {
    fail(ErrorCode::BracketFailure, "mu equation has no sign change on [0,1]");
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct Construction {
  std::vector<double> fp;
  std::vector<double> coef;
  double r = 0.0;
};

Construction construct(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q) {
  require_same_dimension(p, q);
  Construction c;
  c.r = quasi_dist(f, p, q);
  c.fp.resize(p.size());
  c.coef.resize(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    c.fp[j] = f(p[j]);
    // Clamp the rounding residue so the maximizing coordinate has slope exactly 0.
    c.coef[j] = std::min(f(q[j]) - c.fp[j] - c.r, 0.0);
  }
  return c;
}

double parameter_slack(double r) { return 1e-12 * std::max(1.0, r); }

}  // namespace

double solve_mu(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q, double t,
                double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidInput, "solver tolerance must be positive");
  const Construction c = construct(f, p, q);
  if (c.r == 0.0) fail(ErrorCode::DegenerateEndpoints, "P == Q: the geodesic is a point");
  if (!(t >= -parameter_slack(c.r) && t <= c.r + parameter_slack(c.r))) {
    fail(ErrorCode::OutOfDomain, "t must lie in [0, r]");
  }
  return bisect_mu(f, c.fp, c.coef, c.r, t, tol);
}

struct Geodesic::State {
  GeneratorFunction f;
  // Endpoints of the underlying forward construction (from -> to).
  ProbVector from;
  ProbVector to;
  Construction c;
  double tol;
  bool backward;

  mutable std::mutex memo_mutex;
  mutable std::unordered_map<std::uint64_t, double> memo;

  // Parameter of the forward construction for traversal parameter t.
  double underlying(double t) const { return backward ? c.r - t : t; }

  double mu(double u) const {
    const std::uint64_t key = std::bit_cast<std::uint64_t>(u);
    {
      std::lock_guard lock(memo_mutex);
      if (const auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const double value = bisect_mu(f, c.fp, c.coef, c.r, u, tol);
    std::lock_guard lock(memo_mutex);
    if (memo.size() >= (std::size_t{1} << 20)) memo.clear();
    memo.emplace(key, value);
    return value;
  }

  std::vector<double> coordinates(double u, double m) const {
    std::vector<double> out(c.fp.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.inverse(c.fp[j] + u + m * c.coef[j]);
    return out;
  }

  ProbVector point_at(double u) const {
    if (c.r == 0.0 || u <= 0.0) return from;
    if (u >= c.r) return to;
    return make_prob_vector(coordinates(u, mu(u)));
  }

  double check_parameter(double t) const {
    const double slack = parameter_slack(c.r);
    if (!(t >= -slack && t <= c.r + slack)) {
      fail(ErrorCode::OutOfDomain, "geodesic parameter " + std::to_string(t) + " outside [0, " +
                                       std::to_string(c.r) + "]");
    }
    return std::clamp(t, 0.0, c.r);
  }

  void require_smooth() const {
    if (!f.finsler_capable()) {
      fail(ErrorCode::NotC1, "generator '" + f.name() + "' is not C1 with a positive derivative");
    }
    if (!from.is_interior() || !to.is_interior()) {
      fail(ErrorCode::BoundaryPoint, "mu' and the analytic velocity need interior endpoints");
    }
  }

  // d mu / du at the forward parameter u.
  double mu_prime(double u, const std::vector<double>& gamma) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      const double inv = 1.0 / f.derivative(gamma[j]);
      num += inv;
      den += c.coef[j] * inv;
    }
    (void)u;
    return -num / den;
  }

  State(GeneratorFunction f_, ProbVector from_, ProbVector to_, double tol_, bool backward_)
      : f(std::move(f_)),
        from(std::move(from_)),
        to(std::move(to_)),
        c(construct(f, from, to)),
        tol(tol_),
        backward(backward_) {}
};

const GeneratorFunction& Geodesic::generator() const noexcept { return state_->f; }
const ProbVector& Geodesic::start() const noexcept {
  return state_->backward ? state_->to : state_->from;
}
const ProbVector& Geodesic::finish() const noexcept {
  return state_->backward ? state_->from : state_->to;
}
double Geodesic::r() const noexcept { return state_->c.r; }
double Geodesic::tolerance() const noexcept { return state_->tol; }
bool Geodesic::is_backward() const noexcept { return state_->backward; }

double Geodesic::mu(double t) const {
  if (is_degenerate()) fail(ErrorCode::DegenerateEndpoints, "P == Q: mu is undefined");
  return state_->mu(state_->underlying(state_->check_parameter(t)));
}

ProbVector Geodesic::point(double t) const {
  return state_->point_at(state_->underlying(state_->check_parameter(t)));
}

std::vector<double> Geodesic::velocity(double t) const {
  const State& s = *state_;
  if (is_degenerate()) return std::vector<double>(s.from.size(), 0.0);
  s.require_smooth();
  const double u = s.underlying(s.check_parameter(t));
  const std::vector<double> gamma = s.coordinates(u, s.mu(u));
  const double slope = s.mu_prime(u, gamma);
  std::vector<double> out(gamma.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (1.0 + slope * s.c.coef[j]) / s.f.derivative(gamma[j]);
    if (s.backward) out[j] = -out[j];
  }
  return out;
}

Curve Geodesic::as_curve() const {
  const Geodesic self = *this;
  const bool smooth = state_->f.finsler_capable() && state_->from.is_interior() &&
                      state_->to.is_interior();
  Curve::Velocity velocity;
  if (smooth || is_degenerate()) velocity = [self](double t) { return self.velocity(t); };
  return Curve(
      0.0, r(), [self](double t) { return self.point(t); },
      smooth || is_degenerate() ? Smoothness::C1 : Smoothness::C0, {}, std::move(velocity));
}

Geodesic make_geodesic(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q,
                       double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidInput, "solver tolerance must be positive");
  return Geodesic(std::make_shared<const Geodesic::State>(f, p, q, tol, false));
}

Geodesic backward_geodesic(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q,
                           double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidInput, "solver tolerance must be positive");
  return Geodesic(std::make_shared<const Geodesic::State>(f, q, p, tol, true));
}

MuDerivative mu_derivative(const Geodesic& geodesic, double t, double h) {
  const Geodesic::State& s = *geodesic.state_;
  if (geodesic.is_degenerate()) fail(ErrorCode::DegenerateEndpoints, "P == Q: mu is undefined");
  s.require_smooth();
  if (!(t > 0.0 && t < s.c.r)) fail(ErrorCode::OutOfDomain, "mu' needs t in (0, r)");
  if (!(h > 0.0)) fail(ErrorCode::InvalidInput, "finite-difference step must be positive");
  const double sign = s.backward ? -1.0 : 1.0;
  const double u = s.underlying(t);
  MuDerivative out;
  out.formula = sign * s.mu_prime(u, s.coordinates(u, s.mu(u)));
  const double step = std::min({h, 0.5 * t, 0.5 * (s.c.r - t)});
  constexpr double kFineTol = 1e-15;
  const double ahead = bisect_mu(s.f, s.c.fp, s.c.coef, s.c.r, s.underlying(t + step), kFineTol);
  const double behind = bisect_mu(s.f, s.c.fp, s.c.coef, s.c.r, s.underlying(t - step), kFineTol);
  out.finite_difference = (ahead - behind) / (2.0 * step);
  out.relative_error = std::abs(out.formula - out.finite_difference) / std::abs(out.formula);
  return out;
}

}  // namespace qsx
