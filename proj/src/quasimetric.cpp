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

#include "qsx/quasimetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsx/error.hpp"

namespace qsx {

QuasiDistance quasi_dist_detail(const GeneratorFunction& f, const ProbVector& p,
                                const ProbVector& q) {
  require_same_dimension(p, q);
  QuasiDistance out{.value = f(q[0]) - f(p[0]), .argmax = 0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    const double d = f(q[i]) - f(p[i]);
    if (d > out.value) out = {.value = d, .argmax = i};
  }
  // Exact arithmetic gives a nonnegative maximum; guard against rounding below zero.
  out.value = std::max(out.value, 0.0);
  return out;
}

double quasi_dist(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q) {
  return quasi_dist_detail(f, p, q).value;
}

double symmetrize_max(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q) {
  return std::max(quasi_dist(f, p, q), quasi_dist(f, q, p));
}

double symmetrize_power(const GeneratorFunction& f, const ProbVector& p, const ProbVector& q,
                        double exponent) {
  if (!(exponent >= 1.0) || std::isnan(exponent)) {
    fail(ErrorCode::InvalidExponent, "symmetrization exponent must be >= 1");
  }
  const double a = quasi_dist(f, p, q);
  const double b = quasi_dist(f, q, p);
  const double hi = std::max(a, b);
  if (hi == 0.0) return 0.0;
  if (std::isinf(exponent)) return hi;
  const double lo = std::min(a, b);
  // Factor out the larger term so large exponents do not underflow.
  return hi * std::pow(1.0 + std::pow(lo / hi, exponent), 1.0 / exponent);
}

BallBounds ball_coordinate_bounds(const GeneratorFunction& f, const ProbVector& p, double radius) {
  if (!(radius > 0.0)) fail(ErrorCode::InvalidInput, "ball radius must be positive");
  BallBounds out;
  out.upper.reserve(p.size());
  out.lower.reserve(p.size());
  for (double pi : p) {
    const double fp = f(pi);
    out.upper.push_back(f.inverse(std::min(fp + radius, 1.0)));
    out.lower.push_back(f.inverse(std::max(fp - radius, 0.0)));
  }
  return out;
}

bool ball_contains(const BallSpec& spec, const GeneratorFunction& f, const ProbVector& q) {
  require_same_dimension(spec.center, q);
  const BallBounds bounds = ball_coordinate_bounds(f, spec.center, spec.radius);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double fp = f(spec.center[i]);
    if (spec.direction == Direction::Forward) {
      if (spec.closed) {
        if (!(q[i] <= bounds.upper[i])) return false;
      } else if (fp + spec.radius <= 1.0 && !(q[i] < bounds.upper[i])) {
        return false;
      }
    } else {
      if (spec.closed) {
        if (!(q[i] >= bounds.lower[i])) return false;
      } else if (fp - spec.radius >= 0.0 && !(q[i] > bounds.lower[i])) {
        return false;
      }
    }
  }
  return true;
}

bool ball_contains_by_distance(const BallSpec& spec, const GeneratorFunction& f,
                               const ProbVector& q) {
  const double d = spec.direction == Direction::Forward ? quasi_dist(f, spec.center, q)
                                                        : quasi_dist(f, q, spec.center);
  return spec.closed ? d <= spec.radius : d < spec.radius;
}

BallGeometry ball_geometry(const GeneratorFunction& f, const ProbVector& p, double radius,
                           Direction direction) {
  BallBounds bounds = ball_coordinate_bounds(f, p, radius);
  BallGeometry out;
  out.shifted_vertex =
      direction == Direction::Forward ? std::move(bounds.upper) : std::move(bounds.lower);
  const double sum = std::accumulate(out.shifted_vertex.begin(), out.shifted_vertex.end(), 0.0);
  const double offset = 1.0 - sum;
  for (std::size_t i = 0; i < out.shifted_vertex.size(); ++i) {
    std::vector<double> corner = out.shifted_vertex;
    corner[i] += offset;
    out.corners.push_back(std::move(corner));
  }
  return out;
}

namespace {

using Point3 = std::vector<double>;

// Sutherland-Hodgman clip of a convex polygon against x[axis] >= 0.
std::vector<Point3> clip_nonnegative(const std::vector<Point3>& polygon, std::size_t axis) {
  std::vector<Point3> out;
  const std::size_t n = polygon.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Point3& a = polygon[k];
    const Point3& b = polygon[(k + 1) % n];
    const bool a_in = a[axis] >= 0.0;
    const bool b_in = b[axis] >= 0.0;
    if (a_in) out.push_back(a);
    if (a_in != b_in) {
      const double s = a[axis] / (a[axis] - b[axis]);
      Point3 c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + s * (b[i] - a[i]);
      c[axis] = 0.0;
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> ball_boundary_polygon(const GeneratorFunction& f,
                                                       const ProbVector& p, double radius,
                                                       Direction direction) {
  if (p.dimension() != 2) {
    fail(ErrorCode::UnsupportedDimension, "ball boundary polygons are only defined on the 2-simplex");
  }
  std::vector<Point3> polygon = ball_geometry(f, p, radius, direction).corners;
  for (std::size_t axis = 0; axis < 3 && !polygon.empty(); ++axis) {
    polygon = clip_nonnegative(polygon, axis);
  }
  if (!polygon.empty()) polygon.push_back(polygon.front());
  return polygon;
}

ChebyshevBounds chebyshev_bounds_check(const ProbVector& p, const ProbVector& q) {
  static const GeneratorFunction id = identity_generator();
  ChebyshevBounds out;
  out.upper = chebyshev(p, q);
  out.lower = out.upper / static_cast<double>(p.dimension());
  out.value = quasi_dist(id, p, q);
  out.lower_ok = out.lower <= out.value + 1e-12;
  out.upper_ok = out.value <= out.upper + 1e-12;
  out.saturated = std::abs(out.value - out.lower) <= 1e-15;
  return out;
}

}  // namespace qsx
