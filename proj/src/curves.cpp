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

#include "qsx/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qsx/error.hpp"

namespace qsx {

namespace {

constexpr unsigned kMinRefinementLevel = 6;
// Offset of the cross-check partition inside each cell (golden ratio conjugate).
constexpr double kShift = 0.6180339887498949;

double domain_slack(double a, double b) {
  return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> lerp(std::span<const double> p, std::span<const double> q, double s) {
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = (1.0 - s) * p[i] + s * q[i];
  return out;
}

double sup_norm(std::span<const double> v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

double segment_distance(const GeneratorFunction& f, const ProbVector& from, const ProbVector& to,
                        Direction direction) {
  return direction == Direction::Forward ? quasi_dist(f, from, to) : quasi_dist(f, to, from);
}

// Converged dyadic refinement, kept so callers can reuse the per-cell increments.
struct Refinement {
  std::vector<double> knots;
  std::vector<double> increments;
  double sum = 0.0;
  unsigned level = 0;
};

// Knots lo + h 2^-m and hi - h 2^-m, m = 1..kGradedLevels, added to every piece.
// A coordinate that dominates the increments only very close to a piece end is
// invisible to uniform cells: the sums telescope to the same value at every level
// until a cell is narrower than the feature. The graded knots at level L + 1
// contain those at level L, so partitions stay nested and sums nondecreasing.
constexpr int kGradedLevels = 24;

struct Knot {
  double t;
  ProbVector x;
};

std::vector<Knot> graded_knots(const Curve& curve, double lo, double hi, double h, double scale,
                               bool low_end) {
  std::vector<Knot> out;
  out.reserve(kGradedLevels);
  for (int m = kGradedLevels; m >= 1; --m) {
    const double offset = std::ldexp(h, -m) * scale;
    const double t = low_end ? lo + offset : hi - offset;
    if (t > lo && t < hi) out.push_back({t, curve(t)});
  }
  if (!low_end) std::reverse(out.begin(), out.end());
  return out;
}

Refinement refine(const GeneratorFunction& f, const Curve& curve, double tol,
                  Direction direction) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidInput, "length tolerance must be positive");
  Refinement out;
  if (curve.width() == 0.0) {
    out.knots = {curve.a()};
    return out;
  }
  const std::vector<double> bounds = curve.piece_bounds();
  // Uniform knots of every piece; each piece has 2^level cells.
  std::vector<double> knots = bounds;
  std::vector<ProbVector> points;
  points.reserve(knots.size());
  for (double t : knots) points.push_back(curve(t));

  // Walks the full partition (uniform knots of each piece with interior knots
  // optionally moved by `shift` cells, plus the graded knots) in increasing order.
  auto walk = [&](unsigned level, double shift, auto&& visit) {
    const std::size_t cells = std::size_t{1} << level;
    // The graded set barely changes between levels, so the shifted walk scales it too.
    const double graded_scale = shift == 0.0 ? 1.0 : shift;
    visit(knots.front(), points.front());
    for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
      const std::size_t i0 = p * cells;
      const double lo = bounds[p];
      const double hi = bounds[p + 1];
      const double h = (hi - lo) / static_cast<double>(cells);
      double last = lo;
      for (const Knot& k : graded_knots(curve, lo, hi, h, graded_scale, true)) {
        visit(k.t, k.x);
        last = k.t;
      }
      const std::vector<Knot> tail = graded_knots(curve, lo, hi, h, graded_scale, false);
      std::size_t next_tail = 0;
      auto flush_tail = [&](double upto) {
        for (; next_tail < tail.size() && tail[next_tail].t < upto; ++next_tail) {
          if (tail[next_tail].t > last) {
            visit(tail[next_tail].t, tail[next_tail].x);
            last = tail[next_tail].t;
          }
        }
      };
      const std::size_t interior = shift == 0.0 ? cells - 1 : cells;
      for (std::size_t k = 0; k < interior; ++k) {
        const double t = shift == 0.0 ? knots[i0 + k + 1] : lo + (static_cast<double>(k) + shift) * h;
        flush_tail(t);
        if (t <= last) continue;
        if (shift == 0.0) {
          visit(t, points[i0 + k + 1]);
        } else {
          visit(t, curve(t));
        }
        last = t;
      }
      flush_tail(hi);
      visit(hi, points[i0 + cells]);
    }
  };

  auto partition_total = [&](unsigned level, double shift, Refinement* keep) {
    double sum = 0.0;
    const ProbVector* prev = nullptr;
    ProbVector held = points.front();
    walk(level, shift, [&](double t, const ProbVector& x) {
      if (prev) {
        const double d = segment_distance(f, *prev, x, direction);
        sum += d;
        if (keep) keep->increments.push_back(d);
      }
      if (keep) keep->knots.push_back(t);
      held = x;
      prev = &held;
    });
    return sum;
  };

  double previous = partition_total(0, 0.0, nullptr);
  bool previous_shifted_agrees = false;
  for (unsigned level = 1;; ++level) {
    const std::size_t next_count = 2 * knots.size() - 1;
    if (next_count > kMaxLengthKnots + 1) {
      fail(ErrorCode::NoConvergence,
           "length refinement exceeded " + std::to_string(kMaxLengthKnots) + " knots");
    }
    std::vector<double> next_knots;
    std::vector<ProbVector> next_points;
    next_knots.reserve(next_count);
    next_points.reserve(next_count);
    for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
      const double mid = 0.5 * (knots[k] + knots[k + 1]);
      next_knots.push_back(knots[k]);
      next_points.push_back(std::move(points[k]));
      next_knots.push_back(mid);
      next_points.push_back(curve(mid));
    }
    next_knots.push_back(knots.back());
    next_points.push_back(std::move(points.back()));
    knots = std::move(next_knots);
    points = std::move(next_points);

    const double sum = partition_total(level, 0.0, nullptr);
    if (!std::isfinite(sum)) fail(ErrorCode::NotRectifiable, "partition sums are not finite");
    // Nested grids keep the same knot nearest to a switch of the maximizing
    // coordinate for several levels, so successive sums can agree long before they
    // converge. A partition shifted inside every cell must agree as well, on this
    // level and the one before.
    const bool shifted_agrees =
        level + 1 >= kMinRefinementLevel &&
        std::abs(partition_total(level, kShift, nullptr) - sum) < tol;
    if (level >= kMinRefinementLevel && shifted_agrees && previous_shifted_agrees &&
        std::abs(sum - previous) < tol) {
      out.sum = partition_total(level, 0.0, &out);
      out.level = level;
      return out;
    }
    previous_shifted_agrees = shifted_agrees;
    previous = sum;
  }
}

}  // namespace

Curve::Curve(double a, double b, Evaluator evaluator, Smoothness smoothness,
             std::vector<double> breakpoints, Velocity velocity)
    : a_(a),
      b_(b),
      evaluator_(std::move(evaluator)),
      smoothness_(smoothness),
      velocity_(std::move(velocity)) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    fail(ErrorCode::InvalidInput, "curve domain must be a finite interval [a,b] with a <= b");
  }
  if (!evaluator_) fail(ErrorCode::InvalidInput, "curve needs an evaluator");
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double t : breakpoints) {
    if (t < a || t > b) fail(ErrorCode::InvalidInput, "breakpoint outside the curve domain");
    if (t > a && t < b && (breakpoints_.empty() || breakpoints_.back() < t)) {
      breakpoints_.push_back(t);
    }
  }
}

ProbVector Curve::operator()(double t) const {
  const double slack = domain_slack(a_, b_);
  if (!(t >= a_ - slack && t <= b_ + slack)) {
    fail(ErrorCode::OutOfDomain, "parameter " + std::to_string(t) + " outside [" +
                                     std::to_string(a_) + ", " + std::to_string(b_) + "]");
  }
  return evaluator_(std::clamp(t, a_, b_));
}

std::vector<double> Curve::piece_bounds() const {
  std::vector<double> out;
  out.reserve(breakpoints_.size() + 2);
  out.push_back(a_);
  out.insert(out.end(), breakpoints_.begin(), breakpoints_.end());
  out.push_back(b_);
  return out;
}

std::vector<double> Curve::velocity(double t, double lo, double hi) const {
  if (velocity_) return velocity_(t);
  const double h = 1e-6 * width();
  if (h == 0.0) return std::vector<double>(start().size(), 0.0);
  auto diff = [&](double t0, double t1, double w0, double w1, double scale) {
    const ProbVector x0 = (*this)(t0);
    const ProbVector x1 = (*this)(t1);
    std::vector<double> v(x0.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (w1 * x1[i] + w0 * x0[i]) / scale;
    return v;
  };
  std::vector<double> v;
  if (t - h >= lo && t + h <= hi) {
    v = diff(t - h, t + h, -1.0, 1.0, 2.0 * h);
  } else if (t + 2.0 * h <= hi) {
    const ProbVector x0 = (*this)(t);
    const ProbVector x1 = (*this)(t + h);
    const ProbVector x2 = (*this)(t + 2.0 * h);
    v.resize(x0.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (-3.0 * x0[i] + 4.0 * x1[i] - x2[i]) / (2.0 * h);
  } else if (t - 2.0 * h >= lo) {
    const ProbVector x0 = (*this)(t);
    const ProbVector x1 = (*this)(t - h);
    const ProbVector x2 = (*this)(t - 2.0 * h);
    v.resize(x0.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (3.0 * x0[i] - 4.0 * x1[i] + x2[i]) / (2.0 * h);
  } else {
    v = diff(lo, hi, -1.0, 1.0, hi - lo);
  }
  // Project onto the tangent space; the difference of two simplex points only
  // sums to zero up to rounding.
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
  return v;
}

TangentVector Curve::derivative(double t) const {
  const std::vector<double> bounds = piece_bounds();
  std::size_t k = 0;
  while (k + 2 < bounds.size() && t >= bounds[k + 1]) ++k;
  return tangent((*this)(t), velocity(t, bounds[k], bounds[k + 1]));
}

Curve constant_curve(const ProbVector& p, double a, double b) {
  const std::size_t n = p.size();
  return Curve(
      a, b, [p](double) { return p; }, Smoothness::C1, {},
      [n](double) { return std::vector<double>(n, 0.0); });
}

Curve segment(const ProbVector& p, const ProbVector& q, double a, double b) {
  require_same_dimension(p, q);
  const double w = b - a;
  std::vector<double> v(p.size(), 0.0);
  if (w > 0.0) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (q[i] - p[i]) / w;
  }
  return Curve(
      a, b,
      [p, q, a, w](double t) {
        const double s = w > 0.0 ? (t - a) / w : 0.0;
        return make_prob_vector(lerp(p.coords(), q.coords(), s));
      },
      Smoothness::C1, {}, [v](double) { return v; });
}

Curve polyline(std::vector<double> times, std::vector<ProbVector> points) {
  if (times.size() != points.size() || times.size() < 2) {
    fail(ErrorCode::InvalidInput, "polyline needs matching times and points, at least two each");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) fail(ErrorCode::InvalidInput, "polyline times must increase");
    require_same_dimension(points[0], points[k]);
  }
  const std::vector<double> breaks(times.begin() + 1, times.end() - 1);
  const double a = times.front();
  const double b = times.back();
  auto locate = [times](double t) {
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - times.begin());
    return std::clamp<std::size_t>(k, 1, times.size() - 1) - 1;
  };
  auto evaluate = [times, points, locate](double t) {
    const std::size_t k = locate(t);
    const double s = (t - times[k]) / (times[k + 1] - times[k]);
    return make_prob_vector(lerp(points[k].coords(), points[k + 1].coords(), s));
  };
  auto velocity = [times, points, locate](double t) {
    const std::size_t k = locate(t);
    const double w = times[k + 1] - times[k];
    std::vector<double> v(points[k].size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (points[k + 1][i] - points[k][i]) / w;
    return v;
  };
  return Curve(a, b, evaluate, Smoothness::PiecewiseC1, breaks, velocity);
}

double audit_curve_velocity(const Curve& curve, std::size_t samples) {
  if (!curve.has_velocity() || curve.width() == 0.0) return 0.0;
  const double h = 1e-6 * curve.width();
  const std::vector<double> bounds = curve.piece_bounds();
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = curve.a() + curve.width() * (static_cast<double>(k) + 0.5) /
                                     static_cast<double>(samples);
    const bool near_break = std::any_of(bounds.begin(), bounds.end(),
                                        [&](double bp) { return std::abs(t - bp) < 2.0 * h; });
    if (near_break) continue;
    const ProbVector lo = curve(t - h);
    const ProbVector hi = curve(t + h);
    const std::vector<double> v = curve.velocity_evaluator()(t);
    std::vector<double> err(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) err[i] = (hi[i] - lo[i]) / (2.0 * h) - v[i];
    worst = std::max(worst, sup_norm(err) / std::max(sup_norm(v), 1e-8));
  }
  return worst;
}

Partition::Partition(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) fail(ErrorCode::InvalidInput, "a partition needs at least two knots");
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (!(knots_[k] > knots_[k - 1])) {
      fail(ErrorCode::InvalidInput, "partition knots must be strictly increasing");
    }
  }
}

double Partition::modulus() const noexcept {
  double out = 0.0;
  for (std::size_t k = 1; k < knots_.size(); ++k) out = std::max(out, knots_[k] - knots_[k - 1]);
  return out;
}

Partition dyadic_partition(const Curve& curve, unsigned level) {
  const std::vector<double> bounds = curve.piece_bounds();
  const std::size_t cells = std::size_t{1} << level;
  std::vector<double> knots;
  knots.reserve((bounds.size() - 1) * cells + 1);
  for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
    const double lo = bounds[p];
    const double w = bounds[p + 1] - lo;
    for (std::size_t j = 0; j < cells; ++j) {
      knots.push_back(lo + w * static_cast<double>(j) / static_cast<double>(cells));
    }
  }
  knots.push_back(bounds.back());
  return Partition(std::move(knots));
}

double partition_sum(const GeneratorFunction& f, const Curve& curve, const Partition& partition,
                     Direction direction) {
  const auto& knots = partition.knots();
  const double slack = domain_slack(curve.a(), curve.b());
  if (std::abs(knots.front() - curve.a()) > slack || std::abs(knots.back() - curve.b()) > slack) {
    fail(ErrorCode::PartitionMismatch, "partition does not span the curve domain");
  }
  double sum = 0.0;
  ProbVector previous = curve(knots.front());
  for (std::size_t k = 1; k < knots.size(); ++k) {
    ProbVector current = curve(knots[k]);
    sum += segment_distance(f, previous, current, direction);
    previous = std::move(current);
  }
  return sum;
}

LengthResult curve_length(const GeneratorFunction& f, const Curve& curve, double tol,
                          Direction direction) {
  const Refinement r = refine(f, curve, tol, direction);
  return {.value = r.sum, .knots = r.knots.size(), .level = r.level};
}

LengthResult forward_length(const GeneratorFunction& f, const Curve& curve, double tol) {
  return curve_length(f, curve, tol, Direction::Forward);
}

LengthResult backward_length(const GeneratorFunction& f, const Curve& curve, double tol) {
  return curve_length(f, curve, tol, Direction::Backward);
}

Curve concat(const Curve& first, const Curve& second) {
  if (chebyshev(first.finish(), second.start()) > 1e-12) {
    fail(ErrorCode::EndpointMismatch, "first curve does not end where the second one starts");
  }
  const double junction = first.b();
  const double shift = junction - second.a();
  const double b = second.b() + shift;
  std::vector<double> breaks = first.breakpoints();
  breaks.push_back(junction);
  for (double t : second.breakpoints()) breaks.push_back(t + shift);
  const bool second_degenerate = second.width() == 0.0;
  auto evaluate = [first, second, junction, shift, second_degenerate](double t) {
    if (t < junction || second_degenerate) return first(std::min(t, junction));
    return second(t - shift);
  };
  Curve::Velocity velocity;
  if (first.has_velocity() && second.has_velocity()) {
    velocity = [v1 = first.velocity_evaluator(), v2 = second.velocity_evaluator(), junction, shift,
                second_degenerate](double t) {
      if (t < junction || second_degenerate) return v1(std::min(t, junction));
      return v2(t - shift);
    };
  }
  const Smoothness smoothness =
      first.smoothness() == Smoothness::C0 || second.smoothness() == Smoothness::C0
          ? Smoothness::C0
          : Smoothness::PiecewiseC1;
  return Curve(first.a(), b, evaluate, smoothness, std::move(breaks), std::move(velocity));
}

Curve reverse(const Curve& curve) {
  const double a = curve.a();
  const double b = curve.b();
  std::vector<double> breaks;
  for (double t : curve.breakpoints()) breaks.push_back(a + b - t);
  Curve::Velocity velocity;
  if (curve.has_velocity()) {
    velocity = [v = curve.velocity_evaluator(), a, b](double t) {
      std::vector<double> out = v(a + b - t);
      for (double& x : out) x = -x;
      return out;
    };
  }
  return Curve(
      a, b, [curve, a, b](double t) { return curve(a + b - t); }, curve.smoothness(),
      std::move(breaks), std::move(velocity));
}

Curve restrict(const Curve& curve, double s, double t) {
  const double slack = domain_slack(curve.a(), curve.b());
  if (!(s <= t) || s < curve.a() - slack || t > curve.b() + slack) {
    fail(ErrorCode::OutOfDomain, "restriction interval outside the curve domain");
  }
  s = std::max(s, curve.a());
  t = std::min(t, curve.b());
  std::vector<double> breaks;
  for (double bp : curve.breakpoints()) {
    if (bp > s && bp < t) breaks.push_back(bp);
  }
  return Curve(s, t, curve.evaluator(), curve.smoothness(), std::move(breaks),
               curve.velocity_evaluator());
}

Curve reparametrize(const Curve& curve, std::function<double(double)> rho, double a_new,
                    double b_new, std::function<double(double)> rho_derivative) {
  if (!rho || !(a_new <= b_new)) fail(ErrorCode::InvalidInput, "invalid reparametrization domain");
  const double slack = 1e-9 * std::max(1.0, curve.width());
  const double r0 = rho(a_new);
  const double r1 = rho(b_new);
  bool increasing;
  if (std::abs(r0 - curve.a()) <= slack && std::abs(r1 - curve.b()) <= slack) {
    increasing = true;
  } else if (std::abs(r0 - curve.b()) <= slack && std::abs(r1 - curve.a()) <= slack) {
    increasing = false;
  } else {
    fail(ErrorCode::NotMonotone, "reparametrization does not map onto the curve domain");
  }
  constexpr std::size_t kSamples = 256;
  double previous = r0;
  for (std::size_t k = 1; k <= kSamples; ++k) {
    const double s = a_new + (b_new - a_new) * static_cast<double>(k) / kSamples;
    const double r = rho(s);
    if ((increasing && r < previous - slack) || (!increasing && r > previous + slack)) {
      fail(ErrorCode::NotMonotone, "reparametrization is not monotone");
    }
    previous = r;
  }
  // Preimages of the breakpoints, found by bisection.
  std::vector<double> breaks;
  for (double bp : curve.breakpoints()) {
    double lo = a_new;
    double hi = b_new;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
      const double mid = 0.5 * (lo + hi);
      const bool before = increasing ? rho(mid) < bp : rho(mid) > bp;
      (before ? lo : hi) = mid;
    }
    breaks.push_back(0.5 * (lo + hi));
  }
  const double a = curve.a();
  const double b = curve.b();
  auto clamped = [rho, a, b](double s) { return std::clamp(rho(s), a, b); };
  Curve::Velocity velocity;
  if (curve.has_velocity() && rho_derivative) {
    velocity = [v = curve.velocity_evaluator(), clamped, rho_derivative](double s) {
      std::vector<double> out = v(clamped(s));
      const double scale = rho_derivative(s);
      for (double& x : out) x *= scale;
      return out;
    };
  }
  return Curve(
      a_new, b_new, [curve, clamped](double s) { return curve(clamped(s)); }, curve.smoothness(),
      std::move(breaks), std::move(velocity));
}

double length_profile(const GeneratorFunction& f, const Curve& curve, double t, double tol) {
  const double slack = domain_slack(curve.a(), curve.b());
  if (!(t >= curve.a() - slack && t <= curve.b() + slack)) {
    fail(ErrorCode::OutOfDomain, "profile parameter outside the curve domain");
  }
  if (t <= curve.a()) return 0.0;
  return forward_length(f, restrict(curve, curve.a(), t), tol).value;
}

Curve reparametrize_by_flength(const GeneratorFunction& f, const Curve& curve, double tol) {
  Refinement refinement;
  try {
    refinement = refine(f, curve, tol, Direction::Forward);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NoConvergence) fail(ErrorCode::NotRectifiable, e.what());
    throw;
  }
  const ProbVector start = curve.start();
  if (refinement.sum <= tol) return constant_curve(start, 0.0, 0.0);

  const double chord = quasi_dist(f, start, curve.finish());
  const bool pregeodesic = refinement.sum <= chord + tol;
  const double min_flat_width = 1e-6 * curve.width();

  std::function<double(double)> inverse;
  double total;
  if (pregeodesic) {
    total = chord;
    auto profile = [f, start, curve](double t) { return quasi_dist(f, start, curve(t)); };
    constexpr std::size_t kSamples = 256;
    double flat_since = curve.a();
    double previous = 0.0;
    for (std::size_t k = 1; k <= kSamples; ++k) {
      const double t = curve.a() + curve.width() * static_cast<double>(k) / kSamples;
      const double value = profile(t);
      if (value - previous > 1e-14 * total) {
        flat_since = t;
      } else if (t - flat_since > min_flat_width) {
        fail(ErrorCode::ProfileNotInvertible, "length profile is flat on a sub-interval");
      }
      previous = value;
    }
    inverse = [profile, a = curve.a(), b = curve.b(), tol](double s) {
      double lo = a;
      double hi = b;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double value = profile(mid);
        if (std::abs(value - s) <= tol / 10.0) return mid;
        (value < s ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    };
  } else {
    total = refinement.sum;
    std::vector<double> cumulative(refinement.knots.size(), 0.0);
    double flat_width = 0.0;
    for (std::size_t k = 0; k < refinement.increments.size(); ++k) {
      const double inc = refinement.increments[k];
      cumulative[k + 1] = cumulative[k] + inc;
      if (inc <= 1e-14 * total) {
        flat_width += refinement.knots[k + 1] - refinement.knots[k];
        if (flat_width > min_flat_width) {
          fail(ErrorCode::ProfileNotInvertible, "length profile is flat on a sub-interval");
        }
      } else {
        flat_width = 0.0;
      }
    }
    total = cumulative.back();
    inverse = [knots = refinement.knots, cumulative](double s) {
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
      std::size_t k = static_cast<std::size_t>(it - cumulative.begin());
      k = std::clamp<std::size_t>(k, 1, cumulative.size() - 1) - 1;
      const double inc = cumulative[k + 1] - cumulative[k];
      if (inc <= 0.0) return knots[k];
      const double w = std::clamp((s - cumulative[k]) / inc, 0.0, 1.0);
      return knots[k] + w * (knots[k + 1] - knots[k]);
    };
  }
  std::vector<double> breaks;
  for (double bp : curve.breakpoints()) {
    const double value = length_profile(f, curve, bp, tol);
    if (value > 0.0 && value < total) breaks.push_back(value);
  }
  return Curve(
      0.0, total, [curve, inverse](double s) { return curve(inverse(s)); }, Smoothness::C0,
      std::move(breaks));
}

GeodesicCheck is_f_geodesic(const GeneratorFunction& f, const Curve& curve, std::size_t grid_size,
                            double tol, Direction direction) {
  if (grid_size < 2) fail(ErrorCode::InvalidInput, "geodesic check needs at least 2 grid points");
  std::vector<double> ts(grid_size);
  std::vector<ProbVector> points;
  points.reserve(grid_size);
  for (std::size_t k = 0; k < grid_size; ++k) {
    ts[k] = curve.a() + curve.width() * static_cast<double>(k) / static_cast<double>(grid_size - 1);
    points.push_back(curve(ts[k]));
  }
  GeodesicCheck out;
  for (std::size_t s = 0; s < grid_size; ++s) {
    for (std::size_t t = s + 1; t < grid_size; ++t) {
      const double d = segment_distance(f, points[s], points[t], direction);
      out.defect = std::max(out.defect, std::abs(d - (ts[t] - ts[s])));
    }
  }
  out.ok = out.defect <= tol;
  return out;
}

bool is_f_pregeodesic(const GeneratorFunction& f, const Curve& curve, double tol) {
  const double length = forward_length(f, curve, tol / 4.0).value;
  return length <= quasi_dist(f, curve.start(), curve.finish()) + tol;
}

GeodesicConditions check_geodesic_conditions(const GeneratorFunction& f, const Curve& curve,
                                             std::size_t grid_size, double tol) {
  GeodesicConditions out;
  out.geodesic = is_f_geodesic(f, curve, grid_size, tol);

  std::vector<ProbVector> points;
  for (std::size_t k = 0; k < grid_size; ++k) {
    points.push_back(curve(curve.a() + curve.width() * static_cast<double>(k) /
                                           static_cast<double>(grid_size - 1)));
  }
  for (std::size_t s = 0; s < grid_size; ++s) {
    for (std::size_t t = s; t < grid_size; ++t) {
      const double lhs = quasi_dist(f, points[0], points[t]);
      const double rhs = quasi_dist(f, points[0], points[s]) + quasi_dist(f, points[s], points[t]);
      out.additive.defect = std::max(out.additive.defect, std::abs(lhs - rhs));
    }
  }
  out.additive.ok = out.additive.defect <= tol;

  const double length = forward_length(f, curve, tol / 4.0).value;
  out.length_saturates.defect = std::abs(length - quasi_dist(f, curve.start(), curve.finish()));
  out.length_saturates.ok = out.length_saturates.defect <= tol;
  return out;
}

}  // namespace qsx
