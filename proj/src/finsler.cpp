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

#include "qsx/finsler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsx/error.hpp"
#include "qsx/quasimetric.hpp"
#include "qsx/sampling.hpp"

namespace qsx {

namespace {

constexpr double kGridShift = 0.6180339887498949;

void require_finsler_generator(const GeneratorFunction& f) {
  if (!f.finsler_capable()) {
    fail(ErrorCode::NotC1, "generator '" + f.name() + "' is not C1 with a positive derivative");
  }
}

void require_interior(const ProbVector& p) {
  if (!p.is_interior(kInteriorMargin)) {
    fail(ErrorCode::BoundaryPoint, "Finsler quantities need a strictly interior base point");
  }
}

FinslerEvaluation evaluate(const GeneratorFunction& f, const ProbVector& base,
                           std::span<const double> v) {
  FinslerEvaluation out{.value = f.derivative(base[0]) * v[0], .argmax = 0};
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double x = f.derivative(base[i]) * v[i];
    if (x > out.value) out = {.value = x, .argmax = i};
  }
  // Components sum to zero, so the maximum is nonnegative up to rounding.
  out.value = std::max(out.value, 0.0);
  return out;
}

double integrand(const GeneratorFunction& f, const Curve& curve, double t, double lo, double hi) {
  const ProbVector base = curve(t);
  require_interior(base);
  return evaluate(f, base, curve.velocity(t, lo, hi)).value;
}

// Composite midpoint rule on `knots` equal cells of [lo, hi], or, with a nonzero
// shift, on the cells cut at lo + (k + shift) h.
double piece_integral(const GeneratorFunction& f, const Curve& curve, double lo, double hi,
                      std::size_t knots, double shift = 0.0) {
  const double h = (hi - lo) / static_cast<double>(knots);
  double sum = 0.0;
  if (shift == 0.0) {
    for (std::size_t k = 0; k < knots; ++k) {
      sum += h * integrand(f, curve, lo + (static_cast<double>(k) + 0.5) * h, lo, hi);
    }
    return sum;
  }
  sum += shift * h * integrand(f, curve, lo + 0.5 * shift * h, lo, hi);
  for (std::size_t k = 0; k + 1 < knots; ++k) {
    sum += h * integrand(f, curve, lo + (static_cast<double>(k) + shift + 0.5) * h, lo, hi);
  }
  const double tail = (1.0 - shift) * h;
  sum += tail * integrand(f, curve, hi - 0.5 * tail, lo, hi);
  return sum;
}

}  // namespace

FinslerEvaluation finsler_F(const GeneratorFunction& f, const TangentVector& v) {
  require_finsler_generator(f);
  require_interior(v.base());
  return evaluate(f, v.base(), v.components());
}

double finsler_length(const GeneratorFunction& f, const Curve& curve,
                      std::size_t knots_per_piece) {
  require_finsler_generator(f);
  if (curve.smoothness() == Smoothness::C0) {
    fail(ErrorCode::NotC1, "Finsler length needs a piecewise C1 curve");
  }
  if (curve.width() == 0.0) return 0.0;
  constexpr std::size_t kMaxKnots = std::size_t{1} << 16;
  const std::vector<double> bounds = curve.piece_bounds();
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < bounds.size(); ++p) {
    std::size_t knots = std::max<std::size_t>(knots_per_piece, 1);
    double previous = piece_integral(f, curve, bounds[p], bounds[p + 1], knots);
    for (;;) {
      knots *= 2;
      // The finest rule is the answer once the cap is reached.
      if (knots > kMaxKnots) break;
      const double current = piece_integral(f, curve, bounds[p], bounds[p + 1], knots);
      if (!std::isfinite(current)) fail(ErrorCode::NoConvergence, "Finsler integrand is not finite");
      const double change = std::abs(current - previous);
      previous = current;
      const double target = std::max(1e-8 * std::abs(current), 1e-300);
      // The integrand has kinks where the maximizing coordinate switches; nested
      // grids can miss them for several doublings, so a shifted grid must agree too.
      if (change <= target &&
          std::abs(piece_integral(f, curve, bounds[p], bounds[p + 1], knots, kGridShift) -
                   current) <= target) {
        break;
      }
    }
    total += previous;
  }
  return total;
}

std::vector<double> bm_derivative(const GeneratorFunction& f, const TangentVector& v,
                                  std::span<const double> ts) {
  const ProbVector& base = v.base();
  require_interior(base);
  std::vector<double> out;
  out.reserve(ts.size());
  std::vector<double> moved(base.size());
  for (double t : ts) {
    if (!(t > 0.0)) fail(ErrorCode::InvalidInput, "chord parameters must be positive");
    for (std::size_t i = 0; i < moved.size(); ++i) {
      moved[i] = base[i] + t * v[i];
      if (moved[i] < 0.0) {
        fail(ErrorCode::LeavesSimplex, "P + t v leaves the simplex at t = " + std::to_string(t));
      }
    }
    out.push_back(quasi_dist(f, base, make_prob_vector(moved)) / t);
  }
  return out;
}

FinslerAxiomReport finsler_axioms_check(const GeneratorFunction& f, const ProbVector& base,
                                        std::size_t samples, std::uint64_t seed) {
  require_finsler_generator(f);
  require_interior(base);
  Rng rng(seed);
  FinslerAxiomReport report;
  report.samples = samples;
  const std::size_t n = base.size();

  auto check_pair = [&](const TangentVector& v, const TangentVector& w, double lambda) {
    const double fv = finsler_F(f, v).value;
    const double fw = finsler_F(f, w).value;
    const double fsum = finsler_F(f, v.plus(w)).value;
    const double fscaled = finsler_F(f, v.scaled(lambda)).value;
    report.worst_homogeneity = std::max(report.worst_homogeneity, std::abs(fscaled - lambda * fv));
    report.worst_subadditivity = std::max(report.worst_subadditivity, fsum - fv - fw);
    for (const TangentVector* x : {&v, &w}) {
      const double fx = finsler_F(f, *x).value;
      double sup = 0.0;
      for (double c : x->components()) sup = std::max(sup, std::abs(c));
      if (fx <= 1e-12 && sup > 1e-10) ++report.nondegeneracy_violations;
    }
  };

  const std::vector<double> zero(n, 0.0);
  const TangentVector z = tangent(base, zero);
  check_pair(z, z, 1.0);
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<double> vc = random_direction(rng, n);
    std::vector<double> wc = random_direction(rng, n);
    const double sv = std::exp(rng.uniform(-3.0, 2.0));
    const double sw = std::exp(rng.uniform(-3.0, 2.0));
    for (double& x : vc) x *= sv;
    for (double& x : wc) x *= sw;
    const TangentVector v = tangent(base, vc);
    const TangentVector w = tangent(base, wc);
    check_pair(v, w, rng.uniform(0.0, 10.0));
    check_pair(v, v.scaled(-1.0), 1.0);
  }
  return report;
}

ChordReport uniform_chord_check(const GeneratorFunction& f, const Curve& curve, double epsilon) {
  if (!(epsilon > 0.0)) fail(ErrorCode::InvalidInput, "epsilon must be strictly positive");
  require_finsler_generator(f);
  if (curve.smoothness() == Smoothness::C0) fail(ErrorCode::NotC1, "chord check needs a C1 curve");
  ChordReport report;
  if (curve.width() == 0.0) {
    report.found = true;
    return report;
  }
  constexpr std::size_t kBases = 64;
  const std::vector<double> bounds = curve.piece_bounds();
  struct Sample {
    double s;
    ProbVector point;
    double speed;
  };
  std::vector<Sample> samples;
  for (std::size_t k = 0; k < kBases; ++k) {
    const double s = curve.a() + curve.width() * static_cast<double>(k) / kBases;
    std::size_t piece = 0;
    while (piece + 2 < bounds.size() && s >= bounds[piece + 1]) ++piece;
    ProbVector point = curve(s);
    const TangentVector v = tangent(point, curve.velocity(s, bounds[piece], bounds[piece + 1]));
    samples.push_back({s, point, finsler_F(f, v).value});
  }
  constexpr double kFractions[] = {0.999, 0.5, 0.25, 0.1};
  double delta = 0.5 * curve.width();
  for (int halving = 0; halving < 48; ++halving, delta *= 0.5) {
    double worst = 0.0;
    for (const Sample& sample : samples) {
      for (double fraction : kFractions) {
        const double t = sample.s + fraction * delta;
        if (t > curve.b()) continue;
        const ProbVector end = curve(t);
        require_interior(end);
        const double quotient = quasi_dist(f, sample.point, end) / (t - sample.s);
        worst = std::max(worst, std::abs(quotient - sample.speed));
      }
    }
    if (worst <= epsilon) {
      report.found = true;
      report.delta = delta;
      report.worst_deviation = worst;
      return report;
    }
    report.worst_deviation = worst;
  }
  return report;
}

}  // namespace qsx
