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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qsx/core.hpp"
#include "qsx/curves.hpp"
#include "qsx/error.hpp"
#include "qsx/geodesic.hpp"
#include "qsx/quasimetric.hpp"
#include "qsx/sampling.hpp"

namespace qsx {
namespace {

const ProbVector kP = make_prob_vector({0.2, 0.3, 0.5});
const ProbVector kQ = make_prob_vector({0.4, 0.4, 0.2});

// High-precision bisection values for f = x^(1/2) at t = r/2.
constexpr double kSqrtR = 0.18524193653371792712;
constexpr double kSqrtMu = 0.45749302460459335404;
constexpr double kSqrtMuPrime = 5.3226946457200414704;

TEST(SolveMuTest, EndpointsAndPinnedValue) {
  const GeneratorFunction f = power_generator(0.5);
  const double r = quasi_dist(f, kP, kQ);
  EXPECT_NEAR(r, kSqrtR, 1e-16);
  EXPECT_NEAR(solve_mu(f, kP, kQ, 0.0, 1e-12), 0.0, 1e-10);
  EXPECT_NEAR(solve_mu(f, kP, kQ, r, 1e-12), 1.0, 1e-10);
  EXPECT_NEAR(solve_mu(f, kP, kQ, r / 2.0, 1e-15), kSqrtMu, 1e-14);
}

TEST(SolveMuTest, Errors) {
  const GeneratorFunction f = power_generator(0.5);
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code([&] { solve_mu(f, kP, kP, 0.0, 1e-12); }), ErrorCode::DegenerateEndpoints);
  EXPECT_EQ(code([&] { solve_mu(f, kP, kQ, 1.0, 1e-12); }), ErrorCode::OutOfDomain);
}

TEST(SolveMuTest, IdentityIsLinear) {
  const GeneratorFunction id = identity_generator();
  const double r = quasi_dist(id, kP, kQ);
  for (double s : {0.1, 0.37, 0.5, 0.9}) {
    EXPECT_NEAR(solve_mu(id, kP, kQ, s * r, 1e-12), s, 1e-10);
  }
}

TEST(GeodesicTest, IdentityIsStraightSegment) {
  const Geodesic g = make_geodesic(identity_generator(), kP, kQ);
  for (int k = 0; k <= 8; ++k) {
    const double t = g.r() * k / 8.0;
    const ProbVector x = g.point(t);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(x[i], kP[i] + (t / g.r()) * (kQ[i] - kP[i]), 1e-10);
    }
  }
  const MuDerivative d = mu_derivative(g, g.r() / 3.0);
  EXPECT_NEAR(d.formula, 1.0 / g.r(), 1e-9);
}

TEST(GeodesicTest, VertexToVertexClosedForm) {
  const GeneratorFunction id = identity_generator();
  const Geodesic g = make_geodesic(id, vertex(2, 0), vertex(2, 1));
  EXPECT_EQ(g.r(), 1.0);
  const ProbVector x = g.point(0.25);
  EXPECT_NEAR(x[0], 0.75, 1e-12);
  EXPECT_NEAR(x[1], 0.25, 1e-12);
  EXPECT_NEAR(x[2], 0.0, 1e-12);
  EXPECT_TRUE(is_f_geodesic(id, g.as_curve(), 33, 1e-8).ok);
}

TEST(GeodesicTest, DerivativeOfMuMatchesOracle) {
  const Geodesic g = make_geodesic(power_generator(0.5), kP, kQ);
  const MuDerivative d = mu_derivative(g, g.r() / 2.0);
  EXPECT_NEAR(d.formula, kSqrtMuPrime, 1e-9);
  EXPECT_LT(d.relative_error, 1e-4);
  EXPECT_GT(d.formula, 0.0);
}

TEST(GeodesicTest, DefectSweep) {
  Rng rng(21);
  for (const GeneratorFunction& f : builtin_generators()) {
    for (int k = 0; k < 5; ++k) {
      const ProbVector p = random_interior_point(rng, 4);
      const ProbVector q = random_interior_point(rng, 4);
      const Geodesic g = make_geodesic(f, p, q);
      EXPECT_LE(is_f_geodesic(f, g.as_curve(), 33, 1e-8).defect, 1e-8) << f.name();
      EXPECT_EQ(g.point(0.0), p);
      EXPECT_LT(chebyshev(g.point(g.r()), q), 1e-10);
    }
  }
}

TEST(GeodesicTest, VelocityMatchesDifference) {
  const Geodesic g = make_geodesic(log_generator(1.0), kP, kQ);
  EXPECT_LT(audit_curve_velocity(g.as_curve()), 1e-5);
  const std::vector<double> v = g.velocity(g.r() / 2.0);
  double sum = 0.0;
  for (double x : v) sum += x;
  EXPECT_NEAR(sum, 0.0, 1e-12);
}

TEST(GeodesicTest, BackwardGeodesicFlipsArguments) {
  const GeneratorFunction f = power_generator(1.0 / 3.0);
  const Geodesic b = backward_geodesic(f, kP, kQ);
  EXPECT_TRUE(b.is_backward());
  EXPECT_NEAR(b.r(), quasi_dist(f, kQ, kP), 1e-15);
  EXPECT_EQ(b.start(), kP);
  EXPECT_LT(chebyshev(b.point(0.0), kP), 1e-10);
  EXPECT_LT(chebyshev(b.point(b.r()), kQ), 1e-10);
  EXPECT_LE(is_f_geodesic(f, b.as_curve(), 33, 1e-8, Direction::Backward).defect, 1e-8);
}

TEST(GeodesicTest, DegenerateAndOutOfDomain) {
  const GeneratorFunction f = arcsin_generator();
  const Geodesic g = make_geodesic(f, kP, kP);
  EXPECT_TRUE(g.is_degenerate());
  EXPECT_EQ(g.as_curve().width(), 0.0);
  const Geodesic h = make_geodesic(f, kP, kQ);
  EXPECT_THROW(h.point(h.r() + 0.1), Error);
  EXPECT_THROW(make_geodesic(f, kP, kQ, 0.0), Error);
}

TEST(GeodesicTest, NonSmoothGeneratorStillGivesGeodesic) {
  const GeneratorFunction rough = custom_generator(
      "rough", [](double x) { return x < 0.5 ? 0.5 * x : 1.5 * x - 0.5; }, GeneratorFlags{});
  const Geodesic g = make_geodesic(rough, kP, kQ);
  EXPECT_LE(is_f_geodesic(rough, g.as_curve(), 33, 1e-8).defect, 1e-8);
  EXPECT_THROW(g.velocity(g.r() / 2.0), Error);
}

}  // namespace
}  // namespace qsx
