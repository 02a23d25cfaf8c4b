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
#include "qsx/error.hpp"
#include "qsx/quasimetric.hpp"
#include "qsx/sampling.hpp"

namespace qsx {
namespace {

const ProbVector kFigureCenter = make_prob_vector({2.0 / 9.0, 1.0 / 3.0, 4.0 / 9.0});

TEST(QuasiDistTest, VertexToEdgeValues) {
  const GeneratorFunction id = identity_generator();
  const ProbVector p = make_prob_vector({1.0, 0.0, 0.0});
  EXPECT_EQ(quasi_dist(id, p, make_prob_vector({0.0, 0.5, 0.5})), 0.5);
  EXPECT_EQ(quasi_dist(id, p, make_prob_vector({0.0, 1.0, 0.0})), 1.0);
  EXPECT_EQ(quasi_dist(id, make_prob_vector({0.0, 0.5, 0.5}), p), 1.0);
}

TEST(QuasiDistTest, CubeRootAgainstHighPrecision) {
  const GeneratorFunction f = power_generator(1.0 / 3.0);
  const QuasiDistance d = quasi_dist_detail(f, kFigureCenter, uniform_point(2));
  EXPECT_NEAR(d.value, 0.08765441007325481855, 2e-16);
  EXPECT_EQ(d.argmax, 0u);
}

TEST(QuasiDistTest, ZeroOnlyOnDiagonal) {
  const GeneratorFunction f = log_generator(1.0);
  EXPECT_EQ(quasi_dist(f, kFigureCenter, kFigureCenter), 0.0);
  EXPECT_GT(quasi_dist(f, kFigureCenter, uniform_point(2)), 0.0);
  EXPECT_THROW(quasi_dist(f, kFigureCenter, uniform_point(3)), Error);
}

TEST(QuasiDistTest, TriangleInequalitySweep) {
  Rng rng(5);
  for (const GeneratorFunction& f : builtin_generators()) {
    for (int k = 0; k < 500; ++k) {
      const std::size_t n = rng.between(1, 6);
      const ProbVector p = random_any_point(rng, n);
      const ProbVector q = random_any_point(rng, n);
      const ProbVector s = random_any_point(rng, n);
      EXPECT_GE(quasi_dist(f, p, q), 0.0);
      EXPECT_LE(quasi_dist(f, p, s), quasi_dist(f, p, q) + quasi_dist(f, q, s) + 1e-12);
    }
  }
}

TEST(SymmetrizeTest, MaxAndPowerForms) {
  const GeneratorFunction id = identity_generator();
  const ProbVector p = make_prob_vector({1.0, 0.0, 0.0});
  const ProbVector q = make_prob_vector({0.0, 0.5, 0.5});
  EXPECT_EQ(symmetrize_max(id, p, q), 1.0);
  EXPECT_EQ(symmetrize_max(id, q, p), 1.0);
  EXPECT_DOUBLE_EQ(symmetrize_power(id, p, q, 1.0), 1.5);
  EXPECT_NEAR(symmetrize_power(id, p, q, 64.0), 1.0, 0.02);
  try {
    symmetrize_power(id, p, q, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidExponent);
  }
}

TEST(BallTest, UpperBoundFormula) {
  const GeneratorFunction f = power_generator(1.0 / 3.0);
  const BallBounds b = ball_coordinate_bounds(f, kFigureCenter, 0.1);
  EXPECT_NEAR(b.upper[0], 0.35145766978036450827, 1e-15);
  EXPECT_THROW(ball_coordinate_bounds(f, kFigureCenter, 0.0), Error);
}

TEST(BallTest, OpenAndClosedForwardBall) {
  const GeneratorFunction id = identity_generator();
  BallSpec spec{uniform_point(2), 1.0 / 6.0, Direction::Forward, false};
  const ProbVector q = make_prob_vector({0.5, 0.25, 0.25});
  EXPECT_FALSE(ball_contains(spec, id, q));
  spec.closed = true;
  EXPECT_TRUE(ball_contains(spec, id, q));
}

TEST(BallTest, CoordinateFormMatchesDistanceForm) {
  Rng rng(17);
  const auto generators = builtin_generators();
  for (int k = 0; k < 4000; ++k) {
    const GeneratorFunction& f = generators[k % generators.size()];
    const std::size_t n = rng.between(1, 5);
    BallSpec spec{random_any_point(rng, n), rng.uniform(0.01, 1.0),
                  k % 2 == 0 ? Direction::Forward : Direction::Backward, k % 4 < 2};
    const ProbVector q = random_any_point(rng, n);
    const double d = spec.direction == Direction::Forward ? quasi_dist(f, spec.center, q)
                                                          : quasi_dist(f, q, spec.center);
    if (std::abs(d - spec.radius) <= 1e-12) continue;
    EXPECT_EQ(ball_contains(spec, f, q), ball_contains_by_distance(spec, f, q));
  }
}

TEST(BallTest, SaturatedUpperBoundAdmitsVertex) {
  // f(p_0) + r > 1: the forward ball contains the vertex e_0.
  const GeneratorFunction id = identity_generator();
  const BallSpec spec{make_prob_vector({0.9, 0.1}), 0.5, Direction::Forward, false};
  EXPECT_TRUE(ball_contains(spec, id, vertex(1, 0)));
  EXPECT_TRUE(ball_contains_by_distance(spec, id, vertex(1, 0)));
}

TEST(BallTest, BackwardCornersOfBarycenter) {
  const BallGeometry g =
      ball_geometry(identity_generator(), uniform_point(2), 1.0 / 6.0, Direction::Backward);
  for (double x : g.shifted_vertex) EXPECT_NEAR(x, 1.0 / 6.0, 1e-15);
  ASSERT_EQ(g.corners.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(g.corners[i][j], i == j ? 2.0 / 3.0 : 1.0 / 6.0, 1e-15);
    }
  }
}

TEST(BallTest, BoundaryPolygonIsClosed) {
  const auto poly = ball_boundary_polygon(power_generator(1.0 / 3.0), kFigureCenter, 0.1,
                                          Direction::Forward);
  ASSERT_GE(poly.size(), 4u);
  EXPECT_EQ(poly.front(), poly.back());
  EXPECT_THROW(
      ball_boundary_polygon(identity_generator(), uniform_point(3), 0.1, Direction::Forward),
      Error);
}

TEST(ChebyshevBoundsTest, VertexToBarycenterSaturates) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const ChebyshevBounds b = chebyshev_bounds_check(vertex(n, 0), uniform_point(n));
    EXPECT_NEAR(b.value, 1.0 / static_cast<double>(n + 1), 1e-15);
    EXPECT_TRUE(b.lower_ok && b.upper_ok);
    EXPECT_TRUE(b.saturated);
  }
  const ChebyshevBounds b = chebyshev_bounds_check(kFigureCenter, uniform_point(2));
  EXPECT_TRUE(b.lower_ok && b.upper_ok);
  EXPECT_FALSE(b.saturated);
}

}  // namespace
}  // namespace qsx
