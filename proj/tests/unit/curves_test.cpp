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

namespace qsx {
namespace {

const ProbVector kP = make_prob_vector({1.0, 0.0, 0.0});
const ProbVector kQ = make_prob_vector({0.0, 0.5, 0.5});

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no qsx::Error thrown";
  return ErrorCode::InvalidInput;
}

// Two pregeodesics into e_0 for the identity: a straight segment and a bent path
// whose non-leading coordinates decrease throughout.
Curve bent_path() {
  return polyline({0.0, 0.5, 1.0},
                  {make_prob_vector({0.2, 0.3, 0.5}), make_prob_vector({0.5, 0.25, 0.25}),
                   vertex(2, 0)});
}

TEST(CurveTest, EvaluationAndDomain) {
  const Curve c = segment(kP, kQ, 0.0, 2.0);
  EXPECT_EQ(c(1.0), make_prob_vector({0.5, 0.25, 0.25}));
  EXPECT_EQ(code_of([&] { c(2.5); }), ErrorCode::OutOfDomain);
  EXPECT_EQ(c.piece_bounds(), (std::vector<double>{0.0, 2.0}));
  EXPECT_EQ(code_of([] { polyline({0.0, 0.0}, {vertex(1, 0), vertex(1, 1)}); }),
            ErrorCode::InvalidInput);
}

TEST(CurveTest, PolylineVelocityMatchesDifference) {
  EXPECT_LT(audit_curve_velocity(bent_path()), 1e-6);
  const TangentVector v = bent_path().derivative(0.25);
  EXPECT_NEAR(v[0], 0.6, 1e-12);
}

TEST(PartitionTest, DyadicKnotsAndModulus) {
  const Partition pi = dyadic_partition(bent_path(), 2);
  EXPECT_EQ(pi.knots().size(), 9u);
  EXPECT_DOUBLE_EQ(pi.modulus(), 0.125);
  EXPECT_THROW(Partition({0.0, 0.5, 0.5}), Error);
}

TEST(PartitionTest, SumOnIdentitySegmentTelescopes) {
  const GeneratorFunction id = identity_generator();
  const Curve c = segment(kQ, kP);
  for (unsigned level : {0u, 3u, 6u}) {
    EXPECT_NEAR(partition_sum(id, c, dyadic_partition(c, level)), 1.0, 1e-15);
  }
  const Partition short_pi({0.0, 0.5});
  EXPECT_EQ(code_of([&] { partition_sum(id, c, short_pi); }), ErrorCode::PartitionMismatch);
}

TEST(LengthTest, IdentitySegmentsBothWays) {
  const GeneratorFunction id = identity_generator();
  const Curve c = segment(kQ, kP);
  EXPECT_NEAR(forward_length(id, c, 1e-10).value, 1.0, 1e-10);
  EXPECT_NEAR(forward_length(id, reverse(c), 1e-10).value, 0.5, 1e-10);
  EXPECT_NEAR(backward_length(id, c, 1e-10).value, 0.5, 1e-10);
}

TEST(LengthTest, ReversalSwapsDirections) {
  const GeneratorFunction f = power_generator(0.5);
  const Curve c = bent_path();
  EXPECT_NEAR(backward_length(f, c, 1e-9).value, forward_length(f, reverse(c), 1e-9).value, 2e-9);
  EXPECT_NEAR(forward_length(f, c, 1e-9).value, backward_length(f, reverse(c), 1e-9).value, 2e-9);
}

TEST(LengthTest, GeodesicHasLengthR) {
  const GeneratorFunction f = power_generator(1.0 / 3.0);
  const ProbVector p = make_prob_vector({0.2, 0.3, 0.5});
  const ProbVector q = make_prob_vector({0.4, 0.4, 0.2});
  const Geodesic g = make_geodesic(f, p, q);
  const double r = g.r();
  const Curve c = g.as_curve();
  EXPECT_NEAR(forward_length(f, c, 1e-9).value, r, 1e-8);
  const Curve joined = concat(restrict(c, 0.0, r / 2.0), restrict(c, r / 2.0, r));
  EXPECT_NEAR(forward_length(f, joined, 1e-9).value, r, 2e-9 + 1e-8);
}

TEST(LengthTest, QuadraticReparametrizationPreservesLength) {
  const GeneratorFunction f = log_generator(1.0);
  const Curve c = bent_path();
  const Curve slow = reparametrize(
      c, [](double s) { return s * s; }, 0.0, 1.0, [](double s) { return 2.0 * s; });
  EXPECT_NEAR(forward_length(f, slow, 1e-9).value, forward_length(f, c, 1e-9).value, 1e-8);
  const Curve flipped = reparametrize(c, [](double s) { return 1.0 - s; }, 0.0, 1.0);
  EXPECT_NEAR(forward_length(f, flipped, 1e-9).value, backward_length(f, c, 1e-9).value, 1e-8);
  EXPECT_EQ(code_of([&] {
              reparametrize(c, [](double s) { return std::sin(3.0 * s) / std::sin(3.0); }, 0.0,
                            1.0);
            }),
            ErrorCode::NotMonotone);
}

TEST(LengthTest, ConcatRequiresMatchingEnds) {
  EXPECT_EQ(code_of([] { concat(segment(kP, kQ), segment(kP, kQ)); }),
            ErrorCode::EndpointMismatch);
}

TEST(ProfileTest, NondecreasingAndExactOnGeodesics) {
  const GeneratorFunction f = arcsin_generator();
  const Geodesic g = make_geodesic(f, make_prob_vector({0.1, 0.6, 0.3}),
                                   make_prob_vector({0.5, 0.2, 0.3}));
  const Curve c = g.as_curve();
  double previous = 0.0;
  for (int k = 1; k <= 8; ++k) {
    const double t = g.r() * k / 8.0;
    const double value = length_profile(f, c, t, 1e-9);
    EXPECT_NEAR(value, t, 1e-8);
    EXPECT_GE(value, previous);
    previous = value;
  }
}

TEST(ReparametrizeByLengthTest, IdentitySegment) {
  const GeneratorFunction id = identity_generator();
  const ProbVector p = make_prob_vector({0.1, 0.2, 0.7});
  const ProbVector q = make_prob_vector({0.5, 0.3, 0.2});
  const double d = quasi_dist(id, p, q);
  const Curve c = reparametrize_by_flength(id, segment(p, q), 1e-10);
  EXPECT_EQ(c.a(), 0.0);
  EXPECT_NEAR(c.b(), d, 1e-10);
  for (int k = 0; k <= 4; ++k) {
    const double s = c.b() * k / 4.0;
    const ProbVector x = c(s);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(x[i], p[i] + (s / d) * (q[i] - p[i]), 1e-9);
  }
}

TEST(ReparametrizeByLengthTest, PregeodesicBecomesGeodesic) {
  const GeneratorFunction id = identity_generator();
  const Curve bent = bent_path();
  EXPECT_TRUE(is_f_pregeodesic(id, bent, 1e-9));
  const Curve c = reparametrize_by_flength(id, bent, 1e-10);
  EXPECT_TRUE(is_f_geodesic(id, c, 33, 1e-8).ok);
  EXPECT_NEAR(c.b(), quasi_dist(id, bent.start(), vertex(2, 0)), 1e-9);
}

TEST(GeodesicCheckTest, StraightLineFailsForSquareRoot) {
  const GeneratorFunction f = power_generator(0.5);
  const ProbVector p = make_prob_vector({0.2, 0.3, 0.5});
  const ProbVector q = make_prob_vector({0.4, 0.4, 0.2});
  const Curve line = segment(p, q, 0.0, quasi_dist(f, p, q));
  const GeodesicCheck check = is_f_geodesic(f, line, 33, 1e-8);
  EXPECT_FALSE(check.ok);
  EXPECT_GT(check.defect, 1e-4);
  EXPECT_THROW(is_f_geodesic(f, line, 1, 1e-8), Error);
}

TEST(GeodesicCheckTest, BacktrackingPolylineIsNotPregeodesic) {
  const GeneratorFunction id = identity_generator();
  const Curve back_and_forth =
      polyline({0.0, 1.0, 2.0}, {make_prob_vector({0.2, 0.3, 0.5}),
                                 make_prob_vector({0.1, 0.6, 0.3}), vertex(2, 0)});
  EXPECT_FALSE(is_f_pregeodesic(id, back_and_forth, 1e-9));
}

TEST(GeodesicCheckTest, ConditionsAgreeOnConstructedGeodesic) {
  const GeneratorFunction f = power_generator(1.0 / 3.0);
  const Geodesic g = make_geodesic(f, make_prob_vector({0.1, 0.2, 0.3, 0.4}),
                                   make_prob_vector({0.4, 0.3, 0.2, 0.1}));
  const GeodesicConditions c = check_geodesic_conditions(f, g.as_curve(), 33, 1e-8);
  EXPECT_TRUE(c.geodesic.ok);
  EXPECT_TRUE(c.additive.ok);
  EXPECT_TRUE(c.length_saturates.ok);
}

}  // namespace
}  // namespace qsx
