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
#include "qsx/sampling.hpp"

namespace qsx {
namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no qsx::Error thrown";
  return ErrorCode::InvalidInput;
}

TEST(ProbVectorTest, AcceptsSimplexPoints) {
  const ProbVector p = make_prob_vector({0.2, 0.3, 0.5});
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_DOUBLE_EQ(p[2], 0.5);
  EXPECT_TRUE(p.is_interior());
}

TEST(ProbVectorTest, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make_prob_vector({0.5, 0.6}); }), ErrorCode::SumNotOne);
  EXPECT_EQ(code_of([] { make_prob_vector({1.1, -0.1}); }), ErrorCode::NegativeCoordinate);
  EXPECT_EQ(code_of([] { make_prob_vector({1.0}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { make_prob_vector({0.5, NAN}); }), ErrorCode::InvalidInput);
}

TEST(ProbVectorTest, SnapsTinyNegativesAndRenormalizes) {
  const ProbVector p = make_prob_vector({-1e-13, 0.5, 0.5 + 1e-13});
  EXPECT_EQ(p[0], 0.0);
  EXPECT_NEAR(p[1] + p[2], 1.0, 1e-15);
  EXPECT_FALSE(p.is_interior());
}

TEST(ProbVectorTest, VerticesAndBarycenter) {
  const ProbVector e1 = vertex(3, 1);
  EXPECT_EQ(e1[1], 1.0);
  EXPECT_EQ(e1[0] + e1[2] + e1[3], 0.0);
  const ProbVector u = uniform_point(3);
  for (double x : u) EXPECT_DOUBLE_EQ(x, 0.25);
}

TEST(TangentVectorTest, ZeroSumRequired) {
  const ProbVector p = uniform_point(2);
  EXPECT_EQ(code_of([&] { tangent(p, {1.0, 0.0, 0.0}); }), ErrorCode::NotTangent);
  EXPECT_EQ(code_of([&] { tangent(p, {1.0, -1.0}); }), ErrorCode::DimensionMismatch);
  const TangentVector v = tangent(p, {1.0, -0.5, -0.5});
  EXPECT_DOUBLE_EQ(v.scaled(2.0)[0], 2.0);
  EXPECT_TRUE(v.plus(v.scaled(-1.0)).is_zero());
  const TangentVector w = tangent(vertex(2, 0), {-1.0, 0.5, 0.5});
  EXPECT_EQ(code_of([&] { v.plus(w); }), ErrorCode::BaseMismatch);
}

TEST(GeneratorTest, BuiltinsPassAudit) {
  for (const GeneratorFunction& f : builtin_generators()) {
    const GeneratorAudit audit = audit_generator(f);
    EXPECT_TRUE(audit.ok()) << f.name() << " inverse " << audit.worst_inverse_error
                            << " derivative " << audit.worst_derivative_error;
  }
}

TEST(GeneratorTest, PowerDerivativeAtOneThird) {
  const GeneratorFunction f = power_generator(1.0 / 3.0);
  EXPECT_NEAR(f.derivative(1.0 / 3.0), 0.69336127435063470484, 1e-15);
  EXPECT_NEAR(f.inverse(f(0.3)), 0.3, 1e-15);
}

TEST(GeneratorTest, FlagsControlCapabilities) {
  EXPECT_TRUE(identity_generator().monotonicity_capable());
  EXPECT_TRUE(power_generator(0.5).monotonicity_capable());
  EXPECT_TRUE(log_generator(1.0).monotonicity_capable());
  EXPECT_TRUE(arcsin_generator().finsler_capable());
  const GeneratorFunction rough = custom_generator(
      "rough", [](double x) { return x < 0.5 ? 0.5 * x : 1.5 * x - 0.5; }, GeneratorFlags{});
  EXPECT_FALSE(rough.finsler_capable());
  EXPECT_NEAR(rough.inverse(0.25), 0.5, 1e-13);
  EXPECT_EQ(code_of([&] { rough.derivative(0.3); }), ErrorCode::NotC1);
}

TEST(GeneratorTest, LookupByName) {
  EXPECT_EQ(generator("power", {{"alpha", 0.5}}).params().at("alpha"), 0.5);
  EXPECT_EQ(code_of([] { generator("cosh"); }), ErrorCode::UnknownGenerator);
  EXPECT_EQ(code_of([] { generator("power", {{"alpha", -1.0}}); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { generator("log", {{"a", 0.0}}); }), ErrorCode::InvalidParameter);
}

TEST(GeneratorTest, ArgumentsAreClamped) {
  const GeneratorFunction f = power_generator(0.5);
  EXPECT_EQ(f(-0.1), 0.0);
  EXPECT_EQ(f.inverse(1.5), 1.0);
}

TEST(DistanceTest, ChebyshevExample) {
  const ProbVector p = make_prob_vector({2.0 / 9.0, 1.0 / 3.0, 4.0 / 9.0});
  const ProbVector q = uniform_point(2);
  EXPECT_NEAR(chebyshev(p, q), 1.0 / 9.0, 1e-16);
  EXPECT_NEAR(euclidean(p, q), std::sqrt(2.0) / 9.0, 1e-16);
  EXPECT_EQ(code_of([&] { chebyshev(p, uniform_point(1)); }), ErrorCode::DimensionMismatch);
}

TEST(SamplingTest, SeededStreamsRepeat) {
  Rng a(7);
  Rng b(7);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(random_point(a, 4), random_point(b, 4));
  Rng c(11);
  const ProbVector p = random_interior_point(c, 3, 0.1);
  for (double x : p) EXPECT_GE(x, 0.1 / 4.0 - 1e-15);
}

TEST(SamplingTest, BarycentricGridCount) {
  // C(d + N, N) points with denominator d.
  EXPECT_EQ(barycentric_grid(2, 6).size(), 28u);
  EXPECT_EQ(boundary_points(2).size(), 6u);
}

}  // namespace
}  // namespace qsx
