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
#include "qsx/stochastic.hpp"

namespace qsx {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no qsx::Error thrown";
  return ErrorCode::InvalidInput;
}

TEST(MatrixTest, PermutationConvention) {
  const std::vector<std::size_t> sigma{2, 0, 1};
  const Matrix m = Matrix::permutation(sigma);
  const std::vector<double> image = m.multiply(std::vector<double>{1.0, 2.0, 3.0});
  EXPECT_EQ(image, (std::vector<double>{2.0, 3.0, 1.0}));
  EXPECT_EQ(code_of([] { Matrix{{1.0, 0.0}, {1.0}}; }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { m.multiply(std::vector<double>{1.0}); }), ErrorCode::DimensionMismatch);
}

TEST(StochasticTest, ColumnSumConvention) {
  const Matrix columns{{0.5, 1.0}, {0.5, 0.0}};
  EXPECT_TRUE(is_stochastic(columns));
  EXPECT_FALSE(is_bistochastic(columns));
  const Matrix rows{{0.5, 0.5}, {1.0, 0.0}};
  EXPECT_FALSE(is_stochastic(rows));
  EXPECT_EQ(code_of([&] { StochasticMatrix s(rows); }), ErrorCode::NotStochastic);
  EXPECT_EQ(code_of([&] { BistochasticMatrix s(columns); }), ErrorCode::NotBistochastic);
}

TEST(StochasticTest, ApplyKeepsSimplexAndTangentSpace) {
  const BistochasticMatrix s = random_bistochastic(4, 3, 8);
  const ProbVector p = make_prob_vector({0.1, 0.2, 0.3, 0.4});
  const ProbVector sp = apply(s, p);
  EXPECT_EQ(sp.size(), 4u);
  const TangentVector v = tangent(p, {1.0, -1.0, 0.5, -0.5});
  const TangentVector sv = apply(s, v);
  EXPECT_EQ(sv.base(), sp);
  double sum = 0.0;
  for (double x : sv.components()) sum += x;
  EXPECT_NEAR(sum, 0.0, 1e-15);
}

TEST(RandomBistochasticTest, ExactMarginals) {
  const BistochasticMatrix s = random_bistochastic(3, 4, 12345);
  for (double x : s.entries().row_sums()) EXPECT_NEAR(x, 1.0, 1e-15);
  for (double x : s.entries().column_sums()) EXPECT_NEAR(x, 1.0, 1e-15);
  EXPECT_NO_THROW(random_bistochastic(5, 1, 1));
  EXPECT_EQ(code_of([] { random_bistochastic(1, 2, 0); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { random_bistochastic(3, 0, 0); }), ErrorCode::InvalidInput);
}

TEST(BirkhoffTest, RoundTrip) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const BistochasticMatrix s = random_bistochastic(n, n + 2, 100 + n);
    const BirkhoffDecomposition d = birkhoff_decompose(s);
    EXPECT_LE(d.reconstruct().max_abs_difference(s.entries()), 1e-9) << n;
    EXPECT_LE(d.weights.size(), (n - 1) * (n - 1) + 1) << n;
    double total = 0.0;
    for (double w : d.weights) {
      EXPECT_GT(w, 0.0);
      total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(BirkhoffTest, PermutationIsItsOwnDecomposition) {
  const std::vector<std::size_t> sigma{1, 3, 0, 2};
  const BirkhoffDecomposition d = birkhoff_decompose(BistochasticMatrix(Matrix::permutation(sigma)));
  ASSERT_EQ(d.weights.size(), 1u);
  EXPECT_EQ(d.weights[0], 1.0);
  EXPECT_EQ(d.permutations[0], sigma);
}

TEST(MonotoneTest, HoldsForQualifyingGenerators) {
  Rng rng(4);
  for (const GeneratorFunction& f : builtin_generators()) {
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = rng.between(2, 7);
      const BistochasticMatrix s = random_bistochastic(n, rng.between(1, 6), 1000 + k);
      const ProbVector p = random_any_point(rng, n - 1);
      const ProbVector q = random_any_point(rng, n - 1);
      EXPECT_TRUE(check_dist_monotone(f, s, p, q).holds) << f.name();
      const ProbVector base = random_interior_point(rng, n - 1);
      const TangentVector v = tangent(base, random_direction(rng, n));
      EXPECT_TRUE(check_finsler_monotone(f, s, v).holds) << f.name();
    }
  }
}

TEST(MonotoneTest, FlagMissingUnlessForced) {
  const GeneratorFunction square = power_generator(2.0);
  const BistochasticMatrix s = random_bistochastic(3, 2, 5);
  const ProbVector p = uniform_point(2);
  const ProbVector q = vertex(2, 1);
  EXPECT_EQ(code_of([&] { check_dist_monotone(square, s, p, q); }), ErrorCode::FlagMissing);
  EXPECT_NO_THROW(check_dist_monotone(square, s, p, q, true));
}

TEST(CounterexampleTest, IdentityDistanceGrows) {
  const CounterexampleReport r = stochastic_counterexample();
  EXPECT_EQ(r.dist, 0.5);
  EXPECT_EQ(r.image_dist, 1.0);
  EXPECT_TRUE(r.stochastic);
  EXPECT_FALSE(r.bistochastic);
  EXPECT_TRUE(r.violated);
  EXPECT_EQ(r.sp, make_prob_vector({1.0, 0.0, 0.0}));
  EXPECT_EQ(r.sq, make_prob_vector({0.0, 1.0, 0.0}));
}

TEST(MaxMeanTest, SweepAndValidation) {
  Rng rng(6);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t len = rng.between(1, 16);
    std::vector<double> a(len);
    std::vector<double> b(len);
    for (std::size_t j = 0; j < len; ++j) {
      a[j] = rng.uniform();
      b[j] = rng.uniform(1e-3, 1.0);
    }
    EXPECT_TRUE(max_mean_inequality_check(a, b));
  }
  const std::vector<double> a{1.0};
  const std::vector<double> zero{0.0};
  EXPECT_EQ(code_of([&] { max_mean_inequality_check(a, zero); }), ErrorCode::InvalidInput);
}

}  // namespace
}  // namespace qsx
