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
#include <string>

#include <gtest/gtest.h>

#include "qsx/core.hpp"
#include "qsx/error.hpp"
#include "qsx/figure.hpp"
#include "qsx/io.hpp"
#include "qsx/quasimetric.hpp"

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

TEST(JsonTest, PointRoundTrip) {
  const ProbVector p = make_prob_vector({0.1, 0.2, 0.7});
  EXPECT_EQ(point_from_json(parse_json(to_json(p).dump())), p);
  EXPECT_EQ(point_from_json(parse_json("[0.5, 0.5]")), make_prob_vector({0.5, 0.5}));
  EXPECT_EQ(code_of([] { point_from_json(parse_json("[0.5, 0.6]")); }), ErrorCode::SumNotOne);
  EXPECT_EQ(code_of([] { point_from_json(parse_json(R"({"coords": "x"})")); }),
            ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { parse_json("{"); }), ErrorCode::SchemaError);
}

TEST(JsonTest, GeneratorRoundTrip) {
  const GeneratorFunction f = generator_from_json(parse_json(R"({"name": "log", "a": 2})"));
  EXPECT_EQ(f.name(), "log");
  EXPECT_EQ(to_json(f)["a"], 2.0);
  EXPECT_EQ(generator_from_json(parse_json(R"("arcsin")")).name(), "arcsin");
  EXPECT_EQ(code_of([] { generator_from_json(parse_json(R"({"name": 3})")); }),
            ErrorCode::SchemaError);
}

TEST(JsonTest, Curves) {
  const GeneratorFunction id = identity_generator();
  const Curve line = curve_from_json(
      parse_json(R"({"type": "polyline", "times": [0, 1], "points": [[0, 0.5, 0.5], [1, 0, 0]]})"),
      id);
  EXPECT_EQ(line.finish(), vertex(2, 0));
  const Curve g = curve_from_json(
      parse_json(R"({"type": "geodesic", "P": [0.2, 0.3, 0.5], "Q": [0.4, 0.4, 0.2]})"), id);
  EXPECT_NEAR(g.b(), 0.2, 1e-15);
  EXPECT_EQ(code_of([&] { curve_from_json(parse_json(R"({"type": "spline"})"), id); }),
            ErrorCode::SchemaError);
}

TEST(JsonTest, NumberField) {
  const Json doc = parse_json(R"({"r": 0.25, "s": "x"})");
  EXPECT_EQ(number_field(doc, "r"), 0.25);
  EXPECT_EQ(code_of([&] { number_field(doc, "s"); }), ErrorCode::SchemaError);
  EXPECT_EQ(code_of([&] { number_field(doc, "t"); }), ErrorCode::SchemaError);
}

TEST(FigureTest, DefaultDocument) {
  const Json doc = figure_data(FigureConfig{});
  EXPECT_EQ(doc["generator"]["name"], "power");
  EXPECT_NEAR(doc["generator"]["alpha"].get<double>(), 1.0 / 3.0, 1e-16);
  EXPECT_NEAR(doc["center"][0].get<double>(), 2.0 / 9.0, 1e-16);
  int outlines = 0;
  int forward = 0;
  int backward = 0;
  int geodesics = 0;
  for (const Json& line : doc["polylines"]) {
    const std::string role = line["role"];
    const Json& pts = line["points"];
    ASSERT_GE(pts.size(), 2u);
    if (role != "geodesic") EXPECT_EQ(pts.front(), pts.back()) << role;
    outlines += role == "simplex_outline";
    forward += role == "forward_ball";
    backward += role == "backward_ball";
    geodesics += role == "geodesic";
  }
  EXPECT_EQ(outlines, 1);
  EXPECT_EQ(forward, 1);
  EXPECT_EQ(backward, 1);
  EXPECT_EQ(geodesics, 3);
}

TEST(FigureTest, CornerMarkersMatchBallGeometry) {
  const FigureConfig config;
  const Json doc = figure_data(config);
  const BallGeometry g = ball_geometry(config.f, config.center, 0.1, Direction::Forward);
  bool seen = false;
  for (const Json& point : doc["points"]) {
    if (point["label"] != "C1+") continue;
    seen = true;
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(point["coords"][i].get<double>(), g.corners[1][i], 1e-15);
    }
  }
  EXPECT_TRUE(seen);
  for (const Json& point : doc["points"]) {
    if (point["label"] == "P+" || point["label"] == "P-") EXPECT_TRUE(point["ambient"].get<bool>());
  }
}

TEST(FigureTest, OnlyTheTwoSimplex) {
  FigureConfig config;
  config.center = uniform_point(3);
  EXPECT_EQ(code_of([&] { figure_data(config); }), ErrorCode::UnsupportedDimension);
}

}  // namespace
}  // namespace qsx
