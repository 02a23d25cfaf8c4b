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

#include "qsx/io.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qsx/error.hpp"
#include "qsx/geodesic.hpp"

namespace qsx {

namespace {

std::vector<double> number_array(const Json& doc, std::string_view what) {
  if (!doc.is_array()) fail(ErrorCode::SchemaError, std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(doc.size());
  for (const Json& x : doc) {
    if (!x.is_number()) fail(ErrorCode::SchemaError, std::string(what) + " must hold numbers");
    out.push_back(x.get<double>());
    if (!std::isfinite(out.back())) {
      fail(ErrorCode::SchemaError, std::string(what) + " must hold finite numbers");
    }
  }
  return out;
}

const Json& member(const Json& doc, std::string_view key) {
  if (!doc.is_object() || !doc.contains(key)) {
    fail(ErrorCode::SchemaError, "missing field '" + std::string(key) + "'");
  }
  return doc.at(std::string(key));
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::SchemaError, std::string("malformed JSON: ") + e.what());
  }
}

double number_field(const Json& doc, std::string_view key) {
  const Json& x = member(doc, key);
  if (!x.is_number() || !std::isfinite(x.get<double>())) {
    fail(ErrorCode::SchemaError, "field '" + std::string(key) + "' must be a finite number");
  }
  return x.get<double>();
}

Json to_json(const ProbVector& p) {
  return Json{{"coords", std::vector<double>(p.begin(), p.end())}};
}

ProbVector point_from_json(const Json& doc) {
  if (doc.is_array()) return make_prob_vector(number_array(doc, "point"));
  return make_prob_vector(number_array(member(doc, "coords"), "coords"));
}

Json to_json(const GeneratorFunction& f) {
  Json out{{"name", f.name()}};
  for (const auto& [key, value] : f.params()) out[key] = value;
  return out;
}

GeneratorFunction generator_from_json(const Json& doc) {
  if (doc.is_string()) return generator(doc.get<std::string>());
  const Json& name = member(doc, "name");
  if (!name.is_string()) fail(ErrorCode::SchemaError, "generator name must be a string");
  std::map<std::string, double> params;
  for (const auto& [key, value] : doc.items()) {
    if (key == "name") continue;
    params[key] = number_field(doc, key);
  }
  return generator(name.get<std::string>(), params);
}

Curve curve_from_json(const Json& doc, const GeneratorFunction& f) {
  const Json& type = member(doc, "type");
  if (type == "polyline") {
    std::vector<double> times = number_array(member(doc, "times"), "times");
    const Json& points = member(doc, "points");
    if (!points.is_array()) fail(ErrorCode::SchemaError, "points must be an array");
    std::vector<ProbVector> vertices;
    for (const Json& p : points) vertices.push_back(point_from_json(p));
    return polyline(std::move(times), std::move(vertices));
  }
  if (type == "geodesic") {
    return make_geodesic(f, point_from_json(member(doc, "P")), point_from_json(member(doc, "Q")))
        .as_curve();
  }
  fail(ErrorCode::SchemaError, "curve type must be 'polyline' or 'geodesic'");
}

}  // namespace qsx
