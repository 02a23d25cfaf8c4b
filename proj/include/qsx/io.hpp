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

#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "qsx/core.hpp"
#include "qsx/curves.hpp"

namespace qsx {

// Shared JSON schemas:
//   point      {"coords": [..]}            (a bare array is also accepted)
//   generator  {"name": "power", "alpha": 0.5}   (a bare name is also accepted)
//   curve      {"type": "polyline", "times": [..], "points": [[..], ..]}
//              {"type": "geodesic", "P": [..], "Q": [..]}
// Malformed documents throw SchemaError; well-formed but invalid values throw the
// validation error of the underlying constructor (SumNotOne, ...).

using Json = nlohmann::json;

/// Throws SchemaError with the parser's message.
Json parse_json(std::string_view text);

Json to_json(const ProbVector& p);
ProbVector point_from_json(const Json& doc);

Json to_json(const GeneratorFunction& f);
GeneratorFunction generator_from_json(const Json& doc);

/// Curves of type "geodesic" are built with `f`.
Curve curve_from_json(const Json& doc, const GeneratorFunction& f);

/// Reads a finite number from `doc[key]`. Throws SchemaError.
double number_field(const Json& doc, std::string_view key);

}  // namespace qsx
