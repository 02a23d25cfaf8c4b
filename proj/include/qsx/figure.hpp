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

#include <cstddef>
#include <vector>

#include "qsx/core.hpp"
#include "qsx/io.hpp"

namespace qsx {

/// Figure data for balls in the 2-simplex. The default radius 0.1 is chosen by eye.
struct FigureConfig {
  GeneratorFunction f = power_generator(1.0 / 3.0);
  ProbVector center = make_prob_vector({2.0 / 9.0, 1.0 / 3.0, 4.0 / 9.0});
  std::vector<double> radii{0.1};
  std::size_t geodesic_samples = 33;
};

/// Document consumed by the renderer:
///
///   {"generator": {..}, "center": [..],
///    "polylines": [{"role": "simplex_outline" | "forward_ball" | "backward_ball" |
///                   "geodesic", "radius": r, "points": [[..], ..]}, ..],
///    "points": [{"label": "P" | "P+" | "P-" | "C0+" | .., "radius": r,
///                "coords": [..], "ambient": bool}, ..]}
///
/// Ball boundaries are closed polygons. Geodesics run from the center to the
/// backward corners C_i^-. A point is ambient when it lies outside the simplex
/// (P^± always, forward corners when they leave it).
/// Throws UnsupportedDimension unless the center lies in the 2-simplex.
Json figure_data(const FigureConfig& config);

}  // namespace qsx
