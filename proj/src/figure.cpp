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

#include "qsx/figure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsx/error.hpp"
#include "qsx/geodesic.hpp"
#include "qsx/quasimetric.hpp"

namespace qsx {

namespace {

bool on_simplex(const std::vector<double>& x) {
  double sum = 0.0;
  for (double c : x) sum += c;
  return std::ranges::all_of(x, [](double c) { return c >= 0.0; }) && std::abs(sum - 1.0) <= 1e-9;
}

Json labeled(const std::string& label, double radius, const std::vector<double>& coords,
             bool ambient) {
  return Json{{"label", label}, {"radius", radius}, {"coords", coords}, {"ambient", ambient}};
}

}  // namespace

Json figure_data(const FigureConfig& config) {
  const ProbVector& p = config.center;
  if (p.dimension() != 2) {
    fail(ErrorCode::UnsupportedDimension, "figure data covers the 2-simplex only");
  }
  if (config.geodesic_samples < 2) {
    fail(ErrorCode::InvalidInput, "need at least two geodesic samples");
  }
  const std::vector<double> center(p.begin(), p.end());
  Json polylines = Json::array();
  Json points = Json::array();
  polylines.push_back({{"role", "simplex_outline"},
                       {"radius", 0.0},
                       {"points", {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}}}});
  points.push_back(labeled("P", 0.0, center, false));

  for (double r : config.radii) {
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const bool forward = d == Direction::Forward;
      const char sign = forward ? '+' : '-';
      polylines.push_back({{"role", forward ? "forward_ball" : "backward_ball"},
                           {"radius", r},
                           {"points", ball_boundary_polygon(config.f, p, r, d)}});
      const BallGeometry geometry = ball_geometry(config.f, p, r, d);
      points.push_back(labeled(std::string("P") + sign, r, geometry.shifted_vertex, true));
      for (std::size_t i = 0; i < geometry.corners.size(); ++i) {
        const std::vector<double>& c = geometry.corners[i];
        points.push_back(labeled("C" + std::to_string(i) + sign, r, c, !on_simplex(c)));
      }
      if (forward) continue;
      for (const std::vector<double>& c : geometry.corners) {
        const Geodesic g = make_geodesic(config.f, p, make_prob_vector(c));
        Json samples = Json::array();
        for (std::size_t k = 0; k < config.geodesic_samples; ++k) {
          const double t = g.r() * static_cast<double>(k) /
                           static_cast<double>(config.geodesic_samples - 1);
          const ProbVector x = g.point(t);
          samples.push_back(std::vector<double>(x.begin(), x.end()));
        }
        polylines.push_back({{"role", "geodesic"}, {"radius", r}, {"points", std::move(samples)}});
      }
    }
  }
  return Json{{"generator", to_json(config.f)},
              {"center", center},
              {"polylines", std::move(polylines)},
              {"points", std::move(points)}};
}

}  // namespace qsx
