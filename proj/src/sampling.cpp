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

#include "qsx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qsx {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(seed ^ splitmix64(index + 1)));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t n) {
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

double Rng::exponential() { return -std::log1p(-uniform()); }

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(out[i - 1], out[index(i)]);
  return out;
}

ProbVector random_point(Rng& rng, std::size_t dimension) {
  std::vector<double> coords(dimension + 1);
  double sum = 0.0;
  for (double& x : coords) {
    x = rng.exponential();
    sum += x;
  }
  if (sum == 0.0) return uniform_point(dimension);
  for (double& x : coords) x /= sum;
  return make_prob_vector(coords);
}

ProbVector random_interior_point(Rng& rng, std::size_t dimension, double eta) {
  const ProbVector u = random_point(rng, dimension);
  const double center = 1.0 / static_cast<double>(dimension + 1);
  std::vector<double> coords(u.begin(), u.end());
  for (double& x : coords) x = (1.0 - eta) * x + eta * center;
  return make_prob_vector(coords);
}

ProbVector random_any_point(Rng& rng, std::size_t dimension) {
  const std::size_t n = dimension + 1;
  switch (rng.index(8)) {
    case 0:
      return vertex(dimension, rng.index(n));
    case 1: {
      const std::size_t i = rng.index(n);
      const std::size_t j = (i + 1 + rng.index(n - 1)) % n;
      std::vector<double> coords(n, 0.0);
      coords[i] = 0.5;
      coords[j] = 0.5;
      return make_prob_vector(coords);
    }
    case 2: {
      // Uniform point of a random proper face.
      std::vector<double> coords(n, 0.0);
      const auto order = rng.permutation(n);
      const std::size_t support = rng.between(1, n - 1);
      double sum = 0.0;
      for (std::size_t k = 0; k < support; ++k) {
        coords[order[k]] = rng.exponential();
        sum += coords[order[k]];
      }
      for (double& x : coords) x /= sum;
      return make_prob_vector(coords);
    }
    default:
      return random_point(rng, dimension);
  }
}

std::vector<double> random_direction(Rng& rng, std::size_t size) {
  std::vector<double> v(size);
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(size);
  double norm = 0.0;
  for (double& x : v) {
    x -= mean;
    norm = std::max(norm, std::abs(x));
  }
  if (norm == 0.0) {
    v.assign(size, 0.0);
    v[0] = 1.0;
    v[1] = -1.0;
    return v;
  }
  for (double& x : v) x /= norm;
  // Re-center so the components sum to zero as closely as floating point allows.
  const double drift = std::accumulate(v.begin(), v.end(), 0.0);
  v[0] -= drift;
  return v;
}

std::vector<ProbVector> boundary_points(std::size_t dimension) {
  std::vector<ProbVector> out;
  const std::size_t n = dimension + 1;
  for (std::size_t i = 0; i < n; ++i) out.push_back(vertex(dimension, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<double> coords(n, 0.0);
      coords[i] = coords[j] = 0.5;
      out.push_back(make_prob_vector(coords));
    }
  }
  return out;
}

namespace {

void grid_recurse(std::vector<std::size_t>& counts, std::size_t position, std::size_t remaining,
                  std::size_t denominator, std::vector<ProbVector>& out) {
  if (position + 1 == counts.size()) {
    counts[position] = remaining;
    std::vector<double> coords(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      coords[i] = static_cast<double>(counts[i]) / static_cast<double>(denominator);
    }
    out.push_back(make_prob_vector(coords));
    return;
  }
  for (std::size_t k = 0; k <= remaining; ++k) {
    counts[position] = k;
    grid_recurse(counts, position + 1, remaining - k, denominator, out);
  }
}

}  // namespace

std::vector<ProbVector> barycentric_grid(std::size_t dimension, std::size_t denominator) {
  std::vector<ProbVector> out;
  std::vector<std::size_t> counts(dimension + 1, 0);
  grid_recurse(counts, 0, denominator, denominator, out);
  return out;
}

}  // namespace qsx
