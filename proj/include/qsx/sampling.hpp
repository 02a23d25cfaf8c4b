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
#include <cstdint>
#include <random>
#include <vector>

#include "qsx/core.hpp"

namespace qsx {

/// Seeded random source used by every sweep. Distributions are implemented here
/// rather than through <random> adaptors so streams are identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for sub-task `index`, derived with splitmix64.
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  /// Uniform double in [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);
  /// Uniform integer in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + index(hi - lo + 1); }
  double exponential();
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Uniform (Dirichlet(1,...,1)) point of the N-simplex.
ProbVector random_point(Rng& rng, std::size_t dimension);

/// Uniform point shrunk towards the barycenter, P = (1 - eta) U + eta * uniform,
/// so every coordinate is at least eta/(N+1).
ProbVector random_interior_point(Rng& rng, std::size_t dimension, double eta = 0.1);

/// Random point that is on the boundary with positive probability: vertices, edge
/// midpoints and uniform points of random faces are mixed with interior points.
ProbVector random_any_point(Rng& rng, std::size_t dimension);

/// Random zero-sum direction with max-norm 1.
std::vector<double> random_direction(Rng& rng, std::size_t size);

/// Deterministic boundary cases: all vertices and all edge midpoints.
std::vector<ProbVector> boundary_points(std::size_t dimension);

/// All points of the N-simplex with coordinates k_i / denominator.
std::vector<ProbVector> barycentric_grid(std::size_t dimension, std::size_t denominator);

}  // namespace qsx
