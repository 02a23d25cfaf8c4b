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

#include "qsx/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "qsx/error.hpp"
#include "qsx/finsler.hpp"
#include "qsx/geodesic.hpp"
#include "qsx/quasimetric.hpp"
#include "qsx/sampling.hpp"
#include "qsx/stochastic.hpp"

namespace qsx {

namespace {

constexpr std::size_t kMaxDimension = 6;

// Accumulates threshold - error over trials.
struct Tally {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string first_failure;

  void record(double threshold, double error, const std::string& what = {}) {
    ++trials;
    const double margin = threshold - error;
    worst_margin = std::min(worst_margin, margin);
    if (!(margin >= 0.0)) {
      if (failures == 0) first_failure = what.empty() ? "margin " + std::to_string(margin) : what;
      ++failures;
    }
  }
  void check(bool ok, const std::string& what) { record(0.0, ok ? 0.0 : 1.0, what); }
};

std::size_t scaled(const VerifyConfig& config, std::size_t base) {
  return std::max<std::size_t>(1, base * config.trials / 10000);
}

std::uint64_t stream(const VerifyConfig& config, int criterion, std::size_t generator,
                     std::size_t dimension) {
  return splitmix64(config.seed ^ splitmix64((static_cast<std::uint64_t>(criterion) << 32) |
                                             (generator << 16) | dimension));
}

std::string label(const GeneratorFunction& f, std::size_t dimension) {
  std::ostringstream out;
  out << f.name();
  for (const auto& [key, value] : f.params()) out << "(" << key << "=" << value << ")";
  out << " N=" << dimension;
  return out.str();
}

ProbVector perturbed(Rng& rng, const ProbVector& p, double size) {
  std::vector<double> coords(p.begin(), p.end());
  const std::vector<double> v = random_direction(rng, coords.size());
  double step = size;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (v[i] < 0.0) step = std::min(step, coords[i] / -v[i]);
  }
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = std::max(coords[i] + step * v[i], 0.0);
  return make_prob_vector(coords);
}

// Cubic Bezier through interior control points, with its exact velocity.
Curve bezier(Rng& rng, std::size_t dimension) {
  std::vector<ProbVector> c;
  for (int k = 0; k < 4; ++k) c.push_back(random_interior_point(rng, dimension));
  auto blend = [](double t) {
    const double s = 1.0 - t;
    return std::array<double, 4>{s * s * s, 3.0 * s * s * t, 3.0 * s * t * t, t * t * t};
  };
  auto point = [c, blend](double t) {
    const auto w = blend(t);
    std::vector<double> x(c[0].size(), 0.0);
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += w[k] * c[k][i];
    }
    return make_prob_vector(x);
  };
  auto velocity = [c](double t) {
    const double s = 1.0 - t;
    const double w[3] = {3.0 * s * s, 6.0 * s * t, 3.0 * t * t};
    std::vector<double> v(c[0].size(), 0.0);
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[k] * (c[k + 1][i] - c[k][i]);
    }
    return v;
  };
  return Curve(0.0, 1.0, point, Smoothness::C1, {}, velocity);
}

Curve random_polyline(Rng& rng, std::size_t dimension) {
  const std::size_t pieces = rng.between(2, 4);
  std::vector<double> times{0.0};
  std::vector<ProbVector> points{random_point(rng, dimension)};
  for (std::size_t k = 0; k < pieces; ++k) {
    times.push_back(times.back() + rng.uniform(0.2, 1.0));
    points.push_back(random_point(rng, dimension));
  }
  return polyline(std::move(times), std::move(points));
}

// ---------------------------------------------------------------------------

Tally quasimetric_axioms(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    Rng rng(stream(config, 1, g, 0));
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::size_t n = rng.between(1, kMaxDimension);
      const ProbVector p = random_any_point(rng, n);
      const ProbVector q = random_any_point(rng, n);
      const ProbVector w = random_any_point(rng, n);
      const double pq = quasi_dist(f, p, q);
      const double qw = quasi_dist(f, q, w);
      const double pw = quasi_dist(f, p, w);
      tally.record(1e-12, -pq, "negative distance for " + label(f, n));
      tally.record(1e-12, pw - pq - qw, "triangle inequality for " + label(f, n));
      // Nondegeneracy on exact and nearby copies.
      const ProbVector near = perturbed(rng, p, std::pow(10.0, -rng.uniform(6.0, 15.0)));
      for (const ProbVector* x : {&p, &near}) {
        const double d = quasi_dist(f, p, *x);
        if (d < 1e-12) tally.record(1e-9, chebyshev(p, *x), "nondegeneracy for " + label(f, n));
      }
    }
  }
  return tally;
}

Tally symmetrizations(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    Rng rng(stream(config, 2, g, 0));
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::size_t n = rng.between(1, kMaxDimension);
      const ProbVector p = random_any_point(rng, n);
      const ProbVector q = random_any_point(rng, n);
      const ProbVector w = random_any_point(rng, n);
      auto check = [&](const std::function<double(const ProbVector&, const ProbVector&)>& d,
                       const std::string& name) {
        tally.check(d(p, q) == d(q, p), "asymmetric " + name);
        tally.record(1e-12, d(p, w) - d(p, q) - d(q, w), "triangle inequality of " + name);
      };
      check([&](const ProbVector& a, const ProbVector& b) { return symmetrize_max(f, a, b); },
            "max");
      for (double r : {1.0, 2.0, 64.0}) {
        check([&](const ProbVector& a,
                  const ProbVector& b) { return symmetrize_power(f, a, b, r); },
              "power " + std::to_string(r));
      }
    }
  }
  return tally;
}

Tally ball_characterization(const VerifyConfig& config, std::size_t& ties) {
  Tally tally;
  const auto generators = builtin_generators();
  const double radii[] = {0.02, 0.1, 0.25, 0.5, 0.9};
  auto compare = [&](const GeneratorFunction& f, const ProbVector& p, const ProbVector& q,
                     double r) {
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const double dist = d == Direction::Forward ? quasi_dist(f, p, q) : quasi_dist(f, q, p);
      if (std::abs(dist - r) <= 1e-12) {
        ++ties;
        continue;
      }
      for (bool closed : {false, true}) {
        const BallSpec spec{.center = p, .radius = r, .direction = d, .closed = closed};
        tally.check(ball_contains(spec, f, q) == ball_contains_by_distance(spec, f, q),
                    "membership mismatch for " + label(f, p.dimension()));
      }
    }
  };
  const std::vector<ProbVector> grid = barycentric_grid(2, 60);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    Rng rng(stream(config, 3, g, 0));
    std::vector<ProbVector> centers = boundary_points(2);
    centers.push_back(make_prob_vector({2.0 / 9.0, 1.0 / 3.0, 4.0 / 9.0}));
    centers.push_back(uniform_point(2));
    for (int k = 0; k < 3; ++k) centers.push_back(random_point(rng, 2));
    for (const ProbVector& p : centers) {
      for (double r : radii) {
        for (const ProbVector& q : grid) compare(f, p, q, r);
      }
    }
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::size_t n = rng.between(3, kMaxDimension);
      compare(f, random_any_point(rng, n), random_any_point(rng, n), rng.uniform(1e-3, 1.0));
    }
  }
  return tally;
}

Tally bilipschitz(const VerifyConfig& config) {
  Tally tally;
  Rng rng(stream(config, 4, 0, 0));
  for (std::size_t k = 0; k < config.trials; ++k) {
    const std::size_t n = rng.between(1, kMaxDimension);
    const ChebyshevBounds b = chebyshev_bounds_check(random_any_point(rng, n),
                                                     random_any_point(rng, n));
    tally.record(1e-12, b.lower - b.value, "lower bound");
    tally.record(1e-12, b.value - b.upper, "upper bound");
  }
  for (std::size_t n = 1; n <= kMaxDimension; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      const ChebyshevBounds b = chebyshev_bounds_check(vertex(n, i), uniform_point(n));
      tally.record(1e-15, std::abs(b.value - b.lower), "saturation at N=" + std::to_string(n));
    }
  }
  return tally;
}

Tally geodesic_identity(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  const std::size_t per_cell = scaled(config, 100);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    for (std::size_t n = 1; n <= kMaxDimension; ++n) {
      Rng rng(stream(config, 5, g, n));
      for (std::size_t k = 0; k < per_cell; ++k) {
        const Geodesic geo = make_geodesic(f, random_point(rng, n), random_point(rng, n), 1e-12);
        tally.record(1e-8, is_f_geodesic(f, geo.as_curve(), 33, 1e-8).defect, label(f, n));
      }
    }
  }
  const GeneratorFunction id = identity_generator();
  for (std::size_t n = 1; n <= kMaxDimension; ++n) {
    Rng rng(stream(config, 5, 99, n));
    for (std::size_t k = 0; k < per_cell; ++k) {
      const ProbVector p = random_any_point(rng, n);
      const ProbVector q = random_any_point(rng, n);
      if (p == q) continue;
      const Geodesic geo = make_geodesic(id, p, q, 1e-12);
      tally.record(1e-8, is_f_geodesic(id, geo.as_curve(), 33, 1e-8).defect,
                   "boundary " + label(id, n));
    }
  }
  return tally;
}

Tally mu_contract(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  const std::size_t per_cell = scaled(config, 100);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    for (std::size_t n = 1; n <= kMaxDimension; ++n) {
      Rng rng(stream(config, 6, g, n));
      for (std::size_t k = 0; k < per_cell; ++k) {
        const Geodesic geo = make_geodesic(f, random_interior_point(rng, n),
                                           random_interior_point(rng, n), 1e-12);
        const std::string where = label(f, n);
        tally.record(1e-10, std::abs(geo.mu(0.0)), "mu(0) for " + where);
        tally.record(1e-10, std::abs(geo.mu(geo.r()) - 1.0), "mu(r) for " + where);
        double previous = geo.mu(0.0);
        for (int j = 1; j <= 32; ++j) {
          const double current = geo.mu(geo.r() * j / 32.0);
          tally.check(current > previous, "mu not increasing for " + where);
          previous = current;
        }
        for (int j = 1; j <= 5; ++j) {
          const MuDerivative d = mu_derivative(geo, geo.r() * j / 6.0);
          tally.record(1e-4, d.relative_error, "mu' for " + where);
        }
      }
    }
  }
  return tally;
}

Tally identity_oracle(const VerifyConfig& config) {
  Tally tally;
  const GeneratorFunction id = identity_generator();
  Rng rng(stream(config, 7, 0, 0));
  for (std::size_t k = 0; k < scaled(config, 100); ++k) {
    const std::size_t n = rng.between(1, kMaxDimension);
    const ProbVector p = random_point(rng, n);
    const ProbVector q = random_point(rng, n);
    const Geodesic geo = make_geodesic(id, p, q, 1e-12);
    for (int j = 0; j <= 32; ++j) {
      const double t = geo.r() * j / 32.0;
      tally.record(1e-10, std::abs(geo.mu(t) - t / geo.r()), "mu for " + label(id, n));
      const ProbVector x = geo.point(t);
      double dev = 0.0;
      for (std::size_t i = 0; i <= n; ++i) {
        dev = std::max(dev, std::abs(x[i] - (p[i] + (t / geo.r()) * (q[i] - p[i]))));
      }
      tally.record(1e-10, dev, "segment deviation for " + label(id, n));
    }
  }
  return tally;
}

Tally length_consistency(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  const std::size_t per_cell = scaled(config, 10);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    for (std::size_t n = 1; n <= kMaxDimension; ++n) {
      Rng rng(stream(config, 8, g, n));
      for (std::size_t k = 0; k < per_cell; ++k) {
        const ProbVector p = random_interior_point(rng, n);
        const ProbVector q = random_interior_point(rng, n);
        const Curve curve = make_geodesic(f, p, q, 1e-12).as_curve();
        const double d = quasi_dist(f, p, q);
        tally.record(1e-6, std::abs(forward_length(f, curve, 1e-8).value - d),
                     "L+ of geodesic for " + label(f, n));
        tally.record(1e-6, std::abs(finsler_length(f, curve) - d),
                     "L_F of geodesic for " + label(f, n));
      }
    }
  }
  Rng rng(stream(config, 8, 99, 0));
  for (std::size_t k = 0; k < 20; ++k) {
    const GeneratorFunction& f = generators[k % generators.size()];
    const std::size_t n = 1 + k % kMaxDimension;
    const Curve curve = bezier(rng, n);
    tally.record(1e-5, std::abs(finsler_length(f, curve) - forward_length(f, curve, 1e-8).value),
                 "L_F vs L+ of polynomial curve for " + label(f, n));
  }
  return tally;
}

Tally busemann_mayer(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  const double ts[] = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    Rng rng(stream(config, 9, g, 0));
    for (std::size_t k = 0; k < scaled(config, 100); ++k) {
      const std::size_t n = rng.between(1, kMaxDimension);
      const ProbVector p = random_interior_point(rng, n);
      const TangentVector v = tangent(p, random_direction(rng, n + 1));
      const double F = finsler_F(f, v).value;
      const std::vector<double> q = bm_derivative(f, v, ts);
      std::vector<double> dev(q.size());
      for (std::size_t j = 0; j < q.size(); ++j) dev[j] = std::abs(q[j] - F);
      tally.record(1e-4 * (1.0 + F), dev.back(), "chord quotient for " + label(f, n));
      for (std::size_t j = 1; j < dev.size(); ++j) {
        // Ten percent slack plus the cancellation floor of the difference quotient.
        tally.record(1.1 * dev[j - 1] + 16.0 * eps / ts[j], dev[j],
                     "deviation grows for " + label(f, n));
      }
    }
  }
  return tally;
}

Tally finsler_axioms(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    Rng rng(stream(config, 10, g, 0));
    for (std::size_t k = 0; k < scaled(config, 1000); ++k) {
      const std::size_t n = rng.between(1, kMaxDimension);
      const FinslerAxiomReport r =
          finsler_axioms_check(f, random_interior_point(rng, n), 1, splitmix64(k ^ g));
      tally.record(1e-12, r.worst_homogeneity, "homogeneity for " + label(f, n));
      tally.record(1e-12, r.worst_subadditivity, "subadditivity for " + label(f, n));
      tally.check(r.nondegeneracy_violations == 0, "nondegeneracy for " + label(f, n));
    }
  }
  return tally;
}

void monotone_grid(const GeneratorFunction& f, Tally& tally) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> sigma{0, 1, 2};
  do perms.push_back(sigma);
  while (std::ranges::next_permutation(sigma).found);
  const std::vector<ProbVector> grid = barycentric_grid(2, 6);
  std::vector<const ProbVector*> interior;
  for (const ProbVector& p : grid) {
    if (p.is_interior()) interior.push_back(&p);
  }
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = a; b < perms.size(); ++b) {
      for (int l = 0; l <= 8; ++l) {
        const double lambda = l / 8.0;
        Matrix m = Matrix::permutation(perms[a]);
        const Matrix other = Matrix::permutation(perms[b]);
        for (std::size_t i = 0; i < 3; ++i) {
          for (std::size_t j = 0; j < 3; ++j) m(i, j) = lambda * m(i, j) + (1 - lambda) * other(i, j);
        }
        const BistochasticMatrix s(m);
        for (const ProbVector& p : grid) {
          for (const ProbVector& q : grid) {
            tally.record(1e-12, -check_dist_monotone(f, s, p, q).margin(), "grid D " + f.name());
          }
        }
        for (const ProbVector* p : interior) {
          for (const ProbVector& q : grid) {
            if (q == *p) continue;
            std::vector<double> v(3);
            for (std::size_t i = 0; i < 3; ++i) v[i] = q[i] - (*p)[i];
            tally.record(1e-12, -check_finsler_monotone(f, s, tangent(*p, v)).margin(),
                         "grid F " + f.name());
          }
        }
      }
    }
  }
}

Tally bistochastic_monotonicity(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const GeneratorFunction& f = generators[g];
    const MonotoneProbe probe =
        monotonicity_probe(f, config.trials, 0, 0, stream(config, 11, g, 0), false);
    tally.trials += probe.trials - 1;
    tally.record(1e-12, -probe.worst_margin,
                 std::to_string(probe.violations) + " random violations for " + f.name());
    monotone_grid(f, tally);
  }
  return tally;
}

Tally counterexample() {
  Tally tally;
  const CounterexampleReport r = stochastic_counterexample();
  tally.check(r.dist == 0.5, "D_id(P,Q) != 0.5");
  tally.check(r.image_dist == 1.0, "D_id(SP,SQ) != 1");
  tally.check(r.stochastic, "S not stochastic");
  tally.check(!r.bistochastic, "S bistochastic");
  tally.check(r.sp == make_prob_vector({1.0, 0.0, 0.0}), "SP != (1,0,0)");
  tally.check(r.sq == make_prob_vector({0.0, 1.0, 0.0}), "SQ != (0,1,0)");
  tally.check(r.violated, "no violation");
  return tally;
}

Tally birkhoff_roundtrip(const VerifyConfig& config) {
  Tally tally;
  Rng rng(stream(config, 13, 0, 0));
  for (std::size_t k = 0; k < scaled(config, 100); ++k) {
    const std::size_t n = 2 + k % 11;
    const std::size_t perms = rng.between(1, n * n);
    const BistochasticMatrix s = random_bistochastic(n, perms, rng.index(1u << 30));
    const BirkhoffDecomposition d = birkhoff_decompose(s);
    tally.record(1e-9, d.reconstruct().max_abs_difference(s.entries()),
                 "reconstruction n=" + std::to_string(n));
    const double bound = static_cast<double>((n - 1) * (n - 1) + 1);
    tally.record(bound, static_cast<double>(d.weights.size()), "length n=" + std::to_string(n));
    const double total = std::accumulate(d.weights.begin(), d.weights.end(), 0.0);
    tally.record(1e-12, std::abs(total - 1.0), "weights sum n=" + std::to_string(n));
  }
  return tally;
}

Tally curve_calculus(const VerifyConfig& config) {
  Tally tally;
  const auto generators = builtin_generators();
  constexpr double tol = 1e-7;
  constexpr double inner = tol / 4.0;
  Rng rng(stream(config, 14, 0, 0));
  for (std::size_t k = 0; k < 20; ++k) {
    const GeneratorFunction& f = generators[k % generators.size()];
    const std::size_t n = 1 + (k / 2) % kMaxDimension;
    const Curve curve = k % 3 == 0   ? bezier(rng, n)
                        : k % 3 == 1 ? random_polyline(rng, n)
                                     : make_geodesic(f, random_interior_point(rng, n),
                                                     random_interior_point(rng, n))
                                           .as_curve();
    const std::string where = label(f, n) + " curve " + std::to_string(k);
    const double plus = forward_length(f, curve, inner).value;
    const double minus = backward_length(f, curve, inner).value;

    const double cut = curve.a() + rng.uniform(0.2, 0.8) * curve.width();
    const Curve first = restrict(curve, curve.a(), cut);
    const Curve second = restrict(curve, cut, curve.b());
    const Curve joined = concat(first, second);
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const double whole = curve_length(f, joined, inner, d).value;
      const double parts =
          curve_length(f, first, inner, d).value + curve_length(f, second, inner, d).value;
      tally.record(2 * tol, std::abs(whole - parts), "additivity for " + where);
    }

    const double a = curve.a();
    const double w = curve.width();
    const Curve slow = reparametrize(
        curve, [a, w](double s) { return a + w * 0.5 * (s * s + s); }, 0.0, 1.0,
        [w](double s) { return w * (s + 0.5); });
    tally.record(tol, std::abs(forward_length(f, slow, inner).value - plus),
                 "increasing reparametrization L+ for " + where);
    tally.record(tol, std::abs(backward_length(f, slow, inner).value - minus),
                 "increasing reparametrization L- for " + where);
    const Curve back = reverse(curve);
    tally.record(tol, std::abs(forward_length(f, back, inner).value - minus),
                 "reversal L+ for " + where);
    tally.record(tol, std::abs(backward_length(f, back, inner).value - plus),
                 "reversal L- for " + where);

    double previous = 0.0;
    for (int j = 1; j <= 8; ++j) {
      const double value = length_profile(f, curve, curve.a() + w * j / 8.0, inner);
      tally.record(1e-12, previous - value, "profile decreases for " + where);
      previous = value;
    }
  }
  return tally;
}

Tally nonuniqueness(const VerifyConfig& config) {
  Tally tally;
  const GeneratorFunction id = identity_generator();
  Rng rng(stream(config, 15, 0, 0));
  for (std::size_t k = 0; k < scaled(config, 100); ++k) {
    const std::size_t n = rng.between(1, kMaxDimension);
    const ProbVector p = random_interior_point(rng, n);
    const ProbVector target = vertex(n, 0);
    // Intermediate point with every non-leading coordinate strictly smaller.
    std::vector<double> m(n + 1);
    double rest = 0.0;
    for (std::size_t i = 1; i <= n; ++i) rest += (m[i] = p[i] * rng.uniform(0.1, 0.9));
    m[0] = 1.0 - rest;
    const ProbVector mid = make_prob_vector(m);
    const Curve straight = segment(p, target);
    const Curve bent = polyline({0.0, 0.5, 1.0}, {p, mid, target});
    const double d = quasi_dist(id, p, target);
    const std::string where = label(id, n);
    for (const Curve* c : {&straight, &bent}) {
      tally.check(is_f_pregeodesic(id, *c, 1e-6), "not a pregeodesic for " + where);
      tally.record(1e-6, std::abs(forward_length(id, *c, 1e-9).value - d), "L+ for " + where);
    }
    tally.check(chebyshev(straight(0.5), bent(0.5)) > 1e-6, "curves coincide for " + where);
  }
  return tally;
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "quasimetric axioms";
    case 2: return "symmetrizations are metrics";
    case 3: return "ball characterization";
    case 4: return "bi-Lipschitz bounds for the identity";
    case 5: return "geodesic identity";
    case 6: return "mu contract";
    case 7: return "identity closed form";
    case 8: return "length consistency";
    case 9: return "Busemann-Mayer derivative";
    case 10: return "Finsler axioms";
    case 11: return "bistochastic monotonicity";
    case 12: return "stochastic counterexample";
    case 13: return "Birkhoff round trip";
    case 14: return "curve calculus";
    case 15: return "non-uniqueness witness";
    default: return "";
  }
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyConfig& config) {
  if (id < 1 || id > kCriterionCount) {
    fail(ErrorCode::InvalidInput, "no acceptance criterion " + std::to_string(id));
  }
  if (config.trials == 0) fail(ErrorCode::InvalidInput, "trial count must be at least 1");
  const auto begin = std::chrono::steady_clock::now();
  Tally tally;
  std::size_t ties = 0;
  CriterionResult out;
  out.id = id;
  out.name = criterion_name(id);
  try {
    switch (id) {
      case 1: tally = quasimetric_axioms(config); break;
      case 2: tally = symmetrizations(config); break;
      case 3: tally = ball_characterization(config, ties); break;
      case 4: tally = bilipschitz(config); break;
      case 5: tally = geodesic_identity(config); break;
      case 6: tally = mu_contract(config); break;
      case 7: tally = identity_oracle(config); break;
      case 8: tally = length_consistency(config); break;
      case 9: tally = busemann_mayer(config); break;
      case 10: tally = finsler_axioms(config); break;
      case 11: tally = bistochastic_monotonicity(config); break;
      case 12: tally = counterexample(); break;
      case 13: tally = birkhoff_roundtrip(config); break;
      case 14: tally = curve_calculus(config); break;
      case 15: tally = nonuniqueness(config); break;
    }
    out.passed = tally.failures == 0;
    out.detail = tally.first_failure;
    if (ties > 0) {
      out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(ties) + " ties skipped";
    }
  } catch (const Error& e) {
    out.passed = false;
    out.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  out.trials = tally.trials;
  out.worst_margin = tally.trials == 0 ? 0.0 : tally.worst_margin;
  out.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  return out;
}

std::vector<CriterionResult> run_acceptance(const VerifyConfig& config) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, config));
  return out;
}

MonotoneProbe monotonicity_probe(const GeneratorFunction& f, std::size_t trials, std::size_t size,
                                 std::size_t permutations, std::uint64_t seed, bool force) {
  if (trials == 0) fail(ErrorCode::InvalidInput, "trial count must be at least 1");
  if (size == 1) fail(ErrorCode::InvalidInput, "matrix size must be at least 2");
  MonotoneProbe probe;
  probe.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < trials; ++k) {
    Rng rng = Rng::derive(seed, k);
    const std::size_t n = size == 0 ? rng.between(2, kMaxDimension + 1) : size;
    const std::size_t perms = permutations == 0 ? rng.between(1, 2 * n) : permutations;
    const BistochasticMatrix s = random_bistochastic(n, perms, splitmix64(seed + k));
    const MonotoneCheck dist = check_dist_monotone(f, s, random_any_point(rng, n - 1),
                                                   random_any_point(rng, n - 1), force);
    const ProbVector base = random_interior_point(rng, n - 1, rng.uniform(1e-3, 1.0));
    std::vector<double> v = random_direction(rng, n);
    const double scale = std::exp(rng.uniform(-4.0, 1.0));
    for (double& x : v) x *= scale;
    const MonotoneCheck fin = check_finsler_monotone(f, s, tangent(base, v), force);
    probe.trials += 2;
    probe.violations += static_cast<std::size_t>(!dist.holds) + static_cast<std::size_t>(!fin.holds);
    probe.worst_margin = std::min({probe.worst_margin, dist.margin(), fin.margin()});
  }
  return probe;
}

}  // namespace qsx
