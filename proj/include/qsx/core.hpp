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
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsx {

/// Tolerance on |sum - 1| accepted (and absorbed by renormalization) when
/// building a simplex point.
inline constexpr double kSumTolerance = 1e-9;

/// Coordinates in [-kNegativeSlack, 0) are snapped to zero at construction.
inline constexpr double kNegativeSlack = 1e-12;

/// Tolerance on |sum| accepted for tangent vector components.
inline constexpr double kTangentTolerance = 1e-9;

/// A point of the probability simplex: N+1 nonnegative coordinates summing to one.
///
/// Instances are only created through make_prob_vector(), so every ProbVector in
/// circulation satisfies the simplex invariants.
class ProbVector {
 public:
  std::size_t size() const noexcept { return coords_.size(); }
  /// Simplex dimension N (the point lives in R^{N+1}).
  std::size_t dimension() const noexcept { return coords_.size() - 1; }

  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  /// True when every coordinate lies in (margin, 1 - margin).
  bool is_interior(double margin = 0.0) const noexcept;

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  explicit ProbVector(std::vector<double> coords) : coords_(std::move(coords)) {}
  friend ProbVector make_prob_vector(std::span<const double> values);

  std::vector<double> coords_;
};

/// Validates and renormalizes `values` into a simplex point.
/// Throws NegativeCoordinate, SumNotOne or InvalidInput.
ProbVector make_prob_vector(std::span<const double> values);
ProbVector make_prob_vector(std::initializer_list<double> values);

/// Barycenter (1/(N+1), ..., 1/(N+1)) of the N-simplex.
ProbVector uniform_point(std::size_t dimension);
/// The i-th vertex e_i of the N-simplex.
ProbVector vertex(std::size_t dimension, std::size_t i);

/// A velocity at a simplex point; components sum to zero.
class TangentVector {
 public:
  const ProbVector& base() const noexcept { return base_; }
  std::span<const double> components() const noexcept { return components_; }
  double operator[](std::size_t i) const { return components_[i]; }
  std::size_t size() const noexcept { return components_.size(); }

  TangentVector scaled(double lambda) const;
  /// Sum of two tangents at the same base; throws BaseMismatch otherwise.
  TangentVector plus(const TangentVector& other) const;
  bool is_zero() const noexcept;

 private:
  TangentVector(ProbVector base, std::vector<double> components)
      : base_(std::move(base)), components_(std::move(components)) {}
  friend TangentVector tangent(const ProbVector& base, std::span<const double> components);

  ProbVector base_;
  std::vector<double> components_;
};

/// Throws DimensionMismatch or NotTangent (|sum| > kTangentTolerance).
TangentVector tangent(const ProbVector& base, std::span<const double> components);
TangentVector tangent(const ProbVector& base, std::initializer_list<double> components);

struct GeneratorFlags {
  bool is_c1 = false;
  bool derivative_positive = false;
  bool reciprocal_derivative_concave = false;
};

/// A normalized continuous increasing bijection f: [0,1] -> [0,1].
///
/// Arguments outside [0,1] are clamped for both f and its inverse, which extends
/// f^{-1} monotonically to the whole real line.
class GeneratorFunction {
 public:
  using Map = std::function<double(double)>;

  GeneratorFunction(std::string name, std::map<std::string, double> params, Map value,
                    Map inverse, Map derivative, GeneratorFlags flags);

  double operator()(double x) const;
  double inverse(double y) const;
  /// f'(x) on (0,1); throws NotC1 when the generator carries no derivative.
  double derivative(double x) const;
  bool has_derivative() const noexcept { return static_cast<bool>(derivative_); }

  const std::string& name() const noexcept { return name_; }
  const std::map<std::string, double>& params() const noexcept { return params_; }
  const GeneratorFlags& flags() const noexcept { return flags_; }

  /// is_c1, derivative present and f' > 0 on (0,1).
  bool finsler_capable() const noexcept {
    return flags_.is_c1 && flags_.derivative_positive && has_derivative();
  }
  /// Hypotheses of the bistochastic monotonicity theorem.
  bool monotonicity_capable() const noexcept {
    return finsler_capable() && flags_.reciprocal_derivative_concave;
  }

 private:
  std::string name_;
  std::map<std::string, double> params_;
  Map value_;
  Map inverse_;
  Map derivative_;
  GeneratorFlags flags_;
};

GeneratorFunction identity_generator();
/// x^alpha, alpha > 0.
GeneratorFunction power_generator(double alpha);
/// ln(1 + a x) / ln(1 + a), a > -1 and a != 0.
GeneratorFunction log_generator(double a);
/// (2/pi) arcsin x.
GeneratorFunction arcsin_generator();

/// Built-in generator by name: identity, power (param "alpha"), log (param "a"), arcsin.
/// Throws UnknownGenerator or InvalidParameter.
GeneratorFunction generator(std::string_view name, const std::map<std::string, double>& params = {});

/// User-defined generator. When `inverse` is empty a bisection inverse (tolerance
/// 1e-14) is used. Flags must be declared by the caller.
GeneratorFunction custom_generator(std::string name, GeneratorFunction::Map value,
                                   GeneratorFlags flags, GeneratorFunction::Map derivative = {},
                                   GeneratorFunction::Map inverse = {});

/// The generators every sweep in this library runs over.
std::vector<GeneratorFunction> builtin_generators();

/// Numerical audit of the generator invariants on a uniform grid of [0,1].
struct GeneratorAudit {
  bool endpoints_exact = false;
  bool strictly_increasing = false;
  double worst_inverse_error = 0.0;
  /// Worst relative error between f' and a central difference; 0 without derivative.
  double worst_derivative_error = 0.0;
  bool derivative_positive = true;

  bool ok() const noexcept {
    return endpoints_exact && strictly_increasing && worst_inverse_error <= 1e-12 &&
           worst_derivative_error <= 1e-6 && derivative_positive;
  }
};

GeneratorAudit audit_generator(const GeneratorFunction& f, std::size_t grid = 1000);

/// Chebyshev distance max_i |q_i - p_i|. Throws DimensionMismatch.
double chebyshev(const ProbVector& p, const ProbVector& q);
/// Euclidean distance in R^{N+1}. Throws DimensionMismatch.
double euclidean(const ProbVector& p, const ProbVector& q);

void require_same_dimension(const ProbVector& p, const ProbVector& q);

}  // namespace qsx
