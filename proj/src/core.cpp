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

#include "qsx/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qsx/error.hpp"

namespace qsx {

namespace {

std::string describe(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

GeneratorFunction::Map bisection_inverse(GeneratorFunction::Map value) {
  return [value = std::move(value)](double y) {
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-14) {
      const double mid = 0.5 * (lo + hi);
      if (value(mid) < y) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
}

}  // namespace

bool ProbVector::is_interior(double margin) const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [margin](double x) { return x > margin && x < 1.0 - margin; });
}

ProbVector make_prob_vector(std::span<const double> values) {
  if (values.size() < 2) {
    fail(ErrorCode::InvalidInput, "a simplex point needs at least 2 coordinates");
  }
  std::vector<double> coords(values.begin(), values.end());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    double& x = coords[i];
    if (!std::isfinite(x)) {
      fail(ErrorCode::InvalidInput, "coordinate " + std::to_string(i) + " is not finite");
    }
    if (x < 0.0) {
      if (x < -kNegativeSlack) {
        fail(ErrorCode::NegativeCoordinate,
             "coordinate " + std::to_string(i) + " is negative: " + describe(x));
      }
      x = 0.0;
    }
  }
  const double sum = std::accumulate(coords.begin(), coords.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    fail(ErrorCode::SumNotOne, "coordinates sum to " + describe(sum));
  }
  if (sum != 1.0) {
    for (double& x : coords) x = std::min(x / sum, 1.0);
  }
  return ProbVector(std::move(coords));
}

ProbVector make_prob_vector(std::initializer_list<double> values) {
  return make_prob_vector(std::span<const double>(values.begin(), values.size()));
}

ProbVector uniform_point(std::size_t dimension) {
  std::vector<double> coords(dimension + 1, 1.0 / static_cast<double>(dimension + 1));
  return make_prob_vector(coords);
}

ProbVector vertex(std::size_t dimension, std::size_t i) {
  if (i > dimension) fail(ErrorCode::InvalidInput, "vertex index out of range");
  std::vector<double> coords(dimension + 1, 0.0);
  coords[i] = 1.0;
  return make_prob_vector(coords);
}

TangentVector tangent(const ProbVector& base, std::span<const double> components) {
  if (components.size() != base.size()) {
    fail(ErrorCode::DimensionMismatch, "tangent has " + std::to_string(components.size()) +
                                           " components, base has " + std::to_string(base.size()));
  }
  double sum = 0.0;
  for (double v : components) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidInput, "tangent component is not finite");
    sum += v;
  }
  if (std::abs(sum) > kTangentTolerance) {
    fail(ErrorCode::NotTangent, "tangent components sum to " + describe(sum));
  }
  return TangentVector(base, std::vector<double>(components.begin(), components.end()));
}

TangentVector tangent(const ProbVector& base, std::initializer_list<double> components) {
  return tangent(base, std::span<const double>(components.begin(), components.size()));
}

TangentVector TangentVector::scaled(double lambda) const {
  std::vector<double> out(components_);
  for (double& v : out) v *= lambda;
  return TangentVector(base_, std::move(out));
}

TangentVector TangentVector::plus(const TangentVector& other) const {
  if (!(other.base_ == base_)) fail(ErrorCode::BaseMismatch, "tangents live at different bases");
  std::vector<double> out(components_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.components_[i];
  return TangentVector(base_, std::move(out));
}

bool TangentVector::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](double v) { return v == 0.0; });
}

GeneratorFunction::GeneratorFunction(std::string name, std::map<std::string, double> params,
                                     Map value, Map inverse, Map derivative,
                                     GeneratorFlags flags)
    : name_(std::move(name)),
      params_(std::move(params)),
      value_(std::move(value)),
      inverse_(std::move(inverse)),
      derivative_(std::move(derivative)),
      flags_(flags) {
  if (!value_) fail(ErrorCode::InvalidInput, "generator needs a value evaluator");
  if (!inverse_) inverse_ = bisection_inverse(value_);
}

double GeneratorFunction::operator()(double x) const {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return value_(x);
}

double GeneratorFunction::inverse(double y) const {
  if (y <= 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  return clamp_unit(inverse_(y));
}

double GeneratorFunction::derivative(double x) const {
  if (!derivative_) fail(ErrorCode::NotC1, "generator '" + name_ + "' has no derivative");
  return derivative_(x);
}

GeneratorFunction identity_generator() {
  auto id = [](double x) { return x; };
  return GeneratorFunction("identity", {}, id, id, [](double) { return 1.0; },
                           {.is_c1 = true, .derivative_positive = true,
                            .reciprocal_derivative_concave = true});
}

GeneratorFunction power_generator(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    fail(ErrorCode::InvalidParameter, "power generator needs alpha > 0, got " + describe(alpha));
  }
  return GeneratorFunction(
      "power", {{"alpha", alpha}}, [alpha](double x) { return std::pow(x, alpha); },
      [alpha](double y) { return std::pow(y, 1.0 / alpha); },
      [alpha](double x) { return alpha * std::pow(x, alpha - 1.0); },
      // 1/f' = x^{1-alpha}/alpha is concave exactly when alpha <= 1.
      {.is_c1 = true, .derivative_positive = true, .reciprocal_derivative_concave = alpha <= 1.0});
}

GeneratorFunction log_generator(double a) {
  if (!(a > -1.0) || a == 0.0 || !std::isfinite(a)) {
    fail(ErrorCode::InvalidParameter, "log generator needs a > -1 and a != 0, got " + describe(a));
  }
  const double scale = std::log1p(a);
  return GeneratorFunction(
      "log", {{"a", a}}, [a, scale](double x) { return std::log1p(a * x) / scale; },
      [a, scale](double y) { return std::expm1(y * scale) / a; },
      [a, scale](double x) { return a / ((1.0 + a * x) * scale); },
      // 1/f' is affine in x and positive for every admissible a.
      {.is_c1 = true, .derivative_positive = true, .reciprocal_derivative_concave = true});
}

GeneratorFunction arcsin_generator() {
  constexpr double two_over_pi = 2.0 / std::numbers::pi;
  return GeneratorFunction(
      "arcsin", {}, [](double x) { return two_over_pi * std::asin(x); },
      [](double y) { return std::sin(0.5 * std::numbers::pi * y); },
      [](double x) { return two_over_pi / std::sqrt((1.0 - x) * (1.0 + x)); },
      {.is_c1 = true, .derivative_positive = true, .reciprocal_derivative_concave = true});
}

GeneratorFunction generator(std::string_view name, const std::map<std::string, double>& params) {
  auto param = [&](const char* key) {
    const auto it = params.find(key);
    if (it == params.end()) {
      fail(ErrorCode::InvalidParameter,
           "generator '" + std::string(name) + "' requires parameter '" + key + "'");
    }
    return it->second;
  };
  if (name == "identity" || name == "id") return identity_generator();
  if (name == "power") return power_generator(param("alpha"));
  if (name == "log") return log_generator(param("a"));
  if (name == "arcsin") return arcsin_generator();
  fail(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
}

GeneratorFunction custom_generator(std::string name, GeneratorFunction::Map value,
                                   GeneratorFlags flags, GeneratorFunction::Map derivative,
                                   GeneratorFunction::Map inverse) {
  if (flags.is_c1 && !derivative) {
    fail(ErrorCode::InvalidInput, "a generator flagged C1 must supply its derivative");
  }
  return GeneratorFunction(std::move(name), {}, std::move(value), std::move(inverse),
                           std::move(derivative), flags);
}

std::vector<GeneratorFunction> builtin_generators() {
  return {identity_generator(), power_generator(0.5), power_generator(1.0 / 3.0),
          log_generator(1.0), arcsin_generator()};
}

GeneratorAudit audit_generator(const GeneratorFunction& f, std::size_t grid) {
  GeneratorAudit audit;
  audit.endpoints_exact = f(0.0) == 0.0 && f(1.0) == 1.0;
  audit.strictly_increasing = true;
  double previous = f(0.0);
  const double n = static_cast<double>(grid);
  for (std::size_t k = 0; k <= grid; ++k) {
    const double x = static_cast<double>(k) / n;
    const double fx = f(x);
    if (k > 0 && !(fx > previous)) audit.strictly_increasing = false;
    previous = fx;
    audit.worst_inverse_error = std::max(audit.worst_inverse_error, std::abs(f.inverse(fx) - x));
    if (k == 0 || k == grid || !f.has_derivative()) continue;
    const double d = f.derivative(x);
    if (!(d > 0.0)) audit.derivative_positive = false;
    const double h = 1e-5 * std::min(x, 1.0 - x);
    const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
    audit.worst_derivative_error =
        std::max(audit.worst_derivative_error, std::abs(fd - d) / std::abs(d));
  }
  return audit;
}

void require_same_dimension(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) {
    fail(ErrorCode::DimensionMismatch, "points have " + std::to_string(p.size()) + " and " +
                                           std::to_string(q.size()) + " coordinates");
  }
}

double chebyshev(const ProbVector& p, const ProbVector& q) {
  require_same_dimension(p, q);
  double out = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) out = std::max(out, std::abs(q[i] - p[i]));
  return out;
}

double euclidean(const ProbVector& p, const ProbVector& q) {
  require_same_dimension(p, q);
  double out = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) out += (q[i] - p[i]) * (q[i] - p[i]);
  return std::sqrt(out);
}

}  // namespace qsx
