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

#include "qsx/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qsx/error.hpp"
#include "qsx/finsler.hpp"
#include "qsx/quasimetric.hpp"
#include "qsx/sampling.hpp"

namespace qsx {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::permutation(std::span<const std::size_t> sigma) {
  Matrix m(sigma.size(), sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (sigma[j] >= sigma.size()) fail(ErrorCode::InvalidInput, "permutation index out of range");
    m(sigma[j], j) = 1.0;
  }
  return m;
}

std::vector<double> Matrix::row_sums() const {
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j);
  }
  return out;
}

std::vector<double> Matrix::column_sums() const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] += (*this)(i, j);
  }
  return out;
}

std::vector<double> Matrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) {
    fail(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(cols_) +
                                           " columns, vector has " + std::to_string(x.size()) +
                                           " entries");
  }
  std::vector<double> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

double Matrix::max_abs_difference(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  }
  return worst;
}

namespace {

bool unit_sums(const std::vector<double>& sums, double tol) {
  return std::ranges::all_of(sums, [tol](double s) { return std::abs(s - 1.0) <= tol; });
}

bool nonnegative(const Matrix& s) {
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (!(s(i, j) >= 0.0)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_stochastic(const Matrix& s, double tol) {
  return s.rows() > 0 && s.cols() > 0 && nonnegative(s) && unit_sums(s.column_sums(), tol);
}

bool is_bistochastic(const Matrix& s, double tol) {
  return s.rows() == s.cols() && is_stochastic(s, tol) && unit_sums(s.row_sums(), tol);
}

StochasticMatrix::StochasticMatrix(Matrix entries, double tol)
    : StochasticMatrix(std::move(entries), tol, false) {}

StochasticMatrix::StochasticMatrix(Matrix entries, double tol, bool square_rows)
    : entries_(std::move(entries)) {
  if (square_rows) {
    if (!is_bistochastic(entries_, tol)) {
      fail(ErrorCode::NotBistochastic, "matrix is not square with unit row and column sums");
    }
  } else if (!is_stochastic(entries_, tol)) {
    fail(ErrorCode::NotStochastic, "matrix is not nonnegative with unit column sums");
  }
}

BistochasticMatrix::BistochasticMatrix(Matrix entries, double tol)
    : StochasticMatrix(std::move(entries), tol, true) {}

ProbVector apply(const StochasticMatrix& s, const ProbVector& p) {
  return make_prob_vector(s.entries().multiply(p.coords()));
}

TangentVector apply(const StochasticMatrix& s, const TangentVector& v) {
  std::vector<double> image = s.entries().multiply(v.components());
  // Column sums are 1 only up to tolerance; restore the zero-sum constraint.
  const double drift = std::accumulate(image.begin(), image.end(), 0.0) /
                       static_cast<double>(image.size());
  for (double& x : image) x -= drift;
  return tangent(apply(s, v.base()), image);
}

BistochasticMatrix random_bistochastic(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 2 || k < 1) fail(ErrorCode::InvalidInput, "random_bistochastic needs n >= 2 and k >= 1");
  Rng rng(seed);
  std::vector<double> lambda{1.0};
  if (k > 1) {
    const ProbVector weights = random_point(rng, k - 1);
    lambda.assign(weights.begin(), weights.end());
  }
  Matrix m(n, n);
  for (std::size_t j = 0; j < k; ++j) {
    const std::vector<std::size_t> sigma = rng.permutation(n);
    for (std::size_t c = 0; c < n; ++c) m(sigma[c], c) += lambda[j];
  }
  return BistochasticMatrix(std::move(m), 1e-12);
}

Matrix BirkhoffDecomposition::reconstruct() const {
  if (permutations.empty()) return {};
  Matrix m(permutations.front().size(), permutations.front().size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    for (std::size_t c = 0; c < permutations[k].size(); ++c) {
      m(permutations[k][c], c) += weights[k];
    }
  }
  return m;
}

namespace {

// Kuhn's augmenting-path matching of columns to rows on the support of `m`.
class SupportMatching {
 public:
  SupportMatching(const Matrix& m, double tol) : m_(m), tol_(tol) {}

  // row_of[c] for a perfect matching, or empty when none exists.
  std::vector<std::size_t> run() {
    const std::size_t n = m_.rows();
    col_of_row_.assign(n, kNone);
    for (std::size_t c = 0; c < n; ++c) {
      seen_.assign(n, false);
      if (!augment(c)) return {};
    }
    std::vector<std::size_t> row_of(n);
    for (std::size_t r = 0; r < n; ++r) row_of[col_of_row_[r]] = r;
    return row_of;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool augment(std::size_t c) {
    for (std::size_t r = 0; r < m_.rows(); ++r) {
      if (m_(r, c) <= tol_ || seen_[r]) continue;
      seen_[r] = true;
      if (col_of_row_[r] == kNone || augment(col_of_row_[r])) {
        col_of_row_[r] = c;
        return true;
      }
    }
    return false;
  }

  const Matrix& m_;
  double tol_;
  std::vector<std::size_t> col_of_row_;
  std::vector<bool> seen_;
};

}  // namespace

BirkhoffDecomposition birkhoff_decompose(const BistochasticMatrix& s, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidInput, "support threshold must be positive");
  const std::size_t n = s.size();
  Matrix residual = s.entries();
  BirkhoffDecomposition out;
  double remaining = 1.0;
  const std::size_t max_rounds = n * n + 1;
  while (remaining > static_cast<double>(n) * tol) {
    if (out.weights.size() >= max_rounds) {
      fail(ErrorCode::NoPerfectMatching, "peeling did not terminate within n^2 + 1 rounds");
    }
    const std::vector<std::size_t> row_of = SupportMatching(residual, tol).run();
    if (row_of.empty()) {
      // Leftover roundoff mass whose support no longer carries a matching.
      if (remaining <= 1e-10) break;
      fail(ErrorCode::NoPerfectMatching,
           "support has no perfect matching with " + std::to_string(remaining) + " mass left");
    }
    std::size_t argmin = 0;
    for (std::size_t c = 1; c < n; ++c) {
      if (residual(row_of[c], c) < residual(row_of[argmin], argmin)) argmin = c;
    }
    const double lambda = residual(row_of[argmin], argmin);
    for (std::size_t c = 0; c < n; ++c) residual(row_of[c], c) -= lambda;
    residual(row_of[argmin], argmin) = 0.0;
    out.weights.push_back(lambda);
    out.permutations.push_back(row_of);
    remaining -= lambda;
  }
  const double total = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  for (double& w : out.weights) w /= total;
  return out;
}

namespace {

void require_theorem_hypotheses(const GeneratorFunction& f, bool force) {
  if (force || f.monotonicity_capable()) return;
  fail(ErrorCode::FlagMissing, "generator '" + f.name() +
                                   "' lacks the C1 / positive derivative / concave 1/f' flags");
}

constexpr double kMonotoneSlack = 1e-12;

}  // namespace

MonotoneCheck check_finsler_monotone(const GeneratorFunction& f, const BistochasticMatrix& s,
                                     const TangentVector& v, bool force) {
  require_theorem_hypotheses(f, force);
  MonotoneCheck out;
  out.source = finsler_F(f, v).value;
  out.image = finsler_F(f, apply(s, v)).value;
  out.holds = out.image <= out.source + kMonotoneSlack;
  return out;
}

MonotoneCheck check_dist_monotone(const GeneratorFunction& f, const BistochasticMatrix& s,
                                  const ProbVector& p, const ProbVector& q, bool force) {
  require_theorem_hypotheses(f, force);
  MonotoneCheck out;
  out.source = quasi_dist(f, p, q);
  out.image = quasi_dist(f, apply(s, p), apply(s, q));
  out.holds = out.image <= out.source + kMonotoneSlack;
  return out;
}

CounterexampleReport stochastic_counterexample() {
  Matrix s{{1.0, 0.0, 0.0}, {0.0, 1.0, 1.0}, {0.0, 0.0, 0.0}};
  const ProbVector p = make_prob_vector({1.0, 0.0, 0.0});
  const ProbVector q = make_prob_vector({0.0, 0.5, 0.5});
  const StochasticMatrix map(s);
  const GeneratorFunction id = identity_generator();
  CounterexampleReport report{.s = s,
                              .p = p,
                              .q = q,
                              .sp = apply(map, p),
                              .sq = apply(map, q),
                              .stochastic = is_stochastic(s),
                              .bistochastic = is_bistochastic(s)};
  report.dist = quasi_dist(id, p, q);
  report.image_dist = quasi_dist(id, report.sp, report.sq);
  report.violated = report.image_dist > report.dist;
  return report;
}

bool max_mean_inequality_check(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || a.size() != b.size()) {
    fail(ErrorCode::InvalidInput, "sequences must be nonempty and of equal length");
  }
  double sum_a = 0.0;
  double sum_b = 0.0;
  double best = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!(a[j] >= 0.0) || !(b[j] > 0.0)) {
      fail(ErrorCode::InvalidInput, "need a_j >= 0 and b_j > 0");
    }
    sum_a += a[j];
    sum_b += b[j];
    best = std::max(best, a[j] / b[j]);
  }
  return sum_a / sum_b <= best + 1e-12;
}

}  // namespace qsx
