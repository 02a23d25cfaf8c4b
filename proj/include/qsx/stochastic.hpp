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
#include <span>
#include <vector>

#include "qsx/core.hpp"

namespace qsx {

// Matrices act on column vectors by left multiplication, (SP)_i = sum_j S_ij p_j.
// A stochastic matrix therefore has unit *column* sums; many libraries use the
// transposed (row) convention.

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  /// Permutation matrix with entry 1 at (sigma[j], j), so (Pi x)_{sigma[j]} = x_j.
  static Matrix permutation(std::span<const std::size_t> sigma);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;
  std::vector<double> multiply(std::span<const double> x) const;
  double max_abs_difference(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

bool is_stochastic(const Matrix& s, double tol = 1e-12);
bool is_bistochastic(const Matrix& s, double tol = 1e-12);

/// Nonnegative matrix with unit column sums. Throws NotStochastic.
class StochasticMatrix {
 public:
  explicit StochasticMatrix(Matrix entries, double tol = 1e-12);
  const Matrix& entries() const noexcept { return entries_; }

 protected:
  StochasticMatrix(Matrix entries, double tol, bool square_rows);

 private:
  Matrix entries_;
};

/// Square stochastic matrix whose rows also sum to one. Throws NotBistochastic.
class BistochasticMatrix : public StochasticMatrix {
 public:
  explicit BistochasticMatrix(Matrix entries, double tol = 1e-12);
  std::size_t size() const noexcept { return entries().rows(); }
};

/// SP. Throws DimensionMismatch.
ProbVector apply(const StochasticMatrix& s, const ProbVector& p);
/// Pushforward of a tangent vector: Sv based at SP.
TangentVector apply(const StochasticMatrix& s, const TangentVector& v);

/// sum_j lambda_j Pi_{sigma_j}, lambda uniform on the (k-1)-simplex, sigma_j uniform.
BistochasticMatrix random_bistochastic(std::size_t n, std::size_t k, std::uint64_t seed);

struct BirkhoffDecomposition {
  std::vector<double> weights;
  std::vector<std::vector<std::size_t>> permutations;

  Matrix reconstruct() const;
};

/// Greedy peeling: find a perfect matching on the support {S_ij > tol}, subtract the
/// smallest matched entry, repeat. Throws NoPerfectMatching.
BirkhoffDecomposition birkhoff_decompose(const BistochasticMatrix& s, double tol = 1e-12);

struct MonotoneCheck {
  double image = 0.0;   ///< F(Sv) or D_f(SP,SQ)
  double source = 0.0;  ///< F(v) or D_f(P,Q)
  bool holds = false;

  double margin() const noexcept { return source - image; }
};

/// F(Sv) <= F(v) + 1e-12. Needs a C1 generator with 1/f' positive and concave;
/// otherwise throws FlagMissing unless `force` is set.
MonotoneCheck check_finsler_monotone(const GeneratorFunction& f, const BistochasticMatrix& s,
                                     const TangentVector& v, bool force = false);

/// D_f(SP,SQ) <= D_f(P,Q) + 1e-12, same hypotheses as check_finsler_monotone.
MonotoneCheck check_dist_monotone(const GeneratorFunction& f, const BistochasticMatrix& s,
                                  const ProbVector& p, const ProbVector& q, bool force = false);

struct CounterexampleReport {
  Matrix s;
  ProbVector p;
  ProbVector q;
  ProbVector sp;
  ProbVector sq;
  double dist = 0.0;        ///< D_id(P,Q)
  double image_dist = 0.0;  ///< D_id(SP,SQ)
  bool stochastic = false;
  bool bistochastic = false;
  bool violated = false;
};

/// The stochastic, non-bistochastic map that increases D_id.
CounterexampleReport stochastic_counterexample();

/// sum a / sum b <= max a_j / b_j + 1e-12. Throws InvalidInput.
bool max_mean_inequality_check(std::span<const double> a, std::span<const double> b);

}  // namespace qsx
