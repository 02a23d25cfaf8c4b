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
#include <string>
#include <vector>

#include "qsx/core.hpp"

namespace qsx {

inline constexpr std::uint64_t kDefaultSeed = 20260417;

struct VerifyConfig {
  /// Trial count of the largest random sweeps; smaller sweeps scale with it.
  std::size_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t trials = 0;
  /// Smallest (threshold - observed error) over all trials; negative on failure.
  double worst_margin = 0.0;
  double runtime_seconds = 0.0;
  std::string detail;
};

inline constexpr int kCriterionCount = 15;

/// Runs criterion `id` (1..15). Throws InvalidInput for other ids or zero trials.
CriterionResult run_criterion(int id, const VerifyConfig& config);

std::vector<CriterionResult> run_acceptance(const VerifyConfig& config);

struct MonotoneProbe {
  std::size_t trials = 0;
  std::size_t violations = 0;
  /// Smallest source - image over both checks.
  double worst_margin = 0.0;
};

/// Random (S, P, Q) and (S, P, v) pairs for both monotonicity checks; the reported
/// trial count includes both checks. `size` is the
/// matrix size n = N + 1 and `permutations` the Birkhoff length of S; 0 draws them
/// at random per trial. `force` runs generators outside the theorem's hypotheses.
MonotoneProbe monotonicity_probe(const GeneratorFunction& f, std::size_t trials, std::size_t size,
                                 std::size_t permutations, std::uint64_t seed, bool force);

}  // namespace qsx
