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

#include <gtest/gtest.h>

#include "qsx/core.hpp"
#include "qsx/error.hpp"
#include "qsx/verify.hpp"

namespace qsx {
namespace {

TEST(VerifyTest, ReducedRunsPass) {
  VerifyConfig config;
  config.trials = 200;
  for (int id : {1, 2, 4, 7, 10, 12, 13}) {
    const CriterionResult r = run_criterion(id, config);
    EXPECT_TRUE(r.passed) << id << ": " << r.detail;
    EXPECT_EQ(r.id, id);
    EXPECT_GT(r.trials, 0u);
  }
}

TEST(VerifyTest, RejectsBadArguments) {
  VerifyConfig config;
  EXPECT_THROW(run_criterion(0, config), Error);
  EXPECT_THROW(run_criterion(kCriterionCount + 1, config), Error);
  config.trials = 0;
  EXPECT_THROW(run_criterion(1, config), Error);
}

TEST(VerifyTest, ProbeFindsNoViolationsForQualifyingGenerator) {
  const MonotoneProbe probe = monotonicity_probe(power_generator(0.5), 500, 0, 0, 3, false);
  // One distance check and one Finsler check per trial.
  EXPECT_EQ(probe.trials, 1000u);
  EXPECT_EQ(probe.violations, 0u);
  EXPECT_GE(probe.worst_margin, -1e-12);
}

TEST(VerifyTest, ProbeNeedsForceOutsideHypotheses) {
  EXPECT_THROW(monotonicity_probe(power_generator(2.0), 10, 3, 2, 3, false), Error);
  EXPECT_NO_THROW(monotonicity_probe(power_generator(2.0), 10, 3, 2, 3, true));
}

}  // namespace
}  // namespace qsx
