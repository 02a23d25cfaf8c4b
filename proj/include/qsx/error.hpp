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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsx {

enum class ErrorCode {
  InvalidInput,
  NegativeCoordinate,
  SumNotOne,
  DimensionMismatch,
  UnknownGenerator,
  InvalidParameter,
  NotTangent,
  InvalidExponent,
  PartitionMismatch,
  EndpointMismatch,
  NotMonotone,
  OutOfDomain,
  NotC1,
  BoundaryPoint,
  BaseMismatch,
  LeavesSimplex,
  DegenerateEndpoints,
  NotStochastic,
  NotBistochastic,
  FlagMissing,
  UnsupportedDimension,
  SchemaError,
  // Numeric failures: the input was acceptable but a computation did not finish.
  NoConvergence,
  NotRectifiable,
  ProfileNotInvertible,
  BracketFailure,
  NoPerfectMatching,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal a numeric failure rather than a rejected input.
bool is_numeric_failure(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace qsx
