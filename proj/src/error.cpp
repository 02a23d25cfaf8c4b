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

#include "qsx/error.hpp"

namespace qsx {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotC1: return "NotC1";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::LeavesSimplex: return "LeavesSimplex";
    case ErrorCode::DegenerateEndpoints: return "DegenerateEndpoints";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::NotBistochastic: return "NotBistochastic";
    case ErrorCode::FlagMissing: return "FlagMissing";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotRectifiable: return "NotRectifiable";
    case ErrorCode::ProfileNotInvertible: return "ProfileNotInvertible";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
  }
  return "Unknown";
}

bool is_numeric_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NoConvergence:
    case ErrorCode::NotRectifiable:
    case ErrorCode::ProfileNotInvertible:
    case ErrorCode::BracketFailure:
    case ErrorCode::NoPerfectMatching:
      return true;
    default:
      return false;
  }
}

}  // namespace qsx
