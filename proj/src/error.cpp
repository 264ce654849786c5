// Copyright 2026 The Runway Planner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "runway/error.hpp"

namespace runway {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kSaturatedQueue: return "SaturatedQueue";
    case ErrorCode::kOrderingViolation: return "OrderingViolation";
    case ErrorCode::kEndpointViolation: return "EndpointViolation";
    case ErrorCode::kConvexityViolation: return "ConvexityViolation";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEmptyDomain: return "EmptyDomain";
    case ErrorCode::kNoSustainablePolicy: return "NoSustainablePolicy";
    case ErrorCode::kInfeasibleTolerance: return "InfeasibleTolerance";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kNotAVertex: return "NotAVertex";
    case ErrorCode::kInfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorCode::kUnstableSystem: return "UnstableSystem";
    case ErrorCode::kInvalidVariability: return "InvalidVariability";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace runway
