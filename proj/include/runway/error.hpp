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

#ifndef RUNWAY_ERROR_HPP_
#define RUNWAY_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace runway {

enum class ErrorCode {
  kInvalidInput,
  kSaturatedQueue,
  kOrderingViolation,
  kEndpointViolation,
  kConvexityViolation,
  kOutOfRange,
  kEmptyDomain,
  kNoSustainablePolicy,
  kInfeasibleTolerance,
  kNumericalFailure,
  kNotAVertex,
  kInfeasibleSchedule,
  kUnstableSystem,
  kInvalidVariability,
  kParseError,
  kValidationError,
};

std::string_view ToString(ErrorCode code);

// Every failure raised by the library carries a code; envelope validation
// failures additionally carry the offending control-point index.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

// Absolute slack for boundary comparisons on rates and times. All quantities
// are O(1)-O(100) in slot units.
inline constexpr double kBoundaryTolerance = 1e-12;

// Distance slack used by membership tests of polygonal domains.
inline constexpr double kMembershipTolerance = 1e-9;

}  // namespace runway

#endif  // RUNWAY_ERROR_HPP_
