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

#ifndef RUNWAY_CLI_HPP_
#define RUNWAY_CLI_HPP_

#include <ostream>

#include "runway/error.hpp"

namespace runway::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitNoSustainable = 4;
inline constexpr int kExitInfeasibleSchedule = 5;

int ExitCodeFor(ErrorCode code);

// Entry point of the `runway_planner` tool; subcommands validate, domains,
// optimize-slot, plan-day and simulate.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace runway::cli

#endif  // RUNWAY_CLI_HPP_
