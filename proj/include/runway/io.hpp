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

#ifndef RUNWAY_IO_HPP_
#define RUNWAY_IO_HPP_

// JSON configuration / schedule / plan files and CSV polylines. All numeric
// text is locale independent.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "runway/day_planner.hpp"

namespace runway::io {

struct PlannerConfig {
  ConfigurationSet configurations;
  std::vector<std::string> order;  // configuration names in file order
  double p_a = 1.0;
  double p_d = 1.0;
  DelayCosts costs;        // flight slot transfer costs
  DelayCosts delay_costs;  // per-slot delay costs; defaults to `costs`
  double slot_minutes = 15.0;

  const RunwayConfiguration& Get(std::string_view name) const;
};

// Malformed JSON or a wrong shape throws kParseError; out-of-range values
// and invalid envelopes throw their validation codes, naming the
// configuration.
PlannerConfig ParseConfig(std::string_view text);
PlannerConfig LoadConfig(const std::filesystem::path& path);

DaySchedule ParseSchedule(std::string_view text, const PlannerConfig& config);
DaySchedule LoadSchedule(const std::filesystem::path& path,
                         const PlannerConfig& config);

nlohmann::ordered_json DayPlanToJson(const DayPlan& plan,
                                     const DaySchedule& day,
                                     const PlannerConfig& config);

// Fixed-point with `digits` decimals; never prints "-0.000000".
std::string FormatFixed(double value, int digits = 6);
// Shortest representation that round-trips.
std::string FormatShortest(double value);

std::string PolylineCsv(std::span<const ControlPoint> points);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace runway::io

#endif  // RUNWAY_IO_HPP_
