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

#include "runway/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace runway::io {
namespace {

using nlohmann::json;

[[noreturn]] void ThrowParse(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    ThrowParse(std::string("malformed JSON: ") + e.what());
  }
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    ThrowParse(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

double Number(const json& obj, const char* key, const std::string& where) {
  const json& v = Field(obj, key, where);
  if (!v.is_number()) ThrowParse(where + ": field '" + key + "' must be a number");
  return v.get<double>();
}

double Positive(const json& obj, const char* key, const std::string& where) {
  const double v = Number(obj, key, where);
  if (!(v > 0.0)) {
    throw Error(ErrorCode::kValidationError,
                where + ": '" + key + "' must be > 0");
  }
  return v;
}

DelayCosts ParseCosts(const json& obj, const std::string& where) {
  return DelayCosts{Positive(obj, "c_a", where), Positive(obj, "c_d", where)};
}

}  // namespace

const RunwayConfiguration& PlannerConfig::Get(std::string_view name) const {
  const auto it = configurations.find(name);
  if (it == configurations.end()) {
    throw Error(ErrorCode::kValidationError,
                "unknown configuration '" + std::string(name) + "'");
  }
  return it->second;
}

PlannerConfig ParseConfig(std::string_view text) {
  const json root = ParseJson(text);
  if (!root.is_object()) ThrowParse("config: top level must be an object");

  PlannerConfig config;
  const json& tolerances = Field(root, "tolerances", "config");
  config.p_a = Positive(tolerances, "p_a", "tolerances");
  config.p_d = Positive(tolerances, "p_d", "tolerances");
  config.costs = ParseCosts(Field(root, "costs", "config"), "costs");
  config.delay_costs = root.contains("delay_costs")
                           ? ParseCosts(root.at("delay_costs"), "delay_costs")
                           : config.costs;
  if (root.contains("slot_minutes")) {
    config.slot_minutes = Positive(root, "slot_minutes", "config");
  }

  const json& list = Field(root, "configurations", "config");
  if (!list.is_array() || list.empty()) {
    ThrowParse("config: 'configurations' must be a non-empty array");
  }
  for (std::size_t c = 0; c < list.size(); ++c) {
    const json& item = list[c];
    const std::string where = "configurations[" + std::to_string(c) + "]";
    const json& name_field = Field(item, "name", where);
    if (!name_field.is_string()) ThrowParse(where + ": 'name' must be a string");
    const std::string name = name_field.get<std::string>();
    const std::string label = "configuration '" + name + "'";

    const json& raw = Field(item, "control_points", where);
    if (!raw.is_array()) ThrowParse(label + ": 'control_points' must be an array");
    std::vector<ControlPoint> points;
    for (const json& pt : raw) {
      if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() ||
          !pt[1].is_number()) {
        ThrowParse(label + ": control points must be [x, y] number pairs");
      }
      points.push_back({pt[0].get<double>(), pt[1].get<double>()});
    }
    RunwayConfiguration rc{
        [&] {
          try {
            return ValidateEnvelope(std::move(points), name);
          } catch (const Error& e) {
            throw Error(e.code(), label + ": " + e.what(), e.index());
          }
        }(),
        Positive(item, "q_a", label), Positive(item, "q_d", label)};
    if (!config.configurations.emplace(name, std::move(rc)).second) {
      throw Error(ErrorCode::kValidationError, "duplicate " + label);
    }
    config.order.push_back(name);
  }
  return config;
}

PlannerConfig LoadConfig(const std::filesystem::path& path) {
  return ParseConfig(ReadTextFile(path));
}

DaySchedule ParseSchedule(std::string_view text, const PlannerConfig& config) {
  const json root = ParseJson(text);
  const json& slots = Field(root, "slots", "schedule");
  if (!slots.is_array() || slots.empty()) {
    ThrowParse("schedule: 'slots' must be a non-empty array");
  }
  DaySchedule day;
  day.p_a = config.p_a;
  day.p_d = config.p_d;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::string where = "slots[" + std::to_string(i) + "]";
    const json& slot = slots[i];
    SlotDemand demand;
    demand.lambda_a = Number(slot, "lambda_a", where);
    demand.lambda_d = Number(slot, "lambda_d", where);
    const json& name = Field(slot, "config", where);
    if (!name.is_string()) ThrowParse(where + ": 'config' must be a string");
    demand.config_id = name.get<std::string>();
    if (!(demand.lambda_a >= 0.0) || !(demand.lambda_d >= 0.0)) {
      throw Error(ErrorCode::kValidationError, where + ": negative demand");
    }
    config.Get(demand.config_id);
    day.slots.push_back(std::move(demand));
  }
  return day;
}

DaySchedule LoadSchedule(const std::filesystem::path& path,
                         const PlannerConfig& config) {
  return ParseSchedule(ReadTextFile(path), config);
}

nlohmann::ordered_json DayPlanToJson(const DayPlan& plan,
                                     const DaySchedule& day,
                                     const PlannerConfig& config) {
  nlohmann::ordered_json out;
  const TransferPlan& t = plan.transfers;
  out["slot_minutes"] = config.slot_minutes;
  out["tolerances"] = {{"p_a", day.p_a}, {"p_d", day.p_d}};
  out["s_a"] = t.s_a;
  out["s_d"] = t.s_d;
  out["rounded_s_a"] = plan.rounded_s_a;
  out["rounded_s_d"] = plan.rounded_s_d;
  auto& secondary = out["secondary_schedule"] = nlohmann::ordered_json::array();
  auto& policies = out["policies"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < day.slots.size(); ++i) {
    secondary.push_back({{"slot", i},
                         {"config", day.slots[i].config_id},
                         {"lambda_a", t.lambda2_a[i]},
                         {"lambda_d", t.lambda2_d[i]}});
    const SlotPolicy& p = plan.policies[i];
    policies.push_back({{"slot", i},
                        {"z_a", p.z_a},
                        {"z_d", p.z_d},
                        {"mu_a", p.mu_a},
                        {"mu_d", p.mu_d},
                        {"expected_cost", p.expected_cost},
                        {"source", std::string(ToString(p.source))}});
  }
  out["total_transfer_cost"] = plan.total_transfer_cost;
  out["total_delay_cost"] = plan.total_delay_cost;
  return out;
}

std::string FormatFixed(double value, int digits) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
  if (ec != std::errc()) return "nan";
  std::string s(buf, end);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string FormatShortest(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string PolylineCsv(std::span<const ControlPoint> points) {
  std::string out = "x,y\n";
  for (const ControlPoint& p : points) {
    out += FormatShortest(p.x) + "," + FormatShortest(p.y) + "\n";
  }
  return out;
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) {
    throw Error(ErrorCode::kInvalidInput, "cannot write " + path.string());
  }
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) ThrowParse("cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace runway::io
