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

#include "runway/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "runway/day_planner.hpp"
#include "runway/domains.hpp"
#include "runway/io.hpp"
#include "runway/queueing.hpp"
#include "runway/sim.hpp"
#include "runway/slot_optimizer.hpp"

namespace runway::cli {
namespace {

namespace fs = std::filesystem;
using io::FormatFixed;

struct Options {
  std::string config_path;
  std::string schedule_path;
  std::string configuration;  // empty: first in file
  std::string out_path;
  double lambda_a = 0.0;
  double lambda_d = 0.0;

  double sim_lambda = 1.0;
  double sim_mu = 2.0;
  double sim_qc = 2.0;
  double sim_qs = 2.0;
  std::size_t sim_n = 1000000;
  double sim_warmup = 0.1;
  std::optional<std::uint64_t> sim_seed;
};

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("RUNWAY_PLANNER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kValidationError,
                  "RUNWAY_PLANNER_SEED must be an unsigned integer");
    }
  }
  return sim::kDefaultSeed;
}

const std::string& PickConfiguration(const io::PlannerConfig& config,
                                     const Options& opt) {
  if (opt.configuration.empty()) return config.order.front();
  config.Get(opt.configuration);
  return opt.configuration;
}

SlotContext MakeContext(const io::PlannerConfig& config, const std::string& name,
                        double lambda_a, double lambda_d) {
  const RunwayConfiguration& rc = config.Get(name);
  return SlotContext{rc.envelope, rc.q_a,    rc.q_d,  config.p_a,
                     config.p_d,  lambda_a, lambda_d};
}

int CmdValidate(const Options& opt, std::ostream& out) {
  const io::PlannerConfig config = io::LoadConfig(opt.config_path);
  for (const std::string& name : config.order) {
    const RunwayConfiguration& rc = config.Get(name);
    out << "configuration " << name << " J=" << rc.envelope.segments()
        << " mu_a_max=" << FormatFixed(rc.envelope.max_arrival_rate())
        << " mu_d_max=" << FormatFixed(rc.envelope.max_departure_rate())
        << " q_a=" << FormatFixed(rc.q_a) << " q_d=" << FormatFixed(rc.q_d)
        << "\n";
  }
  out << "valid\n";
  return kExitOk;
}

int CmdDomains(const Options& opt, std::ostream& out) {
  const io::PlannerConfig config = io::LoadConfig(opt.config_path);
  const std::string& name = PickConfiguration(config, opt);
  const SlotContext ctx = MakeContext(config, name, opt.lambda_a, opt.lambda_d);
  const fs::path dir = opt.out_path.empty() ? fs::path(".") : fs::path(opt.out_path);
  fs::create_directories(dir);

  auto write = [&](const char* file, std::span<const ControlPoint> points) {
    io::WriteTextFile(dir / file, io::PolylineCsv(points));
    out << "wrote " << (dir / file).string() << "\n";
  };

  out << "configuration " << name << "\n";
  write("envelope.csv", ctx.envelope.points());

  const CongestionRates cong = CongestionRatesFor(ctx);
  out << "congestion_rates mu_a=" << FormatFixed(cong.mu_a)
      << " mu_d=" << FormatFixed(cong.mu_d) << "\n";

  try {
    const DemandDomain demand = BuildSecondaryDemandDomain(
        ctx.envelope, ctx.q_a, ctx.q_d, ctx.p_a, ctx.p_d);
    out << "secondary_corner " << FormatFixed(demand.service_points.corner.x)
        << " " << FormatFixed(demand.service_points.corner.y) << "\n";
    write("secondary_demand.csv", demand.vertices);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasibleTolerance) throw;
    out << "secondary_demand: empty (" << e.what() << ")\n";
  }

  if (!SustainableExists(ctx)) {
    out << "verdict: no sustainable policy\n";
    return kExitNoSustainable;
  }
  const SustainablePolicyDomain policies = BuildSustainablePolicyDomain(ctx);
  out << "sustainable_corner " << FormatFixed(policies.clipped.corner.x) << " "
      << FormatFixed(policies.clipped.corner.y) << "\n";
  write("sustainable_policy.csv", policies.clipped.points);
  const DelayPolicyDomain delays = BuildDelayPolicyDomain(ctx);
  out << "delay_caps " << FormatFixed(delays.cap_a) << " "
      << FormatFixed(delays.cap_d) << "\n";
  write("delay_policy.csv", delays.vertices);
  out << "verdict: sustainable policy exists\n";
  return kExitOk;
}

int CmdOptimizeSlot(const Options& opt, std::ostream& out) {
  const io::PlannerConfig config = io::LoadConfig(opt.config_path);
  const std::string& name = PickConfiguration(config, opt);
  const SlotContext ctx = MakeContext(config, name, opt.lambda_a, opt.lambda_d);
  const SlotPolicy policy = OptimizeSlot(ctx, config.delay_costs);
  out << "z_a=" << FormatFixed(policy.z_a) << " z_d=" << FormatFixed(policy.z_d)
      << " mu_a=" << FormatFixed(policy.mu_a)
      << " mu_d=" << FormatFixed(policy.mu_d)
      << " cost=" << FormatFixed(policy.expected_cost) << "\n";
  return kExitOk;
}

int CmdPlanDay(const Options& opt, std::ostream& out) {
  const io::PlannerConfig config = io::LoadConfig(opt.config_path);
  const DaySchedule day = io::LoadSchedule(opt.schedule_path, config);
  const DayPlan plan =
      PlanDay(day, config.configurations, config.costs, config.delay_costs);
  const std::string path = opt.out_path.empty() ? "plan.json" : opt.out_path;
  io::WriteTextFile(path, io::DayPlanToJson(plan, day, config).dump(2) + "\n");
  for (std::size_t i = 0; i < day.slots.size(); ++i) {
    const SlotPolicy& p = plan.policies[i];
    out << "slot " << i << " s_a=" << FormatFixed(plan.transfers.s_a[i])
        << " s_d=" << FormatFixed(plan.transfers.s_d[i])
        << " lambda_a=" << FormatFixed(plan.transfers.lambda2_a[i])
        << " lambda_d=" << FormatFixed(plan.transfers.lambda2_d[i])
        << " mu_a=" << FormatFixed(p.mu_a) << " mu_d=" << FormatFixed(p.mu_d)
        << " cost=" << FormatFixed(p.expected_cost) << " " << ToString(p.source)
        << "\n";
  }
  out << "transfer_cost=" << FormatFixed(plan.total_transfer_cost)
      << " delay_cost=" << FormatFixed(plan.total_delay_cost) << "\n";
  out << "wrote " << path << "\n";
  return kExitOk;
}

int CmdSimulate(const Options& opt, std::ostream& out) {
  const auto model = sim::ArrivalServiceModel::FromRates(
      opt.sim_lambda, opt.sim_mu, opt.sim_qc, opt.sim_qs);
  if (!(opt.sim_warmup >= 0.0 && opt.sim_warmup < 1.0)) {
    throw Error(ErrorCode::kValidationError, "--warmup must lie in [0, 1)");
  }
  const auto warmup =
      static_cast<std::size_t>(opt.sim_warmup * static_cast<double>(opt.sim_n));
  const std::uint64_t seed = opt.sim_seed ? *opt.sim_seed : DefaultSeed();
  const sim::KingmanComparison cmp =
      sim::CompareToKingman(model, opt.sim_n, warmup, seed);
  out << "simulated_z=" << FormatFixed(cmp.simulated_z)
      << " formula_z=" << FormatFixed(cmp.formula_z)
      << " relative_gap=" << FormatFixed(cmp.relative_gap) << "\n";
  out << "mean_queue_length=" << FormatFixed(cmp.simulation.mean_queue_length)
      << " arrivals=" << cmp.simulation.arrivals_served << " seed=" << seed
      << "\n";
  return kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return kExitParse;
    case ErrorCode::kNoSustainablePolicy:
    case ErrorCode::kUnstableSystem:
    case ErrorCode::kSaturatedQueue:
      return kExitNoSustainable;
    case ErrorCode::kInfeasibleSchedule:
      return kExitInfeasibleSchedule;
    default:
      return kExitValidation;
  }
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Runway capacity envelopes, sustainable policies and slot transfers",
               "runway_planner"};
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand("validate", "Check a configuration file");
  validate->add_option("config", opt.config_path, "Configuration JSON")->required();

  auto* domains = app.add_subcommand(
      "domains", "Write envelope, sustainable, delay and demand polylines as CSV");
  domains->add_option("config", opt.config_path, "Configuration JSON")->required();
  domains->add_option("--lambda-a", opt.lambda_a, "Landing demand per slot");
  domains->add_option("--lambda-d", opt.lambda_d, "Takeoff demand per slot");
  domains->add_option("--out", opt.out_path, "Output directory");
  domains->add_option("--configuration", opt.configuration,
                      "Configuration name (default: first)");

  auto* optimize = app.add_subcommand("optimize-slot",
                                      "Cheapest sustainable policy for one slot");
  optimize->add_option("config", opt.config_path, "Configuration JSON")->required();
  optimize->add_option("--lambda-a", opt.lambda_a, "Landing demand per slot");
  optimize->add_option("--lambda-d", opt.lambda_d, "Takeoff demand per slot");
  optimize->add_option("--configuration", opt.configuration,
                       "Configuration name (default: first)");

  auto* plan = app.add_subcommand("plan-day", "Flight slot transfers for a day");
  plan->add_option("config", opt.config_path, "Configuration JSON")->required();
  plan->add_option("schedule", opt.schedule_path, "Schedule JSON")->required();
  plan->add_option("--out", opt.out_path, "Plan JSON (default plan.json)");

  auto* simulate = app.add_subcommand(
      "simulate", "Simulate a single-server queue against the Kingman formula");
  simulate->add_option("--lambda", opt.sim_lambda, "Demand rate");
  simulate->add_option("--mu", opt.sim_mu, "Service rate");
  simulate->add_option("--qc", opt.sim_qc, "Interarrival quadratic ratio q_C");
  simulate->add_option("--qs", opt.sim_qs, "Service quadratic ratio q_S");
  simulate->add_option("--n", opt.sim_n, "Number of arrivals");
  simulate->add_option("--warmup", opt.sim_warmup,
                       "Fraction of arrivals discarded (default 0.1)");
  simulate->add_option("--seed", opt.sim_seed,
                       "Seed (default: $RUNWAY_PLANNER_SEED or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (validate->parsed()) return CmdValidate(opt, out);
    if (domains->parsed()) return CmdDomains(opt, out);
    if (optimize->parsed()) return CmdOptimizeSlot(opt, out);
    if (plan->parsed()) return CmdPlanDay(opt, out);
    if (simulate->parsed()) return CmdSimulate(opt, out);
  } catch (const Error& e) {
    err << "error: " << ToString(e.code());
    if (e.index()) err << " at index " << *e.index();
    err << ": " << e.what() << "\n";
    if (e.code() == ErrorCode::kNoSustainablePolicy) {
      out << "verdict: no sustainable policy\n";
    }
    return ExitCodeFor(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace runway::cli
