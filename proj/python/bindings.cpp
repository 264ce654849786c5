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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "runway/day_planner.hpp"
#include "runway/domains.hpp"
#include "runway/envelope.hpp"
#include "runway/error.hpp"
#include "runway/queueing.hpp"
#include "runway/sim.hpp"
#include "runway/slot_optimizer.hpp"

namespace py = pybind11;

namespace runway {
namespace {

using Pair = std::pair<double, double>;

std::vector<ControlPoint> ToPoints(const std::vector<Pair>& pairs) {
  std::vector<ControlPoint> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

std::vector<Pair> ToPairs(std::span<const ControlPoint> points) {
  std::vector<Pair> out;
  out.reserve(points.size());
  for (const auto& p : points) out.emplace_back(p.x, p.y);
  return out;
}

py::dict PolicyDict(const SlotPolicy& p) {
  py::dict d;
  d["z_a"] = p.z_a;
  d["z_d"] = p.z_d;
  d["mu_a"] = p.mu_a;
  d["mu_d"] = p.mu_d;
  d["expected_cost"] = p.expected_cost;
  d["source"] = std::string(ToString(p.source));
  return d;
}

// configs: name -> (control points, q_a, q_d); slots: (lambda_a, lambda_d, name)
py::dict PlanDayPy(
    const std::vector<std::tuple<double, double, std::string>>& slots,
    const std::map<std::string, std::tuple<std::vector<Pair>, double, double>>& configs,
    double p_a, double p_d, double c_a, double c_d,
    std::optional<Pair> delay_costs) {
  ConfigurationSet set;
  for (const auto& [name, entry] : configs) {
    const auto& [points, q_a, q_d] = entry;
    set.emplace(name, RunwayConfiguration{ValidateEnvelope(ToPoints(points), name),
                                          q_a, q_d});
  }
  DaySchedule day;
  day.p_a = p_a;
  day.p_d = p_d;
  for (const auto& [la, ld, id] : slots) day.slots.push_back({la, ld, id});
  const DelayCosts transfer{c_a, c_d};
  const DelayCosts delay =
      delay_costs ? DelayCosts{delay_costs->first, delay_costs->second} : transfer;
  const DayPlan plan = PlanDay(day, set, transfer, delay);

  py::dict out;
  out["s_a"] = plan.transfers.s_a;
  out["s_d"] = plan.transfers.s_d;
  out["lambda_a"] = plan.transfers.lambda2_a;
  out["lambda_d"] = plan.transfers.lambda2_d;
  out["rounded_s_a"] = plan.rounded_s_a;
  out["rounded_s_d"] = plan.rounded_s_d;
  py::list policies;
  for (const auto& p : plan.policies) policies.append(PolicyDict(p));
  out["policies"] = policies;
  out["total_transfer_cost"] = plan.total_transfer_cost;
  out["total_delay_cost"] = plan.total_delay_cost;
  return out;
}

// Borrowed; the module attribute keeps the type alive.
py::handle error_type;

}  // namespace
}  // namespace runway

PYBIND11_MODULE(_core, m) {
  using namespace runway;
  m.doc() = "Runway capacity envelopes, sustainable policies and slot transfers";

  error_type = py::exception<Error>(m, "RunwayError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::handle type = error_type;
      py::object instance = type(e.what());
      instance.attr("code") = std::string(ToString(e.code()));
      instance.attr("index") = e.index() ? py::cast(*e.index()) : py::none();
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  m.def("stable_transit_time",
        py::overload_cast<double, double, double>(&StableTransitTime), py::arg("lam"), py::arg("mu"),
        py::arg("q"));
  m.def("service_rate_for_transit", &ServiceRateForTransit, py::arg("lam"),
        py::arg("z"), py::arg("q"));
  m.def("demand_rate_for_transit", &DemandRateForTransit, py::arg("mu"),
        py::arg("z"), py::arg("q"));
  m.def("expected_queue_length", &ExpectedQueueLength, py::arg("lam"),
        py::arg("mu"), py::arg("q_s"), py::arg("q_c"));
  m.def("congestion_service_rate", &CongestionServiceRate, py::arg("lam"),
        py::arg("p"), py::arg("q"));
  m.def("congestion_demand_rate", &CongestionDemandRate, py::arg("mu"),
        py::arg("p"), py::arg("q"));
  m.def(
      "classify_regime",
      [](double lam, double mu, double q, double p) {
        return std::string(ToString(ClassifyRegime(lam, mu, q, p)));
      },
      py::arg("lam"), py::arg("mu"), py::arg("q"), py::arg("p"));

  py::class_<CapacityEnvelope>(m, "Envelope")
      .def(py::init([](const std::vector<Pair>& points, std::string name) {
             return ValidateEnvelope(ToPoints(points), std::move(name));
           }),
           py::arg("points"), py::arg("name") = "")
      .def_property_readonly("name", &CapacityEnvelope::name)
      .def_property_readonly("points",
                             [](const CapacityEnvelope& e) { return ToPairs(e.points()); })
      .def_property_readonly("half_planes",
                             [](const CapacityEnvelope& e) {
                               std::vector<std::tuple<double, double, double>> out;
                               for (const auto& h : e.half_planes()) {
                                 out.emplace_back(h.a_coeff, h.d_coeff, h.rhs);
                               }
                               return out;
                             })
      .def_property_readonly("max_arrival_rate", &CapacityEnvelope::max_arrival_rate)
      .def_property_readonly("max_departure_rate",
                             &CapacityEnvelope::max_departure_rate)
      .def("phi", &CapacityEnvelope::Phi, py::arg("mu_a"))
      .def("psi", &CapacityEnvelope::Psi, py::arg("mu_d"))
      .def("contains", &CapacityEnvelope::Contains, py::arg("mu_a"), py::arg("mu_d"),
           py::arg("tolerance") = kMembershipTolerance)
      .def("__repr__", [](const CapacityEnvelope& e) {
        return "Envelope('" + e.name() + "', J=" + std::to_string(e.segments()) + ")";
      });

  py::class_<SlotContext>(m, "SlotContext")
      .def(py::init([](const CapacityEnvelope& env, double q_a, double q_d,
                       double p_a, double p_d, double lambda_a, double lambda_d) {
             SlotContext ctx{env, q_a, q_d, p_a, p_d, lambda_a, lambda_d};
             ValidateContext(ctx);
             return ctx;
           }),
           py::arg("envelope"), py::arg("q_a") = 2.0, py::arg("q_d") = 2.0,
           py::arg("p_a") = 1.0, py::arg("p_d") = 1.0, py::arg("lambda_a") = 0.0,
           py::arg("lambda_d") = 0.0)
      .def_readonly("envelope", &SlotContext::envelope)
      .def_readwrite("q_a", &SlotContext::q_a)
      .def_readwrite("q_d", &SlotContext::q_d)
      .def_readwrite("p_a", &SlotContext::p_a)
      .def_readwrite("p_d", &SlotContext::p_d)
      .def_readwrite("lambda_a", &SlotContext::lambda_a)
      .def_readwrite("lambda_d", &SlotContext::lambda_d);

  m.def("sustainable_exists", &SustainableExists, py::arg("ctx"));
  m.def("sustainability_margin", &SustainabilityMargin, py::arg("ctx"));
  m.def(
      "sustainable_policy_domain",
      [](const SlotContext& ctx) {
        return ToPairs(BuildSustainablePolicyDomain(ctx).clipped.points);
      },
      py::arg("ctx"));

  py::class_<DelayPolicyDomain>(m, "DelayPolicyDomain")
      .def_property_readonly(
          "vertices", [](const DelayPolicyDomain& d) { return ToPairs(d.vertices); })
      .def_readonly("cap_a", &DelayPolicyDomain::cap_a)
      .def_readonly("cap_d", &DelayPolicyDomain::cap_d)
      .def("contains", &DelayPolicyDomain::Contains, py::arg("z_a"), py::arg("z_d"),
           py::arg("tolerance") = kMembershipTolerance);
  m.def("delay_policy_domain", &BuildDelayPolicyDomain, py::arg("ctx"));
  m.def(
      "secondary_demand_domain",
      [](const CapacityEnvelope& env, double q_a, double q_d, double p_a,
         double p_d) {
        return ToPairs(BuildSecondaryDemandDomain(env, q_a, q_d, p_a, p_d).vertices);
      },
      py::arg("envelope"), py::arg("q_a"), py::arg("q_d"), py::arg("p_a"),
      py::arg("p_d"));

  py::class_<SlotPolicy>(m, "SlotPolicy")
      .def_readonly("z_a", &SlotPolicy::z_a)
      .def_readonly("z_d", &SlotPolicy::z_d)
      .def_readonly("mu_a", &SlotPolicy::mu_a)
      .def_readonly("mu_d", &SlotPolicy::mu_d)
      .def_readonly("expected_cost", &SlotPolicy::expected_cost)
      .def_property_readonly(
          "source", [](const SlotPolicy& p) { return std::string(ToString(p.source)); });
  m.def(
      "optimize_slot",
      [](const SlotContext& ctx, double c_a, double c_d) {
        return OptimizeSlot(ctx, {c_a, c_d});
      },
      py::arg("ctx"), py::arg("c_a") = 1.0, py::arg("c_d") = 1.0);
  m.def(
      "cross_check_lp",
      [](const SlotContext& ctx, double c_a, double c_d) {
        return CrossCheckLp(ctx, {c_a, c_d});
      },
      py::arg("ctx"), py::arg("c_a") = 1.0, py::arg("c_d") = 1.0);

  m.def("plan_day", &PlanDayPy, py::arg("slots"), py::arg("configurations"),
        py::arg("p_a") = 1.0, py::arg("p_d") = 1.0, py::arg("c_a") = 1.0,
        py::arg("c_d") = 1.0, py::arg("delay_costs") = py::none(),
        "Slots are (lambda_a, lambda_d, configuration); configurations map a "
        "name to (control_points, q_a, q_d).");

  m.def(
      "simulate",
      [](double lam, double mu, double q_c, double q_s, std::size_t n,
         double warmup, std::uint64_t seed) {
        const auto model = sim::ArrivalServiceModel::FromRates(lam, mu, q_c, q_s);
        const auto cmp = sim::CompareToKingman(
            model, n, static_cast<std::size_t>(warmup * static_cast<double>(n)), seed);
        py::dict out;
        out["simulated_z"] = cmp.simulated_z;
        out["formula_z"] = cmp.formula_z;
        out["relative_gap"] = cmp.relative_gap;
        out["mean_waiting_time"] = cmp.simulation.mean_waiting_time;
        out["mean_queue_length"] = cmp.simulation.mean_queue_length;
        out["arrivals_served"] = cmp.simulation.arrivals_served;
        out["seed"] = cmp.simulation.seed;
        return out;
      },
      py::arg("lam"), py::arg("mu"), py::arg("q_c") = 2.0, py::arg("q_s") = 2.0,
      py::arg("n") = 1000000, py::arg("warmup") = 0.1,
      py::arg("seed") = sim::kDefaultSeed);
}
