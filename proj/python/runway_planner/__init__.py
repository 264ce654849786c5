# Copyright 2026 The Runway Planner Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runway capacity envelopes, sustainable service policies and slot transfers."""

from ._core import (
    DelayPolicyDomain,
    Envelope,
    RunwayError,
    SlotContext,
    SlotPolicy,
    classify_regime,
    congestion_demand_rate,
    congestion_service_rate,
    cross_check_lp,
    delay_policy_domain,
    demand_rate_for_transit,
    expected_queue_length,
    optimize_slot,
    plan_day,
    secondary_demand_domain,
    service_rate_for_transit,
    simulate,
    stable_transit_time,
    sustainability_margin,
    sustainable_exists,
    sustainable_policy_domain,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
