// SPDX-License-Identifier: Apache-2.0
//
// risdm: double-RIS two-way directional modulation simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISDM_SCENARIO_HPP
#define RISDM_SCENARIO_HPP

#include <cstdint>

#include "risdm/power_allocation.hpp"

namespace risdm {

// Geometry and channels of one configuration; independent of RIS mode and method.
struct Scenario {
    ScenarioConfig config;
    GeometrySet geometry;
    ChannelSet channels;
};

Scenario build_scenario(const ScenarioConfig& config);

struct Evaluation {
    ReflectionPair reflections;
    EffectiveChannels effective;
    BeamformerSet beamformers;
    ScalarGains gains;
};

/// Phases, beamformers (frozen at the config's beta) and scalar gains.
Evaluation evaluate(const Scenario& scenario, RisMode ris_mode, Method method, std::uint64_t phase_seed);

struct PaSettings {
    double grid_step_1d = 0.001;
    double grid_step_2d = 0.01;
    std::uint64_t seed = 0;
};

PaOutcome allocate_power(const ScalarGains& gains, const ScenarioConfig& config, PaMode mode,
                         const PaSettings& settings);

} // namespace risdm

#endif
