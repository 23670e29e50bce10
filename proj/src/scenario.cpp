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

#include "risdm/scenario.hpp"

namespace risdm {

Scenario build_scenario(const ScenarioConfig& config) {
    config.validate();
    Scenario s;
    s.config = config;
    s.geometry = build_geometry(config);
    s.channels = build_channels(s.geometry, config);
    return s;
}

Evaluation evaluate(const Scenario& scenario, RisMode ris_mode, Method method, std::uint64_t phase_seed) {
    Evaluation e;
    e.reflections = design_reflections(scenario.geometry, scenario.config, ris_mode, phase_seed);
    e.effective = effective_channels(scenario.channels, e.reflections.ris1, e.reflections.ris2);
    e.beamformers = design_beamformers(scenario.channels, e.reflections.ris1, e.reflections.ris2, e.effective,
                                       scenario.config, method);
    e.gains = scalar_gains(e.effective, e.beamformers, scenario.config);
    return e;
}

PaOutcome allocate_power(const ScalarGains& gains, const ScenarioConfig& config, PaMode mode,
                         const PaSettings& settings) {
    switch (mode) {
    case PaMode::Fixed: return fixed_pa(gains, config.beta1, config.beta2);
    case PaMode::Epa: return epa(gains);
    case PaMode::Es1d: return es_1d(gains, settings.grid_step_1d);
    case PaMode::Es2d: return es_2d(gains, settings.grid_step_2d);
    case PaMode::Hicf: return hicf(gains, settings.seed);
    }
    return epa(gains);
}

} // namespace risdm
