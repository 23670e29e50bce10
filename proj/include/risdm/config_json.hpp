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

#ifndef RISDM_CONFIG_JSON_HPP
#define RISDM_CONFIG_JSON_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "risdm/scenario.hpp"

namespace risdm {

/// Parses a configuration document. Missing fields keep their defaults,
/// unknown fields are rejected.
ScenarioConfig config_from_json(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Full configuration, every field present.
std::string config_to_json(const ScenarioConfig& config);

/// Resolved geometry of a scenario: node poses, per-link angles, distances and gains.
std::string scenario_dump_json(const Scenario& scenario);

} // namespace risdm

#endif
