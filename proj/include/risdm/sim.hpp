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

#ifndef RISDM_SIM_HPP
#define RISDM_SIM_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "risdm/scenario.hpp"

namespace risdm {

enum class SweepAxis { PowerDbm, ElementsM, Beta, DistanceAb };

std::string_view axis_name(SweepAxis axis) noexcept;
std::optional<SweepAxis> axis_from_name(std::string_view name) noexcept;

/// Comma-separated name lists ("max-sv,leakage"); throws InvalidInput on unknown or repeated names.
std::vector<Method> parse_methods(std::string_view list);
std::vector<RisMode> parse_ris_modes(std::string_view list);
std::vector<PaMode> parse_pa_modes(std::string_view list);

struct SweepSpec {
    SweepAxis axis = SweepAxis::PowerDbm;
    std::vector<double> values;
    std::vector<Method> methods{Method::MaxSv};
    std::vector<RisMode> ris_modes{RisMode::Gpg};
    std::vector<PaMode> pa_modes{PaMode::Fixed};
    int trials = 50;  // random-phase draws; deterministic RIS modes run once
    std::uint64_t seed = 1;
    PaSettings pa;
    unsigned threads = 0;  // 0: hardware concurrency

    void validate() const;
};

struct SweepRecord {
    double axis_value = 0.0;
    std::size_t axis_index = 0;
    Method method = Method::MaxSv;
    RisMode ris_mode = RisMode::Gpg;
    PaMode pa_mode = PaMode::Fixed;
    bool surface = false;  // pa-surface sample rather than an allocation outcome
    double beta1 = 0.0;
    double beta2 = 0.0;
    double ssr_bits = 0.0;
    int trial = 0;
    std::uint64_t seed = 0;
};

/// Config with the swept parameter set to `value`.
ScenarioConfig apply_axis(const ScenarioConfig& base, SweepAxis axis, double value);

/// Records in (axis value, method, RIS mode, PA mode, trial) order regardless of thread count.
std::vector<SweepRecord> run_sweep(const ScenarioConfig& config, const SweepSpec& spec);

/// R(beta1, beta2) on the square grid with beamformers frozen at the config's beta.
std::vector<SweepRecord> pa_surface(const ScenarioConfig& config, double step, Method method = Method::MaxSv,
                                    RisMode ris_mode = RisMode::Gpg);

inline constexpr std::string_view kCsvHeader = "axis,method,ris_mode,pa_mode,beta1,beta2,ssr_bits,trial,seed";

std::string emit_csv(const std::vector<SweepRecord>& records);
void write_text(const std::filesystem::path& path, std::string_view text);

} // namespace risdm

#endif
