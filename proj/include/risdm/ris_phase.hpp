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

#ifndef RISDM_RIS_PHASE_HPP
#define RISDM_RIS_PHASE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "risdm/geometry.hpp"

namespace risdm {

/// Diagonal reflection of one RIS: element m contributes on_off[m] * exp(j phase[m]).
struct RisReflection {
    std::vector<std::uint8_t> on_off;  // 0 or 1
    std::vector<double> phase;         // [0, 2 pi)

    std::size_t size() const noexcept { return phase.size(); }
    ComplexVector coefficients() const;
    void validate(std::size_t expected_size) const;
};

enum class RisMode { Gpg, GpgLiteral, Random, None, Ris1Only, Ris2Only };

std::string_view ris_mode_name(RisMode mode) noexcept;
std::optional<RisMode> ris_mode_from_name(std::string_view name) noexcept;

enum class GpgRule { Canonical, Literal };

/// Wraps an angle into [0, 2 pi).
double wrap_phase(double phi) noexcept;

struct GpgElement {
    double phase = 0.0;
    bool degenerate = false;
};

/// Phase for one element from the two cascaded-path phases theta_1, theta_2.
/// Canonical: -arg(e^{j theta_1} + e^{j theta_2}). Literal: -(theta_1 + |theta_2 - theta_1| / 2).
GpgElement gpg_element(double theta1, double theta2, GpgRule rule) noexcept;

struct GpgDesign {
    RisReflection reflection;
    std::vector<std::size_t> degenerate_elements;
};

/// GPG phases for RIS `which_ris` (1 or 2) from the four angle families at that RIS.
GpgDesign gpg_phases(const GeometrySet& geom, int which_ris, const ScenarioConfig& config,
                     GpgRule rule = GpgRule::Canonical);

/// I.i.d. uniform phases on [0, 2 pi), all elements on. Deterministic in the seed.
RisReflection random_phases(int m, std::uint64_t seed);

/// All elements off.
RisReflection zero_reflection(int m);

struct ReflectionPair {
    RisReflection ris1;
    RisReflection ris2;
    std::vector<std::size_t> degenerate_elements;  // canonical-GPG flags, both RISs
};

/// Builds (Theta_1, Theta_2) for one of the benchmark modes. `seed` is only
/// read by RisMode::Random.
ReflectionPair design_reflections(const GeometrySet& geom, const ScenarioConfig& config, RisMode mode,
                                  std::uint64_t seed);

} // namespace risdm

#endif
