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

#include "risdm/ris_phase.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "risdm/error.hpp"
#include "risdm/seed.hpp"
#include "risdm/tolerances.hpp"

namespace risdm {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

constexpr std::array<std::pair<RisMode, std::string_view>, 6> kModeNames = {{
    {RisMode::Gpg, "gpg"},
    {RisMode::GpgLiteral, "gpg-literal"},
    {RisMode::Random, "random"},
    {RisMode::None, "none"},
    {RisMode::Ris1Only, "ris1-only"},
    {RisMode::Ris2Only, "ris2-only"},
}};

} // namespace

std::string_view ris_mode_name(RisMode mode) noexcept {
    for (const auto& [m, name] : kModeNames)
        if (m == mode) return name;
    return "?";
}

std::optional<RisMode> ris_mode_from_name(std::string_view name) noexcept {
    for (const auto& [m, n] : kModeNames)
        if (n == name) return m;
    return std::nullopt;
}

ComplexVector RisReflection::coefficients() const {
    ComplexVector c(static_cast<Eigen::Index>(phase.size()));
    for (std::size_t i = 0; i < phase.size(); ++i)
        c(static_cast<Eigen::Index>(i)) = on_off[i] ? std::polar(1.0, phase[i]) : Complex(0.0, 0.0);
    return c;
}

void RisReflection::validate(std::size_t expected_size) const {
    if (phase.size() != expected_size || on_off.size() != expected_size)
        fail(ErrorCode::InvalidInput, "reflection: expected " + std::to_string(expected_size) + " elements, got " +
                                          std::to_string(phase.size()));
    for (std::size_t i = 0; i < phase.size(); ++i) {
        if (on_off[i] > 1) fail(ErrorCode::InvalidInput, "reflection: amplitudes must be 0 or 1");
        if (!(phase[i] >= 0.0 && phase[i] < kTwoPi)) fail(ErrorCode::InvalidInput, "reflection: phase outside [0, 2pi)");
    }
}

double wrap_phase(double phi) noexcept {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod + 2pi can round up onto 2pi
    return r;
}

GpgElement gpg_element(double theta1, double theta2, GpgRule rule) noexcept {
    if (rule == GpgRule::Literal) {
        // equal weights l1 = l2 reduce theta_4 to half the phasor gap
        const double theta4 = std::abs(theta2 - theta1) / 2.0;
        return {wrap_phase(-(theta1 + theta4)), false};
    }
    const Complex sum = std::polar(1.0, theta1) + std::polar(1.0, theta2);
    if (std::abs(sum) < Tolerances::gpg_antipodal) return {wrap_phase(-theta1), true};
    return {wrap_phase(-std::arg(sum)), false};
}

GpgDesign gpg_phases(const GeometrySet& geom, int which_ris, const ScenarioConfig& config, GpgRule rule) {
    if (which_ris != 1 && which_ris != 2) fail(ErrorCode::InvalidInput, "gpg_phases: which_ris must be 1 or 2");
    const bool first = which_ris == 1;
    const double th_r_from_alice = geom[first ? Link::AI1 : Link::AI2].theta_r;
    const double th_t_to_bob = geom[first ? Link::I1B : Link::I2B].theta_t;
    const double th_r_from_bob = geom[first ? Link::BI1 : Link::BI2].theta_r;
    const double th_t_to_alice = geom[first ? Link::I1A : Link::I2A].theta_t;

    const int m = config.m;
    const double dl = config.d_over_lambda;
    GpgDesign out;
    out.reflection.on_off.assign(static_cast<std::size_t>(m), 1);
    out.reflection.phase.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const double theta1 =
            kTwoPi * (steering_phase(th_r_from_alice, i, m, dl) - steering_phase(th_t_to_bob, i, m, dl));
        const double theta2 =
            kTwoPi * (steering_phase(th_r_from_bob, i, m, dl) - steering_phase(th_t_to_alice, i, m, dl));
        const GpgElement e = gpg_element(theta1, theta2, rule);
        out.reflection.phase[static_cast<std::size_t>(i - 1)] = e.phase;
        if (e.degenerate) out.degenerate_elements.push_back(static_cast<std::size_t>(i - 1));
    }
    return out;
}

RisReflection random_phases(int m, std::uint64_t seed) {
    if (m < 1) fail(ErrorCode::InvalidInput, "random_phases: M must be at least 1");
    std::mt19937_64 engine(seed);
    RisReflection r;
    r.on_off.assign(static_cast<std::size_t>(m), 1);
    r.phase.resize(static_cast<std::size_t>(m));
    for (auto& p : r.phase) p = wrap_phase(kTwoPi * unit_interval(engine()));
    return r;
}

RisReflection zero_reflection(int m) {
    if (m < 1) fail(ErrorCode::InvalidInput, "zero_reflection: M must be at least 1");
    RisReflection r;
    r.on_off.assign(static_cast<std::size_t>(m), 0);
    r.phase.assign(static_cast<std::size_t>(m), 0.0);
    return r;
}

ReflectionPair design_reflections(const GeometrySet& geom, const ScenarioConfig& config, RisMode mode,
                                  std::uint64_t seed) {
    ReflectionPair out;
    auto gpg = [&](int which, GpgRule rule) {
        GpgDesign d = gpg_phases(geom, which, config, rule);
        for (std::size_t idx : d.degenerate_elements)
            out.degenerate_elements.push_back(which == 1 ? idx : idx + static_cast<std::size_t>(config.m));
        return std::move(d.reflection);
    };
    switch (mode) {
    case RisMode::Gpg:
        out.ris1 = gpg(1, GpgRule::Canonical);
        out.ris2 = gpg(2, GpgRule::Canonical);
        break;
    case RisMode::GpgLiteral:
        out.ris1 = gpg(1, GpgRule::Literal);
        out.ris2 = gpg(2, GpgRule::Literal);
        break;
    case RisMode::Random:
        out.ris1 = random_phases(config.m, seed);
        out.ris2 = random_phases(config.m, splitmix64(seed));
        break;
    case RisMode::None:
        out.ris1 = zero_reflection(config.m);
        out.ris2 = zero_reflection(config.m);
        break;
    case RisMode::Ris1Only:
        out.ris1 = gpg(1, GpgRule::Canonical);
        out.ris2 = zero_reflection(config.m);
        break;
    case RisMode::Ris2Only:
        out.ris1 = zero_reflection(config.m);
        out.ris2 = gpg(2, GpgRule::Canonical);
        break;
    }
    return out;
}

} // namespace risdm
