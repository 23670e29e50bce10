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

#include <gtest/gtest.h>

#include <numeric>

#include "risdm/channel.hpp"
#include "risdm/error.hpp"
#include "risdm/ris_phase.hpp"
#include "../support.hpp"

using namespace risdm;
using namespace risdm::testing;

namespace {

double angle_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

} // namespace

TEST(WrapPhase, RangeIsHalfOpen) {
    EXPECT_DOUBLE_EQ(wrap_phase(0.0), 0.0);
    EXPECT_NEAR(wrap_phase(-kPi / 2.0), 1.5 * kPi, 1e-15);
    EXPECT_NEAR(wrap_phase(5.0 * kPi), kPi, 1e-14);
    std::mt19937_64 rng(21);
    for (int k = 0; k < 1000; ++k) {
        const double w = wrap_phase(uniform(rng, -100.0, 100.0));
        EXPECT_GE(w, 0.0);
        EXPECT_LT(w, 2.0 * kPi);
    }
}

TEST(GpgElement, CoincidentPhasors) {
    for (GpgRule rule : {GpgRule::Canonical, GpgRule::Literal}) {
        const GpgElement e = gpg_element(1.3, 1.3, rule);
        EXPECT_LT(angle_distance(e.phase, -1.3), 1e-14);
        EXPECT_FALSE(e.degenerate);
    }
}

TEST(GpgElement, QuarterTurn) {
    for (GpgRule rule : {GpgRule::Canonical, GpgRule::Literal}) {
        const GpgElement e = gpg_element(0.0, kPi / 2.0, rule);
        EXPECT_LT(angle_distance(e.phase, -kPi / 4.0), 1e-14);
    }
}

TEST(GpgElement, AntipodalIsFlagged) {
    const GpgElement e = gpg_element(0.4, 0.4 + kPi, GpgRule::Canonical);
    EXPECT_TRUE(e.degenerate);
    EXPECT_GE(e.phase, 0.0);
    EXPECT_LT(e.phase, 2.0 * kPi);
}

TEST(GpgElement, CanonicalAlignsTheParallelogramDiagonal) {
    std::mt19937_64 rng(22);
    for (int k = 0; k < 10000; ++k) {
        const double t1 = uniform(rng, -20.0, 20.0), t2 = uniform(rng, -20.0, 20.0);
        const Complex sum = std::polar(1.0, t1) + std::polar(1.0, t2);
        const GpgElement e = gpg_element(t1, t2, GpgRule::Canonical);
        if (e.degenerate) continue;
        EXPECT_LT(std::abs(sum) - (std::polar(1.0, e.phase) * sum).real(), 1e-12);
    }
}

TEST(GpgElement, RulesAgreeWhenSecondPhaseLeadsByLessThanPi) {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 1000; ++k) {
        const double t1 = uniform(rng, 0.0, 2.0 * kPi);
        const double t2 = t1 + uniform(rng, 0.0, 0.999 * kPi);
        EXPECT_LT(angle_distance(gpg_element(t1, t2, GpgRule::Canonical).phase,
                                 gpg_element(t1, t2, GpgRule::Literal).phase),
                  1e-12);
    }
}

TEST(RandomPhases, DeterministicInSeed) {
    const RisReflection a = random_phases(256, 99), b = random_phases(256, 99), c = random_phases(256, 100);
    EXPECT_EQ(a.phase, b.phase);
    EXPECT_NE(a.phase, c.phase);
    for (std::uint8_t on : a.on_off) EXPECT_EQ(on, 1);
}

TEST(RandomPhases, UniformMean) {
    const int m = 100000;
    const RisReflection r = random_phases(m, 7);
    const double mean = std::accumulate(r.phase.begin(), r.phase.end(), 0.0) / m;
    const double sd = 2.0 * kPi / std::sqrt(12.0) / std::sqrt(static_cast<double>(m));
    EXPECT_LT(std::abs(mean - kPi), 3.0 * sd);
    for (double p : r.phase) {
        ASSERT_GE(p, 0.0);
        ASSERT_LT(p, 2.0 * kPi);
    }
}

TEST(Reflection, ZeroReflectionIsOff) {
    const RisReflection z = zero_reflection(5);
    EXPECT_EQ(z.coefficients().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Reflection, ValidateRejectsSizeMismatch) {
    const RisReflection r = random_phases(4, 1);
    try {
        r.validate(5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
}

TEST(DesignReflections, ModeMasks) {
    const ScenarioConfig c;
    const GeometrySet g = build_geometry(c);
    const ReflectionPair gpg = design_reflections(g, c, RisMode::Gpg, 1);
    const ReflectionPair none = design_reflections(g, c, RisMode::None, 1);
    const ReflectionPair r1 = design_reflections(g, c, RisMode::Ris1Only, 1);
    const ReflectionPair r2 = design_reflections(g, c, RisMode::Ris2Only, 1);
    EXPECT_EQ(none.ris1.coefficients().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(none.ris2.coefficients().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(r1.ris1.phase, gpg.ris1.phase);
    EXPECT_EQ(r1.ris2.coefficients().cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(r2.ris2.phase, gpg.ris2.phase);
    EXPECT_EQ(r2.ris1.coefficients().cwiseAbs().maxCoeff(), 0.0);
}

TEST(DesignReflections, RandomModeDrawsIndependentSurfaces) {
    const ScenarioConfig c;
    const GeometrySet g = build_geometry(c);
    const ReflectionPair a = design_reflections(g, c, RisMode::Random, 5);
    const ReflectionPair b = design_reflections(g, c, RisMode::Random, 5);
    EXPECT_EQ(a.ris1.phase, b.ris1.phase);
    EXPECT_EQ(a.ris2.phase, b.ris2.phase);
    EXPECT_NE(a.ris1.phase, a.ris2.phase);
}

TEST(DesignReflections, GpgMaximizesEachElementAgainstChannelPhases) {
    std::mt19937_64 rng(24);
    for (int k = 0; k < 10; ++k) {
        ScenarioConfig c = random_config(rng);
        c.m = uniform_int(rng, 1, 1024);
        const GeometrySet g = build_geometry(c);
        const ChannelSet ch = build_channels(g, c);
        const ReflectionPair rp = design_reflections(g, c, RisMode::Gpg, 1);
        for (int m = 0; m < c.m; ++m) {
            const Complex sum = static_cast<double>(c.m) * (ch[Link::AI1].rx_steer(m) * std::conj(ch[Link::I1B].tx_steer(m)) +
                                                            ch[Link::BI1].rx_steer(m) * std::conj(ch[Link::I1A].tx_steer(m)));
            EXPECT_LT(std::abs(sum) - (std::polar(1.0, rp.ris1.phase[static_cast<std::size_t>(m)]) * sum).real(), 1e-12);
        }
    }
}

TEST(DesignReflections, GpgBeatsRandomOnReflectedPower) {
    // per-element alignment makes the summed reflected phasor at least as large as any random draw
    const ScenarioConfig c;
    const GeometrySet g = build_geometry(c);
    const ChannelSet ch = build_channels(g, c);
    auto reflected = [&](const RisReflection& r) {
        const ComplexVector t = r.coefficients();
        Complex s(0.0, 0.0);
        for (int m = 0; m < c.m; ++m)
            s += t(m) * (ch[Link::AI1].rx_steer(m) * std::conj(ch[Link::I1B].tx_steer(m)) +
                         ch[Link::BI1].rx_steer(m) * std::conj(ch[Link::I1A].tx_steer(m)));
        return std::abs(s);
    };
    const double gpg = reflected(design_reflections(g, c, RisMode::Gpg, 1).ris1);
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        EXPECT_LE(reflected(design_reflections(g, c, RisMode::Random, seed).ris1), gpg + 1e-12);
}
