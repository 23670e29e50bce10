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

#include "risdm/error.hpp"
#include "risdm/rates.hpp"
#include "risdm/scenario.hpp"
#include "../support.hpp"

using namespace risdm;
using namespace risdm::testing;

namespace {

ScalarGains uniform_gains(double s, double sigma) {
    ScalarGains g;
    g.s1 = g.s2 = g.s3 = g.s4 = g.s5 = g.s6 = g.s7 = g.s8 = s;
    g.sigma2_a = g.sigma2_b = g.sigma2_e = sigma;
    return g;
}

} // namespace

TEST(Ssr, HandEvaluatedExample) {
    ScalarGains g = uniform_gains(1.0, 1.0);
    g.s1 = g.s3 = 4.0;
    // each legitimate term: log2(1 + 2 / 1.5) = log2(7/3); each Eve term: log2(1 + 0.5 / 2) = log2(5/4)
    const double expected = 2.0 * std::log2(7.0 / 3.0) - 2.0 * std::log2(5.0 / 4.0);
    EXPECT_NEAR(ssr(0.5, 0.5, g), expected, 1e-14);
    EXPECT_NEAR(expected, 2.0 * std::log2(28.0 / 15.0), 1e-14);
}

TEST(Ssr, NoSignalPowerGivesZero) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(ssr(0.0, 0.0, random_gains(rng)), 0.0);
}

TEST(Ssr, EavesdropperFreeReduction) {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 100; ++k) {
        ScalarGains g = random_gains(rng);
        g.s5 = g.s6 = 0.0;
        EXPECT_NEAR(ssr(1.0, 1.0, g), std::log2(1.0 + g.s1 / g.sigma2_a) + std::log2(1.0 + g.s3 / g.sigma2_b), 1e-12);
    }
}

TEST(Ssr, ClampedAtZeroAndOutOfRangeRejected) {
    ScalarGains g = uniform_gains(1.0, 1.0);
    g.s5 = g.s6 = 100.0;
    EXPECT_LT(ssr_unclamped(0.5, 0.5, g), 0.0);
    EXPECT_EQ(ssr(0.5, 0.5, g), 0.0);
    for (auto [b1, b2] : {std::pair{-0.1, 0.5}, std::pair{0.5, 1.5}, std::pair{std::nan(""), 0.5}}) {
        try {
            ssr(b1, b2, g);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
        }
    }
}

TEST(ScalarGains, ValidateRejectsNegative) {
    ScalarGains g = uniform_gains(1.0, 1.0);
    g.s4 = -1e-9;
    EXPECT_THROW(g.validate(), Error);
}

TEST(Rates, DualFormsAgree) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 100; ++k) {
        const ScenarioConfig c = random_config(rng);
        const Scenario s = build_scenario(c);
        const Evaluation e = evaluate(s, random_ris_mode(rng), uniform_int(rng, 0, 1) ? Method::Leakage : Method::MaxSv, rng());
        const double b1 = uniform(rng, 0.0, 1.0), b2 = uniform(rng, 0.0, 1.0);
        EXPECT_LT(std::abs(ssr(b1, b2, e.gains) - rates_matrix_form(e.effective, e.beamformers, c, b1, b2).ssr()), 1e-10);
    }
}

TEST(Rates, ConfigBetaOverloadUsesConfig) {
    const ScenarioConfig c;
    const Evaluation e = evaluate(build_scenario(c), RisMode::Gpg, Method::MaxSv, 1);
    const RateTriple a = rates_matrix_form(e.effective, e.beamformers, c);
    const RateTriple b = rates_matrix_form(e.effective, e.beamformers, c, c.beta1, c.beta2);
    EXPECT_EQ(a.r_a, b.r_a);
    EXPECT_EQ(a.r_e, b.r_e);
}

TEST(Rates, AliceRateVanishesWithoutBobsSignal) {
    const ScenarioConfig c;
    const Evaluation e = evaluate(build_scenario(c), RisMode::Gpg, Method::Leakage, 1);
    EXPECT_EQ(rates_matrix_form(e.effective, e.beamformers, c, 0.7, 0.0).r_a, 0.0);
}

TEST(Rates, ZeroChannelsGiveZeroRates) {
    const ScenarioConfig c;
    const Evaluation e = evaluate(build_scenario(c), RisMode::Gpg, Method::MaxSv, 1);
    EffectiveChannels zero = e.effective;
    zero.h_a.setZero();
    zero.h_b.setZero();
    zero.h_e1.setZero();
    zero.h_e2.setZero();
    const RateTriple r = rates_matrix_form(zero, e.beamformers, c, 0.6, 0.6);
    EXPECT_EQ(r.r_a, 0.0);
    EXPECT_EQ(r.r_b, 0.0);
    EXPECT_EQ(r.r_e, 0.0);
    const ScalarGains g = scalar_gains(zero, e.beamformers, c);
    for (double s : g.s()) EXPECT_EQ(s, 0.0);
}

TEST(ScalarGains, LinearInAlicePower) {
    const ScenarioConfig c;
    const Evaluation e = evaluate(build_scenario(c), RisMode::Gpg, Method::MaxSv, 1);
    ScenarioConfig doubled = c;
    doubled.pa_dbm += 10.0 * std::log10(2.0);
    const ScalarGains a = scalar_gains(e.effective, e.beamformers, c);
    const ScalarGains b = scalar_gains(e.effective, e.beamformers, doubled);
    EXPECT_NEAR(b.s3, 2.0 * a.s3, 1e-12 * a.s3);
    EXPECT_NEAR(b.s4, 2.0 * a.s4, 1e-12 * std::max(a.s4, 1e-300));
    EXPECT_NEAR(b.s5, 2.0 * a.s5, 1e-12 * a.s5);
    EXPECT_NEAR(b.s7, 2.0 * a.s7, 1e-12 * a.s7);
    EXPECT_EQ(b.s1, a.s1);
    EXPECT_EQ(b.s2, a.s2);
    EXPECT_EQ(b.s6, a.s6);
    EXPECT_EQ(b.s8, a.s8);
}

TEST(ScalarGains, MaxSvAnLeavesBobAlmostClean) {
    // w_a lies in the null space of v_at; on a rank-one H_b Bob sees almost none of it
    ScenarioConfig c;
    c.m = 1;
    for (Link l : {Link::AI1, Link::AI2}) c.placement.overrides[l].distance = 1e6;
    const Evaluation e = evaluate(build_scenario(c), RisMode::None, Method::MaxSv, 1);
    EXPECT_LT(e.gains.s4, 1e-12 * e.gains.s3);
}
