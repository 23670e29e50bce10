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

#ifndef RISDM_RATES_HPP
#define RISDM_RATES_HPP

#include <array>

#include "risdm/beamforming.hpp"

namespace risdm {

// Squared channel-beamformer magnitudes scaled by transmit power (mW).
struct ScalarGains {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0, s5 = 0.0, s6 = 0.0, s7 = 0.0, s8 = 0.0;
    double sigma2_a = 0.0, sigma2_b = 0.0, sigma2_e = 0.0;

    std::array<double, 8> s() const noexcept { return {s1, s2, s3, s4, s5, s6, s7, s8}; }
    void validate() const;
};

ScalarGains scalar_gains(const EffectiveChannels& eff, const BeamformerSet& bf, const ScenarioConfig& config);

/// R_a + R_b - R_e without the clamp at zero.
double ssr_unclamped(double beta1, double beta2, const ScalarGains& g);
double ssr(double beta1, double beta2, const ScalarGains& g);

struct RateTriple {
    double r_a = 0.0, r_b = 0.0, r_e = 0.0;
    double ssr() const noexcept;
};

/// Rates through the quadratic forms v^H X v of the A..J matrices.
RateTriple rates_matrix_form(const EffectiveChannels& eff, const BeamformerSet& bf, const ScenarioConfig& config,
                             double beta1, double beta2);
RateTriple rates_matrix_form(const EffectiveChannels& eff, const BeamformerSet& bf, const ScenarioConfig& config);

} // namespace risdm

#endif
