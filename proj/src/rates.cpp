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

#include "risdm/rates.hpp"

#include <algorithm>
#include <cmath>

#include "risdm/error.hpp"

namespace risdm {

namespace {

double power(const ComplexVector& receive, const ComplexMatrix& h, const ComplexVector& transmit) {
    return std::norm(receive.dot(h * transmit));
}

double quad(const ComplexVector& v, const ComplexMatrix& x) { return v.dot(x * v).real(); }

ComplexMatrix outer(const ComplexMatrix& h, const ComplexVector& t, double scale) {
    const ComplexVector y = h * t;
    return scale * (y * y.adjoint());
}

void check_beta(double beta1, double beta2) {
    if (!(beta1 >= 0.0 && beta1 <= 1.0 && beta2 >= 0.0 && beta2 <= 1.0))
        fail(ErrorCode::InvalidInput, "ssr: power fractions must lie in [0, 1]");
}

} // namespace

void ScalarGains::validate() const {
    for (double v : s())
        if (!(v >= 0.0) || !std::isfinite(v)) fail(ErrorCode::InvalidInput, "scalar gains must be finite and >= 0");
    for (double v : {sigma2_a, sigma2_b, sigma2_e})
        if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::InvalidInput, "noise powers must be finite and > 0");
}

ScalarGains scalar_gains(const EffectiveChannels& eff, const BeamformerSet& bf, const ScenarioConfig& config) {
    const double pa = config.pa_mw();
    const double pb = config.pb_mw();
    ScalarGains g;
    g.s1 = pb * power(bf.v_ar, eff.h_a, bf.v_bt);
    g.s2 = pb * power(bf.v_ar, eff.h_a, bf.w_b);
    g.s3 = pa * power(bf.v_br, eff.h_b, bf.v_at);
    g.s4 = pa * power(bf.v_br, eff.h_b, bf.w_a);
    g.s5 = pa * power(bf.v_er, eff.h_e1, bf.v_at);
    g.s6 = pb * power(bf.v_er, eff.h_e2, bf.v_bt);
    g.s7 = pa * power(bf.v_er, eff.h_e1, bf.w_a);
    g.s8 = pb * power(bf.v_er, eff.h_e2, bf.w_b);
    g.sigma2_a = config.sigma2_a();
    g.sigma2_b = config.sigma2_b();
    g.sigma2_e = config.sigma2_e();
    return g;
}

double ssr_unclamped(double beta1, double beta2, const ScalarGains& g) {
    check_beta(beta1, beta2);
    const double de = (1.0 - beta1) * g.s7 + (1.0 - beta2) * g.s8 + g.sigma2_e;
    return std::log2(1.0 + beta2 * g.s1 / ((1.0 - beta2) * g.s2 + g.sigma2_a)) +
           std::log2(1.0 + beta1 * g.s3 / ((1.0 - beta1) * g.s4 + g.sigma2_b)) -
           std::log2(1.0 + beta1 * g.s5 / de) - std::log2(1.0 + beta2 * g.s6 / de);
}

double ssr(double beta1, double beta2, const ScalarGains& g) { return std::max(0.0, ssr_unclamped(beta1, beta2, g)); }

double RateTriple::ssr() const noexcept { return std::max(0.0, r_a + r_b - r_e); }

RateTriple rates_matrix_form(const EffectiveChannels& eff, const BeamformerSet& bf, const ScenarioConfig& config,
                             double beta1, double beta2) {
    check_beta(beta1, beta2);
    const double pa = config.pa_mw();
    const double pb = config.pb_mw();
    const ComplexMatrix a = outer(eff.h_a, bf.v_bt, beta2 * pb);
    const ComplexMatrix b = outer(eff.h_a, bf.w_b, (1.0 - beta2) * pb);
    const ComplexMatrix c = outer(eff.h_b, bf.v_at, beta1 * pa);
    const ComplexMatrix d = outer(eff.h_b, bf.w_a, (1.0 - beta1) * pa);
    const ComplexMatrix e = outer(eff.h_e1, bf.v_at, beta1 * pa);
    const ComplexMatrix f = outer(eff.h_e2, bf.v_bt, beta2 * pb);
    const ComplexMatrix gj = outer(eff.h_e1, bf.w_a, (1.0 - beta1) * pa) + outer(eff.h_e2, bf.w_b, (1.0 - beta2) * pb);

    RateTriple r;
    r.r_a = std::log2(1.0 + quad(bf.v_ar, a) / (quad(bf.v_ar, b) + config.sigma2_a()));
    r.r_b = std::log2(1.0 + quad(bf.v_br, c) / (quad(bf.v_br, d) + config.sigma2_b()));
    const double de = quad(bf.v_er, gj) + config.sigma2_e();
    r.r_e = std::log2(1.0 + quad(bf.v_er, e) / de) + std::log2(1.0 + quad(bf.v_er, f) / de);
    return r;
}

RateTriple rates_matrix_form(const EffectiveChannels& eff, const BeamformerSet& bf, const ScenarioConfig& config) {
    return rates_matrix_form(eff, bf, config, config.beta1, config.beta2);
}

} // namespace risdm
