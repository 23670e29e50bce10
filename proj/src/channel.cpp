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

#include "risdm/channel.hpp"

#include <cmath>

#include "risdm/error.hpp"

namespace risdm {

namespace {

int node_size(Node node, const ScenarioConfig& config) noexcept {
    switch (node) {
    case Node::Alice: return config.na;
    case Node::Bob: return config.nb;
    case Node::Eve: return config.ne;
    case Node::Ris1:
    case Node::Ris2: return config.m;
    }
    return 0;
}

} // namespace

std::pair<int, int> link_dimensions(Link link, const ScenarioConfig& config) noexcept {
    return {node_size(link_target(link), config), node_size(link_source(link), config)};
}

ChannelSet build_channels(const GeometrySet& geom, const ScenarioConfig& config) {
    ChannelSet set;
    for (Link link : kAllLinks) {
        const auto [rx, tx] = link_dimensions(link, config);
        const LinkGeometry& g = geom[link];
        LinkChannel& ch = set.links[static_cast<std::size_t>(link)];
        ch.tx_steer = steering_vector(g.theta_t, tx, config.d_over_lambda);
        ch.rx_steer = steering_vector(g.theta_r, rx, config.d_over_lambda);
        ch.matrix = ch.rx_steer * ch.tx_steer.adjoint();
        ch.gain = g.gain;
    }
    auto gain = [&](Link l) { return geom[l].gain; };
    CompositeGains& c = set.composite;
    c.ai1b = gain(Link::AI1) * gain(Link::I1B);
    c.ai2b = gain(Link::AI2) * gain(Link::I2B);
    c.bi1b = gain(Link::BI1) * gain(Link::I1B);
    c.bi2b = gain(Link::BI2) * gain(Link::I2B);
    c.ai1e = gain(Link::AI1) * gain(Link::I1E);
    c.ai2e = gain(Link::AI2) * gain(Link::I2E);
    c.bi1e = gain(Link::BI1) * gain(Link::I1E);
    c.bi2e = gain(Link::BI2) * gain(Link::I2E);
    return set;
}

ComplexMatrix cascade(const ComplexMatrix& receive, const ComplexVector& theta, const ComplexMatrix& transmit) {
    return receive * (theta.asDiagonal() * transmit);
}

EffectiveChannels effective_channels(const ChannelSet& ch, const RisReflection& theta1, const RisReflection& theta2) {
    const auto m = static_cast<std::size_t>(ch.m());
    theta1.validate(m);
    theta2.validate(m);
    const ComplexVector t1 = theta1.coefficients();
    const ComplexVector t2 = theta2.coefficients();
    const CompositeGains& g = ch.composite;
    auto mat = [&](Link l) -> const ComplexMatrix& { return ch[l].matrix; };

    EffectiveChannels eff;
    eff.h_b = std::sqrt(g.ai1b) * cascade(mat(Link::I1B), t1, mat(Link::AI1)) +
              std::sqrt(g.ai2b) * cascade(mat(Link::I2B), t2, mat(Link::AI2)) +
              std::sqrt(ch[Link::AB].gain) * mat(Link::AB);
    // the reverse direction keeps the Alice-RIS-Bob weights and g_ab
    eff.h_a = std::sqrt(g.ai1b) * cascade(mat(Link::I1A), t1, mat(Link::BI1)) +
              std::sqrt(g.ai2b) * cascade(mat(Link::I2A), t2, mat(Link::BI2)) +
              std::sqrt(ch[Link::AB].gain) * mat(Link::BA);
    eff.h_e1 = std::sqrt(g.ai1e) * cascade(mat(Link::I1E), t1, mat(Link::AI1)) +
               std::sqrt(g.ai2e) * cascade(mat(Link::I2E), t2, mat(Link::AI2)) +
               std::sqrt(ch[Link::AE].gain) * mat(Link::AE);
    eff.h_e2 = std::sqrt(g.bi1e) * cascade(mat(Link::I1E), t1, mat(Link::BI1)) +
               std::sqrt(g.bi2e) * cascade(mat(Link::I2E), t2, mat(Link::BI2)) +
               std::sqrt(ch[Link::BE].gain) * mat(Link::BE);
    return eff;
}

} // namespace risdm
