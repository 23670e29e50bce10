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

#ifndef RISDM_CHANNEL_HPP
#define RISDM_CHANNEL_HPP

#include <array>

#include "risdm/geometry.hpp"
#include "risdm/ris_phase.hpp"

namespace risdm {

// One rank-1 LoS link: matrix = rx_steer * tx_steer^H.
struct LinkChannel {
    ComplexVector tx_steer;  // h(theta_t), transmitter size
    ComplexVector rx_steer;  // h(theta_r), receiver size
    ComplexMatrix matrix;    // receiver size x transmitter size
    double gain = 0.0;
};

// Equivalent path-loss coefficients of the cascaded RIS links.
struct CompositeGains {
    double ai1b = 0.0, ai2b = 0.0;  // Alice-RIS-Bob
    double bi1b = 0.0, bi2b = 0.0;  // Bob-RIS-Bob
    double ai1e = 0.0, ai2e = 0.0;  // Alice-RIS-Eve
    double bi1e = 0.0, bi2e = 0.0;  // Bob-RIS-Eve
};

struct ChannelSet {
    std::array<LinkChannel, kLinkCount> links;
    CompositeGains composite;

    const LinkChannel& operator[](Link link) const noexcept { return links[static_cast<std::size_t>(link)]; }
    int na() const noexcept { return static_cast<int>((*this)[Link::AB].tx_steer.size()); }
    int nb() const noexcept { return static_cast<int>((*this)[Link::AB].rx_steer.size()); }
    int ne() const noexcept { return static_cast<int>((*this)[Link::AE].rx_steer.size()); }
    int m() const noexcept { return static_cast<int>((*this)[Link::AI1].rx_steer.size()); }
};

/// Array sizes of the two ends of a link.
std::pair<int, int> link_dimensions(Link link, const ScenarioConfig& config) noexcept;  // (rx, tx)

ChannelSet build_channels(const GeometrySet& geom, const ScenarioConfig& config);

struct EffectiveChannels {
    ComplexMatrix h_b;   // Nb x Na, Alice -> Bob
    ComplexMatrix h_a;   // Na x Nb, Bob -> Alice
    ComplexMatrix h_e1;  // Ne x Na, Alice -> Eve
    ComplexMatrix h_e2;  // Ne x Nb, Bob -> Eve
};

/// `receive * diag(theta) * transmit` without forming the M x M diagonal.
ComplexMatrix cascade(const ComplexMatrix& receive, const ComplexVector& theta, const ComplexMatrix& transmit);

EffectiveChannels effective_channels(const ChannelSet& channels, const RisReflection& theta1,
                                     const RisReflection& theta2);

} // namespace risdm

#endif
