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

#include "risdm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "risdm/error.hpp"

namespace risdm {

namespace {

struct LinkInfo {
    Link link;
    std::string_view name;
    Node source;
    Node target;
};

constexpr std::array<LinkInfo, kLinkCount> kLinkTable = {{
    {Link::AI1, "ai1", Node::Alice, Node::Ris1},
    {Link::AI2, "ai2", Node::Alice, Node::Ris2},
    {Link::AB, "ab", Node::Alice, Node::Bob},
    {Link::AE, "ae", Node::Alice, Node::Eve},
    {Link::BI1, "bi1", Node::Bob, Node::Ris1},
    {Link::BI2, "bi2", Node::Bob, Node::Ris2},
    {Link::BA, "ba", Node::Bob, Node::Alice},
    {Link::BE, "be", Node::Bob, Node::Eve},
    {Link::I1A, "i1a", Node::Ris1, Node::Alice},
    {Link::I2A, "i2a", Node::Ris2, Node::Alice},
    {Link::I1B, "i1b", Node::Ris1, Node::Bob},
    {Link::I2B, "i2b", Node::Ris2, Node::Bob},
    {Link::I1E, "i1e", Node::Ris1, Node::Eve},
    {Link::I2E, "i2e", Node::Ris2, Node::Eve},
}};

const LinkInfo& info(Link link) noexcept { return kLinkTable[static_cast<std::size_t>(link)]; }

bool is_ris(Node node) noexcept { return node == Node::Ris1 || node == Node::Ris2; }

// Angle between the array axis of `pose` and the unit direction (ux, uy),
// folded into [0, pi] because a ULA cannot tell front from back.
double axis_angle(const NodePose& pose, double ux, double uy) {
    const double ax = std::cos(pose.orientation);
    const double ay = std::sin(pose.orientation);
    return std::acos(std::clamp(ax * ux + ay * uy, -1.0, 1.0));
}

void check_angle(double theta, Link link) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
        fail(ErrorCode::InvalidGeometry, "link " + std::string(link_name(link)) + ": angle outside [0, pi]");
}

} // namespace

std::string_view link_name(Link link) noexcept { return info(link).name; }

std::optional<Link> link_from_name(std::string_view name) noexcept {
    for (const auto& entry : kLinkTable)
        if (entry.name == name) return entry.link;
    return std::nullopt;
}

Node link_source(Link link) noexcept { return info(link).source; }
Node link_target(Link link) noexcept { return info(link).target; }
bool touches_ris(Link link) noexcept { return is_ris(info(link).source) || is_ris(info(link).target); }

std::string_view node_name(Node node) noexcept {
    switch (node) {
    case Node::Alice: return "alice";
    case Node::Bob: return "bob";
    case Node::Eve: return "eve";
    case Node::Ris1: return "ris1";
    case Node::Ris2: return "ris2";
    }
    return "?";
}

const NodePose& Placement::pose(Node node) const noexcept {
    switch (node) {
    case Node::Alice: return alice;
    case Node::Bob: return bob;
    case Node::Eve: return eve;
    case Node::Ris1: return ris1;
    case Node::Ris2: break;
    }
    return ris2;
}

NodePose& Placement::pose(Node node) noexcept {
    return const_cast<NodePose&>(static_cast<const Placement&>(*this).pose(node));
}

Placement polar_placement(const PolarLayout& layout) {
    auto polar = [](double d, double theta) { return NodePose{d * std::cos(theta), d * std::sin(theta), 0.0}; };
    Placement p;
    p.alice = NodePose{};
    p.ris1 = polar(layout.d_ai1, layout.theta_ai1);
    p.ris2 = polar(layout.d_ai2, layout.theta_ai2);
    p.bob = polar(layout.d_ab, layout.theta_ab);
    p.eve = polar(layout.d_ae, layout.theta_ae);
    return p;
}

double dbm_to_mw(double dbm) noexcept { return std::pow(10.0, dbm / 10.0); }

double ScenarioConfig::pa_mw() const { return dbm_to_mw(pa_dbm); }
double ScenarioConfig::pb_mw() const { return dbm_to_mw(pb_dbm); }
double ScenarioConfig::sigma2_e() const { return dbm_to_mw(sigma2_e_dbm); }
double ScenarioConfig::sigma2_a() const { return noise_ratio * sigma2_e(); }
double ScenarioConfig::sigma2_b() const { return noise_ratio * sigma2_e(); }

void ScenarioConfig::validate() const {
    if (na < 1 || nb < 1 || ne < 1 || m < 1)
        fail(ErrorCode::InvalidInput, "config: Na, Nb, Ne and M must be at least 1");
    if (!(beta1 >= 0.0 && beta1 <= 1.0) || !(beta2 >= 0.0 && beta2 <= 1.0))
        fail(ErrorCode::InvalidInput, "config: beta1 and beta2 must lie in [0, 1]");
    if (!(d_over_lambda > 0.0) || !std::isfinite(d_over_lambda))
        fail(ErrorCode::InvalidInput, "config: d_over_lambda must be positive");
    for (double v : {pa_dbm, pb_dbm, sigma2_e_dbm})
        if (!std::isfinite(v)) fail(ErrorCode::InvalidInput, "config: powers must be finite");
    if (!(noise_ratio > 0.0) || !std::isfinite(noise_ratio))
        fail(ErrorCode::InvalidInput, "config: noise_ratio must be positive");
    if (!(pathloss_alpha > 0.0) || !std::isfinite(pathloss_alpha))
        fail(ErrorCode::InvalidInput, "config: pathloss_alpha must be positive");
    if (!std::isfinite(pathloss_exp.direct) || !std::isfinite(pathloss_exp.ris))
        fail(ErrorCode::InvalidInput, "config: pathloss_exp must be finite");
}

double steering_phase(double theta, int n_index, int n, double d_over_lambda) noexcept {
    return -(static_cast<double>(n_index) - (static_cast<double>(n) + 1.0) / 2.0) * d_over_lambda * std::cos(theta);
}

ComplexVector steering_vector(double theta, int n, double d_over_lambda) {
    if (n < 1) fail(ErrorCode::InvalidInput, "steering_vector: N must be at least 1");
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
        fail(ErrorCode::InvalidInput, "steering_vector: theta must lie in [0, pi]");
    ComplexVector h(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        const double psi = steering_phase(theta, i + 1, n, d_over_lambda);
        h(i) = std::polar(scale, 2.0 * kPi * psi);
    }
    return h;
}

double path_loss(double distance, double alpha, double exponent) {
    if (!(distance > 0.0) || !std::isfinite(distance))
        fail(ErrorCode::InvalidInput, "path_loss: distance must be positive");
    return alpha / std::pow(distance, exponent);
}

GeometrySet build_geometry(const ScenarioConfig& config) {
    config.validate();
    const Placement& p = config.placement;

    for (Node a : {Node::Alice, Node::Bob, Node::Eve, Node::Ris1, Node::Ris2}) {
        const NodePose& pa = p.pose(a);
        if (!std::isfinite(pa.x) || !std::isfinite(pa.y) || !std::isfinite(pa.orientation))
            fail(ErrorCode::InvalidGeometry, "placement: non-finite pose for " + std::string(node_name(a)));
    }

    GeometrySet geom;
    for (Link link : kAllLinks) {
        const NodePose& tx = p.pose(link_source(link));
        const NodePose& rx = p.pose(link_target(link));
        const double dx = rx.x - tx.x;
        const double dy = rx.y - tx.y;
        const double dist = std::hypot(dx, dy);

        LinkGeometry& g = geom[link];
        const auto ov = p.overrides.find(link);
        const LinkOverride* o = ov != p.overrides.end() ? &ov->second : nullptr;

        const bool pinned = o && o->theta_t && o->theta_r && o->distance;
        if (!(dist > 0.0) && !pinned)
            fail(ErrorCode::InvalidGeometry, "placement: coincident nodes on link " + std::string(link_name(link)));

        if (dist > 0.0) {
            g.distance = dist;
            g.theta_t = axis_angle(tx, dx / dist, dy / dist);
            g.theta_r = axis_angle(rx, dx / dist, dy / dist);
        }
        if (o) {
            if (o->theta_t) g.theta_t = *o->theta_t;
            if (o->theta_r) g.theta_r = *o->theta_r;
            if (o->distance) g.distance = *o->distance;
        }
        check_angle(g.theta_t, link);
        check_angle(g.theta_r, link);
        if (!(g.distance > 0.0))
            fail(ErrorCode::InvalidGeometry, "link " + std::string(link_name(link)) + ": distance must be positive");

        const double c = touches_ris(link) ? config.pathloss_exp.ris : config.pathloss_exp.direct;
        g.gain = path_loss(g.distance, config.pathloss_alpha, c);
    }
    return geom;
}

} // namespace risdm
