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

#ifndef RISDM_GEOMETRY_HPP
#define RISDM_GEOMETRY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "risdm/numeric.hpp"

namespace risdm {

inline constexpr double kPi = 3.14159265358979323846;

enum class Node { Alice, Bob, Eve, Ris1, Ris2 };

// Directed links. The matrix of a link maps transmitter antennas to receiver
// antennas: rows = receiver size, cols = transmitter size.
enum class Link : std::size_t {
    AI1, AI2, AB, AE,    // Alice -> RIS-1, RIS-2, Bob, Eve
    BI1, BI2, BA, BE,    // Bob -> RIS-1, RIS-2, Alice, Eve
    I1A, I2A, I1B, I2B,  // RIS -> Alice, RIS -> Bob
    I1E, I2E,            // RIS -> Eve
};
inline constexpr std::size_t kLinkCount = 14;
inline constexpr std::array<Link, kLinkCount> kAllLinks = {
    Link::AI1, Link::AI2, Link::AB, Link::AE, Link::BI1, Link::BI2, Link::BA,
    Link::BE, Link::I1A, Link::I2A, Link::I1B, Link::I2B, Link::I1E, Link::I2E};

std::string_view link_name(Link link) noexcept;
std::optional<Link> link_from_name(std::string_view name) noexcept;
Node link_source(Link link) noexcept;
Node link_target(Link link) noexcept;
std::string_view node_name(Node node) noexcept;
bool touches_ris(Link link) noexcept;

struct NodePose {
    double x = 0.0;
    double y = 0.0;
    double orientation = 0.0;  // array axis angle against the x-axis (rad)
};

struct LinkOverride {
    std::optional<double> theta_t;
    std::optional<double> theta_r;
    std::optional<double> distance;
};

struct Placement {
    NodePose alice;
    NodePose bob;
    NodePose eve;
    NodePose ris1;
    NodePose ris2;
    std::map<Link, LinkOverride> overrides;

    const NodePose& pose(Node node) const noexcept;
    NodePose& pose(Node node) noexcept;
};

// Polar description of the layout around Alice (at the origin).
struct PolarLayout {
    double d_ai1 = 30.0;
    double theta_ai1 = kPi / 8.0;
    double d_ai2 = 30.0;
    double theta_ai2 = 7.0 * kPi / 8.0;
    double d_ab = 80.0;
    double theta_ab = 5.0 * kPi / 9.0;
    double d_ae = 80.0;
    double theta_ae = 4.0 * kPi / 9.0;
};

/// Places every node on the plane from polar coordinates seen from Alice;
/// all arrays lie along the x-axis.
Placement polar_placement(const PolarLayout& layout);

struct PathLossExponents {
    double direct = 2.0;  // links between two terminals (Alice, Bob, Eve)
    double ris = 2.0;     // links with a RIS at one end
};

struct ScenarioConfig {
    int na = 8;
    int nb = 8;
    int ne = 8;
    int m = 100;
    double d_over_lambda = 0.5;
    double pa_dbm = 27.0;
    double pb_dbm = 27.0;
    double beta1 = 0.9;
    double beta2 = 0.9;
    double sigma2_e_dbm = -73.010299956639813;  // sigma2_a = -70 dBm with noise_ratio 2
    double noise_ratio = 2.0;
    double pathloss_alpha = 1e-3;
    PathLossExponents pathloss_exp;
    Placement placement = polar_placement(PolarLayout{});
    std::uint64_t seed = 1;

    void validate() const;

    double pa_mw() const;
    double pb_mw() const;
    double sigma2_e() const;
    double sigma2_a() const;
    double sigma2_b() const;
};

double dbm_to_mw(double dbm) noexcept;

struct LinkGeometry {
    double theta_t = 0.0;
    double theta_r = 0.0;
    double distance = 0.0;
    double gain = 0.0;
};

struct GeometrySet {
    std::array<LinkGeometry, kLinkCount> links{};
    const LinkGeometry& operator[](Link link) const noexcept { return links[static_cast<std::size_t>(link)]; }
    LinkGeometry& operator[](Link link) noexcept { return links[static_cast<std::size_t>(link)]; }
};

/// Normalized ULA response: entry n is exp(j 2 pi Psi(n)) / sqrt(N) with
/// Psi(n) = -(n - (N+1)/2) d cos(theta) / lambda.
ComplexVector steering_vector(double theta, int n, double d_over_lambda);

/// Psi_theta(n) for n = 1..N.
double steering_phase(double theta, int n_index, int n, double d_over_lambda) noexcept;

/// g = alpha / d^c.
double path_loss(double distance, double alpha, double exponent);

/// Distances, departure/arrival angles and gains for all fourteen links.
GeometrySet build_geometry(const ScenarioConfig& config);

} // namespace risdm

#endif
