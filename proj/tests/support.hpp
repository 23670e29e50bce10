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

#ifndef RISDM_TESTS_SUPPORT_HPP
#define RISDM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "risdm/scenario.hpp"

namespace risdm::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

inline ComplexVector random_unit(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> nd;
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(nd(rng), nd(rng));
    return v / v.norm();
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> nd;
    ComplexMatrix a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = Complex(nd(rng), nd(rng));
    return a;
}

inline ComplexMatrix random_hpd(std::mt19937_64& rng, Eigen::Index n, double ridge) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    return g * g.adjoint() + ridge * ComplexMatrix::Identity(n, n);
}

// Random planar layout with every pair of nodes at least `min_sep` apart.
inline Placement random_placement(std::mt19937_64& rng, double extent = 120.0, double min_sep = 8.0) {
    Placement p;
    std::vector<NodePose*> nodes = {&p.alice, &p.bob, &p.eve, &p.ris1, &p.ris2};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (;;) {
            NodePose cand{uniform(rng, -extent, extent), uniform(rng, -extent, extent), uniform(rng, 0.0, kPi)};
            bool ok = true;
            for (std::size_t j = 0; j < i; ++j)
                ok = ok && std::hypot(cand.x - nodes[j]->x, cand.y - nodes[j]->y) >= min_sep;
            if (ok) {
                *nodes[i] = cand;
                break;
            }
        }
    }
    return p;
}

inline ScenarioConfig random_config(std::mt19937_64& rng) {
    ScenarioConfig c;
    c.na = uniform_int(rng, 4, 16);
    c.nb = uniform_int(rng, 4, 16);
    c.ne = uniform_int(rng, 4, 16);
    c.m = uniform_int(rng, 8, 256);
    c.pa_dbm = uniform(rng, 10.0, 35.0);
    c.pb_dbm = uniform(rng, 10.0, 35.0);
    c.beta1 = uniform(rng, 0.05, 0.95);
    c.beta2 = uniform(rng, 0.05, 0.95);
    c.placement = random_placement(rng);
    c.seed = rng();
    return c;
}

inline RisMode random_ris_mode(std::mt19937_64& rng) {
    constexpr RisMode modes[] = {RisMode::Gpg, RisMode::GpgLiteral, RisMode::Random, RisMode::None,
                                 RisMode::Ris1Only, RisMode::Ris2Only};
    return modes[uniform_int(rng, 0, 5)];
}

// Positive gains spread over several decades, noise comparable to the weaker terms.
inline ScalarGains random_gains(std::mt19937_64& rng) {
    ScalarGains g;
    g.s1 = log_uniform(rng, 1e-1, 1e3);
    g.s2 = log_uniform(rng, 1e-3, 1e1);
    g.s3 = log_uniform(rng, 1e-1, 1e3);
    g.s4 = log_uniform(rng, 1e-3, 1e1);
    g.s5 = log_uniform(rng, 1e-2, 1e2);
    g.s6 = log_uniform(rng, 1e-2, 1e2);
    g.s7 = log_uniform(rng, 1e-2, 1e2);
    g.s8 = log_uniform(rng, 1e-2, 1e2);
    g.sigma2_a = log_uniform(rng, 0.1, 10.0);
    g.sigma2_b = log_uniform(rng, 0.1, 10.0);
    g.sigma2_e = log_uniform(rng, 0.1, 10.0);
    return g;
}

// Coefficients (highest first) of prod (x - r_i) for real roots.
inline std::vector<double> poly_from_roots(const std::vector<double>& roots) {
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= r * c[i];
        }
        c = next;
    }
    return c;
}

// Smallest max-distance over all pairings of two equally sized root sets.
inline double matched_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return INFINITY;
    std::vector<std::size_t> perm(b.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    double best = INFINITY;
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Relative per-root distance: |a - b| / max(1, |b|).
inline double matched_relative_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return INFINITY;
    std::vector<std::size_t> perm(b.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    double best = INFINITY;
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[perm[i]]) / std::max(1.0, std::abs(b[perm[i]])));
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace risdm::testing

#endif
