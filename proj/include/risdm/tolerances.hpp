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

#ifndef RISDM_TOLERANCES_HPP
#define RISDM_TOLERANCES_HPP

namespace risdm {

// All numerical thresholds used by the library live here.
struct Tolerances {
    // generalized eigenproblem: B is rejected when cond(B) exceeds this
    static constexpr double max_condition = 1e14;
    // relative cutoff for singular values treated as zero in pinv
    static constexpr double pinv_relative = 1e-13;

    // a ZF branch whose projected steering vector is shorter than this is dropped
    static constexpr double zf_branch_norm = 1e-10;
    // u = T^H h shorter than this means Eve lies inside the CM subspace
    static constexpr double an_projection_norm = 1e-12;
    // an MRC branch scalar below this magnitude gets weight 0
    static constexpr double mrc_branch_magnitude = 1e-300;

    // antipodal GPG phasors: |e^{j t1} + e^{j t2}| below this is degenerate
    static constexpr double gpg_antipodal = 1e-12;

    // Newton-Raphson stop rule |beta^{p+1} - beta^p| <= newton_step
    static constexpr double newton_step = 1e-5;
    static constexpr int newton_max_iter = 200;
    static constexpr double newton_min_derivative = 1e-14;
    static constexpr int newton_restarts = 8;
    // deflation refuses roots whose backward residual exceeds this
    static constexpr double deflation_residual = 1e-6;
    // a complex root counts as real when |Im| is below this
    static constexpr double root_realness = 1e-8;
    // Ferrari switches resolvent when |eta1| falls below this (relative)
    static constexpr double ferrari_eta1 = 1e-10;
    // roots within this distance of [0, 1] are polished on the factored stationarity form
    static constexpr double polish_window = 1e-2;
    // leading polynomial coefficients below this fraction of the largest are trimmed
    static constexpr double leading_trim = 1e-10;
    // sextic_coeffs rejects |q1 q7 - q2 q6| below this fraction of the coefficient scale
    static constexpr double sextic_degenerate = 1e-300;
};

} // namespace risdm

#endif
