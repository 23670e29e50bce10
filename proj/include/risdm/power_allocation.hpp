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

#ifndef RISDM_POWER_ALLOCATION_HPP
#define RISDM_POWER_ALLOCATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "risdm/rates.hpp"

namespace risdm {

enum class PaMode { Fixed, Epa, Es1d, Es2d, Hicf };

std::string_view pa_mode_name(PaMode mode) noexcept;
std::optional<PaMode> pa_mode_from_name(std::string_view name) noexcept;

// Quartic numerator/denominator of phi(beta) = N(beta)/D(beta) and the
// stationarity sextic N'D - ND'.
struct SexticCoeffs {
    std::array<double, 10> q{};      // q1..q10
    std::array<double, 7> poly{};    // N'D - ND', highest degree first
    std::array<double, 6> alpha{};   // poly / poly[0] without the leading 1

    std::array<double, 7> monic() const noexcept;
};

/// q1..q10 of the diagonal objective.
std::array<double, 10> quartic_products(const ScalarGains& g) noexcept;
/// Unnormalized stationarity polynomial from q1..q10.
std::array<double, 7> stationarity_polynomial(const std::array<double, 10>& q) noexcept;

/// Throws DegeneratePolynomial when |q1 q7 - q2 q6| is negligible.
SexticCoeffs sextic_coeffs(const ScalarGains& g);

enum class NewtonStatus { Converged, DerivativeVanished, NoConvergence };

struct NewtonResult {
    NewtonStatus status = NewtonStatus::NoConvergence;
    double root = 0.0;
    int iterations = 0;
    bool converged() const noexcept { return status == NewtonStatus::Converged; }
};

/// Newton-Raphson on a real polynomial (highest degree first) with its analytic derivative.
NewtonResult newton_root(std::span<const double> coeffs, double beta0, double tol = 1e-5, int max_iter = 200);

/// Synthetic division by (x - root). Throws RefusedDeflation when root is not a root.
std::vector<double> deflate(std::span<const double> coeffs, double root);

struct FerrariResult {
    std::array<Complex, 4> roots{};
    bool alternate_resolvent = false;
    bool biquadratic = false;
    bool companion_fallback = false;
};

/// Roots of x^4 + a1 x^3 + a2 x^2 + a3 x + a4.
FerrariResult ferrari_roots(double a1, double a2, double a3, double a4);

enum class CandidateOrigin { Newton1, Newton2, Ferrari, Boundary, OracleFallback };

std::string_view candidate_origin_name(CandidateOrigin origin) noexcept;

struct Candidate {
    double beta = 0.0;
    double objective = 0.0;  // unclamped R(beta, beta)
    CandidateOrigin origin = CandidateOrigin::Boundary;
};

struct RootRecord {
    Complex value;
    CandidateOrigin origin = CandidateOrigin::Boundary;
};

struct PaDiagnostics {
    std::vector<int> newton_iterations;   // per Newton stage, including restarts
    std::vector<RootRecord> roots;        // every root of the stationarity polynomial found
    int degree = 0;                        // after trimming negligible leading terms
    int trimmed = 0;                       // number of leading terms trimmed
    int polished = 0;                      // candidates refined on the factored form
    bool oracle_fallback = false;          // a Newton stage or Ferrari gave up and used companion_roots
    bool es1d_fallback = false;            // polynomial vanished entirely
    bool ferrari_alternate = false;
    bool ferrari_biquadratic = false;
    double max_root_residual = 0.0;        // max |f(r)| over real candidate roots, on the sextic
};

struct PaOutcome {
    PaMode mode = PaMode::Epa;
    double beta1 = 0.5;
    double beta2 = 0.5;
    double ssr = 0.0;  // clamped
    std::vector<Candidate> candidates;
    PaDiagnostics diagnostics;
};

PaOutcome epa(const ScalarGains& g);
PaOutcome fixed_pa(const ScalarGains& g, double beta1, double beta2);
PaOutcome es_1d(const ScalarGains& g, double step);
PaOutcome es_2d(const ScalarGains& g, double step);
PaOutcome hicf(const ScalarGains& g, std::uint64_t seed);

} // namespace risdm

#endif
