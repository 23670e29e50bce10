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

#include "risdm/power_allocation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <utility>

#include "risdm/error.hpp"
#include "risdm/seed.hpp"
#include "risdm/tolerances.hpp"

namespace risdm {

namespace {

constexpr std::array<std::pair<PaMode, std::string_view>, 5> kPaNames = {{
    {PaMode::Fixed, "fixed"},
    {PaMode::Epa, "epa"},
    {PaMode::Es1d, "es1d"},
    {PaMode::Es2d, "es2d"},
    {PaMode::Hicf, "hicf"},
}};

double max_abs(std::span<const double> c) {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

// sum_k |c_k| |x|^k, the natural scale of p(x) under coefficient perturbations
double magnitude_bound(std::span<const double> c, double x) {
    double s = 0.0;
    for (double v : c) s = s * std::abs(x) + std::abs(v);
    return s;
}

double magnitude_bound(std::span<const double> c, Complex x) {
    double s = 0.0;
    for (double v : c) s = s * std::abs(x) + std::abs(v);
    return s;
}

void check_step(double step) {
    if (!(step > 0.0 && step <= 0.5)) fail(ErrorCode::InvalidInput, "grid step must lie in (0, 0.5]");
}

std::vector<double> grid(double step) {
    const auto n = static_cast<long>(std::llround(1.0 / step));
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n) + 2);
    for (long k = 0; k <= n; ++k) {
        const double b = static_cast<double>(k) * step;
        if (b >= 1.0) break;
        g.push_back(b);
    }
    g.push_back(1.0);
    return g;
}

PaOutcome finish(PaOutcome out, const ScalarGains& g) {
    out.ssr = ssr(out.beta1, out.beta2, g);
    return out;
}

// Uniform sampler over a union of open intervals inside (0, 1).
class Domain {
  public:
    explicit Domain(std::vector<std::pair<double, double>> parts) : parts_(std::move(parts)) {
        for (const auto& [a, b] : parts_) length_ += b - a;
    }
    double at(double u) const {
        double t = u * length_;
        for (const auto& [a, b] : parts_) {
            if (t <= b - a) return a + t;
            t -= b - a;
        }
        return parts_.back().second;
    }

  private:
    std::vector<std::pair<double, double>> parts_;
    double length_ = 0.0;
};

Domain reduced_domain(double first_root) {
    if (first_root > 0.5 && first_root < 1.0) return Domain({{0.0, 0.5}, {first_root, 1.0}});
    std::vector<std::pair<double, double>> parts;
    const double lo = first_root - 0.02, hi = first_root + 0.02;
    if (hi <= 0.0 || lo >= 1.0) return Domain({{0.0, 1.0}});
    if (lo > 0.0) parts.emplace_back(0.0, lo);
    if (hi < 1.0) parts.emplace_back(hi, 1.0);
    return Domain(parts);
}

} // namespace

namespace {

// Truncated Taylor series (value, first, second/2) of a product of linear factors.
struct Taylor2 {
    double c0 = 1.0, c1 = 0.0, c2 = 0.0;
    void times(double value, double slope) {
        c2 = c2 * value + c1 * slope;
        c1 = c1 * value + c0 * slope;
        c0 *= value;
    }
};

// N'D - ND' and its derivative, evaluated from the linear factors of N and D.
// Near clustered roots this is far better conditioned than the expanded sextic.
std::pair<double, double> factored_stationarity(const ScalarGains& g, double b) {
    const double leak = g.s7 + g.s8;
    const double u = 1.0 - b;
    const double eve_an = leak * u + g.sigma2_e;
    Taylor2 n, d;
    n.times((g.s1 - g.s2) * b + g.s2 + g.sigma2_a, g.s1 - g.s2);
    n.times((g.s3 - g.s4) * b + g.s4 + g.sigma2_b, g.s3 - g.s4);
    n.times(eve_an, -leak);
    n.times(eve_an, -leak);
    d.times(g.s2 * u + g.sigma2_a, -g.s2);
    d.times(g.s4 * u + g.sigma2_b, -g.s4);
    d.times(g.s5 * b + eve_an, g.s5 - leak);
    d.times(g.s6 * b + eve_an, g.s6 - leak);
    return {n.c1 * d.c0 - n.c0 * d.c1, 2.0 * (n.c2 * d.c0 - n.c0 * d.c2)};
}

std::optional<double> polish(const ScalarGains& g, double b) {
    for (int it = 0; it < 100; ++it) {
        const auto [f, df] = factored_stationarity(g, b);
        if (f == 0.0) return b;
        if (df == 0.0 || !std::isfinite(df)) return std::nullopt;
        const double next = b - f / df;
        if (!(next >= 0.0 && next <= 1.0)) return std::nullopt;
        if (std::abs(next - b) <= 1e-15) return next;
        b = next;
    }
    return std::nullopt;
}

} // namespace

std::string_view pa_mode_name(PaMode mode) noexcept {
    for (const auto& [m, n] : kPaNames)
        if (m == mode) return n;
    return "?";
}

std::optional<PaMode> pa_mode_from_name(std::string_view name) noexcept {
    for (const auto& [m, n] : kPaNames)
        if (n == name) return m;
    return std::nullopt;
}

std::string_view candidate_origin_name(CandidateOrigin origin) noexcept {
    switch (origin) {
    case CandidateOrigin::Newton1: return "newton-1";
    case CandidateOrigin::Newton2: return "newton-2";
    case CandidateOrigin::Ferrari: return "ferrari";
    case CandidateOrigin::Boundary: return "boundary";
    case CandidateOrigin::OracleFallback: return "oracle-fallback";
    }
    return "?";
}

std::array<double, 7> SexticCoeffs::monic() const noexcept {
    return {1.0, alpha[0], alpha[1], alpha[2], alpha[3], alpha[4], alpha[5]};
}

std::array<double, 10> quartic_products(const ScalarGains& g) noexcept {
    const double s1 = g.s1, s2 = g.s2, s3 = g.s3, s4 = g.s4, s5 = g.s5, s6 = g.s6, s7 = g.s7, s8 = g.s8;
    const double a = s2 + g.sigma2_a;
    const double b = s4 + g.sigma2_b;
    const double e = s7 + s8 + g.sigma2_e;
    const double d12 = s1 - s2;
    const double d34 = s3 - s4;
    const double m78 = -s7 - s8;
    const double cross = d12 * b + d34 * a;
    const double p5 = s5 - s7 - s8;
    const double p6 = s6 - s7 - s8;
    const double sum56 = s5 + s6 - 2.0 * s7 - 2.0 * s8;
    const double mix = -s2 * b - s4 * a;

    std::array<double, 10> q{};
    q[0] = d12 * d34 * m78 * m78;
    q[1] = 2.0 * d12 * d34 * m78 * e + cross * m78 * m78;
    q[2] = d12 * d34 * e * e + 2.0 * m78 * e * cross + m78 * m78 * a * b;
    q[3] = cross * e * e + 2.0 * m78 * a * b * e;
    q[4] = a * b * e * e;
    q[5] = s2 * s4 * p5 * p6;
    q[6] = s2 * s4 * sum56 * e + p5 * p6 * mix;
    q[7] = s2 * s4 * e * e + sum56 * e * mix + p5 * p6 * a * b;
    q[8] = mix * e * e + sum56 * e * a * b;
    q[9] = a * b * e * e;
    return q;
}

std::array<double, 7> stationarity_polynomial(const std::array<double, 10>& q) noexcept {
    const double q1 = q[0], q2 = q[1], q3 = q[2], q4 = q[3], q5 = q[4];
    const double q6 = q[5], q7 = q[6], q8 = q[7], q9 = q[8], q10 = q[9];
    return {q1 * q7 - q2 * q6,
            2.0 * q1 * q8 - 2.0 * q3 * q6,
            3.0 * q1 * q9 + q2 * q8 - q3 * q7 - 3.0 * q4 * q6,
            4.0 * q1 * q10 + 2.0 * q2 * q9 - 2.0 * q4 * q7 - 4.0 * q5 * q6,
            3.0 * q2 * q10 + q3 * q9 - q4 * q8 - 3.0 * q5 * q7,
            2.0 * q3 * q10 - 2.0 * q5 * q8,
            q4 * q10 - q5 * q9};
}

SexticCoeffs sextic_coeffs(const ScalarGains& g) {
    SexticCoeffs c;
    c.q = quartic_products(g);
    c.poly = stationarity_polynomial(c.q);
    const double scale = max_abs(c.poly);
    if (!std::isfinite(scale)) fail(ErrorCode::InvalidInput, "sextic_coeffs: non-finite coefficients");
    if (!(std::abs(c.poly[0]) >= Tolerances::sextic_degenerate * scale) || scale == 0.0)
        fail(ErrorCode::DegeneratePolynomial, "sextic_coeffs: q1 q7 - q2 q6 vanishes");
    for (std::size_t i = 0; i < 6; ++i) c.alpha[i] = c.poly[i + 1] / c.poly[0];
    return c;
}

NewtonResult newton_root(std::span<const double> coeffs, double beta0, double tol, int max_iter) {
    if (!(tol > 0.0)) fail(ErrorCode::InvalidInput, "newton_root: tolerance must be positive");
    if (coeffs.size() < 2) fail(ErrorCode::DegeneratePolynomial, "newton_root: polynomial has no roots");
    NewtonResult r;
    double x = beta0;
    for (int it = 1; it <= max_iter; ++it) {
        double f = 0.0, d = 0.0;
        for (double c : coeffs) {
            d = d * x + f;
            f = f * x + c;
        }
        r.iterations = it;
        if (std::abs(d) < Tolerances::newton_min_derivative) {
            r.status = NewtonStatus::DerivativeVanished;
            r.root = x;
            return r;
        }
        const double next = x - f / d;
        if (!std::isfinite(next)) break;
        const double delta = std::abs(next - x);
        x = next;
        if (delta <= tol) {
            r.status = NewtonStatus::Converged;
            r.root = x;
            return r;
        }
    }
    r.status = NewtonStatus::NoConvergence;
    r.root = x;
    return r;
}

std::vector<double> deflate(std::span<const double> coeffs, double root) {
    if (coeffs.size() < 2) fail(ErrorCode::DegeneratePolynomial, "deflate: polynomial has degree < 1");
    std::vector<double> out(coeffs.size() - 1);
    double acc = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        acc = acc * root + coeffs[i];
        out[i] = acc;
    }
    const double residual = acc * root + coeffs.back();
    if (!(std::abs(residual) <= Tolerances::deflation_residual * magnitude_bound(coeffs, root)))
        fail(ErrorCode::RefusedDeflation, "deflate: residual too large for a root");
    if (std::abs(root) > 1.0) {
        // large roots: divide from the constant term, then rescale to the original leading coefficient
        double next = 0.0;
        for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
            next = (next - coeffs[i]) / root;
            out[i - 1] = next;
        }
        const double lead = out.front();
        if (lead != 0.0 && std::isfinite(lead))
            for (double& c : out) c *= coeffs.front() / lead;
    }
    return out;
}

FerrariResult ferrari_roots(double a1, double a2, double a3, double a4) {
    for (double v : {a1, a2, a3, a4})
        if (!std::isfinite(v)) fail(ErrorCode::InvalidInput, "ferrari_roots: non-finite coefficient");
    const std::array<double, 5> poly = {1.0, a1, a2, a3, a4};
    const double scale = std::max({std::abs(a1), std::sqrt(std::abs(a2)), std::cbrt(std::abs(a3)),
                                   std::sqrt(std::sqrt(std::abs(a4))), 1e-300});

    const double g1 = (3.0 * a1 * a3 - 12.0 * a4 - a2 * a2) / 3.0;
    const double g2 = (-2.0 * a2 * a2 * a2 + 9.0 * a1 * a2 * a3 + 72.0 * a2 * a4 - 27.0 * a3 * a3 -
                       27.0 * a1 * a1 * a4) / 27.0;
    const Complex disc = std::sqrt(Complex(g2 * g2 / 4.0 + g1 * g1 * g1 / 27.0));
    // either sign of the radical gives the same resolvent roots; the larger one avoids cancellation
    Complex w = -g2 / 2.0 + disc;
    const Complex w_alt = -g2 / 2.0 - disc;
    if (std::abs(w_alt) > std::abs(w)) w = w_alt;
    const Complex u0 = std::pow(w, 1.0 / 3.0);
    const Complex omega = std::polar(1.0, 2.0 * kPi / 3.0);

    FerrariResult out;
    auto accept = [&](const std::array<Complex, 4>& roots) {
        for (const Complex& r : roots) {
            if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) return false;
            if (std::abs(polyval(poly, r)) > 1e-7 * magnitude_bound(poly, r)) return false;
        }
        out.roots = roots;
        return true;
    };

    Complex y0;
    for (int k = 0; k < 3; ++k) {
        const Complex u = u0 * std::pow(omega, k);
        const Complex z = std::abs(u) == 0.0 ? Complex(0.0) : u - g1 / (3.0 * u);
        const Complex y = a2 / 3.0 + z;
        if (k == 0) y0 = y;
        const Complex eta1 = std::sqrt(a1 * a1 / 4.0 - a2 + y);
        if (std::abs(eta1) < Tolerances::ferrari_eta1 * scale) continue;
        const Complex t = (4.0 * a1 * a2 - 8.0 * a3 - a1 * a1 * a1) / (4.0 * eta1);
        const Complex base = 3.0 * a1 * a1 / 4.0 - eta1 * eta1 - 2.0 * a2;
        const Complex eta2p = std::sqrt(base + t);
        const Complex eta2m = std::sqrt(base - t);
        const double c = -a1 / 4.0;
        if (accept({c + eta1 / 2.0 + eta2p / 2.0, c + eta1 / 2.0 - eta2p / 2.0, c - eta1 / 2.0 + eta2m / 2.0,
                    c - eta1 / 2.0 - eta2m / 2.0})) {
            out.alternate_resolvent = k > 0;
            return out;
        }
    }

    {
        const Complex root = std::sqrt(y0 * y0 - 4.0 * a4);
        const Complex dp = std::sqrt(3.0 * a1 * a1 / 4.0 - 2.0 * a2 + 2.0 * root);
        const Complex dm = std::sqrt(3.0 * a1 * a1 / 4.0 - 2.0 * a2 - 2.0 * root);
        const double c = -a1 / 4.0;
        if (accept({c + dp / 2.0, c - dp / 2.0, c + dm / 2.0, c - dm / 2.0})) {
            out.biquadratic = true;
            return out;
        }
    }

    const std::vector<Complex> r = companion_roots(poly);
    std::copy(r.begin(), r.end(), out.roots.begin());
    out.companion_fallback = true;
    return out;
}

PaOutcome epa(const ScalarGains& g) {
    PaOutcome out;
    out.mode = PaMode::Epa;
    out.beta1 = out.beta2 = 0.5;
    return finish(std::move(out), g);
}

PaOutcome fixed_pa(const ScalarGains& g, double beta1, double beta2) {
    PaOutcome out;
    out.mode = PaMode::Fixed;
    out.beta1 = beta1;
    out.beta2 = beta2;
    return finish(std::move(out), g);
}

PaOutcome es_1d(const ScalarGains& g, double step) {
    check_step(step);
    PaOutcome out;
    out.mode = PaMode::Es1d;
    double best = -INFINITY;
    for (double b : grid(step)) {
        const double r = ssr_unclamped(b, b, g);
        if (r > best) {
            best = r;
            out.beta1 = out.beta2 = b;
        }
    }
    return finish(std::move(out), g);
}

PaOutcome es_2d(const ScalarGains& g, double step) {
    check_step(step);
    PaOutcome out;
    out.mode = PaMode::Es2d;
    const std::vector<double> axis = grid(step);
    double best = -INFINITY;
    for (double b1 : axis)
        for (double b2 : axis) {
            const double r = ssr_unclamped(b1, b2, g);
            if (r > best) {
                best = r;
                out.beta1 = b1;
                out.beta2 = b2;
            }
        }
    return finish(std::move(out), g);
}

PaOutcome hicf(const ScalarGains& g, std::uint64_t seed) {
    g.validate();
    const std::array<double, 7> full = stationarity_polynomial(quartic_products(g));
    const double scale = max_abs(full);
    if (!std::isfinite(scale)) fail(ErrorCode::InvalidInput, "hicf: non-finite polynomial");

    PaOutcome out;
    PaDiagnostics& diag = out.diagnostics;
    if (scale == 0.0) {
        out = es_1d(g, 0.001);
        out.mode = PaMode::Hicf;
        out.diagnostics.es1d_fallback = true;
        return out;
    }
    out.mode = PaMode::Hicf;

    std::size_t first = 0;
    while (first < full.size() && std::abs(full[first]) <= Tolerances::leading_trim * scale) ++first;
    diag.trimmed = static_cast<int>(first);
    std::vector<double> poly(full.begin() + static_cast<long>(first), full.end());
    const double lead = poly.front();
    for (double& c : poly) c /= lead;
    const std::vector<double> monic = poly;
    diag.degree = static_cast<int>(poly.size()) - 1;

    auto add_all = [&](const std::vector<Complex>& roots, CandidateOrigin origin) {
        for (const Complex& r : roots) diag.roots.push_back({r, origin});
    };
    auto oracle = [&](bool flagged) {
        diag.oracle_fallback = diag.oracle_fallback || flagged;
        add_all(companion_roots(poly), CandidateOrigin::OracleFallback);
        poly.assign(1, 1.0);
    };

    std::mt19937_64 rng(seed);
    double first_root = 0.5;
    int stage = 0;
    while (poly.size() > 5) {
        ++stage;
        std::vector<double> starts;
        if (stage == 1) {
            starts.push_back(0.5);
            for (int k = 0; k < Tolerances::newton_restarts; ++k)
                starts.push_back((k + 0.5) / Tolerances::newton_restarts);
        } else {
            const Domain domain = reduced_domain(first_root);
            starts.push_back(domain.at(unit_interval(rng())));
            for (int k = 0; k < Tolerances::newton_restarts; ++k)
                starts.push_back(domain.at((k + unit_interval(rng())) / Tolerances::newton_restarts));
        }
        // then across the Cauchy bound, for stages whose real roots all lie outside (0, 1)
        const double bound = 1.0 + max_abs(std::span<const double>(poly).subspan(1));
        for (int k = 0; k < Tolerances::newton_restarts; ++k)
            starts.push_back(bound * (2.0 * (k + 0.5) / Tolerances::newton_restarts - 1.0));

        std::optional<double> root;
        int iterations = 0;
        for (double s : starts) {
            const NewtonResult r = newton_root(poly, s, Tolerances::newton_step, Tolerances::newton_max_iter);
            iterations += r.iterations;
            if (r.converged()) {
                root = r.root;
                break;
            }
        }
        diag.newton_iterations.push_back(iterations);
        if (!root) {
            oracle(true);
            break;
        }
        std::vector<double> reduced;
        try {
            reduced = deflate(poly, *root);
        } catch (const Error&) {
            oracle(true);
            break;
        }
        poly = std::move(reduced);
        diag.roots.push_back({Complex(*root, 0.0), stage == 1 ? CandidateOrigin::Newton1 : CandidateOrigin::Newton2});
        if (stage == 1) first_root = *root;
    }

    if (poly.size() == 5) {
        const FerrariResult f = ferrari_roots(poly[1], poly[2], poly[3], poly[4]);
        diag.ferrari_alternate = f.alternate_resolvent;
        diag.ferrari_biquadratic = f.biquadratic;
        if (f.companion_fallback) diag.oracle_fallback = true;
        for (const Complex& r : f.roots)
            diag.roots.push_back({r, f.companion_fallback ? CandidateOrigin::OracleFallback : CandidateOrigin::Ferrari});
    } else if (poly.size() > 1) {
        oracle(false);  // trimmed below quartic: solved directly
    }

    // undo deflation drift: a few Newton steps on the undeflated polynomial
    for (RootRecord& r : diag.roots) {
        Complex z = r.value;
        double res = std::abs(polyval(monic, z));
        for (int it = 0; it < 8 && res > 0.0; ++it) {
            Complex f(0.0, 0.0), d(0.0, 0.0);
            for (double c : monic) {
                d = d * z + f;
                f = f * z + c;
            }
            if (d == Complex(0.0, 0.0)) break;
            const Complex next = z - f / d;
            const double next_res = std::abs(polyval(monic, next));
            if (!(next_res < res)) break;
            z = next;
            res = next_res;
        }
        r.value = z;
    }

    out.candidates.push_back({0.0, ssr_unclamped(0.0, 0.0, g), CandidateOrigin::Boundary});
    out.candidates.push_back({1.0, ssr_unclamped(1.0, 1.0, g), CandidateOrigin::Boundary});
    const double mscale = max_abs(monic);
    for (const RootRecord& r : diag.roots) {
        const double re = r.value.real();
        if (std::abs(r.value.imag()) < Tolerances::root_realness && re >= 0.0 && re <= 1.0) {
            diag.max_root_residual = std::max(diag.max_root_residual, std::abs(polyval(monic, re)) / mscale);
            out.candidates.push_back({re, ssr_unclamped(re, re, g), r.origin});
        }
        // refine anything close to [0, 1] against the factored form
        if (std::abs(r.value.imag()) < Tolerances::polish_window && re > -Tolerances::polish_window &&
            re < 1.0 + Tolerances::polish_window)
            if (const std::optional<double> b = polish(g, std::clamp(re, 0.0, 1.0))) {
                out.candidates.push_back({*b, ssr_unclamped(*b, *b, g), r.origin});
                ++diag.polished;
            }
    }

    const Candidate* best = &out.candidates.front();
    for (const Candidate& c : out.candidates)
        if (c.objective > best->objective || (c.objective == best->objective && c.beta < best->beta)) best = &c;
    out.beta1 = out.beta2 = best->beta;
    return finish(std::move(out), g);
}

} // namespace risdm
