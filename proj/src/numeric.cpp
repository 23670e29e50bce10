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

#include "risdm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "risdm/error.hpp"
#include "risdm/tolerances.hpp"

namespace risdm {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::InvalidGeometry: return "invalid-geometry";
    case ErrorCode::SingularMatrix: return "singular-matrix";
    case ErrorCode::DegenerateChannel: return "degenerate-channel";
    case ErrorCode::DegeneratePolynomial: return "degenerate-polynomial";
    case ErrorCode::InsufficientAntennas: return "insufficient-antennas";
    case ErrorCode::NoConvergence: return "no-convergence";
    case ErrorCode::RefusedDeflation: return "refused-deflation";
    case ErrorCode::Io: return "io";
    case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

namespace {

Eigen::Index argmax_magnitude(const Eigen::Ref<const ComplexVector>& v) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        // ties resolve to the lowest index so the choice is reproducible
        const double mag = std::abs(v(i));
        if (mag > best_mag * (1.0 + 1e-12)) {
            best_mag = mag;
            best = i;
        }
    }
    return best;
}

Complex unit_phase_of(Complex z) {
    const double mag = std::abs(z);
    return mag > 0.0 ? z / mag : Complex(1.0, 0.0);
}

} // namespace

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const Complex z = a.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

void normalize_phase(Eigen::Ref<ComplexVector> v) {
    if (v.size() == 0) return;
    const Complex phase = unit_phase_of(v(argmax_magnitude(v)));
    v *= std::conj(phase);
}

SvdResult svd(const ComplexMatrix& a) {
    if (a.size() == 0) fail(ErrorCode::InvalidInput, "svd: empty matrix");
    if (!all_finite(a)) fail(ErrorCode::InvalidInput, "svd: non-finite entries");

    Eigen::BDCSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};

    const Eigen::Index k = out.s.size();
    for (Eigen::Index i = 0; i < k; ++i) {
        const Complex phase = unit_phase_of(out.u(argmax_magnitude(out.u.col(i)), i));
        out.u.col(i) *= std::conj(phase);
        out.v.col(i) *= std::conj(phase);
    }
    for (Eigen::Index i = k; i < out.u.cols(); ++i) normalize_phase(out.u.col(i));
    for (Eigen::Index i = k; i < out.v.cols(); ++i) normalize_phase(out.v.col(i));
    return out;
}

ComplexVector dominant_generalized_eigvec(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() || a.rows() == 0)
        fail(ErrorCode::InvalidInput, "dominant_generalized_eigvec: A and B must be square and of equal size");
    if (!all_finite(a) || !all_finite(b))
        fail(ErrorCode::InvalidInput, "dominant_generalized_eigvec: non-finite entries");

    // symmetrize away rounding asymmetry before handing to the Hermitian solvers
    const ComplexMatrix ah = 0.5 * (a + a.adjoint());
    const ComplexMatrix bh = 0.5 * (b + b.adjoint());

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> b_eig(bh, Eigen::EigenvaluesOnly);
    const double lmin = b_eig.eigenvalues().minCoeff();
    const double lmax = b_eig.eigenvalues().maxCoeff();
    if (!(lmax > 0.0) || !(lmin > lmax / Tolerances::max_condition))
        fail(ErrorCode::SingularMatrix, "dominant_generalized_eigvec: B is numerically singular");

    Eigen::GeneralizedSelfAdjointEigenSolver<ComplexMatrix> solver(ah, bh, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success)
        fail(ErrorCode::SingularMatrix, "dominant_generalized_eigvec: Cholesky of B failed");

    ComplexVector v = solver.eigenvectors().col(solver.eigenvectors().cols() - 1);
    v.normalize();
    normalize_phase(v);
    return v;
}

ComplexMatrix pinv(const ComplexMatrix& a) {
    if (!all_finite(a)) fail(ErrorCode::InvalidInput, "pinv: non-finite entries");
    if (a.size() == 0) return ComplexMatrix::Zero(a.cols(), a.rows());

    Eigen::BDCSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& s = solver.singularValues();
    const double cutoff = s.size() > 0 ? s(0) * Tolerances::pinv_relative * static_cast<double>(std::max(a.rows(), a.cols())) : 0.0;

    RealVector inv = RealVector::Zero(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > cutoff && s(i) > 0.0) inv(i) = 1.0 / s(i);
    return solver.matrixV() * inv.asDiagonal() * solver.matrixU().adjoint();
}

std::vector<Complex> companion_roots(std::span<const double> coeffs) {
    if (coeffs.size() < 2) fail(ErrorCode::DegeneratePolynomial, "companion_roots: degree must be at least 1");
    for (double c : coeffs)
        if (!std::isfinite(c)) fail(ErrorCode::InvalidInput, "companion_roots: non-finite coefficient");
    const double lead = coeffs[0];
    if (lead == 0.0) fail(ErrorCode::DegeneratePolynomial, "companion_roots: leading coefficient is zero");

    const auto n = static_cast<Eigen::Index>(coeffs.size() - 1);
    if (n == 1) return {Complex(-coeffs[1] / lead, 0.0)};

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) companion(0, j) = -coeffs[static_cast<std::size_t>(j) + 1] / lead;
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) fail(ErrorCode::NoConvergence, "companion_roots: eigenvalue iteration failed");

    std::vector<Complex> roots(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return roots;
}

Complex polyval(std::span<const double> coeffs, Complex x) {
    Complex acc(0.0, 0.0);
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

double polyval(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

} // namespace risdm
