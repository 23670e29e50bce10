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

#ifndef RISDM_NUMERIC_HPP
#define RISDM_NUMERIC_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace risdm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct SvdResult {
    ComplexMatrix u;  // rows x rows
    RealVector s;     // min(rows, cols), descending
    ComplexMatrix v;  // cols x cols
};

/// Full SVD. Each singular pair is rotated so the largest-magnitude entry of
/// its left vector is real positive; null-space columns are normalized the
/// same way on their own.
SvdResult svd(const ComplexMatrix& a);

/// Unit vector maximizing (v^H A v) / (v^H B v) for Hermitian A and Hermitian
/// positive definite B. Throws SingularMatrix when cond(B) > 1e14.
ComplexVector dominant_generalized_eigvec(const ComplexMatrix& a, const ComplexMatrix& b);

/// Moore-Penrose pseudo-inverse via SVD.
ComplexMatrix pinv(const ComplexMatrix& a);

/// All roots of c[0] x^n + c[1] x^{n-1} + ... + c[n] from the eigenvalues of
/// the companion matrix of the monic-normalized polynomial.
std::vector<Complex> companion_roots(std::span<const double> coeffs);

/// Horner evaluation, coefficients highest degree first.
Complex polyval(std::span<const double> coeffs, Complex x);
double polyval(std::span<const double> coeffs, double x);

/// Rotates v so its largest-magnitude entry is real positive.
void normalize_phase(Eigen::Ref<ComplexVector> v);

bool all_finite(const ComplexMatrix& a);

} // namespace risdm

#endif
