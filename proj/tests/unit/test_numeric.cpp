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

#include <gtest/gtest.h>

#include "risdm/error.hpp"
#include "risdm/numeric.hpp"
#include "../support.hpp"

using namespace risdm;
using namespace risdm::testing;

namespace {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

ComplexMatrix sigma(const SvdResult& d, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix s = ComplexMatrix::Zero(rows, cols);
    for (Eigen::Index i = 0; i < d.s.size(); ++i) s(i, i) = d.s(i);
    return s;
}

} // namespace

TEST(Svd, IdentityHasUnitSingularValues) {
    const SvdResult d = svd(ComplexMatrix::Identity(3, 3));
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(d.s(i), 1.0, 1e-15);
    // columns are unit vectors with a single real positive entry
    for (int j = 0; j < 3; ++j) {
        EXPECT_NEAR(d.u.col(j).cwiseAbs().maxCoeff(), 1.0, 1e-15);
        EXPECT_NEAR(d.v.col(j).cwiseAbs().maxCoeff(), 1.0, 1e-15);
    }
}

TEST(Svd, RankOneOuterProduct) {
    std::mt19937_64 rng(1);
    const ComplexVector u = random_unit(rng, 5), v = random_unit(rng, 4);
    const SvdResult d = svd(u * v.adjoint());
    EXPECT_NEAR(d.s(0), 1.0, 1e-14);
    for (Eigen::Index i = 1; i < d.s.size(); ++i) EXPECT_LT(d.s(i), 1e-14);
    EXPECT_NEAR(std::abs(d.u.col(0).dot(u)), 1.0, 1e-13);
    EXPECT_NEAR(std::abs(d.v.col(0).dot(v)), 1.0, 1e-13);
}

TEST(Svd, RandomReconstruction) {
    std::mt19937_64 rng(2);
    for (auto [r, c] : {std::pair{8, 8}, std::pair{3, 7}, std::pair{9, 2}}) {
        const ComplexMatrix a = random_matrix(rng, r, c);
        const SvdResult d = svd(a);
        EXPECT_LT(max_abs_diff(d.u * sigma(d, r, c) * d.v.adjoint(), a), 1e-9);
        EXPECT_LT(max_abs_diff(d.u.adjoint() * d.u, ComplexMatrix::Identity(r, r)), 1e-12);
        EXPECT_LT(max_abs_diff(d.v.adjoint() * d.v, ComplexMatrix::Identity(c, c)), 1e-12);
        for (Eigen::Index i = 1; i < d.s.size(); ++i) EXPECT_GE(d.s(i - 1), d.s(i));
    }
}

TEST(Svd, PhaseConventionLargestEntryRealPositive) {
    std::mt19937_64 rng(3);
    const SvdResult d = svd(random_matrix(rng, 6, 6));
    for (Eigen::Index j = 0; j < 6; ++j) {
        Eigen::Index k = 0;
        d.u.col(j).cwiseAbs().maxCoeff(&k);
        EXPECT_NEAR(d.u(k, j).imag(), 0.0, 1e-14);
        EXPECT_GT(d.u(k, j).real(), 0.0);
    }
}

TEST(Svd, RejectsNonFinite) {
    ComplexMatrix a = ComplexMatrix::Identity(2, 2);
    a(0, 1) = Complex(std::nan(""), 0.0);
    try {
        svd(a);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
}

TEST(GeneralizedEigvec, DiagonalCases) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
    a(0, 0) = 2.0;
    a(1, 1) = 1.0;
    ComplexVector v = dominant_generalized_eigvec(a, ComplexMatrix::Identity(2, 2));
    EXPECT_NEAR(std::abs(v(0)), 1.0, 1e-12);

    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2, 2);
    b(0, 0) = 1.0;
    b(1, 1) = 4.0;
    v = dominant_generalized_eigvec(ComplexMatrix::Identity(2, 2), b);
    EXPECT_NEAR(std::abs(v(0)), 1.0, 1e-12);
    EXPECT_NEAR(v.norm(), 1.0, 1e-14);
}

TEST(GeneralizedEigvec, BeatsRandomProbes) {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 5; ++rep) {
        const ComplexMatrix a = random_hpd(rng, 8, 0.0);
        const ComplexMatrix b = random_hpd(rng, 8, 0.1);
        auto q = [&](const ComplexVector& v) { return v.dot(a * v).real() / v.dot(b * v).real(); };
        const double best = q(dominant_generalized_eigvec(a, b));
        for (int k = 0; k < 10000; ++k) EXPECT_LE(q(random_unit(rng, 8)), best * (1.0 + 1e-12));
    }
}

TEST(GeneralizedEigvec, SingularDenominatorIsAnError) {
    ComplexMatrix b = ComplexMatrix::Identity(3, 3);
    b(2, 2) = 1e-17;
    try {
        dominant_generalized_eigvec(ComplexMatrix::Identity(3, 3), b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
    }
}

TEST(Pinv, InvertibleMatchesInverse) {
    ComplexMatrix a(2, 2);
    a << Complex(2, 1), Complex(0, 1), Complex(1, 0), Complex(3, -2);
    EXPECT_LT(max_abs_diff(pinv(a), a.inverse()), 1e-13);
}

TEST(Pinv, ZeroMatrix) {
    const ComplexMatrix z = ComplexMatrix::Zero(3, 2);
    const ComplexMatrix p = pinv(z);
    EXPECT_EQ(p.rows(), 2);
    EXPECT_EQ(p.cols(), 3);
    EXPECT_EQ(p.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Pinv, MoorePenroseConditionsOnRankDeficient) {
    std::mt19937_64 rng(5);
    const ComplexVector x = random_unit(rng, 3), y = random_unit(rng, 3);
    ComplexMatrix a(3, 3);
    a.row(0) = x.transpose();
    a.row(1) = Complex(2.0, -1.0) * x.transpose();
    a.row(2) = y.transpose();
    const ComplexMatrix p = pinv(a);
    EXPECT_LT(max_abs_diff(a * p * a, a), 1e-12);
    EXPECT_LT(max_abs_diff(p * a * p, p), 1e-12);
    EXPECT_LT(max_abs_diff((a * p).adjoint(), a * p), 1e-12);
    EXPECT_LT(max_abs_diff((p * a).adjoint(), p * a), 1e-12);
}

TEST(CompanionRoots, FactorableCases) {
    const std::vector<double> sq = {1.0, 0.0, -1.0};
    EXPECT_LT(matched_distance(companion_roots(sq), {Complex(1, 0), Complex(-1, 0)}), 1e-14);
    const std::vector<double> p = poly_from_roots({0.3, 0.7});
    EXPECT_LT(matched_distance(companion_roots(p), {Complex(0.3, 0), Complex(0.7, 0)}), 1e-10);
}

TEST(CompanionRoots, SixthRootsOfMinusOne) {
    const std::vector<double> p = {1, 0, 0, 0, 0, 0, 1};
    std::vector<Complex> expected;
    for (int k = 0; k < 6; ++k) expected.push_back(std::polar(1.0, (2 * k + 1) * 3.14159265358979323846 / 6.0));
    EXPECT_LT(matched_distance(companion_roots(p), expected), 1e-13);
}

TEST(CompanionRoots, ResidualBoundOnRandomSextics) {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 1000; ++k) {
        std::vector<double> c(7);
        for (double& v : c) v = uniform(rng, -10.0, 10.0);
        const auto roots = companion_roots(c);
        ASSERT_EQ(roots.size(), 6u);
        for (const Complex& r : roots) {
            double scale = 0.0;
            for (double v : c) scale = scale * std::abs(r) + std::abs(v);
            EXPECT_LE(std::abs(polyval(c, r)), 1e-10 * scale) << "sextic " << k;
        }
    }
}

TEST(CompanionRoots, LeadingZeroIsDegenerate) {
    const std::vector<double> p = {0.0, 1.0, 2.0};
    try {
        companion_roots(p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegeneratePolynomial);
    }
}

TEST(Polyval, HornerAgreesWithPowers) {
    const std::vector<double> c = {2.0, -3.0, 0.5, 4.0};
    const double x = 1.7;
    EXPECT_NEAR(polyval(c, x), 2 * x * x * x - 3 * x * x + 0.5 * x + 4, 1e-12);
    const Complex z(0.3, -1.1);
    EXPECT_NEAR(std::abs(polyval(c, z) - (2.0 * z * z * z - 3.0 * z * z + 0.5 * z + 4.0)), 0.0, 1e-12);
}
