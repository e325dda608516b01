// Copyright 2026 The heisenberg-gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hgates/encoding.hpp"
#include "hgates/linalg.hpp"
#include "hgates/spin_model.hpp"
#include "test_helpers.hpp"

using namespace hgates;
constexpr double pi = std::numbers::pi;

namespace {

double reconstruction_error(const ComplexMatrix &h, const Eigensystem &es) {
    const ComplexMatrix d = ComplexMatrix::diagonal(es.eigenvalues);
    return max_abs_diff(es.eigenvectors * d * es.eigenvectors.adjoint(), h);
}

} // namespace

TEST(EigHermitian, ProjectedMixingHamiltonian) {
    // Roots of lambda^2 - Delta*lambda - Omega^2/4 with Delta=-pi, Omega=-sqrt(3)pi.
    const ComplexMatrix h{{0.0, -kOmega / 2.0}, {-kOmega / 2.0, kDelta}};
    const auto es = eig_hermitian(h);
    ASSERT_EQ(es.eigenvalues.size(), 2U);
    EXPECT_NEAR(es.eigenvalues[0], -1.5 * pi, 1e-12);
    EXPECT_NEAR(es.eigenvalues[1], 0.5 * pi, 1e-12);
    EXPECT_LE(reconstruction_error(h, es), 1e-10);
    EXPECT_LE(unitarity_defect(es.eigenvectors), 1e-10);
}

TEST(EigHermitian, IdentityMatrix) {
    const auto es = eig_hermitian(ComplexMatrix::identity(3));
    for (double v : es.eigenvalues) {
        EXPECT_DOUBLE_EQ(v, 1.0);
    }
    EXPECT_LE(unitarity_defect(es.eigenvectors), 1e-14);
}

TEST(EigHermitian, DiagonalInputKeepsStandardBasis) {
    const ComplexMatrix h{{1.5 * kDelta, 0.0}, {0.0, -0.5 * kDelta}};
    const auto es = eig_hermitian(h);
    EXPECT_NEAR(es.eigenvalues[0], -1.5 * pi, 1e-15);
    EXPECT_NEAR(es.eigenvalues[1], 0.5 * pi, 1e-15);
    EXPECT_EQ(es.eigenvectors(0, 0), Complex(1.0));
    EXPECT_EQ(es.eigenvectors(1, 1), Complex(1.0));
    EXPECT_EQ(es.eigenvectors(0, 1), Complex(0.0));
}

TEST(EigHermitian, RejectsNonHermitian) {
    const ComplexMatrix h{{0.0, 1.0}, {0.5, 0.0}};
    try {
        (void)eig_hermitian(h);
        FAIL() << "expected rejection";
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("not Hermitian"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos);
    }
}

TEST(EigHermitian, RejectsEmpty) { EXPECT_THROW((void)eig_hermitian(ComplexMatrix(0)), Error); }

TEST(EigHermitian, ComplexEntries) {
    const ComplexMatrix h{{2.0, Complex(0, 1)}, {Complex(0, -1), 2.0}};
    const auto es = eig_hermitian(h);
    EXPECT_NEAR(es.eigenvalues[0], 1.0, 1e-14);
    EXPECT_NEAR(es.eigenvalues[1], 3.0, 1e-14);
    EXPECT_LE(reconstruction_error(h, es), 1e-14);
}

TEST(EigHermitian, PropertyRandomReconstruction) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {1U, 2U, 3U, 5U, 8U, 15U, 20U, 40U, 64U}) {
        for (int rep = 0; rep < 3; ++rep) {
            const ComplexMatrix h = fixtures::random_hermitian(rng, n, 3.0);
            const auto es = eig_hermitian(h);
            EXPECT_LE(reconstruction_error(h, es), 1e-10) << "n=" << n;
            EXPECT_LE(unitarity_defect(es.eigenvectors), 1e-10) << "n=" << n;
            EXPECT_TRUE(std::is_sorted(es.eigenvalues.begin(), es.eigenvalues.end()));
        }
    }
}

TEST(EigHermitian, BondHamiltoniansOfTheArtifact) {
    for (auto [n, e] : {std::pair{2, 1}, {3, 1}, {6, 2}, {6, 3}}) {
        const Subspace sub = enumerate_subspace(n, e);
        for (int k = 0; k + 1 < n; ++k) {
            const ComplexMatrix h = build_bond_hamiltonian(k, sub);
            EXPECT_LE(reconstruction_error(h, eig_hermitian(h)), 1e-10);
        }
    }
    const ComplexMatrix h = build_bond_hamiltonian(2, full_space(6));
    EXPECT_LE(reconstruction_error(h, eig_hermitian(h)), 1e-10);
}

TEST(Propagator, ZeroTimeIsIdentity) {
    std::mt19937_64 rng(1);
    const ComplexMatrix h = fixtures::random_hermitian(rng, 4);
    EXPECT_EQ(max_abs_diff(propagator(h, 0.0), ComplexMatrix::identity(4)), 0.0);
}

TEST(Propagator, TwoSpinBondPeriodicity) {
    const ComplexMatrix v = build_bond_hamiltonian(0, full_space(2));
    // Eigenvalues pi/2 (triplet) and -3pi/2 (singlet): both phases are 1 at t=4, -1 at t=2.
    EXPECT_LE(max_abs_diff(propagator(v, 4.0), ComplexMatrix::identity(4)), 1e-12);
    EXPECT_LE(max_abs_diff(propagator(v, 2.0), -1.0 * ComplexMatrix::identity(4)), 1e-12);
}

TEST(Propagator, RejectsNonFiniteDuration) {
    EXPECT_THROW((void)propagator(ComplexMatrix::identity(2), std::nan("")), Error);
}

TEST(Propagator, PropertyUnitaryNormAndSemigroup) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dur(-3.0, 3.0);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 14;
        const ComplexMatrix h = fixtures::random_hermitian(rng, n, 2.0);
        const auto es = eig_hermitian(h);
        const double s = dur(rng);
        const double t = dur(rng);
        const ComplexMatrix us = propagator(es, s);
        const ComplexMatrix ut = propagator(es, t);
        EXPECT_LE(unitarity_defect(us), 1e-10);
        EXPECT_LE(max_abs_diff(us * ut, propagator(es, s + t)), 1e-10);
        const ComplexState psi = fixtures::random_state(rng, n);
        EXPECT_NEAR(apply(us, psi).norm(), 1.0, 1e-12);
        EXPECT_LE(max_abs_diff(evolve(es, s, psi), apply(us, psi)), 1e-12);
    }
}

TEST(Apply, IdentityAndInversePair) {
    std::mt19937_64 rng(3);
    const ComplexState psi = fixtures::random_state(rng, 6);
    EXPECT_EQ(max_abs_diff(apply(ComplexMatrix::identity(6), psi), psi), 0.0);
    const ComplexMatrix u = propagator(fixtures::random_hermitian(rng, 6), 0.7);
    EXPECT_LE(max_abs_diff(apply(u, apply(u.adjoint(), psi)), psi), 1e-12);
}

TEST(Apply, DiagonalProjectedPropagator) {
    const ComplexMatrix v1{{1.5 * kDelta, 0.0}, {0.0, -0.5 * kDelta}};
    const double t = 0.37;
    const ComplexState out = apply(propagator(v1, t), ComplexState{1.0, 0.0});
    EXPECT_LE(std::abs(out[0] - std::polar(1.0, -1.5 * kDelta * t)), 1e-14);
    EXPECT_EQ(out[1], Complex(0.0));
}

TEST(Apply, DimensionMismatchRejected) {
    EXPECT_THROW((void)apply(ComplexMatrix::identity(3), ComplexState(2)), Error);
}

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
    EXPECT_THROW(ComplexMatrix(1, {Complex(std::nan(""), 0.0)}), Error);
    EXPECT_THROW(ComplexMatrix({{1.0, 2.0}, {3.0}}), Error);
}
