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

#include "hgates/gates.hpp"
#include "hgates/spin_model.hpp"
#include "test_helpers.hpp"

using namespace hgates;
constexpr double pi = std::numbers::pi;

TEST(EnumerateSubspace, Sizes) {
    EXPECT_EQ(enumerate_subspace(6, 2).dim(), 15U);
    EXPECT_EQ(enumerate_subspace(10, 5).dim(), 252U);
    const Subspace s0 = enumerate_subspace(4, 0);
    ASSERT_EQ(s0.dim(), 1U);
    EXPECT_EQ(s0.states()[0], 0U);
}

TEST(EnumerateSubspace, ThreeSpinsOneExcitation) {
    const Subspace s = enumerate_subspace(3, 1);
    ASSERT_EQ(s.dim(), 3U);
    EXPECT_EQ(s.state(0).label(), "|001>");
    EXPECT_EQ(s.state(1).label(), "|010>");
    EXPECT_EQ(s.state(2).label(), "|100>");
    EXPECT_EQ(s.index_of(0b010U), 1U);
    EXPECT_FALSE(s.index_of(0b011U).has_value());
}

TEST(EnumerateSubspace, AscendingAndComplete) {
    const Subspace s = enumerate_subspace(7, 3);
    EXPECT_EQ(s.dim(), 35U);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        EXPECT_EQ(s.state(i).excitations(), 3);
        if (i > 0) {
            EXPECT_LT(s.states()[i - 1], s.states()[i]);
        }
    }
}

TEST(EnumerateSubspace, RejectsOutOfRange) {
    EXPECT_THROW((void)enumerate_subspace(11, 1), Error);
    EXPECT_THROW((void)enumerate_subspace(3, 4), Error);
    EXPECT_THROW((void)enumerate_subspace(3, -1), Error);
}

TEST(BondHamiltonian, TwoSpinsByHand) {
    const ComplexMatrix v = build_bond_hamiltonian(0, full_space(2));
    // basis |00>, |01>, |10>, |11>
    const ComplexMatrix expected{{pi / 2, 0, 0, 0},
                                 {0, -pi / 2, pi, 0},
                                 {0, pi, -pi / 2, 0},
                                 {0, 0, 0, pi / 2}};
    EXPECT_LE(max_abs_diff(v, expected), 1e-15);
}

TEST(BondHamiltonian, ExactlyRealSymmetric) {
    for (int k = 0; k < 5; ++k) {
        const ComplexMatrix v = build_bond_hamiltonian(k, enumerate_subspace(6, 2));
        for (std::size_t i = 0; i < v.dim(); ++i) {
            for (std::size_t j = 0; j < v.dim(); ++j) {
                EXPECT_EQ(v(i, j).imag(), 0.0);
                EXPECT_EQ(v(i, j), v(j, i));
                const double x = v(i, j).real();
                if (i == j) {
                    EXPECT_TRUE(std::abs(std::abs(x) - pi / 2) < 1e-15);
                } else {
                    EXPECT_TRUE(x == 0.0 || std::abs(x - pi) < 1e-15);
                }
            }
        }
    }
}

TEST(BondHamiltonian, RejectsBadBond) {
    const Subspace s = enumerate_subspace(3, 1);
    EXPECT_THROW((void)build_bond_hamiltonian(2, s), Error);
    EXPECT_THROW((void)build_bond_hamiltonian(-1, s), Error);
}

TEST(FullSpaceOracle, HalfPulseOnTwoSpins) {
    const PulseSequence seq = spin_swap(0);
    const ComplexState out = full_space_oracle(seq, ComplexState::basis(4, 0b01));
    ComplexState expected(4);
    expected[0b10] = std::polar(1.0, -pi / 4);
    EXPECT_LE(max_abs_diff(out, expected), 1e-13);
}

TEST(FullSpaceOracle, EmptySequenceIsIdentity) {
    std::mt19937_64 rng(5);
    const ComplexState psi = fixtures::random_state(rng, 8);
    EXPECT_EQ(max_abs_diff(full_space_oracle({}, psi), psi), 0.0);
}

TEST(FullSpaceOracle, CyclicPermutationMapping) {
    const ComplexState out = full_space_oracle(cyclic_permutation(), ComplexState::basis(64, 0b001010));
    ComplexState expected(64);
    expected[0b010100] = std::polar(1.0, -5 * pi / 4);
    EXPECT_LE(max_abs_diff(out, expected), 1e-12);
}

TEST(FullSpaceOracle, RejectsBadDimensions) {
    EXPECT_THROW((void)full_space_oracle({}, ComplexState(6)), Error);
    EXPECT_THROW((void)full_space_oracle({}, ComplexState(512)), Error);
    EXPECT_THROW((void)full_space_oracle(spin_swap(2), ComplexState::basis(8, 0)), Error);
}

TEST(SpinModelProperty, ExcitationConservation) {
    std::mt19937_64 rng(17);
    for (auto [n, e] : {std::pair{3, 1}, {4, 2}, {6, 2}, {6, 3}}) {
        const Subspace sub = enumerate_subspace(n, e);
        for (int rep = 0; rep < 4; ++rep) {
            const PulseSequence seq = fixtures::random_sequence(rng, n - 1, 6);
            const ComplexState psi = fixtures::random_state(rng, sub.dim());
            const ComplexState full = full_space_oracle(seq, embed(psi, sub));
            EXPECT_LE(complement_weight(full, sub), 1e-12);
            const ComplexState sub_out = BondPropagators(sub).evolve(seq, psi);
            EXPECT_LE(max_abs_diff(project(full, sub), sub_out), 1e-12);
        }
    }
}

TEST(SpinModelProperty, AlignedPairsAreEigenstates) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dur(-2.0, 4.0);
    const Subspace full = full_space(4);
    const BondPropagators props(full);
    for (int rep = 0; rep < 10; ++rep) {
        const double t = dur(rng);
        for (int k = 0; k < 3; ++k) {
            for (SpinBits b = 0; b < 16; ++b) {
                if (((b >> k) & 1U) != ((b >> (k + 1)) & 1U)) {
                    continue;
                }
                const ComplexState out = props.evolve({"", {{k, t, ""}}}, full.basis_state(b));
                EXPECT_LE(max_abs_diff(out, std::polar(1.0, -pi * t / 2) * full.basis_state(b)), 1e-12);
            }
        }
    }
}

TEST(SpinModelProperty, AntiAlignedPairsMix) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> dur(-2.0, 4.0);
    const Subspace full = full_space(3);
    const BondPropagators props(full);
    for (int rep = 0; rep < 10; ++rep) {
        const double t = dur(rng);
        for (int k = 0; k < 2; ++k) {
            for (SpinBits b = 0; b < 8; ++b) {
                if (((b >> k) & 1U) == ((b >> (k + 1)) & 1U)) {
                    continue;
                }
                const SpinBits partner = b ^ (SpinBits{3} << k);
                const ComplexState out = props.evolve({"", {{k, t, ""}}}, full.basis_state(b));
                const Complex pre = std::polar(1.0, pi * t / 2);
                ComplexState expected = (pre * std::cos(pi * t)) * full.basis_state(b);
                expected += (pre * Complex(0, -std::sin(pi * t))) * full.basis_state(partner);
                EXPECT_LE(max_abs_diff(out, expected), 1e-12);
            }
        }
    }
}
