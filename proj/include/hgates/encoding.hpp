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

/**
 * @file
 * Logical qubits encoded in three spins with one excitation.
 *
 * Qubit A lives on spins 0-2, qubit B on spins 3-5 (spin 3 plays the role of
 * spin 0). Per block:
 *
 *     |0> = (|010> - |100>) / sqrt(2)
 *     |1> = sqrt(2/3) (|001> - |010>/2 - |100>/2)
 *     |a> = (|001> + |010> + |100>) / sqrt(3)      (auxiliary)
 *
 * The two-qubit frame spans the six-spin, two-excitation sector (dimension 15)
 * in the fixed order
 *     0:|0B0A> 1:|0B1A> 2:|1B0A> 3:|1B1A> 4:|0BaA> 5:|1BaA> 6:|aB0A>
 *     7:|aB1A> 8:|aBaA> 9:|000011> 10:|000101> 11:|000110>
 *     12:|011000> 13:|101000> 14:|110000>
 * so a two-qubit logical index is 2*b + a.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hgates/error.hpp"
#include "hgates/linalg.hpp"
#include "hgates/spin_model.hpp"

namespace hgates {

/// Projected-Hamiltonian frequencies of the logical qubit.
inline constexpr double kDelta = -std::numbers::pi;
inline constexpr double kOmega = -std::numbers::sqrt3 * std::numbers::pi;
inline constexpr double kLambda = 2.0 * std::numbers::pi;

inline constexpr double kNormalizationTolerance = 1e-12;

enum class LogicalLevel { Zero, One, Aux };

struct SpinTerm {
    SpinBits bits;
    double coeff;
};

/// Spin-pattern expansion of one logical level on the block starting at `first_spin`.
inline std::vector<SpinTerm> logical_terms(LogicalLevel level, int first_spin = 0) {
    const SpinBits s0 = SpinBits{1} << first_spin;
    const SpinBits s1 = SpinBits{2} << first_spin;
    const SpinBits s2 = SpinBits{4} << first_spin;
    const double r2 = std::numbers::sqrt2;
    const double r3 = std::numbers::sqrt3;
    switch (level) {
    case LogicalLevel::Zero:
        return {{s1, 1.0 / r2}, {s2, -1.0 / r2}};
    case LogicalLevel::One: {
        const double c = std::sqrt(2.0 / 3.0);
        return {{s0, c}, {s1, -0.5 * c}, {s2, -0.5 * c}};
    }
    case LogicalLevel::Aux:
        return {{s0, 1.0 / r3}, {s1, 1.0 / r3}, {s2, 1.0 / r3}};
    }
    detail::fail("logical_terms: unknown level");
}

/// Orthonormal frame over a spin subspace whose first `n_logical` vectors are
/// the computational logical states.
struct LogicalFrame {
    Subspace subspace;
    std::vector<ComplexState> states;
    std::vector<std::string> labels;
    std::size_t n_logical = 0;

    [[nodiscard]] std::size_t size() const noexcept { return states.size(); }
};

namespace detail {
inline ComplexState state_from_terms(const Subspace &sub, const std::vector<SpinTerm> &terms) {
    ComplexState s(sub.dim());
    for (const auto &t : terms) {
        s[sub.require_index(t.bits)] += t.coeff;
    }
    return s;
}

inline std::vector<SpinTerm> product_terms(const std::vector<SpinTerm> &b,
                                           const std::vector<SpinTerm> &a) {
    std::vector<SpinTerm> out;
    for (const auto &tb : b) {
        for (const auto &ta : a) {
            out.push_back({tb.bits | ta.bits, tb.coeff * ta.coeff});
        }
    }
    return out;
}
} // namespace detail

/// |0_A>, |1_A>, |a_A> over the three-spin one-excitation sector {|001>,|010>,|100>}.
inline LogicalFrame logical_basis_a() {
    LogicalFrame f{enumerate_subspace(3, 1), {}, {"|0>", "|1>", "|a>"}, 2};
    for (auto lvl : {LogicalLevel::Zero, LogicalLevel::One, LogicalLevel::Aux}) {
        f.states.push_back(detail::state_from_terms(f.subspace, logical_terms(lvl, 0)));
    }
    return f;
}

/// The 15-state two-qubit frame over the six-spin two-excitation sector.
inline LogicalFrame logical_basis_15() {
    using L = LogicalLevel;
    LogicalFrame f{enumerate_subspace(6, 2), {}, {}, 4};
    const std::array<std::pair<L, L>, 9> products{{{L::Zero, L::Zero},
                                                   {L::Zero, L::One},
                                                   {L::One, L::Zero},
                                                   {L::One, L::One},
                                                   {L::Zero, L::Aux},
                                                   {L::One, L::Aux},
                                                   {L::Aux, L::Zero},
                                                   {L::Aux, L::One},
                                                   {L::Aux, L::Aux}}};
    const auto name = [](L l) { return l == L::Zero ? "0" : l == L::One ? "1" : "a"; };
    for (const auto &[b, a] : products) {
        f.states.push_back(detail::state_from_terms(
            f.subspace, detail::product_terms(logical_terms(b, 3), logical_terms(a, 0))));
        f.labels.push_back(std::string("|") + name(b) + "B" + name(a) + "A>");
    }
    for (SpinBits bits : {0b000011U, 0b000101U, 0b000110U, 0b011000U, 0b101000U, 0b110000U}) {
        f.states.push_back(f.subspace.basis_state(bits));
        f.labels.push_back(SpinBasisState{6, bits}.label());
    }
    return f;
}

/// max |<i|j> - delta_ij| over the frame.
inline double gram_defect(const LogicalFrame &frame) {
    double worst = 0.0;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        for (std::size_t j = 0; j < frame.size(); ++j) {
            const Complex expected = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner(frame.states[i], frame.states[j]) - expected));
        }
    }
    return worst;
}

/// Physical state sum_b C_b |b_logical>. `logical` must have one entry per
/// logical state of the frame and unit norm.
inline ComplexState encode(const ComplexState &logical, const LogicalFrame &frame) {
    detail::require(logical.dim() == frame.n_logical,
                    "encode: expected " + std::to_string(frame.n_logical) +
                        " logical amplitudes, got " + std::to_string(logical.dim()));
    detail::require(std::abs(logical.norm_squared() - 1.0) <= kNormalizationTolerance,
                    "encode: logical amplitudes are not normalized");
    ComplexState out(frame.subspace.dim());
    for (std::size_t b = 0; b < logical.dim(); ++b) {
        out += logical[b] * frame.states[b];
    }
    return out;
}

/// Picks the one-qubit (2 amplitudes) or two-qubit (4 amplitudes) frame.
inline ComplexState encode(const ComplexState &logical) {
    if (logical.dim() == 2) {
        return encode(logical, logical_basis_a());
    }
    detail::require(logical.dim() == 4, "encode: expected 2 or 4 logical amplitudes");
    return encode(logical, logical_basis_15());
}

struct DecodedState {
    /// <frame_i|psi> for every frame vector, logical ones first.
    ComplexState amplitudes;
    /// 1 - sum over the logical slots of |C|^2. Raw value, may be -1e-16.
    double leakage = 0.0;
    /// 1 - sum over all frame slots of |C|^2 (weight outside the frame).
    double frame_deficit = 0.0;

    [[nodiscard]] double reported_leakage() const noexcept { return std::max(0.0, leakage); }
    [[nodiscard]] ComplexState logical(std::size_t n_logical) const {
        return ComplexState(std::vector<Complex>(amplitudes.amplitudes().begin(),
                                                 amplitudes.amplitudes().begin() +
                                                     static_cast<std::ptrdiff_t>(n_logical)));
    }
};

inline DecodedState decode(const ComplexState &psi, const LogicalFrame &frame) {
    detail::require(psi.dim() == frame.subspace.dim(),
                    "decode: state dimension " + std::to_string(psi.dim()) +
                        " does not match frame subspace dimension " +
                        std::to_string(frame.subspace.dim()));
    DecodedState out{ComplexState(frame.size())};
    double logical_weight = 0.0;
    double total_weight = 0.0;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        out.amplitudes[i] = inner(frame.states[i], psi);
        const double w = std::norm(out.amplitudes[i]);
        total_weight += w;
        if (i < frame.n_logical) {
            logical_weight += w;
        }
    }
    const double norm2 = psi.norm_squared();
    out.leakage = norm2 - logical_weight;
    out.frame_deficit = norm2 - total_weight;
    return out;
}

/// <frame_i|H|frame_j> for i, j < n.
inline ComplexMatrix project_operator(const ComplexMatrix &h, const LogicalFrame &frame,
                                      std::size_t n) {
    detail::require(h.dim() == frame.subspace.dim(), "project_operator: dimension mismatch");
    detail::require(n <= frame.size(), "project_operator: too many frame states requested");
    ComplexMatrix out(n);
    std::vector<ComplexState> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        images.push_back(apply(h, frame.states[j]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = inner(frame.states[i], images[j]);
        }
    }
    return out;
}

struct AuxiliaryDecouplingReport {
    /// <a|V_bond|level> indexed [bond][level] for bonds 0, 1 and levels 0, 1.
    std::array<std::array<Complex, 2>, 2> aux_elements{};
    /// V_0 and V_1 restricted to span{|0_A>, |1_A>}.
    ComplexMatrix v0_logical;
    ComplexMatrix v1_logical;

    [[nodiscard]] double max_aux_element() const noexcept {
        double worst = 0.0;
        for (const auto &row : aux_elements) {
            for (const auto &z : row) {
                worst = std::max(worst, std::abs(z));
            }
        }
        return worst;
    }
};

inline AuxiliaryDecouplingReport verify_auxiliary_decoupling() {
    const auto frame = logical_basis_a();
    AuxiliaryDecouplingReport rep;
    const std::array<ComplexMatrix, 2> v{build_bond_hamiltonian(0, frame.subspace),
                                         build_bond_hamiltonian(1, frame.subspace)};
    for (int bond = 0; bond < 2; ++bond) {
        for (int lvl = 0; lvl < 2; ++lvl) {
            rep.aux_elements[bond][lvl] =
                inner(frame.states[2], apply(v[bond], frame.states[lvl]));
        }
    }
    rep.v0_logical = project_operator(v[0], frame, 2);
    rep.v1_logical = project_operator(v[1], frame, 2);
    return rep;
}

} // namespace hgates
