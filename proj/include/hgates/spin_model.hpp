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
 * Spin-1/2 chain with nearest-neighbour isotropic Heisenberg exchange.
 *
 * Bit convention: spin k is stored at bit k. The state the literature writes
 * as |0_2 1_1 0_0> is bits 0b010. Bit value 0 means S^z = +1/2.
 *
 * The bond Hamiltonian carries the 2*pi factor:
 *     V_k = 2*pi [S^z_k S^z_{k+1} + (S^+_k S^-_{k+1} + S^-_k S^+_{k+1}) / 2]
 * so its entries are +-pi/2 (diagonal) and pi (flip-flop).
 */

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hgates/error.hpp"
#include "hgates/linalg.hpp"
#include "hgates/pulse.hpp"

namespace hgates {

inline constexpr int kMaxSubspaceSpins = 10;
inline constexpr int kMaxOracleSpins = 8;

using SpinBits = std::uint32_t;

struct SpinBasisState {
    int n_spins = 0;
    SpinBits bits = 0;

    [[nodiscard]] int excitations() const noexcept { return std::popcount(bits); }
    [[nodiscard]] int spin(int k) const noexcept { return static_cast<int>((bits >> k) & 1U); }

    /// "|010>" with the highest spin leftmost.
    [[nodiscard]] std::string label() const {
        std::string s = "|";
        for (int k = n_spins - 1; k >= 0; --k) {
            s += static_cast<char>('0' + spin(k));
        }
        return s + ">";
    }

    friend bool operator==(const SpinBasisState &, const SpinBasisState &) = default;
};

/// Ordered set of spin basis states closed under every bond Hamiltonian.
/// Either a fixed-excitation sector or the whole 2^n space.
class Subspace {
  public:
    Subspace(int n_spins, std::optional<int> n_excitations, std::vector<SpinBits> states)
        : n_spins_(n_spins), n_excitations_(n_excitations), states_(std::move(states)),
          lookup_(std::size_t{1} << n_spins, -1) {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            detail::require(states_[i] < lookup_.size(), "Subspace: state out of range");
            detail::require(lookup_[states_[i]] < 0, "Subspace: duplicate state");
            lookup_[states_[i]] = static_cast<int>(i);
        }
    }

    [[nodiscard]] int n_spins() const noexcept { return n_spins_; }
    [[nodiscard]] std::optional<int> n_excitations() const noexcept { return n_excitations_; }
    [[nodiscard]] std::size_t dim() const noexcept { return states_.size(); }
    [[nodiscard]] const std::vector<SpinBits> &states() const noexcept { return states_; }

    [[nodiscard]] SpinBasisState state(std::size_t i) const { return {n_spins_, states_.at(i)}; }

    [[nodiscard]] std::optional<std::size_t> index_of(SpinBits bits) const noexcept {
        if (bits >= lookup_.size() || lookup_[bits] < 0) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(lookup_[bits]);
    }

    [[nodiscard]] std::size_t require_index(SpinBits bits) const {
        auto idx = index_of(bits);
        detail::require(idx.has_value(), "Subspace: basis state " +
                                             SpinBasisState{n_spins_, bits}.label() +
                                             " is not in this subspace");
        return *idx;
    }

    /// State vector with amplitude 1 on the given spin configuration.
    [[nodiscard]] ComplexState basis_state(SpinBits bits) const {
        return ComplexState::basis(dim(), require_index(bits));
    }

  private:
    int n_spins_;
    std::optional<int> n_excitations_;
    std::vector<SpinBits> states_;
    std::vector<int> lookup_;
};

/// All patterns of `n_spins` bits with popcount `n_excitations`, ascending.
inline Subspace enumerate_subspace(int n_spins, int n_excitations) {
    detail::require(n_spins >= 0 && n_spins <= kMaxSubspaceSpins,
                    "enumerate_subspace: n_spins must lie in [0, 10]");
    detail::require(n_excitations >= 0 && n_excitations <= n_spins,
                    "enumerate_subspace: n_excitations must lie in [0, n_spins]");
    std::vector<SpinBits> states;
    for (SpinBits b = 0; b < (SpinBits{1} << n_spins); ++b) {
        if (std::popcount(b) == n_excitations) {
            states.push_back(b);
        }
    }
    return Subspace(n_spins, n_excitations, std::move(states));
}

/// Entire 2^n space in ascending bit order.
inline Subspace full_space(int n_spins) {
    detail::require(n_spins >= 1 && n_spins <= kMaxSubspaceSpins,
                    "full_space: n_spins must lie in [1, 10]");
    std::vector<SpinBits> states(std::size_t{1} << n_spins);
    for (SpinBits b = 0; b < states.size(); ++b) {
        states[b] = b;
    }
    return Subspace(n_spins, std::nullopt, std::move(states));
}

namespace detail {

/// Result of a single-spin operator on a basis state: coefficient and image.
struct SpinImage {
    double coeff = 0.0;
    SpinBits bits = 0;
};

inline SpinImage apply_sz(int k, SpinBits bits) {
    return {((bits >> k) & 1U) ? -0.5 : 0.5, bits};
}
inline std::optional<SpinImage> apply_raise(int k, SpinBits bits) {
    if (((bits >> k) & 1U) == 0U) {
        return std::nullopt;
    }
    return SpinImage{1.0, bits & ~(SpinBits{1} << k)};
}
inline std::optional<SpinImage> apply_lower(int k, SpinBits bits) {
    if (((bits >> k) & 1U) != 0U) {
        return std::nullopt;
    }
    return SpinImage{1.0, bits | (SpinBits{1} << k)};
}

} // namespace detail

/// V_k restricted to `sub`, assembled by applying S^z S^z and the two
/// flip-flop terms to every basis state.
inline ComplexMatrix build_bond_hamiltonian(int bond, const Subspace &sub) {
    detail::require(bond >= 0 && bond <= sub.n_spins() - 2,
                    "build_bond_hamiltonian: bond index " + std::to_string(bond) +
                        " out of range for " + std::to_string(sub.n_spins()) + " spins");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const int k = bond;
    ComplexMatrix h(sub.dim());
    const auto add = [&](std::size_t col, SpinBits image, double value) {
        h(sub.require_index(image), col) += value;
    };
    for (std::size_t col = 0; col < sub.dim(); ++col) {
        const SpinBits s = sub.states()[col];
        const auto z1 = detail::apply_sz(k + 1, s);
        const auto z0 = detail::apply_sz(k, z1.bits);
        add(col, z0.bits, two_pi * z0.coeff * z1.coeff);

        // S^+_k S^-_{k+1}
        if (auto lo = detail::apply_lower(k + 1, s)) {
            if (auto hi = detail::apply_raise(k, lo->bits)) {
                add(col, hi->bits, two_pi * 0.5 * lo->coeff * hi->coeff);
            }
        }
        // S^-_k S^+_{k+1}
        if (auto hi = detail::apply_raise(k + 1, s)) {
            if (auto lo = detail::apply_lower(k, hi->bits)) {
                add(col, lo->bits, two_pi * 0.5 * hi->coeff * lo->coeff);
            }
        }
    }
    return h;
}

/// Lifts a subspace state into the full 2^n space.
inline ComplexState embed(const ComplexState &psi, const Subspace &sub) {
    detail::require(psi.dim() == sub.dim(), "embed: state does not match subspace");
    ComplexState out(std::size_t{1} << sub.n_spins());
    for (std::size_t i = 0; i < sub.dim(); ++i) {
        out[sub.states()[i]] = psi[i];
    }
    return out;
}

/// Restricts a full-space state to the subspace coordinates.
inline ComplexState project(const ComplexState &full, const Subspace &sub) {
    detail::require(full.dim() == (std::size_t{1} << sub.n_spins()),
                    "project: state is not a full-space state for this chain");
    ComplexState out(sub.dim());
    for (std::size_t i = 0; i < sub.dim(); ++i) {
        out[i] = full[sub.states()[i]];
    }
    return out;
}

/// Probability weight of a full-space state outside `sub`.
inline double complement_weight(const ComplexState &full, const Subspace &sub) {
    detail::require(full.dim() == (std::size_t{1} << sub.n_spins()),
                    "complement_weight: state is not a full-space state for this chain");
    double acc = 0.0;
    for (SpinBits b = 0; b < full.dim(); ++b) {
        if (!sub.index_of(b)) {
            acc += std::norm(full[b]);
        }
    }
    return acc;
}

namespace detail {

/// V_k psi on the full space via V_k = pi * P_k - pi/2, with P_k the
/// permutation exchanging spins k and k+1.
inline ComplexState full_space_bond_action(int k, const ComplexState &psi) {
    constexpr double pi = std::numbers::pi;
    ComplexState out(psi.dim());
    for (SpinBits b = 0; b < psi.dim(); ++b) {
        const SpinBits lo = (b >> k) & 1U;
        const SpinBits hi = (b >> (k + 1)) & 1U;
        const SpinBits swapped = (lo == hi) ? b : (b ^ (SpinBits{3} << k));
        out[swapped] += pi * psi[b];
        out[b] -= 0.5 * pi * psi[b];
    }
    return out;
}

} // namespace detail

/// Reference evolution in the full 2^n space. Shares no code with the
/// eigendecomposition route: each pulse is a Taylor series in small steps of
/// the matrix-free bond action.
inline ComplexState full_space_oracle(const PulseSequence &seq, const ComplexState &psi0) {
    const std::size_t dim = psi0.dim();
    detail::require(dim >= 2 && std::has_single_bit(dim),
                    "full_space_oracle: state dimension must be a power of two");
    const int n_spins = std::countr_zero(dim);
    detail::require(n_spins <= kMaxOracleSpins,
                    "full_space_oracle: at most 8 spins (dimension 256) supported");

    constexpr double max_step = 0.05;
    constexpr int max_order = 40;
    ComplexState psi = psi0;
    for (const auto &pulse : seq.pulses) {
        detail::require(pulse.bond >= 0 && pulse.bond <= n_spins - 2,
                        "full_space_oracle: bond index out of range");
        detail::require(std::isfinite(pulse.duration), "full_space_oracle: non-finite duration");
        if (pulse.duration == 0.0) {
            continue;
        }
        const int steps = static_cast<int>(std::ceil(std::abs(pulse.duration) / max_step));
        const double dt = pulse.duration / steps;
        for (int s = 0; s < steps; ++s) {
            ComplexState term = psi;
            ComplexState acc = psi;
            for (int m = 1; m <= max_order; ++m) {
                term = detail::full_space_bond_action(pulse.bond, term);
                term *= Complex(0.0, -dt / m);
                acc += term;
                if (term.norm() < 1e-20) {
                    break;
                }
            }
            psi = std::move(acc);
        }
    }
    return psi;
}

} // namespace hgates
