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
 * Gate catalog for the encoded qubits: closed-form pulse timings, the pulse
 * sequences built from them, subspace simulation and the closed-form logical
 * unitaries the simulated gates must reproduce.
 *
 * Qubit A gates use bonds 0 and 1; qubit B gates use bonds 3 and 4 in the
 * same roles.
 */

#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hgates/encoding.hpp"
#include "hgates/error.hpp"
#include "hgates/linalg.hpp"
#include "hgates/pulse.hpp"
#include "hgates/spin_model.hpp"

namespace hgates {

enum class Qubit { A, B };

inline const char *to_string(Qubit q) { return q == Qubit::A ? "A" : "B"; }

/// Bond playing the role of V_0 (mixing) and V_1 (diagonal) for a qubit.
inline int mixing_bond(Qubit q) { return q == Qubit::A ? 0 : 3; }
inline int diagonal_bond(Qubit q) { return q == Qubit::A ? 1 : 4; }

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(x, two_pi);
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

struct GateTimings {
    double t1 = 1.0 - std::atan(3.0 - std::sqrt(5.0)) / std::numbers::pi;
    double t2 = 0.75;
    double t3 = 1.0 - std::atan(3.0 + std::sqrt(5.0)) / std::numbers::pi;
    double t4 = 1.0 - std::atan(std::sqrt(5.0) / 2.0) / (2.0 * std::numbers::pi);
    double t5 = 0.75 + std::atan(1.0 / std::numbers::sqrt2) / (2.0 * std::numbers::pi);
    double t6 = std::atan(std::numbers::sqrt2) / std::numbers::pi;

    static constexpr double swap = 0.5;

    /// Phase-gate duration, theta in [0, 2*pi].
    static double phase(double theta) {
        detail::require(theta >= 0.0 && theta <= 2.0 * std::numbers::pi,
                        "phase gate: theta must lie in [0, 2*pi]");
        return 1.0 - theta / (2.0 * std::numbers::pi);
    }
};

/// The other root of the three-pulse flip condition (t2 = 1/4). Not the default.
struct AlternateFlipTimings {
    double t1 = std::atan(3.0 - std::sqrt(5.0)) / std::numbers::pi;
    double t2 = 0.25;
    double t3 = std::atan(3.0 + std::sqrt(5.0)) / std::numbers::pi;
};

namespace analytic {
inline const double phi1 =
    0.5 * (3.0 * std::numbers::pi / 4.0 + std::atan(2.0) - std::atan(std::sqrt(5.0) / 2.0));
inline const double phi2 =
    0.5 * (3.0 * std::numbers::pi / 4.0 + std::atan(2.0) + std::atan(std::sqrt(5.0) / 2.0));
/// Overall phase of the corrected flip gate.
inline const double flip_phase =
    -std::numbers::pi / 8.0 + 0.5 * std::atan(2.0) - 0.25 * std::atan(std::sqrt(5.0) / 2.0);
inline constexpr double hadamard_phase = std::numbers::pi / 2.0;
inline constexpr double swap_phase = std::numbers::pi / 4.0;
inline double phase_gate_phase(double theta) { return 1.5 * std::numbers::pi - 0.75 * theta; }
} // namespace analytic

namespace detail {
inline std::string decimal17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
} // namespace detail

/// Three-pulse flip without phase correction: V0(t1), V1(t2), V0(t3).
inline PulseSequence flip_ph_sequence(Qubit q, const GateTimings &t = {}) {
    const int b0 = mixing_bond(q);
    const int b1 = diagonal_bond(q);
    return {std::string("Fph_") + to_string(q), {{b0, t.t1, "t1"}, {b1, t.t2, "t2"}, {b0, t.t3, "t3"}}};
}

inline PulseSequence flip_ph_sequence(Qubit q, const AlternateFlipTimings &t) {
    const int b0 = mixing_bond(q);
    const int b1 = diagonal_bond(q);
    return {std::string("Fph'_") + to_string(q),
            {{b0, t.t1, "t1'"}, {b1, t.t2, "1/4"}, {b0, t.t3, "t3'"}}};
}

/// Phase-corrected flip: V0(t1), V1(t2), V0(t3), V1(t4).
inline PulseSequence flip_sequence(Qubit q, const GateTimings &t = {}) {
    PulseSequence seq = flip_ph_sequence(q, t);
    seq.name = std::string("F_") + to_string(q);
    seq.pulses.push_back({diagonal_bond(q), t.t4, "t4"});
    return seq;
}

/// V1(t5), V0(t6), V1(t5).
inline PulseSequence hadamard_sequence(Qubit q, const GateTimings &t = {}) {
    const int b0 = mixing_bond(q);
    const int b1 = diagonal_bond(q);
    return {std::string("H_") + to_string(q), {{b1, t.t5, "t5"}, {b0, t.t6, "t6"}, {b1, t.t5, "t5"}}};
}

/// Single pulse V1(1 - theta / 2pi).
inline PulseSequence phase_sequence(Qubit q, double theta) {
    const double t = GateTimings::phase(theta);
    return {std::string("P_") + to_string(q),
            {{diagonal_bond(q), t, "t(theta=" + detail::decimal17(theta) + ")"}}};
}

/// Exchange of spins k and k+1 (up to the phase e^{-i pi/4}).
inline PulseSequence spin_swap(int bond) {
    return {"V" + std::to_string(bond) + "(1/2)", {{bond, GateTimings::swap, "1/2"}}};
}

/// Moves spin 5's state to spin 0 and every other spin up by one site.
/// Execution order V4, V3, V2, V1, V0.
inline PulseSequence cyclic_permutation() {
    PulseSequence seq{"C50", {}};
    for (int bond = 4; bond >= 0; --bond) {
        seq.pulses.push_back({bond, GateTimings::swap, "1/2"});
    }
    return seq;
}

/// Logical swap of A and B: three cyclic permutations, 15 pulses.
inline PulseSequence swap_sequence() {
    const PulseSequence c = cyclic_permutation();
    PulseSequence seq = concat("SWAP", concat("", c, c), c);
    return seq;
}

/// Eigendecompositions of every bond Hamiltonian on a subspace, computed once.
/// Immutable after construction and safe to share between threads.
class BondPropagators {
  public:
    explicit BondPropagators(Subspace sub) : sub_(std::move(sub)) {
        for (int bond = 0; bond + 1 < sub_.n_spins(); ++bond) {
            eig_.push_back(eig_hermitian(build_bond_hamiltonian(bond, sub_)));
        }
    }

    [[nodiscard]] const Subspace &subspace() const noexcept { return sub_; }
    [[nodiscard]] std::size_t dim() const noexcept { return sub_.dim(); }
    [[nodiscard]] int n_bonds() const noexcept { return static_cast<int>(eig_.size()); }

    [[nodiscard]] const Eigensystem &bond(int k) const {
        detail::require(k >= 0 && k < n_bonds(), "bond index " + std::to_string(k) +
                                                     " invalid for a chain of " +
                                                     std::to_string(sub_.n_spins()) + " spins");
        return eig_[static_cast<std::size_t>(k)];
    }

    [[nodiscard]] ComplexState evolve(const PulseSequence &seq, ComplexState psi) const {
        detail::require(psi.dim() == dim(), "simulate: state does not match subspace dimension");
        for (const auto &p : seq.pulses) {
            psi = hgates::evolve(bond(p.bond), p.duration, psi);
        }
        return psi;
    }

    [[nodiscard]] ComplexMatrix unitary(const PulseSequence &seq) const {
        ComplexMatrix u = ComplexMatrix::identity(dim());
        for (const auto &p : seq.pulses) {
            u = propagator(bond(p.bond), p.duration) * u;
        }
        return u;
    }

  private:
    Subspace sub_;
    std::vector<Eigensystem> eig_;
};

inline constexpr double kSimulateNormTolerance = 1e-10;

inline ComplexState simulate(const PulseSequence &seq, const ComplexState &psi0,
                             const Subspace &sub) {
    detail::require(std::abs(psi0.norm_squared() - 1.0) <= kSimulateNormTolerance,
                    "simulate: initial state is not normalized");
    for (const auto &p : seq.pulses) {
        detail::require(p.bond >= 0 && p.bond + 1 < sub.n_spins(),
                        "simulate: bond index " + std::to_string(p.bond) +
                            " invalid for a chain of " + std::to_string(sub.n_spins()) +
                            " spins");
    }
    return BondPropagators(sub).evolve(seq, psi0);
}

/// <frame_i| S |frame_j> for the logical slots of the frame.
inline ComplexMatrix logical_unitary(const PulseSequence &seq, const LogicalFrame &frame,
                                     const BondPropagators &props) {
    detail::require(props.dim() == frame.subspace.dim(), "logical_unitary: frame mismatch");
    const std::size_t n = frame.n_logical;
    ComplexMatrix u(n);
    for (std::size_t j = 0; j < n; ++j) {
        const ComplexState out = props.evolve(seq, frame.states[j]);
        for (std::size_t i = 0; i < n; ++i) {
            u(i, j) = inner(frame.states[i], out);
        }
    }
    return u;
}

inline ComplexMatrix logical_unitary(const PulseSequence &seq, const LogicalFrame &frame) {
    return logical_unitary(seq, frame, BondPropagators(frame.subspace));
}

/// Embeds a one-qubit gate on A or B into the two-qubit logical space
/// (index 2*b + a).
inline ComplexMatrix lift_to_two_qubits(const ComplexMatrix &g, Qubit q) {
    detail::require(g.dim() == 2, "lift_to_two_qubits: expected a 2x2 gate");
    ComplexMatrix out(4);
    for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b2 = 0; b2 < 2; ++b2) {
                for (std::size_t a2 = 0; a2 < 2; ++a2) {
                    Complex v{};
                    if (q == Qubit::A && b == b2) {
                        v = g(a, a2);
                    } else if (q == Qubit::B && a == a2) {
                        v = g(b, b2);
                    }
                    out(2 * b + a, 2 * b2 + a2) = v;
                }
            }
        }
    }
    return out;
}

enum class GateKind { Flip, Hadamard, Phase, Swap, CyclicPermutation };

struct GateSpec {
    GateKind kind = GateKind::Flip;
    Qubit qubit = Qubit::A;
    double theta = 0.0;
};

/// Parses "F", "H", "P", "SWAP", "C50" (case-insensitive).
inline GateKind parse_gate_kind(std::string name) {
    for (auto &c : name) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (name == "F" || name == "FLIP") return GateKind::Flip;
    if (name == "H" || name == "HADAMARD") return GateKind::Hadamard;
    if (name == "P" || name == "PHASE") return GateKind::Phase;
    if (name == "SWAP" || name == "S") return GateKind::Swap;
    if (name == "C50" || name == "CYCLIC") return GateKind::CyclicPermutation;
    detail::fail("unknown gate name '" + name + "' (expected F, H, P, SWAP or C50)");
}

inline PulseSequence catalog_sequence(const GateSpec &spec) {
    switch (spec.kind) {
    case GateKind::Flip:
        return flip_sequence(spec.qubit);
    case GateKind::Hadamard:
        return hadamard_sequence(spec.qubit);
    case GateKind::Phase:
        return phase_sequence(spec.qubit, spec.theta);
    case GateKind::Swap:
        return swap_sequence();
    case GateKind::CyclicPermutation:
        return cyclic_permutation();
    }
    detail::fail("catalog_sequence: unknown gate");
}

/// Closed-form logical unitary: 2x2 for one-qubit gates, 4x4 for the swap.
inline ComplexMatrix analytic_reference(const GateSpec &spec) {
    const double s = 1.0 / std::numbers::sqrt2;
    switch (spec.kind) {
    case GateKind::Flip:
        return std::polar(1.0, analytic::flip_phase) * ComplexMatrix{{0, 1}, {1, 0}};
    case GateKind::Hadamard:
        return std::polar(1.0, analytic::hadamard_phase) * ComplexMatrix{{s, s}, {s, -s}};
    case GateKind::Phase: {
        const double theta = spec.theta;
        detail::require(theta >= 0.0 && theta <= 2.0 * std::numbers::pi,
                        "phase gate: theta must lie in [0, 2*pi]");
        return std::polar(1.0, analytic::phase_gate_phase(theta)) *
               ComplexMatrix{{1, 0}, {0, std::polar(1.0, theta)}};
    }
    case GateKind::Swap:
        return std::polar(1.0, analytic::swap_phase) *
               ComplexMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    case GateKind::CyclicPermutation:
        break;
    }
    detail::fail("analytic_reference: the cyclic permutation has no logical-sector form");
}

/// Ideal-swap image of a two-qubit logical basis index: |b a> -> |a b>.
inline std::size_t swap_image(std::size_t logical_index) {
    detail::require(logical_index < 4, "swap_image: logical index must be 0..3");
    constexpr std::size_t image[4] = {0, 2, 1, 3};
    return image[logical_index];
}

/// Phases acquired by a three-pulse flip, measured by simulation:
/// (C0, C1) -> (e^{i phi2} C1, e^{i phi1} C0).
struct FlipPhases {
    double phi1 = 0.0;
    double phi2 = 0.0;
    /// |C_0| left after flipping |0>; zero for a valid flip timing.
    double residual = 0.0;
};

inline FlipPhases measure_flip_phases(const PulseSequence &three_pulse) {
    const LogicalFrame frame = logical_basis_a();
    const ComplexMatrix u = logical_unitary(three_pulse, frame);
    return {std::arg(u(1, 0)), std::arg(u(0, 1)), std::abs(u(0, 0))};
}

/// Duration of the closing V1 pulse that equalizes the two flip phases,
/// reduced to [0, 1).
inline double phase_correction_time(const FlipPhases &ph) {
    // phi1 + Delta t / 2 = phi2 - 3 Delta t / 2  (mod 2 pi)
    double t = (ph.phi2 - ph.phi1) / (2.0 * kDelta);
    t -= std::floor(t);
    return t;
}

/// Corrected flip built on the alternate timing root. The closing pulse is
/// derived from the simulated phases of its three-pulse core.
inline PulseSequence alternate_flip_sequence(Qubit q) {
    PulseSequence seq = flip_ph_sequence(q, AlternateFlipTimings{});
    const FlipPhases ph = measure_flip_phases(flip_ph_sequence(Qubit::A, AlternateFlipTimings{}));
    seq.name = std::string("F'_") + to_string(q);
    seq.pulses.push_back({diagonal_bond(q), phase_correction_time(ph), "t4'"});
    return seq;
}

} // namespace hgates
