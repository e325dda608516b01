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
 * The analytic verification suite behind `hgates verify`: every closed-form
 * statement about the encoding and the gate catalog, checked against
 * simulation with a per-check residual.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hgates/encoding.hpp"
#include "hgates/gates.hpp"
#include "hgates/linalg.hpp"
#include "hgates/spin_model.hpp"

namespace hgates {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Timings used for the flip and Hadamard checks; override to build
    /// negative controls.
    GateTimings timings{};
    /// Run only the named check.
    std::optional<std::string> only;
};

inline const std::vector<std::string> &verification_check_names() {
    static const std::vector<std::string> names{
        "encoding-orthonormality", "auxiliary-decoupling", "projected-hamiltonians",
        "flip-timings",            "flip-phases",          "flip-gate",
        "alternate-flip",          "hadamard",             "phase-gate",
        "spin-swap",               "cyclic-permutation",   "swap-phase",
        "full-space-oracle"};
    return names;
}

namespace detail {

inline CheckResult make_check(std::string name, double err, double tol, std::string info = {}) {
    const bool ok = std::isfinite(err) && err <= tol;
    return {std::move(name), err, tol, ok, std::move(info)};
}

/// Max deviation between a subspace evolution and the projected full-space
/// oracle, together with the weight the oracle puts outside the subspace.
inline double oracle_mismatch(const PulseSequence &seq, const LogicalFrame &frame) {
    const BondPropagators props(frame.subspace);
    double worst = 0.0;
    for (const auto &psi0 : frame.states) {
        const ComplexState sub_out = props.evolve(seq, psi0);
        const ComplexState full_out = full_space_oracle(seq, embed(psi0, frame.subspace));
        worst = std::max(worst, max_abs_diff(project(full_out, frame.subspace), sub_out));
        worst = std::max(worst, complement_weight(full_out, frame.subspace));
    }
    return worst;
}

inline std::vector<double> theta_grid() {
    std::vector<double> thetas;
    for (int k = 0; k <= 8; ++k) {
        thetas.push_back(2.0 * std::numbers::pi * k / 8.0);
    }
    thetas.back() = 2.0 * std::numbers::pi;
    return thetas;
}

} // namespace detail

inline CheckResult run_check(const std::string &name, const VerifyOptions &opts = {}) {
    using detail::make_check;
    constexpr double pi = std::numbers::pi;
    const GateTimings &tm = opts.timings;

    if (name == "encoding-orthonormality") {
        const double err = std::max(gram_defect(logical_basis_a()), gram_defect(logical_basis_15()));
        return make_check(name, err, 1e-12);
    }
    if (name == "auxiliary-decoupling") {
        return make_check(name, verify_auxiliary_decoupling().max_aux_element(), 1e-13);
    }
    if (name == "projected-hamiltonians") {
        const auto rep = verify_auxiliary_decoupling();
        const ComplexMatrix v0{{0.0, -kOmega / 2.0}, {-kOmega / 2.0, kDelta}};
        const ComplexMatrix v1{{1.5 * kDelta, 0.0}, {0.0, -0.5 * kDelta}};
        const double err = std::max(max_abs_diff(rep.v0_logical, v0), max_abs_diff(rep.v1_logical, v1));
        return make_check(name, err, 1e-13);
    }
    if (name == "flip-timings") {
        const double err = measure_flip_phases(flip_ph_sequence(Qubit::A, tm)).residual;
        return make_check(name, err, 1e-13, "|C0| after the three-pulse flip of |0>");
    }
    if (name == "flip-phases") {
        const FlipPhases ph = measure_flip_phases(flip_ph_sequence(Qubit::A, tm));
        double err = std::max(std::abs(wrap_angle(ph.phi1 - analytic::phi1)),
                              std::abs(wrap_angle(ph.phi2 - analytic::phi2)));
        const double lhs = analytic::phi1 + kDelta * tm.t4 / 2.0;
        const double rhs = analytic::phi2 - 3.0 * kDelta * tm.t4 / 2.0;
        err = std::max(err, std::abs(wrap_angle(lhs - rhs)));
        return make_check(name, err, 1e-12,
                          "phi1=" + detail::decimal17(ph.phi1) + " phi2=" + detail::decimal17(ph.phi2));
    }
    if (name == "flip-gate") {
        const ComplexMatrix ref = analytic_reference({GateKind::Flip});
        double err = max_abs_diff(logical_unitary(flip_sequence(Qubit::A, tm), logical_basis_a()), ref);
        const LogicalFrame f15 = logical_basis_15();
        for (Qubit q : {Qubit::A, Qubit::B}) {
            err = std::max(err, max_abs_diff(logical_unitary(flip_sequence(q, tm), f15),
                                             lift_to_two_qubits(ref, q)));
        }
        return make_check(name, err, 1e-12,
                          "Phi_F=" + detail::decimal17(analytic::flip_phase));
    }
    if (name == "alternate-flip") {
        const FlipPhases ph = measure_flip_phases(flip_ph_sequence(Qubit::A, AlternateFlipTimings{}));
        const ComplexMatrix u = logical_unitary(alternate_flip_sequence(Qubit::A), logical_basis_a());
        // A flip up to one common phase: zero diagonal, equal off-diagonal entries.
        double err = std::max({ph.residual, std::abs(u(0, 0)), std::abs(u(1, 1)),
                               std::abs(u(0, 1) - u(1, 0)), std::abs(std::abs(u(1, 0)) - 1.0)});
        return make_check(name, err, 1e-12,
                          "phi1'=" + detail::decimal17(ph.phi1) + " phi2'=" + detail::decimal17(ph.phi2) +
                              " t4'=" + detail::decimal17(phase_correction_time(ph)));
    }
    if (name == "hadamard") {
        const ComplexMatrix ref = analytic_reference({GateKind::Hadamard});
        double err = max_abs_diff(logical_unitary(hadamard_sequence(Qubit::A, tm), logical_basis_a()), ref);
        const LogicalFrame f15 = logical_basis_15();
        for (Qubit q : {Qubit::A, Qubit::B}) {
            err = std::max(err, max_abs_diff(logical_unitary(hadamard_sequence(q, tm), f15),
                                             lift_to_two_qubits(ref, q)));
        }
        return make_check(name, err, 1e-12);
    }
    if (name == "phase-gate") {
        const LogicalFrame fa = logical_basis_a();
        const LogicalFrame f15 = logical_basis_15();
        const BondPropagators pa(fa.subspace);
        const BondPropagators p15(f15.subspace);
        double err = 0.0;
        for (double theta : detail::theta_grid()) {
            const ComplexMatrix ref = analytic_reference({GateKind::Phase, Qubit::A, theta});
            err = std::max(err, max_abs_diff(logical_unitary(phase_sequence(Qubit::A, theta), fa, pa), ref));
            for (Qubit q : {Qubit::A, Qubit::B}) {
                err = std::max(err, max_abs_diff(logical_unitary(phase_sequence(q, theta), f15, p15),
                                                 lift_to_two_qubits(ref, q)));
            }
        }
        return make_check(name, err, 1e-12, "9 angles in [0, 2pi]");
    }
    if (name == "spin-swap") {
        // Every two-spin basis state goes to its exchanged partner times e^{-i pi/4}.
        const Subspace full = full_space(2);
        const ComplexMatrix u = BondPropagators(full).unitary(spin_swap(0));
        double err = 0.0;
        const Complex phase = std::polar(1.0, -pi / 4.0);
        for (SpinBits b = 0; b < 4; ++b) {
            const SpinBits partner = ((b & 1U) << 1) | ((b >> 1) & 1U);
            for (SpinBits r = 0; r < 4; ++r) {
                const Complex expected = (r == partner) ? phase : Complex{};
                err = std::max(err, std::abs(u(r, b) - expected));
            }
        }
        return make_check(name, err, 1e-12);
    }
    if (name == "cyclic-permutation") {
        const Subspace sector = enumerate_subspace(6, 2);
        const BondPropagators props(sector);
        const Complex phase = std::polar(1.0, -5.0 * pi / 4.0);
        double err = 0.0;
        for (SpinBits b : sector.states()) {
            const SpinBits shifted = ((b << 1) | (b >> 5)) & 0x3FU;
            const ComplexState out = props.evolve(cyclic_permutation(), sector.basis_state(b));
            err = std::max(err, max_abs_diff(out, phase * sector.basis_state(shifted)));
        }
        return make_check(name, err, 1e-12, "phase e^{-i 5pi/4} on all 15 sector states");
    }
    if (name == "swap-phase") {
        const ComplexMatrix u = logical_unitary(swap_sequence(), logical_basis_15());
        const double err = max_abs_diff(u, analytic_reference({GateKind::Swap}));
        return make_check(name, err, 1e-12,
                          "measured overall phase " + detail::decimal17(std::arg(u(0, 0))) +
                              ", expected " + detail::decimal17(analytic::swap_phase));
    }
    if (name == "full-space-oracle") {
        const LogicalFrame fa = logical_basis_a();
        const LogicalFrame f15 = logical_basis_15();
        double err = 0.0;
        for (const auto &seq : {flip_sequence(Qubit::A, tm), hadamard_sequence(Qubit::A, tm),
                                phase_sequence(Qubit::A, pi / 3.0)}) {
            err = std::max(err, detail::oracle_mismatch(seq, fa));
        }
        for (const auto &seq : {flip_sequence(Qubit::B, tm), hadamard_sequence(Qubit::B, tm),
                                phase_sequence(Qubit::B, pi / 3.0), cyclic_permutation(),
                                swap_sequence()}) {
            err = std::max(err, detail::oracle_mismatch(seq, f15));
        }
        return make_check(name, err, 1e-12, "subspace vs full 2^n evolution, all catalog gates");
    }
    detail::fail("unknown verification check '" + name + "'");
}

inline std::vector<CheckResult> run_verification(const VerifyOptions &opts = {}) {
    std::vector<CheckResult> out;
    if (opts.only) {
        out.push_back(run_check(*opts.only, opts));
        return out;
    }
    for (const auto &name : verification_check_names()) {
        out.push_back(run_check(name, opts));
    }
    return out;
}

} // namespace hgates
