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

// Builds the 15-pulse swap, prints its logical matrix, then runs a small
// pulse-error sweep and prints the fitted scaling of both error channels.

#include <cstdio>

#include "hgates/hgates.hpp"

int main() {
    using namespace hgates;

    const PulseSequence swap = swap_sequence();
    std::printf("%s: %zu pulses\n%s\n\n", swap.name.c_str(), swap.size(),
                to_operator_string(swap).c_str());

    const LogicalFrame frame = logical_basis_15();
    const ComplexMatrix u = logical_unitary(swap, frame);
    std::printf("logical matrix (rows/cols |0B0A> |0B1A> |1B0A> |1B1A>):\n");
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            std::printf("  %+.6f%+.6fi", u(r, c).real(), u(r, c).imag());
        }
        std::printf("\n");
    }
    std::printf("deviation from e^{i pi/4} SWAP: %.3e\n\n",
                max_abs_diff(u, analytic_reference({GateKind::Swap})));

    const auto grid = log_grid(1e-4, 1e-2, 5);
    const auto points = sweep(grid, 200, kDefaultSeed, {0});
    std::printf("%-10s %-12s %-12s\n", "epsilon", "mean_P", "mean_Q");
    for (const auto &p : points) {
        std::printf("%-10.2e %-12.4e %-12.4e\n", p.epsilon, p.mean_P, p.mean_Q);
    }
    for (Channel ch : {Channel::P, Channel::Q}) {
        const PowerFit fit = fit_power_law(points, ch);
        std::printf("%s ~ %.4g * eps^%.3f\n", to_string(ch), fit.amplitude, fit.exponent);
    }
    return 0;
}
