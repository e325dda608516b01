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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hgates {

/// Exchange pulse V_bond(duration). The duration is the dimensionless pulse
/// area: the time integral of the exchange coupling divided by 2*pi*hbar, so
/// only the area matters and the pulse shape does not. Negative durations are
/// legal and evolve backwards.
struct Pulse {
    int bond = 0;
    double duration = 0.0;
    /// Exact symbolic form of the duration, e.g. "t1", "1/2". Empty when the
    /// duration has no closed form (perturbed pulses).
    std::string tag;

    friend bool operator==(const Pulse &, const Pulse &) = default;
};

/// Pulses in execution order: pulses.front() acts first.
struct PulseSequence {
    std::string name;
    std::vector<Pulse> pulses;

    [[nodiscard]] std::size_t size() const noexcept { return pulses.size(); }
    [[nodiscard]] bool empty() const noexcept { return pulses.empty(); }

    friend bool operator==(const PulseSequence &, const PulseSequence &) = default;
};

/// Operator-product rendering, last pulse leftmost: "V1(t4) V0(t3) V1(t2) V0(t1)".
inline std::string to_operator_string(const PulseSequence &seq) {
    std::string out;
    for (auto it = seq.pulses.rbegin(); it != seq.pulses.rend(); ++it) {
        if (!out.empty()) {
            out += ' ';
        }
        out += "V" + std::to_string(it->bond) + "(";
        out += it->tag.empty() ? std::to_string(it->duration) : it->tag;
        out += ")";
    }
    return out;
}

inline PulseSequence concat(std::string name, const PulseSequence &first,
                            const PulseSequence &second) {
    PulseSequence out{std::move(name), first.pulses};
    out.pulses.insert(out.pulses.end(), second.pulses.begin(), second.pulses.end());
    return out;
}

} // namespace hgates
