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

#include <complex>
#include <random>
#include <vector>

#include "hgates/linalg.hpp"
#include "hgates/pulse.hpp"

namespace hgates::fixtures {

/// Random Hermitian matrix with entries of order `scale`.
inline ComplexMatrix random_hermitian(std::mt19937_64 &rng, std::size_t n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    ComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            h(i, j) = Complex(g(rng), g(rng));
            h(j, i) = std::conj(h(i, j));
        }
    }
    return h;
}

inline ComplexState random_state(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexState s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = Complex(g(rng), g(rng));
    }
    s *= 1.0 / s.norm();
    return s;
}

/// Random pulses on bonds [0, n_bonds) with durations in [-1, 3).
inline PulseSequence random_sequence(std::mt19937_64 &rng, int n_bonds, std::size_t length) {
    std::uniform_int_distribution<int> bond(0, n_bonds - 1);
    std::uniform_real_distribution<double> dur(-1.0, 3.0);
    PulseSequence seq{"random", {}};
    for (std::size_t i = 0; i < length; ++i) {
        seq.pulses.push_back({bond(rng), dur(rng), ""});
    }
    return seq;
}

} // namespace hgates::fixtures
