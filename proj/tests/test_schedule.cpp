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

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hgates/error_lab.hpp"
#include "hgates/schedule.hpp"

using namespace hgates;

TEST(Schedule, SwapHasFifteenHalfPulses) {
    const std::string text = write_schedule(swap_sequence());
    const PulseSequence back = parse_schedule(text);
    ASSERT_EQ(back.size(), 15U);
    for (std::size_t i = 0; i < 15; ++i) {
        EXPECT_EQ(back.pulses[i].bond, static_cast<int>(4 - i % 5));
        EXPECT_EQ(back.pulses[i].tag, "1/2");
        EXPECT_EQ(back.pulses[i].duration, 0.5);
    }
    EXPECT_EQ(text.substr(0, 10), "4 1/2 0.5\n");
}

TEST(Schedule, FlipLines) {
    const GateTimings t;
    const std::string text = write_schedule(flip_sequence(Qubit::A));
    EXPECT_EQ(text, "0 t1 " + detail::decimal17(t.t1) + "\n1 t2 0.75\n0 t3 " +
                        detail::decimal17(t.t3) + "\n1 t4 " + detail::decimal17(t.t4) + "\n");
}

TEST(Schedule, HadamardQubitB) {
    const PulseSequence back = parse_schedule(write_schedule(hadamard_sequence(Qubit::B)));
    ASSERT_EQ(back.size(), 3U);
    EXPECT_EQ(back.pulses[0].bond, 4);
    EXPECT_EQ(back.pulses[1].bond, 3);
    EXPECT_EQ(back.pulses[2].bond, 4);
    EXPECT_EQ(back.pulses[1].tag, "t6");
}

TEST(Schedule, RoundTripIsExactProperty) {
    // 17 significant digits reproduce every double, including perturbed ones.
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 20; ++rep) {
        const PulseSequence noisy = perturb(swap_sequence(), NoiseModel{0.01, 0}, rng);
        const PulseSequence back = parse_schedule(write_schedule(noisy), noisy.name);
        EXPECT_EQ(back, noisy);
    }
    const PulseSequence p = phase_sequence(Qubit::A, std::numbers::pi);
    EXPECT_EQ(parse_schedule(write_schedule(p), p.name), p);
}

TEST(Schedule, RejectsMalformedLines) {
    EXPECT_THROW((void)parse_schedule("0 t1\n"), Error);
    EXPECT_THROW((void)parse_schedule("0 t1 abc\n"), Error);
    EXPECT_THROW((void)parse_schedule("0 t1 0.5 extra\n"), Error);
    EXPECT_THROW((void)parse_schedule("-1 t1 0.5\n"), Error);
    EXPECT_EQ(parse_schedule("# comment\n\n2 1/2 0.5\n").size(), 1U);
}
