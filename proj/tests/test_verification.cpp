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

#include <gtest/gtest.h>

#include "hgates/verification.hpp"

using namespace hgates;

TEST(Verification, AllChecksPassOnCleanBuild) {
    for (const auto &c : run_verification()) {
        EXPECT_TRUE(c.passed) << c.name << " max_error=" << c.max_error;
        EXPECT_LE(c.max_error, 1e-12) << c.name;
    }
}

TEST(Verification, CorruptedT2FailsFlipChecks) {
    VerifyOptions opts;
    opts.timings.t2 = 0.7;
    const auto results = run_verification(opts);
    bool flip_failed = false;
    for (const auto &c : results) {
        if (c.name == "flip-timings" || c.name == "flip-gate") {
            EXPECT_FALSE(c.passed) << c.name;
            flip_failed = true;
        }
        if (c.name == "swap-phase") {
            EXPECT_TRUE(c.passed);
        }
    }
    EXPECT_TRUE(flip_failed);
}

TEST(Verification, SingleCheckSelection) {
    VerifyOptions opts;
    opts.only = "swap-phase";
    const auto results = run_verification(opts);
    ASSERT_EQ(results.size(), 1U);
    EXPECT_NE(results[0].detail.find("0.78539816339744"), std::string::npos);
    opts.only = "nope";
    EXPECT_THROW((void)run_verification(opts), Error);
}
