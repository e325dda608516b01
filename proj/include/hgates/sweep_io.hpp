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

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hgates/error.hpp"
#include "hgates/error_lab.hpp"
#include "hgates/gates.hpp"

namespace hgates {

inline constexpr const char *kSweepCsvHeader =
    "epsilon,n_runs,mean_P,std_P,stderr_P,mean_Q,std_Q,stderr_Q,excluded_trials";

inline std::string write_sweep_csv(const std::vector<SweepPoint> &points) {
    using detail::decimal17;
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const auto &p : points) {
        out += decimal17(p.epsilon) + ',' + std::to_string(p.n_runs) + ',' + decimal17(p.mean_P) +
               ',' + decimal17(p.std_P) + ',' + decimal17(p.stderr_P) + ',' +
               decimal17(p.mean_Q) + ',' + decimal17(p.std_Q) + ',' + decimal17(p.stderr_Q) +
               ',' + std::to_string(p.excluded_trials) + '\n';
    }
    return out;
}

inline std::vector<SweepPoint> parse_sweep_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<SweepPoint> out;
    bool header_seen = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            detail::require(line == kSweepCsvHeader,
                            "sweep csv: unexpected header '" + line + "'");
            header_seen = true;
            continue;
        }
        std::vector<std::string> f;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) {
            f.push_back(cell);
        }
        detail::require(f.size() == 9, "sweep csv line " + std::to_string(line_no) +
                                           ": expected 9 fields");
        try {
            SweepPoint p;
            p.epsilon = std::stod(f[0]);
            p.n_runs = std::stoul(f[1]);
            p.mean_P = std::stod(f[2]);
            p.std_P = std::stod(f[3]);
            p.stderr_P = std::stod(f[4]);
            p.mean_Q = std::stod(f[5]);
            p.std_Q = std::stod(f[6]);
            p.stderr_Q = std::stod(f[7]);
            p.excluded_trials = std::stoul(f[8]);
            out.push_back(p);
        } catch (const std::logic_error &) {
            detail::fail("sweep csv line " + std::to_string(line_no) + ": malformed number");
        }
    }
    detail::require(header_seen, "sweep csv: missing header");
    return out;
}

/// {"channel": "P", "amplitude": ..., "exponent": ..., "chi2": ..., "n_points": N}
inline std::string write_fit(const PowerFit &fit, std::optional<std::uint64_t> seed = {}) {
    using detail::decimal17;
    std::string out = "{\"channel\": \"";
    out += to_string(fit.channel);
    out += "\", \"amplitude\": " + decimal17(fit.amplitude);
    out += ", \"exponent\": " + decimal17(fit.exponent);
    out += ", \"chi2\": " + decimal17(fit.chi2);
    out += ", \"n_points\": " + std::to_string(fit.n_points);
    if (seed) {
        out += ", \"seed\": " + std::to_string(*seed);
    }
    out += "}";
    return out;
}

} // namespace hgates
