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
 * Text pulse schedules. One pulse per line, execution order:
 *
 *     <bond> <symbolic duration> <duration, 17 significant digits>
 *
 * e.g. "0 t1 0.82620922513658341". Pulses without a closed form use "-" as the
 * symbolic field. Blank lines and lines starting with '#' are ignored on read.
 */

#pragma once

#include <sstream>
#include <string>

#include "hgates/error.hpp"
#include "hgates/gates.hpp"
#include "hgates/pulse.hpp"

namespace hgates {

inline std::string write_schedule(const PulseSequence &seq) {
    std::string out;
    for (const auto &p : seq.pulses) {
        out += std::to_string(p.bond);
        out += ' ';
        out += p.tag.empty() ? "-" : p.tag;
        out += ' ';
        out += detail::decimal17(p.duration);
        out += '\n';
    }
    return out;
}

inline PulseSequence parse_schedule(const std::string &text, std::string name = {}) {
    PulseSequence seq{std::move(name), {}};
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        Pulse p;
        std::string decimal;
        std::string extra;
        if (!(fields >> p.bond >> p.tag >> decimal) || (fields >> extra)) {
            detail::fail("schedule line " + std::to_string(line_no) +
                         ": expected '<bond> <tag> <duration>'");
        }
        try {
            std::size_t used = 0;
            p.duration = std::stod(decimal, &used);
            detail::require(used == decimal.size(), "trailing characters");
        } catch (const std::exception &) {
            detail::fail("schedule line " + std::to_string(line_no) + ": bad duration '" +
                         decimal + "'");
        }
        detail::require(p.bond >= 0, "schedule line " + std::to_string(line_no) +
                                         ": negative bond index");
        if (p.tag == "-") {
            p.tag.clear();
        }
        seq.pulses.push_back(std::move(p));
    }
    return seq;
}

} // namespace hgates
