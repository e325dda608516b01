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

#include <stdexcept>
#include <string>

namespace hgates {

/// Raised on every contract violation (bad dimension, out-of-range index,
/// non-Hermitian input, ...). The message carries the diagnostic.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] inline void fail(const std::string &msg) { throw Error(msg); }

inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        fail(msg);
    }
}
} // namespace detail

} // namespace hgates
