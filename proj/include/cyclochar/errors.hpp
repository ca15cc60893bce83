/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The cyclochar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclochar {

enum class ErrorKind {
    InvalidArgument,
    InvalidModulus,
    InvalidInput,
    NoInverse,
    DivisionByZero,
    ResourceLimit,
    Consistency,        // internal arithmetic invariant broken
    ConditionFailed,    // gcd preconditions of the construction not met
    HypothesisViolated,
    TheoremViolation,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NoInverse: return "no-inverse";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::ConditionFailed: return "condition-failed";
    case ErrorKind::HypothesisViolated: return "hypothesis-violated";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void ensure(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond)
        throw Error(kind, what);
}

} // namespace cyclochar
