/**************************************************************************
 * config.hpp
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

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include "codes.hpp"
#include "errors.hpp"
#include "gf.hpp"

namespace cyclochar {

enum class OutputFormat { Json, Text };

struct RunConfig {
    std::uint64_t field_cap = kDefaultFieldCap;
    std::uint64_t bruteforce_cap = kDefaultBruteforceCap;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> primitive_table_path;
    unsigned workers = 1; // 0 = auto

    void validate() const {
        if (field_cap == 0 || bruteforce_cap == 0)
            fail(ErrorKind::InvalidArgument, "caps must be positive");
    }
};

/// The default field cap, or CYCLOCHAR_FIELD_CAP when set.
inline std::uint64_t field_cap_from_env(std::uint64_t fallback = kDefaultFieldCap) {
    const char* v = std::getenv("CYCLOCHAR_FIELD_CAP");
    if (!v || !*v)
        return fallback;
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (*end != '\0' || cap == 0)
        fail(ErrorKind::InvalidArgument, std::string("CYCLOCHAR_FIELD_CAP must be a positive integer, got \"") + v +
                                             "\"");
    return cap;
}

} // namespace cyclochar
