// Copyright 2026 The Bornbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BORNBENCH_KV_H
#define BORNBENCH_KV_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bornbench {

/// Raised for malformed config/profile text. The message names the offending key or line.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses flat `key = value` text. Blank lines and `#` comments are ignored;
/// duplicate keys are errors. `source` is used in error messages.
std::map<std::string, std::string> parse_key_values(std::string_view text, std::string_view source);

std::string read_text_file(const std::string &path);

double parse_double(std::string_view key, std::string_view value);
std::int64_t parse_int(std::string_view key, std::string_view value);
std::uint64_t parse_uint(std::string_view key, std::string_view value);

/// Shortest text that round-trips to exactly the same double.
std::string format_double(double value);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace bornbench

#endif
