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

#include "bornbench/rng.h"

#include <array>

namespace bornbench {

std::mt19937_64 make_stream(const StreamKey &key) {
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::array<std::uint32_t, 9> words{
        lo(key.seed),  hi(key.seed),  static_cast<std::uint32_t>(key.purpose),
        lo(key.step),  hi(key.step),  lo(key.index),
        hi(key.index), lo(key.sub),   hi(key.sub),
    };
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

}  // namespace bornbench
