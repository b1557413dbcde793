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

#ifndef BORNBENCH_RNG_H
#define BORNBENCH_RNG_H

#include <cstdint>
#include <random>

namespace bornbench {

/// What a random stream is used for. Part of the stream key so that
/// independent consumers never share draws.
enum class StreamPurpose : std::uint32_t {
    init = 1,
    gradient = 2,
    kl = 3,
    f1 = 4,
    qbas = 5,
    deploy_clean = 6,
    deploy_noisy = 7,
    test = 8,
};

/// Identifies one independent random stream. Every random draw in a run is
/// made from a stream whose key is a pure function of (seed, purpose, step,
/// index, sub), so evaluation order and thread count never change results.
struct StreamKey {
    std::uint64_t seed = 0;
    StreamPurpose purpose = StreamPurpose::test;
    std::uint64_t step = 0;
    std::uint64_t index = 0;
    std::uint64_t sub = 0;
};

std::mt19937_64 make_stream(const StreamKey &key);

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace bornbench

#endif
