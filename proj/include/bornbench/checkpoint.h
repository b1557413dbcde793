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

#ifndef BORNBENCH_CHECKPOINT_H
#define BORNBENCH_CHECKPOINT_H

#include <cstdint>
#include <string>
#include <vector>

#include "bornbench/adam.h"

namespace bornbench {

/// Training state after `step` Adam updates.
///
/// All randomness in a run is drawn from streams keyed by (seed, step, ...),
/// so the seed together with the step is the complete random-generator state.
///
/// On-disk format (version 1) is flat `key = value` text:
///
///     format = bornbench-checkpoint/1
///     step = <S>
///     seed = <seed>
///     config_digest = <16 hex digits>
///     adam_step = <t>
///     theta = <R space-separated doubles>
///     adam_m = <R doubles>
///     adam_v = <R doubles>
///
/// Doubles use the shortest representation that parses back to the same bits.
struct Checkpoint {
    std::uint64_t step = 0;
    std::uint64_t seed = 0;
    std::string config_digest;
    std::vector<double> theta;
    AdamState adam;

    bool operator==(const Checkpoint &) const = default;
};

inline constexpr std::string_view kCheckpointFormat = "bornbench-checkpoint/1";

std::string serialize_checkpoint(const Checkpoint &checkpoint);
/// Throws ConfigError on version mismatch or malformed content.
Checkpoint parse_checkpoint(std::string_view text, std::string_view source = "<checkpoint>");

void save_checkpoint(const Checkpoint &checkpoint, const std::string &path);
Checkpoint load_checkpoint(const std::string &path);

/// `step_0050.ckpt` style file name.
std::string checkpoint_file_name(std::uint64_t step);

}  // namespace bornbench

#endif
