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

#ifndef BORNBENCH_CONFIG_H
#define BORNBENCH_CONFIG_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "bornbench/kernel.h"
#include "bornbench/kv.h"
#include "bornbench/mmd.h"
#include "bornbench/noise.h"

namespace bornbench {

inline constexpr std::string_view kToolVersion = "bornbench 1.0.0";

/// Everything that determines a training trajectory. Config-file keys are the
/// field names.
struct TrainingConfig {
    std::size_t rows = 2;
    std::size_t cols = 2;
    int d_C = 2;
    std::size_t L = 2;
    /// Explicit "c-t,c-t,..." entangler used in place of the built-in layout.
    std::string entangler_edges;
    std::size_t chow_liu_root = 0;

    std::uint64_t n_shots_train = 1024;
    std::uint64_t n_steps = 100;
    double alpha = 0.2;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double sigma = 0.1;
    BandwidthMode sigma_mode = BandwidthMode::variance;
    KernelDistance kernel_distance = KernelDistance::integer_squared;
    GradientMode gradient_mode = GradientMode::sampled;
    std::uint64_t seed = 1;

    std::uint64_t kl_shots = 2048;
    std::size_t kl_repeats = 10;
    double kl_floor_scale = 0.01;
    std::uint64_t f1_shots = 2048;
    /// qBAS protocol stride in steps; 0 disables it.
    std::uint64_t qbas_every = 0;
    std::size_t qbas_histograms = 11;
    std::uint64_t qbas_shots = 1024;
    std::uint64_t qbas_samples = 15;
    std::uint64_t qbas_resamples = 10000;
    std::uint64_t metric_every = 1;
    std::uint64_t checkpoint_every = 10;

    /// Noise applied during training and metric evaluation.
    std::optional<NoiseModel> noise;

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

/// Training config plus harness settings that never affect results.
struct RunConfig {
    TrainingConfig training;
    std::string label = "run";
    std::string output_dir;
    std::size_t threads = 1;
    /// Optional profile: after training, also write deploy.csv under this noise.
    std::string deploy_noise;
};

/// Parses flat key/value text. Relative `noise`/`deploy_noise` paths resolve
/// against `base_dir`. Unknown keys are errors. `digest` and `tool_version`
/// keys (written into run directories) are accepted and ignored.
RunConfig parse_run_config(const std::map<std::string, std::string> &kv, const std::string &base_dir);
RunConfig load_run_config(const std::string &path);

/// Applies one `key=value` override (as used by sweeps and `--seed`).
void apply_override(RunConfig &config, const std::string &key, const std::string &value, const std::string &base_dir);

/// Canonical `key = value` text for every training field, sorted by key.
/// The noise model is referenced as `noise_ref` when present.
std::string canonical_training_text(const TrainingConfig &config, const std::string &noise_ref);

/// FNV-1a over the canonical training text with the noise profile inlined.
std::string config_digest(const TrainingConfig &config);

}  // namespace bornbench

#endif
