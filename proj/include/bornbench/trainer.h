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

#ifndef BORNBENCH_TRAINER_H
#define BORNBENCH_TRAINER_H

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bornbench/bas.h"
#include "bornbench/checkpoint.h"
#include "bornbench/circuit.h"
#include "bornbench/config.h"
#include "bornbench/kernel.h"
#include "bornbench/metrics.h"

namespace bornbench {

/// Everything derived from a TrainingConfig that the loop needs.
struct TrainingSetup {
    TrainingConfig config;
    ImageShape shape;
    TargetDistribution target;
    CircuitSpec circuit;
    KernelMatrix kernel;
    std::string digest;
    /// Set if the Chow-Liu layer fell back to a purely lexicographic tree.
    bool chow_liu_degenerate = false;

    static TrainingSetup from_config(const TrainingConfig &config);
    const NoiseModel *noise() const { return config.noise ? &*config.noise : nullptr; }
};

inline constexpr double kNotMeasured = std::numeric_limits<double>::quiet_NaN();

/// Metrics for the parameters held at the start of `step` (after `step` updates).
struct MetricRecord {
    std::uint64_t step = 0;
    double loss = kNotMeasured;
    double kl_mean = kNotMeasured;
    double kl_std = kNotMeasured;
    /// One entry per BAS state, in ascending state order; empty if not measured.
    std::vector<double> f1;
    double qbas_mean = kNotMeasured;
    double qbas_var = kNotMeasured;
    bool smoothing = false;
    bool qbas_fallback = false;
};

struct RunRecord {
    /// One row per step from the starting step through n_steps inclusive.
    std::vector<MetricRecord> rows;
    /// Parameters at each row.
    std::vector<std::vector<double>> thetas;
    std::vector<Checkpoint> checkpoints;
};

/// theta_i ~ Uniform(0, 2 pi), drawn from the `init` stream of `seed`.
std::vector<double> random_theta(std::size_t num_params, std::uint64_t seed);

/// KL / F1 / optional qBAS for fixed parameters. `noise` overrides the setup's
/// noise model when given.
MetricRecord evaluate_metrics(const TrainingSetup &setup, std::span<const double> theta, std::uint64_t step,
                              bool with_qbas, const NoiseModel *noise, std::uint64_t seed);

/// Runs Adam on the sampled (or exact) MMD gradient from random init or from
/// `resume`. Each step: record loss and scheduled metrics for the current
/// parameters, checkpoint on schedule, then update. Deterministic given the
/// seed; resuming from a checkpoint reproduces the original rows bit-exactly.
/// Runs steps from the resume point (or 0) through n_steps. The callbacks see
/// each row and checkpoint as soon as it is produced.
RunRecord train(const TrainingSetup &setup, const std::optional<Checkpoint> &resume = std::nullopt,
                std::size_t threads = 1, const std::function<void(const MetricRecord &)> &on_row = {},
                const std::function<void(const Checkpoint &)> &on_checkpoint = {});

}  // namespace bornbench

#endif
