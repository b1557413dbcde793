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

#ifndef BORNBENCH_METRICS_H
#define BORNBENCH_METRICS_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bornbench/bas.h"
#include "bornbench/circuit.h"
#include "bornbench/noise.h"
#include "bornbench/probability.h"
#include "bornbench/rng.h"

namespace bornbench {

struct KlResult {
    /// Nats. +inf when a support state is unsampled and no floor is in effect.
    double value = 0;
    /// True if the floor replaced at least one zero count.
    bool smoothed = false;
};

/// sum over support of p(x) ln(p(x) / qhat(x)), qhat = max(count / shots, floor).
/// The floor only matters for unsampled states; floor <= 0 leaves them at zero.
KlResult kl_divergence(const TargetDistribution &p, const Histogram &q, double floor);

/// KL against an exact model distribution, no smoothing.
double kl_divergence_exact(const TargetDistribution &p, const ProbabilityVector &q);

/// Default smoothing floor, 1 / (100 shots).
inline double default_kl_floor(std::uint64_t shots) {
    return 1.0 / (100.0 * static_cast<double>(shots));
}

struct KlOptions {
    std::size_t repeats = 10;
    std::uint64_t shots = 2048;
    /// floor = floor_scale / shots
    double floor_scale = 0.01;
};

struct KlSummary {
    double mean = 0;
    /// Sample standard deviation (n - 1 denominator).
    double std = 0;
    bool smoothed = false;
};

/// KL over `options.repeats` independent histograms; repeat r draws from
/// `stream` with index r.
KlSummary mean_kl(const TargetDistribution &p, const ProbabilityVector &model, const KlOptions &options,
                  StreamKey stream);

/// F1 of one state from target mass p and model mass q:
/// TP = q, FP = max(q - p, 0), FN = max(p - q, 0); F1 = 0 when q = 0.
double state_f1(double p, double q);

struct StateF1 {
    BasisIndex state;
    double f1;
};

/// F1 for every support state of p, in support order.
std::vector<StateF1> f1_per_state(const TargetDistribution &p, const Histogram &q);

struct QbasScore {
    double mean = 0;
    /// Sample variance over resamples.
    double variance = 0;
};

/// Resamples `samples` shots with replacement from q, `resamples` times.
/// precision = valid draws / samples, recall = distinct valid states / |valid|,
/// score = harmonic mean (0 when both vanish).
QbasScore qbas_score(const Histogram &q, std::span<const BasisIndex> valid, std::uint64_t samples,
                     std::uint64_t resamples, std::mt19937_64 &rng);

struct QbasOptions {
    std::size_t histograms = 11;
    std::uint64_t shots = 1024;
    std::uint64_t samples = 15;
    std::uint64_t resamples = 10000;
};

struct QbasSummary {
    /// Inverse-variance weighted mean of the per-histogram scores.
    double mean = 0;
    /// sum_i w_i var_i / sum_i w_i with w_i = 1 / var_i.
    double variance = 0;
    /// Some histogram had zero variance; mean and variance are unweighted.
    bool unweighted_fallback = false;
};

/// Draws `options.histograms` histograms of `options.shots` from the model
/// (histogram h uses `stream` with index h, resampling uses sub = 1) and
/// aggregates their qBAS scores.
QbasSummary qbas_protocol(const ProbabilityVector &model, std::span<const BasisIndex> valid,
                          const QbasOptions &options, StreamKey stream);

}  // namespace bornbench

#endif
