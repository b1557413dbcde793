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

#ifndef BORNBENCH_MMD_H
#define BORNBENCH_MMD_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bornbench/bas.h"
#include "bornbench/circuit.h"
#include "bornbench/kernel.h"
#include "bornbench/noise.h"
#include "bornbench/probability.h"

namespace bornbench {

/// (q - p)^T K (q - p) for an exact model distribution q.
double mmd_loss_exact(const ProbabilityVector &q, const TargetDistribution &p, const KernelMatrix &kernel);

/// Unbiased sampled MMD^2. The model-model term is the U-statistic
/// sum_{i != j} K(x_i, x_j) / (N (N - 1)) over the N shots; the cross and
/// target-target terms use p exactly. Throws when N < 2.
double mmd_loss_sampled(const Histogram &q, const TargetDistribution &p, const KernelMatrix &kernel);

enum class GradientMode { sampled, exact };

struct GradientOptions {
    GradientMode mode = GradientMode::sampled;
    /// Shots per histogram in sampled mode.
    std::uint64_t num_shots = 1024;
    /// Stream seed and step; histogram for parameter i, sign s is drawn from
    /// StreamKey{seed, gradient, step, i, s}, the unshifted one from index R.
    std::uint64_t seed = 0;
    std::uint64_t step = 0;
    std::size_t threads = 1;
    /// Optional; evaluations use density-matrix evolution when noisy.
    const NoiseModel *noise = nullptr;
};

struct GradientResult {
    std::vector<double> gradient;
    /// MMD^2 at theta: sampled estimate from the unshifted histogram in
    /// sampled mode, exact otherwise.
    double loss = 0;
};

/// Parameter-shift gradient of the MMD loss:
///   g_i = <K>_{q+,q} - <K>_{q-,q} - <K>_{q+,p} + <K>_{q-,p}
/// with q+- the output distributions at theta_i +- pi/2 and
/// <K>_{a,b} = sum_{x,y} a(x) K(x,y) b(y). In sampled mode q, q+ and q- are
/// independent histograms. The 2R + 1 circuit evaluations may be spread over
/// `threads` workers without changing the result.
GradientResult mmd_gradient(const CircuitSpec &circuit, std::span<const double> theta, const TargetDistribution &p,
                            const KernelMatrix &kernel, const GradientOptions &options);

}  // namespace bornbench

#endif
