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

#include "bornbench/mmd.h"

#include <algorithm>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>

#include "bornbench/executor.h"
#include "bornbench/rng.h"

namespace bornbench {

namespace {

std::vector<double> diff(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        out[i] = a[i] - b[i];
    }
    return out;
}

}  // namespace

double mmd_loss_exact(const ProbabilityVector &q, const TargetDistribution &p, const KernelMatrix &kernel) {
    auto d = diff(q.values(), p.probabilities().values());
    return kernel.bilinear(d, d);
}

double mmd_loss_sampled(const Histogram &q, const TargetDistribution &p, const KernelMatrix &kernel) {
    std::uint64_t n = q.num_shots();
    if (n < 2) {
        throw std::invalid_argument("sampled MMD needs at least 2 shots");
    }
    std::vector<double> counts(q.counts().begin(), q.counts().end());
    double all_pairs = kernel.bilinear(counts, counts);
    double self_pairs = 0;
    for (std::size_t x = 0; x < counts.size(); x++) {
        self_pairs += counts[x] * kernel(x, x);
    }
    double nn = static_cast<double>(n);
    double model_model = (all_pairs - self_pairs) / (nn * (nn - 1));

    auto freqs = q.frequencies();
    auto pv = p.probabilities().values();
    double cross = kernel.bilinear(freqs, pv);
    double target_target = kernel.bilinear(pv, pv);
    return model_model - 2 * cross + target_target;
}

GradientResult mmd_gradient(const CircuitSpec &circuit, std::span<const double> theta, const TargetDistribution &p,
                            const KernelMatrix &kernel, const GradientOptions &options) {
    std::size_t num_params = circuit.parameter_count;
    if (theta.size() != num_params) {
        throw std::invalid_argument("theta length does not match the circuit parameter count");
    }
    if (options.mode == GradientMode::sampled && options.num_shots < 2) {
        throw std::invalid_argument("sampled gradient needs at least 2 shots per histogram");
    }

    // Job 2i + s evaluates parameter i shifted by (s ? -1 : +1) pi/2; job 2R is unshifted.
    std::size_t num_jobs = 2 * num_params + 1;
    std::vector<std::vector<double>> dists(num_jobs);
    std::optional<Histogram> unshifted_histogram;

    auto run_job = [&](std::size_t job) {
        std::vector<double> shifted(theta.begin(), theta.end());
        std::uint64_t index = num_params;
        std::uint64_t sub = 2;
        if (job < 2 * num_params) {
            index = job / 2;
            sub = job % 2;
            shifted[index] += sub == 0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
        }
        auto probs = output_distribution(circuit, shifted, options.noise);
        if (options.mode == GradientMode::exact) {
            dists[job] = std::vector<double>(probs.values().begin(), probs.values().end());
            return;
        }
        auto rng = make_stream({options.seed, StreamPurpose::gradient, options.step, index, sub});
        auto hist = sample_histogram(probs, options.num_shots, rng);
        dists[job] = hist.frequencies();
        if (job == 2 * num_params) {
            unshifted_histogram.emplace(std::move(hist));
        }
    };

    std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, num_jobs));
    if (workers == 1) {
        for (std::size_t job = 0; job < num_jobs; job++) {
            run_job(job);
        }
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                for (std::size_t job = w; job < num_jobs; job += workers) {
                    run_job(job);
                }
            });
        }
    }

    const auto &q = dists[2 * num_params];
    auto pv = p.probabilities().values();
    GradientResult result;
    result.gradient.resize(num_params);
    for (std::size_t i = 0; i < num_params; i++) {
        auto delta = diff(dists[2 * i], dists[2 * i + 1]);
        result.gradient[i] = kernel.bilinear(delta, q) - kernel.bilinear(delta, pv);
    }
    if (options.mode == GradientMode::exact) {
        result.loss = mmd_loss_exact(ProbabilityVector(circuit.num_qubits, q), p, kernel);
    } else {
        result.loss = mmd_loss_sampled(*unshifted_histogram, p, kernel);
    }
    return result;
}

}  // namespace bornbench
