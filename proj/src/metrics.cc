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

#include "bornbench/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bornbench {

KlResult kl_divergence(const TargetDistribution &p, const Histogram &q, double floor) {
    if (p.num_bits() != q.num_qubits()) {
        throw std::invalid_argument("KL: target and histogram sizes differ");
    }
    KlResult out;
    for (BasisIndex x : p.support()) {
        double qx = q.empirical(x);
        if (qx == 0) {
            if (floor <= 0) {
                out.value = std::numeric_limits<double>::infinity();
                return out;
            }
            qx = floor;
            out.smoothed = true;
        }
        out.value += p[x] * std::log(p[x] / qx);
    }
    return out;
}

double kl_divergence_exact(const TargetDistribution &p, const ProbabilityVector &q) {
    double total = 0;
    for (BasisIndex x : p.support()) {
        if (q[x] == 0) {
            return std::numeric_limits<double>::infinity();
        }
        total += p[x] * std::log(p[x] / q[x]);
    }
    return total;
}

KlSummary mean_kl(const TargetDistribution &p, const ProbabilityVector &model, const KlOptions &options,
                  StreamKey stream) {
    if (options.repeats < 2) {
        throw std::invalid_argument("mean KL needs at least 2 repeats");
    }
    double floor = options.floor_scale / static_cast<double>(options.shots);
    std::vector<double> values;
    KlSummary out;
    for (std::size_t r = 0; r < options.repeats; r++) {
        stream.index = r;
        auto rng = make_stream(stream);
        auto kl = kl_divergence(p, sample_histogram(model, options.shots, rng), floor);
        out.smoothed |= kl.smoothed;
        values.push_back(kl.value);
    }
    double n = static_cast<double>(values.size());
    out.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0;
    for (double v : values) {
        ss += (v - out.mean) * (v - out.mean);
    }
    out.std = std::sqrt(ss / (n - 1));
    return out;
}

double state_f1(double p, double q) {
    if (q <= 0) {
        return 0;
    }
    double tp = q;
    double fp = std::max(q - p, 0.0);
    double fn = std::max(p - q, 0.0);
    double precision = tp / (tp + fp);
    double recall = tp / (tp + fn);
    return 2 * precision * recall / (precision + recall);
}

std::vector<StateF1> f1_per_state(const TargetDistribution &p, const Histogram &q) {
    std::vector<StateF1> out;
    for (BasisIndex x : p.support()) {
        out.push_back({x, state_f1(p[x], q.empirical(x))});
    }
    return out;
}

QbasScore qbas_score(const Histogram &q, std::span<const BasisIndex> valid, std::uint64_t samples,
                     std::uint64_t resamples, std::mt19937_64 &rng) {
    if (samples == 0 || resamples == 0) {
        throw std::invalid_argument("qBAS needs positive sample and resample counts");
    }
    auto counts = q.counts();
    std::vector<std::uint64_t> cumulative(counts.size());
    std::partial_sum(counts.begin(), counts.end(), cumulative.begin());
    std::vector<int> slot(counts.size(), -1);
    for (std::size_t k = 0; k < valid.size(); k++) {
        slot.at(valid[k]) = static_cast<int>(k);
    }

    std::uniform_int_distribution<std::uint64_t> pick(0, q.num_shots() - 1);
    std::vector<std::uint64_t> seen_in(valid.size(), 0);
    // Welford, so a constant score gives exactly zero variance.
    double mean = 0, m2 = 0;
    for (std::uint64_t r = 1; r <= resamples; r++) {
        std::uint64_t hits = 0, distinct = 0;
        for (std::uint64_t s = 0; s < samples; s++) {
            auto shot = pick(rng);
            auto x = static_cast<std::size_t>(
                std::upper_bound(cumulative.begin(), cumulative.end(), shot) - cumulative.begin());
            int k = slot[x];
            if (k < 0) {
                continue;
            }
            hits++;
            if (seen_in[k] != r) {
                seen_in[k] = r;
                distinct++;
            }
        }
        double precision = static_cast<double>(hits) / static_cast<double>(samples);
        double recall = static_cast<double>(distinct) / static_cast<double>(valid.size());
        double score = precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
        double delta = score - mean;
        mean += delta / static_cast<double>(r);
        m2 += delta * (score - mean);
    }
    QbasScore out;
    out.mean = mean;
    out.variance = resamples > 1 ? m2 / static_cast<double>(resamples - 1) : 0.0;
    return out;
}

QbasSummary qbas_protocol(const ProbabilityVector &model, std::span<const BasisIndex> valid,
                          const QbasOptions &options, StreamKey stream) {
    if (options.histograms == 0) {
        throw std::invalid_argument("qBAS protocol needs at least one histogram");
    }
    std::vector<QbasScore> scores;
    for (std::size_t h = 0; h < options.histograms; h++) {
        stream.index = h;
        stream.sub = 0;
        auto shot_rng = make_stream(stream);
        auto hist = sample_histogram(model, options.shots, shot_rng);
        stream.sub = 1;
        auto resample_rng = make_stream(stream);
        scores.push_back(qbas_score(hist, valid, options.samples, options.resamples, resample_rng));
    }

    QbasSummary out;
    double n = static_cast<double>(scores.size());
    bool degenerate = std::any_of(scores.begin(), scores.end(), [](const QbasScore &s) { return s.variance <= 0; });
    if (degenerate) {
        out.unweighted_fallback = true;
        for (const auto &s : scores) {
            out.mean += s.mean / n;
            out.variance += s.variance / n;
        }
        return out;
    }
    double weight_sum = 0;
    for (const auto &s : scores) {
        double w = 1 / s.variance;
        weight_sum += w;
        out.mean += w * s.mean;
    }
    out.mean /= weight_sum;
    out.variance = n / weight_sum;
    return out;
}

}  // namespace bornbench
