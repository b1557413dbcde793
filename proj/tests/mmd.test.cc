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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "bornbench/adam.h"
#include "bornbench/executor.h"
#include "bornbench/mmd.h"
#include "bornbench/rng.h"
#include "test_util.h"

using namespace bornbench;
using bornbench::testing::bas_circuit;
using bornbench::testing::random_angles;
using bornbench::testing::test_rng;

namespace {

const TargetDistribution &bas() {
    static const TargetDistribution p = bas_target_distribution({2, 2});
    return p;
}

const KernelMatrix &kernel() {
    static const KernelMatrix k(4, KernelSpec{});
    return k;
}

// sum_xy (q - p)_x K(x, y) (q - p)_y, written out directly.
double quadratic_form_loss(std::span<const double> q, const TargetDistribution &p, const KernelSpec &spec) {
    double total = 0;
    for (BasisIndex x = 0; x < q.size(); x++) {
        for (BasisIndex y = 0; y < q.size(); y++) {
            total += (q[x] - p[x]) * gaussian_kernel(x, y, spec) * (q[y] - p[y]);
        }
    }
    return total;
}

double exact_loss(const CircuitSpec &c, std::span<const double> theta) {
    return mmd_loss_exact(simulate(c, theta).probabilities(), bas(), kernel());
}

GradientResult exact_gradient(const CircuitSpec &c, std::span<const double> theta) {
    GradientOptions options;
    options.mode = GradientMode::exact;
    return mmd_gradient(c, theta, bas(), kernel(), options);
}

}  // namespace

TEST(MmdLoss, exact_matches_quadratic_form_and_is_nonnegative) {
    auto rng = test_rng(1);
    EXPECT_NEAR(mmd_loss_exact(bas().probabilities(), bas(), kernel()), 0, 1e-12);
    std::exponential_distribution<double> e(1);
    for (int trial = 0; trial < 100; trial++) {
        std::vector<double> raw(16);
        double total = 0;
        for (double &v : raw) {
            v = e(rng) * (trial % 2 ? 1 : e(rng));
            total += v;
        }
        for (double &v : raw) v /= total;
        double loss = mmd_loss_exact(ProbabilityVector(4, raw), bas(), kernel());
        EXPECT_GE(loss, 0);
        EXPECT_NEAR(loss, quadratic_form_loss(raw, bas(), KernelSpec{}), 1e-13);
    }
}

TEST(MmdLoss, sampled_uses_u_statistic) {
    // Build a histogram and recompute the estimator from the explicit sample list.
    Histogram h(4, {3, 0, 1, 5, 0, 0, 2, 0, 0, 0, 0, 0, 4, 0, 0, 1});
    std::vector<BasisIndex> samples;
    for (BasisIndex x = 0; x < 16; x++)
        for (std::uint64_t k = 0; k < h.count(x); k++) samples.push_back(x);
    double n = static_cast<double>(samples.size());
    double qq = 0, qp = 0, pp = 0;
    for (std::size_t i = 0; i < samples.size(); i++)
        for (std::size_t j = 0; j < samples.size(); j++)
            if (i != j) qq += kernel()(samples[i], samples[j]);
    qq /= n * (n - 1);
    for (auto s : samples)
        for (BasisIndex y = 0; y < 16; y++) qp += kernel()(s, y) * bas()[y];
    qp /= n;
    for (BasisIndex x = 0; x < 16; x++)
        for (BasisIndex y = 0; y < 16; y++) pp += bas()[x] * kernel()(x, y) * bas()[y];
    EXPECT_NEAR(mmd_loss_sampled(h, bas(), kernel()), qq - 2 * qp + pp, 1e-14);
    EXPECT_THROW(mmd_loss_sampled(Histogram(4, std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                                  bas(), kernel()),
                 std::invalid_argument);
}

TEST(MmdLoss, sampled_is_unbiased_for_uniform_model) {
    auto uniform = ProbabilityVector::uniform(4);
    double exact = mmd_loss_exact(uniform, bas(), kernel());
    constexpr int kReps = 400;
    double sum = 0, sum_sq = 0;
    for (int r = 0; r < kReps; r++) {
        auto rng = make_stream({11, StreamPurpose::test, 0, static_cast<std::uint64_t>(r), 0});
        double v = mmd_loss_sampled(sample_histogram(uniform, 1024, rng), bas(), kernel());
        sum += v;
        sum_sq += v * v;
    }
    double mean = sum / kReps;
    double sd = std::sqrt((sum_sq - kReps * mean * mean) / (kReps - 1));
    // Any single estimate is within a few standard deviations; the mean within 3 standard errors.
    EXPECT_NEAR(mean, exact, 3 * sd / std::sqrt(kReps));
    auto rng = make_stream({12, StreamPurpose::test, 0, 0, 0});
    double single = mmd_loss_sampled(sample_histogram(uniform, 1024, rng), bas(), kernel());
    EXPECT_NEAR(single, exact, 4 * sd);
}

TEST(MmdGradient, exact_matches_finite_differences_on_all_layouts) {
    auto rng = test_rng(2);
    constexpr double h = 1e-5;
    for (auto [d_c, layers] : bornbench::testing::all_layouts()) {
        auto c = bas_circuit(d_c, layers);
        for (int trial = 0; trial < 5; trial++) {
            auto theta = random_angles(c.parameter_count, rng);
            auto grad = exact_gradient(c, theta).gradient;
            for (std::size_t i = 0; i < theta.size(); i++) {
                auto plus = theta, minus = theta;
                plus[i] += h;
                minus[i] -= h;
                double fd = (exact_loss(c, plus) - exact_loss(c, minus)) / (2 * h);
                EXPECT_NEAR(grad[i], fd, 1e-6) << "d_C=" << d_c << " L=" << layers << " i=" << i;
            }
        }
    }
}

TEST(MmdGradient, exact_loss_is_periodic_in_each_angle) {
    auto rng = test_rng(3);
    for (auto [d_c, layers] : bornbench::testing::all_layouts()) {
        auto c = bas_circuit(d_c, layers);
        auto theta = random_angles(c.parameter_count, rng);
        double base = exact_loss(c, theta);
        for (std::size_t i = 0; i < theta.size(); i++) {
            auto shifted = theta;
            shifted[i] += 2 * std::numbers::pi;
            EXPECT_NEAR(exact_loss(c, shifted), base, 1e-12);
        }
    }
}

TEST(MmdGradient, vanishes_at_stationary_point_of_product_ansatz) {
    // All angles zero: every outcome probability is even in every angle.
    auto c = bas_circuit(0, 0);
    std::vector<double> zeros(c.parameter_count, 0);
    auto g = exact_gradient(c, zeros).gradient;
    double norm = 0;
    for (double v : g) norm += v * v;
    EXPECT_LT(std::sqrt(norm), 1e-8);
}

TEST(MmdGradient, sampled_is_unbiased) {
    auto c = bas_circuit(2, 1);
    auto rng = test_rng(4);
    auto theta = random_angles(c.parameter_count, rng);
    auto exact = exact_gradient(c, theta);

    constexpr int kSeeds = 200;
    std::vector<double> sum(theta.size()), sum_sq(theta.size());
    double loss_sum = 0, loss_sq = 0;
    for (int s = 0; s < kSeeds; s++) {
        GradientOptions options;
        options.num_shots = 1024;
        options.seed = 1000 + s;
        auto g = mmd_gradient(c, theta, bas(), kernel(), options);
        for (std::size_t i = 0; i < theta.size(); i++) {
            sum[i] += g.gradient[i];
            sum_sq[i] += g.gradient[i] * g.gradient[i];
        }
        loss_sum += g.loss;
        loss_sq += g.loss * g.loss;
    }
    int outside = 0;
    for (std::size_t i = 0; i < theta.size(); i++) {
        double mean = sum[i] / kSeeds;
        double se = std::sqrt((sum_sq[i] / kSeeds - mean * mean) / (kSeeds - 1));
        outside += std::abs(mean - exact.gradient[i]) > 3 * se;
    }
    // 3-sigma bands: with 16 coordinates, more than one miss would be a real bias.
    EXPECT_LE(outside, 1);
    double loss_mean = loss_sum / kSeeds;
    double loss_se = std::sqrt((loss_sq / kSeeds - loss_mean * loss_mean) / (kSeeds - 1));
    EXPECT_NEAR(loss_mean, exact.loss, 3 * loss_se);
}

TEST(MmdGradient, independent_of_thread_count) {
    auto c = bas_circuit(3, 2);
    auto rng = test_rng(5);
    auto theta = random_angles(c.parameter_count, rng);
    GradientOptions options;
    options.seed = 9;
    options.step = 4;
    auto one = mmd_gradient(c, theta, bas(), kernel(), options);
    options.threads = 3;
    auto three = mmd_gradient(c, theta, bas(), kernel(), options);
    EXPECT_EQ(one.gradient, three.gradient);
    EXPECT_EQ(one.loss, three.loss);
    options.step = 5;
    auto other = mmd_gradient(c, theta, bas(), kernel(), options);
    EXPECT_NE(one.gradient, other.gradient);
}

TEST(MmdGradient, small_steps_decrease_exact_loss) {
    auto c = bas_circuit(2, 2);
    AdamParams params;
    params.alpha = 0.02;
    int monotone = 0;
    for (int seed = 0; seed < 10; seed++) {
        auto rng = test_rng(100 + seed);
        auto theta = random_angles(c.parameter_count, rng);
        auto state = AdamState::zeros(theta.size());
        double previous = exact_loss(c, theta);
        bool ok = true;
        for (int step = 0; step < 10; step++) {
            auto g = exact_gradient(c, theta);
            adam_step(state, g.gradient, theta, params);
            double now = exact_loss(c, theta);
            ok = ok && now < previous;
            previous = now;
        }
        monotone += ok;
    }
    EXPECT_GE(monotone, 8);
}

TEST(MmdGradient, rejects_bad_inputs) {
    auto c = bas_circuit(2, 1);
    std::vector<double> wrong(c.parameter_count + 1);
    EXPECT_THROW(mmd_gradient(c, wrong, bas(), kernel(), GradientOptions{}), std::invalid_argument);
    GradientOptions one_shot;
    one_shot.num_shots = 1;
    std::vector<double> theta(c.parameter_count);
    EXPECT_THROW(mmd_gradient(c, theta, bas(), kernel(), one_shot), std::invalid_argument);
}
