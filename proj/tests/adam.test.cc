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

#include "gtest/gtest.h"

#include "bornbench/adam.h"

using namespace bornbench;

TEST(Adam, first_step_moves_each_coordinate_by_alpha) {
    AdamParams params;
    std::vector<double> grad{0.3, -2.0, 1e-3, 50.0};
    std::vector<double> theta{1, 2, 3, 4};
    auto state = AdamState::zeros(4);
    adam_step(state, grad, theta, params);
    std::vector<double> start{1, 2, 3, 4};
    for (std::size_t i = 0; i < 4; i++) {
        // The step is alpha |g| / (|g| + eps).
        double g = std::abs(grad[i]);
        EXPECT_NEAR(std::abs(theta[i] - start[i]), params.alpha * g / (g + params.epsilon), 1e-15);
        EXPECT_NEAR(std::abs(theta[i] - start[i]), params.alpha, 1e-5);
        EXPECT_EQ(std::signbit(theta[i] - start[i]), !std::signbit(grad[i]));
    }
    EXPECT_EQ(state.step, 1u);
}

TEST(Adam, zero_gradient_leaves_parameters) {
    std::vector<double> theta{0.5, -0.25};
    auto state = AdamState::zeros(2);
    for (int k = 0; k < 3; k++) {
        adam_step(state, std::vector<double>{0, 0}, theta, AdamParams{});
    }
    EXPECT_EQ(theta, (std::vector<double>{0.5, -0.25}));
}

TEST(Adam, hand_computed_two_step_trace) {
    // g = (1, -1) twice, alpha = 0.2.
    // Step 1: m = 0.1 g, v = 0.001, mhat = g, vhat = 1 -> dtheta = -0.2 g / (1 + 1e-8).
    // Step 2: m = 0.19 g, v = 0.001999, mhat = 0.19 g / 0.19, vhat = 0.001999 / 0.001999.
    std::vector<double> theta{0, 0};
    auto state = AdamState::zeros(2);
    AdamParams params;
    std::vector<double> g{1, -1};
    double move = 0.2 / (1 + 1e-8);

    adam_step(state, g, theta, params);
    EXPECT_NEAR(theta[0], -move, 1e-15);
    EXPECT_NEAR(theta[1], move, 1e-15);
    EXPECT_NEAR(state.m[0], 0.1, 1e-15);
    EXPECT_NEAR(state.v[1], 0.001, 1e-15);

    adam_step(state, g, theta, params);
    EXPECT_NEAR(theta[0], -2 * move, 1e-14);
    EXPECT_NEAR(theta[1], 2 * move, 1e-14);
    EXPECT_NEAR(state.m[0], 0.19, 1e-15);
    EXPECT_NEAR(state.m[1], -0.19, 1e-15);
    EXPECT_NEAR(state.v[0], 0.001999, 1e-15);
    EXPECT_EQ(state.step, 2u);
}

TEST(Adam, hand_computed_changing_gradient) {
    // g1 = 2, g2 = -1 on one coordinate.
    // m1 = 0.2, v1 = 0.004, mhat = 2, vhat = 4 -> theta1 = -0.2 * 2 / (2 + eps).
    // m2 = 0.18 - 0.1 = 0.08, v2 = 0.003996 + 0.001 = 0.004996,
    // mhat = 0.08 / 0.19, vhat = 0.004996 / 0.001999.
    std::vector<double> theta{0};
    auto state = AdamState::zeros(1);
    AdamParams params;
    adam_step(state, std::vector<double>{2}, theta, params);
    double t1 = -0.2 * 2 / (2 + 1e-8);
    EXPECT_NEAR(theta[0], t1, 1e-15);
    adam_step(state, std::vector<double>{-1}, theta, params);
    double mhat = 0.08 / 0.19, vhat = 0.004996 / 0.001999;
    EXPECT_NEAR(theta[0], t1 - 0.2 * mhat / (std::sqrt(vhat) + 1e-8), 1e-14);
}

TEST(Adam, dimension_mismatch) {
    std::vector<double> theta{0, 0};
    auto state = AdamState::zeros(2);
    EXPECT_THROW(adam_step(state, std::vector<double>{1}, theta, AdamParams{}), std::invalid_argument);
}
