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

#include "bornbench/adam.h"

#include <cmath>
#include <stdexcept>

namespace bornbench {

AdamState AdamState::zeros(std::size_t num_params) {
    return AdamState{0, std::vector<double>(num_params, 0.0), std::vector<double>(num_params, 0.0)};
}

void adam_step(AdamState &state, std::span<const double> grad, std::span<double> theta, const AdamParams &params) {
    if (grad.size() != theta.size() || state.m.size() != theta.size() || state.v.size() != theta.size()) {
        throw std::invalid_argument("Adam: gradient, parameter and moment sizes differ");
    }
    state.step++;
    double t = static_cast<double>(state.step);
    double correction1 = 1 - std::pow(params.beta1, t);
    double correction2 = 1 - std::pow(params.beta2, t);
    for (std::size_t i = 0; i < theta.size(); i++) {
        state.m[i] = params.beta1 * state.m[i] + (1 - params.beta1) * grad[i];
        state.v[i] = params.beta2 * state.v[i] + (1 - params.beta2) * grad[i] * grad[i];
        double m_hat = state.m[i] / correction1;
        double v_hat = state.v[i] / correction2;
        theta[i] -= params.alpha * m_hat / (std::sqrt(v_hat) + params.epsilon);
    }
}

}  // namespace bornbench
