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

#ifndef BORNBENCH_ADAM_H
#define BORNBENCH_ADAM_H

#include <cstdint>
#include <span>
#include <vector>

namespace bornbench {

struct AdamParams {
    double alpha = 0.2;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct AdamState {
    std::uint64_t step = 0;
    std::vector<double> m;
    std::vector<double> v;

    static AdamState zeros(std::size_t num_params);
    bool operator==(const AdamState &) const = default;
};

/// One bias-corrected Adam update of `theta` in place:
///   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2,
///   theta <- theta - alpha mhat / (sqrt(vhat) + eps).
void adam_step(AdamState &state, std::span<const double> grad, std::span<double> theta, const AdamParams &params);

}  // namespace bornbench

#endif
