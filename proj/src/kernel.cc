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

#include "bornbench/kernel.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bornbench {

KernelDistance parse_kernel_distance(std::string_view text) {
    if (text == "integer") {
        return KernelDistance::integer_squared;
    }
    if (text == "hamming") {
        return KernelDistance::hamming_squared;
    }
    throw std::invalid_argument("kernel distance must be `integer` or `hamming`, got `" + std::string(text) + "`");
}

BandwidthMode parse_bandwidth_mode(std::string_view text) {
    if (text == "variance") {
        return BandwidthMode::variance;
    }
    if (text == "stddev") {
        return BandwidthMode::stddev;
    }
    throw std::invalid_argument("sigma mode must be `variance` or `stddev`, got `" + std::string(text) + "`");
}

std::string_view to_string(KernelDistance d) {
    return d == KernelDistance::integer_squared ? "integer" : "hamming";
}

std::string_view to_string(BandwidthMode m) {
    return m == BandwidthMode::variance ? "variance" : "stddev";
}

double gaussian_kernel(BasisIndex x, BasisIndex y, const KernelSpec &spec) {
    if (!(spec.sigma > 0)) {
        throw std::invalid_argument("kernel sigma must be positive");
    }
    double d;
    if (spec.distance == KernelDistance::integer_squared) {
        double diff = static_cast<double>(x) - static_cast<double>(y);
        d = diff * diff;
    } else {
        double h = std::popcount(x ^ y);
        d = h * h;
    }
    double scale = spec.bandwidth == BandwidthMode::variance ? spec.sigma : spec.sigma * spec.sigma;
    return std::exp(-d / (2 * scale));
}

KernelMatrix::KernelMatrix(std::size_t num_qubits, const KernelSpec &spec)
    : spec_(spec), dim_(std::size_t{1} << num_qubits), values_(dim_ * dim_) {
    for (BasisIndex x = 0; x < dim_; x++) {
        for (BasisIndex y = 0; y < dim_; y++) {
            values_[x * dim_ + y] = gaussian_kernel(x, y, spec);
        }
    }
}

double KernelMatrix::bilinear(std::span<const double> a, std::span<const double> b) const {
    if (a.size() != dim_ || b.size() != dim_) {
        throw std::invalid_argument("kernel bilinear form: vector size mismatch");
    }
    double total = 0;
    for (std::size_t x = 0; x < dim_; x++) {
        if (a[x] == 0) {
            continue;
        }
        double row = 0;
        for (std::size_t y = 0; y < dim_; y++) {
            row += values_[x * dim_ + y] * b[y];
        }
        total += a[x] * row;
    }
    return total;
}

}  // namespace bornbench
