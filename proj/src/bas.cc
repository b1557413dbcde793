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

#include "bornbench/bas.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bornbench {

bool ImageShape::adjacent(std::size_t pixel_a, std::size_t pixel_b) const {
    std::size_t ra = pixel_a / cols, ca = pixel_a % cols;
    std::size_t rb = pixel_b / cols, cb = pixel_b % cols;
    std::size_t dr = ra > rb ? ra - rb : rb - ra;
    std::size_t dc = ca > cb ? ca - cb : cb - ca;
    return dr + dc == 1;
}

TargetDistribution::TargetDistribution(std::size_t num_bits, std::vector<double> probs)
    : probs_(num_bits, std::move(probs)) {
    for (BasisIndex x = 0; x < probs_.size(); x++) {
        if (probs_[x] > 0) {
            support_.push_back(x);
        }
    }
}

std::vector<BasisIndex> enumerate_bas(const ImageShape &shape) {
    if (shape.rows == 0 || shape.cols == 0) {
        throw std::invalid_argument("image shape must have at least one row and one column");
    }
    std::size_t n = shape.num_pixels();
    if (n > kMaxStateVectorQubits) {
        throw std::invalid_argument(
            "BAS(" + std::to_string(shape.rows) + "," + std::to_string(shape.cols) + ") needs " + std::to_string(n) +
            " qubits, above the simulator cap of " + std::to_string(kMaxStateVectorQubits));
    }

    std::vector<BasisIndex> out;
    // Stripes: each row constant.
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << shape.rows); pattern++) {
        BasisIndex x = 0;
        for (std::size_t r = 0; r < shape.rows; r++) {
            if ((pattern >> r) & 1) {
                for (std::size_t c = 0; c < shape.cols; c++) {
                    x |= qubit_mask(n, shape.pixel(r, c));
                }
            }
        }
        out.push_back(x);
    }
    // Bars: each column constant.
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << shape.cols); pattern++) {
        BasisIndex x = 0;
        for (std::size_t c = 0; c < shape.cols; c++) {
            if ((pattern >> c) & 1) {
                for (std::size_t r = 0; r < shape.rows; r++) {
                    x |= qubit_mask(n, shape.pixel(r, c));
                }
            }
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TargetDistribution bas_target_distribution(const ImageShape &shape) {
    auto states = enumerate_bas(shape);
    std::vector<double> probs(std::size_t{1} << shape.num_pixels(), 0.0);
    for (BasisIndex x : states) {
        probs[x] = 1.0 / static_cast<double>(states.size());
    }
    return TargetDistribution(shape.num_pixels(), std::move(probs));
}

}  // namespace bornbench
