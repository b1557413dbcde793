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

#ifndef BORNBENCH_BAS_H
#define BORNBENCH_BAS_H

#include <cstddef>
#include <vector>

#include "bornbench/basis.h"
#include "bornbench/probability.h"

namespace bornbench {

/// Image of `rows` x `cols` binary pixels. Pixel (r, c) is qubit r * cols + c;
/// black pixels are |0>, white pixels |1>.
struct ImageShape {
    std::size_t rows = 2;
    std::size_t cols = 2;

    std::size_t num_pixels() const { return rows * cols; }
    std::size_t pixel(std::size_t r, std::size_t c) const { return r * cols + c; }
    /// True if the two pixels are horizontal or vertical nearest neighbours.
    bool adjacent(std::size_t pixel_a, std::size_t pixel_b) const;
};

/// A fixed distribution over n-bit strings, stored densely.
class TargetDistribution {
   public:
    TargetDistribution(std::size_t num_bits, std::vector<double> probs);

    std::size_t num_bits() const { return probs_.num_qubits(); }
    double operator[](BasisIndex x) const { return probs_[x]; }
    const ProbabilityVector &probabilities() const { return probs_; }
    /// States with nonzero probability, ascending.
    const std::vector<BasisIndex> &support() const { return support_; }

   private:
    ProbabilityVector probs_;
    std::vector<BasisIndex> support_;
};

/// All bars-and-stripes images of the shape, ascending, each once.
/// Count is 2^rows + 2^cols - 2.
std::vector<BasisIndex> enumerate_bas(const ImageShape &shape);

/// Uniform distribution over `enumerate_bas(shape)`.
TargetDistribution bas_target_distribution(const ImageShape &shape);

}  // namespace bornbench

#endif
