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

#ifndef BORNBENCH_KERNEL_H
#define BORNBENCH_KERNEL_H

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "bornbench/basis.h"

namespace bornbench {

enum class KernelDistance {
    /// (x - y)^2 on the integer encodings.
    integer_squared,
    /// popcount(x ^ y)^2.
    hamming_squared,
};

enum class BandwidthMode {
    /// K = exp(-d / (2 sigma))
    variance,
    /// K = exp(-d / (2 sigma^2))
    stddev,
};

struct KernelSpec {
    double sigma = 0.1;
    KernelDistance distance = KernelDistance::integer_squared;
    BandwidthMode bandwidth = BandwidthMode::variance;
};

KernelDistance parse_kernel_distance(std::string_view text);
BandwidthMode parse_bandwidth_mode(std::string_view text);
std::string_view to_string(KernelDistance d);
std::string_view to_string(BandwidthMode m);

/// Gaussian kernel between two basis states. Throws on sigma <= 0.
double gaussian_kernel(BasisIndex x, BasisIndex y, const KernelSpec &spec);

/// Dense 2^n x 2^n Gram matrix of `gaussian_kernel`.
class KernelMatrix {
   public:
    KernelMatrix(std::size_t num_qubits, const KernelSpec &spec);

    std::size_t dim() const { return dim_; }
    const KernelSpec &spec() const { return spec_; }
    double operator()(BasisIndex x, BasisIndex y) const { return values_[x * dim_ + y]; }

    /// a^T K b
    double bilinear(std::span<const double> a, std::span<const double> b) const;

   private:
    KernelSpec spec_;
    std::size_t dim_;
    std::vector<double> values_;
};

}  // namespace bornbench

#endif
