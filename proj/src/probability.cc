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

#include "bornbench/probability.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bornbench/rng.h"

namespace bornbench {

ProbabilityVector::ProbabilityVector(std::size_t num_qubits, std::vector<double> probs)
    : num_qubits_(num_qubits), probs_(std::move(probs)) {
    if (num_qubits_ == 0 || num_qubits_ > kMaxStateVectorQubits) {
        throw std::invalid_argument("probability vector qubit count out of range");
    }
    if (probs_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("probability vector must have 2^n entries");
    }
    double total = 0;
    for (double &p : probs_) {
        if (!(p >= -1e-12) || p > 1 + 1e-10) {
            throw std::invalid_argument("probability entry out of [0, 1]: " + std::to_string(p));
        }
        p = std::max(p, 0.0);
        total += p;
    }
    if (std::abs(total - 1) > 1e-10) {
        throw std::invalid_argument("probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t num_qubits) {
    std::size_t dim = std::size_t{1} << num_qubits;
    return ProbabilityVector(num_qubits, std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ProbabilityVector ProbabilityVector::point_mass(std::size_t num_qubits, BasisIndex x) {
    std::vector<double> probs(std::size_t{1} << num_qubits, 0.0);
    probs.at(x) = 1;
    return ProbabilityVector(num_qubits, std::move(probs));
}

Histogram::Histogram(std::size_t num_qubits, std::vector<std::uint64_t> counts)
    : num_qubits_(num_qubits), num_shots_(0), counts_(std::move(counts)) {
    if (counts_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("histogram must have 2^n count slots");
    }
    num_shots_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
    if (num_shots_ == 0) {
        throw std::invalid_argument("histogram must contain at least one shot");
    }
}

std::vector<double> Histogram::frequencies() const {
    std::vector<double> out(counts_.size());
    for (std::size_t x = 0; x < counts_.size(); x++) {
        out[x] = empirical(x);
    }
    return out;
}

Histogram sample_histogram(const ProbabilityVector &probs, std::uint64_t num_shots, std::mt19937_64 &rng) {
    if (num_shots == 0) {
        throw std::invalid_argument("n_shots must be positive");
    }
    auto values = probs.values();
    std::vector<double> cumulative(values.size());
    std::partial_sum(values.begin(), values.end(), cumulative.begin());
    // Rounding can leave the total a hair under 1; draws past it go to the last
    // outcome with nonzero mass.
    std::size_t last_nonzero = values.size() - 1;
    while (last_nonzero > 0 && values[last_nonzero] == 0) {
        last_nonzero--;
    }

    std::vector<std::uint64_t> counts(values.size(), 0);
    for (std::uint64_t k = 0; k < num_shots; k++) {
        double u = uniform_unit(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t x = static_cast<std::size_t>(it - cumulative.begin());
        counts[std::min(x, last_nonzero)]++;
    }
    return Histogram(probs.num_qubits(), std::move(counts));
}

}  // namespace bornbench
