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

#ifndef BORNBENCH_PROBABILITY_H
#define BORNBENCH_PROBABILITY_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bornbench/basis.h"

namespace bornbench {

/// Exact outcome distribution over the 2^n basis states of a register.
class ProbabilityVector {
   public:
    /// Validates that entries are nonnegative and sum to 1 within 1e-10.
    /// Entries in [-1e-12, 0) are clamped to zero.
    ProbabilityVector(std::size_t num_qubits, std::vector<double> probs);

    static ProbabilityVector uniform(std::size_t num_qubits);
    static ProbabilityVector point_mass(std::size_t num_qubits, BasisIndex x);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](BasisIndex x) const { return probs_[x]; }
    std::span<const double> values() const { return probs_; }

   private:
    std::size_t num_qubits_;
    std::vector<double> probs_;
};

/// Outcome counts from a finite number of shots. Counts are stored densely,
/// one entry per basis state.
class Histogram {
   public:
    Histogram(std::size_t num_qubits, std::vector<std::uint64_t> counts);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t num_shots() const { return num_shots_; }
    std::uint64_t count(BasisIndex x) const { return counts_[x]; }
    double empirical(BasisIndex x) const {
        return static_cast<double>(counts_[x]) / static_cast<double>(num_shots_);
    }
    std::span<const std::uint64_t> counts() const { return counts_; }
    /// counts / num_shots as a dense vector.
    std::vector<double> frequencies() const;

    bool operator==(const Histogram &other) const = default;

   private:
    std::size_t num_qubits_;
    std::uint64_t num_shots_;
    std::vector<std::uint64_t> counts_;
};

/// Draws `num_shots` i.i.d. outcomes from `probs`. Deterministic in the rng state.
Histogram sample_histogram(const ProbabilityVector &probs, std::uint64_t num_shots, std::mt19937_64 &rng);

}  // namespace bornbench

#endif
