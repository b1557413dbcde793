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

#ifndef BORNBENCH_NOISE_H
#define BORNBENCH_NOISE_H

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bornbench/gates.h"
#include "bornbench/probability.h"

namespace bornbench {

/// Readout confusion for one qubit, row-major: entry [true * 2 + measured].
/// Rows must sum to 1.
using Confusion = std::array<double, 4>;

inline constexpr Confusion kIdentityConfusion{1, 0, 0, 1};

/// Symmetric bit flip with probability `flip`.
Confusion symmetric_flip(double flip);

/// Kraus operators acting on `num_targets` qubits, each stored row-major with
/// dimension 2^num_targets.
struct KrausSet {
    std::size_t num_targets = 1;
    std::vector<std::vector<Complex>> ops;

    std::size_t dim() const { return std::size_t{1} << num_targets; }
    std::vector<Mat2> as_mat2() const;
    std::vector<Mat4> as_mat4() const;
    /// max |(sum_k K_k^dagger K_k - I)_{rc}|
    double completeness_error() const;
};

/// Depolarizing channel: with probability p the targets are replaced by the
/// maximally mixed state on their support. Kraus form:
/// sqrt(1 - p (d^2-1)/d^2) I together with sqrt(p/d^2) P for each nontrivial
/// Pauli product P, d = 2^num_targets.
KrausSet depolarizing_kraus(double p, std::size_t num_targets);

/// Single-qubit amplitude damping with decay probability gamma.
KrausSet amplitude_damping_kraus(double gamma);

/// Gate and measurement noise standing in for device imperfections. None of
/// the defaults describe a real device; everything is zero unless set.
struct NoiseModel {
    /// Depolarizing probability after every single-qubit rotation.
    double p1 = 0;
    /// Depolarizing probability on both qubits after every CNOT.
    double p2 = 0;
    /// Applied to qubits without an override.
    Confusion readout_default = kIdentityConfusion;
    std::map<std::size_t, Confusion> readout_overrides;
    /// Amplitude damping probability on every qubit per 200 ns entangler sub-covering.
    std::optional<double> t_damp;

    /// Throws ConfigError naming the offending field.
    void validate() const;
    bool is_noiseless() const;
    Confusion readout_for(std::size_t qubit) const;
    std::vector<Confusion> readout_matrices(std::size_t num_qubits) const;

    bool operator==(const NoiseModel &other) const = default;
};

/// Applies the tensor product of per-qubit confusion matrices to `probs`.
ProbabilityVector apply_readout(const ProbabilityVector &probs, std::span<const Confusion> readout);

/// Parses a noise profile (`p1`, `p2`, `readout_flip_all`, `readout_flip_q<k>`, `t_damp`).
/// Unknown keys and out-of-range values are ConfigErrors naming the key.
NoiseModel parse_noise(std::string_view text, std::string_view source = "<noise>");
NoiseModel load_noise(const std::string &path);

/// Canonical profile text; `parse_noise(to_profile_text(m)) == m` for flip-only readout.
std::string to_profile_text(const NoiseModel &model);

}  // namespace bornbench

#endif
