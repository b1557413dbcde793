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

#include "bornbench/density_matrix.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bornbench {

DensityMatrix::DensityMatrix(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxDensityMatrixQubits) {
        throw std::invalid_argument(
            "density matrix qubit count must be in [1, " + std::to_string(kMaxDensityMatrixQubits) + "]");
    }
    dim_ = std::size_t{1} << num_qubits;
    entries_.assign(dim_ * dim_, Complex(0, 0));
    entries_[0] = 1;
}

DensityMatrix DensityMatrix::from_state(const StateVector &state) {
    DensityMatrix out(state.num_qubits());
    auto amps = state.amplitudes();
    for (std::size_t r = 0; r < out.dim_; r++) {
        for (std::size_t c = 0; c < out.dim_; c++) {
            out.entries_[r * out.dim_ + c] = amps[r] * std::conj(amps[c]);
        }
    }
    return out;
}

std::uint64_t DensityMatrix::row_mask(std::size_t qubit) const {
    return qubit_mask(num_qubits_, qubit) << num_qubits_;
}

std::uint64_t DensityMatrix::col_mask(std::size_t qubit) const {
    return qubit_mask(num_qubits_, qubit);
}

void DensityMatrix::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range(
            "qubit " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
}

void DensityMatrix::check_pair(std::size_t qubit_a, std::size_t qubit_b) const {
    check_qubit(qubit_a);
    check_qubit(qubit_b);
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("two-qubit operation needs distinct qubits");
    }
}

void DensityMatrix::apply_unitary_1q(std::size_t qubit, const Mat2 &u) {
    check_qubit(qubit);
    apply_matrix_1q(entries_, row_mask(qubit), u);
    apply_matrix_1q(entries_, col_mask(qubit), conj(u));
}

void DensityMatrix::apply_unitary_2q(std::size_t qubit_a, std::size_t qubit_b, const Mat4 &u) {
    check_pair(qubit_a, qubit_b);
    apply_matrix_2q(entries_, row_mask(qubit_a), row_mask(qubit_b), u);
    apply_matrix_2q(entries_, col_mask(qubit_a), col_mask(qubit_b), conj(u));
}

void DensityMatrix::apply_cnot(std::size_t control, std::size_t target) {
    apply_unitary_2q(control, target, cnot_matrix());
}

void DensityMatrix::apply_channel_1q(std::size_t qubit, std::span<const Mat2> kraus) {
    check_qubit(qubit);
    std::vector<Complex> total(entries_.size(), Complex(0, 0));
    std::vector<Complex> term;
    for (const auto &k : kraus) {
        term = entries_;
        apply_matrix_1q(term, row_mask(qubit), k);
        apply_matrix_1q(term, col_mask(qubit), conj(k));
        for (std::size_t i = 0; i < total.size(); i++) {
            total[i] += term[i];
        }
    }
    entries_ = std::move(total);
}

void DensityMatrix::apply_channel_2q(std::size_t qubit_a, std::size_t qubit_b, std::span<const Mat4> kraus) {
    check_pair(qubit_a, qubit_b);
    std::vector<Complex> total(entries_.size(), Complex(0, 0));
    std::vector<Complex> term;
    for (const auto &k : kraus) {
        term = entries_;
        apply_matrix_2q(term, row_mask(qubit_a), row_mask(qubit_b), k);
        apply_matrix_2q(term, col_mask(qubit_a), col_mask(qubit_b), conj(k));
        for (std::size_t i = 0; i < total.size(); i++) {
            total[i] += term[i];
        }
    }
    entries_ = std::move(total);
}

Complex DensityMatrix::trace() const {
    Complex total = 0;
    for (std::size_t r = 0; r < dim_; r++) {
        total += entries_[r * dim_ + r];
    }
    return total;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0;
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = r; c < dim_; c++) {
            worst = std::max(worst, std::abs(entries_[r * dim_ + c] - std::conj(entries_[c * dim_ + r])));
        }
    }
    return worst;
}

ProbabilityVector DensityMatrix::probabilities() const {
    std::vector<double> probs(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        probs[r] = entries_[r * dim_ + r].real();
    }
    return ProbabilityVector(num_qubits_, std::move(probs));
}

}  // namespace bornbench
