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

#ifndef BORNBENCH_DENSITY_MATRIX_H
#define BORNBENCH_DENSITY_MATRIX_H

#include <cstddef>
#include <span>
#include <vector>

#include "bornbench/basis.h"
#include "bornbench/gates.h"
#include "bornbench/probability.h"
#include "bornbench/state_vector.h"

namespace bornbench {

/// Mixed state of an n-qubit register (n <= kMaxDensityMatrixQubits).
///
/// Entries are stored row-major, so entry (r, c) lives at r * 2^n + c. Viewed
/// as a vector over 2n bits, the row index occupies the high n bits; an
/// operator acting on the row index is therefore an ordinary gate on the high
/// half and the conjugated operator on the low half implements right
/// multiplication by its adjoint.
class DensityMatrix {
   public:
    /// |0...0><0...0|
    explicit DensityMatrix(std::size_t num_qubits);
    static DensityMatrix from_state(const StateVector &state);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return dim_; }
    Complex at(BasisIndex row, BasisIndex col) const { return entries_[row * dim_ + col]; }
    std::span<const Complex> entries() const { return entries_; }

    void apply_unitary_1q(std::size_t qubit, const Mat2 &u);
    void apply_unitary_2q(std::size_t qubit_a, std::size_t qubit_b, const Mat4 &u);
    void apply_cnot(std::size_t control, std::size_t target);

    /// rho -> sum_k K_k rho K_k^dagger for Kraus operators on one qubit.
    void apply_channel_1q(std::size_t qubit, std::span<const Mat2> kraus);
    /// Same for operators on an ordered qubit pair.
    void apply_channel_2q(std::size_t qubit_a, std::size_t qubit_b, std::span<const Mat4> kraus);

    Complex trace() const;
    /// max |rho(r, c) - conj(rho(c, r))|
    double hermiticity_error() const;
    /// Diagonal of the matrix.
    ProbabilityVector probabilities() const;

   private:
    std::uint64_t row_mask(std::size_t qubit) const;
    std::uint64_t col_mask(std::size_t qubit) const;
    void check_qubit(std::size_t qubit) const;
    void check_pair(std::size_t qubit_a, std::size_t qubit_b) const;

    std::size_t num_qubits_;
    std::size_t dim_;
    std::vector<Complex> entries_;
};

}  // namespace bornbench

#endif
