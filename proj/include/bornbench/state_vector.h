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

#ifndef BORNBENCH_STATE_VECTOR_H
#define BORNBENCH_STATE_VECTOR_H

#include <cstddef>
#include <span>
#include <vector>

#include "bornbench/basis.h"
#include "bornbench/gates.h"
#include "bornbench/probability.h"

namespace bornbench {

/// Pure state of an n-qubit register. Starts in |0...0>.
class StateVector {
   public:
    explicit StateVector(std::size_t num_qubits);

    /// Takes ownership of explicit amplitudes; they must be normalized within 1e-10.
    static StateVector from_amplitudes(std::size_t num_qubits, std::vector<Complex> amplitudes);
    static StateVector basis_state(std::size_t num_qubits, BasisIndex x);

    std::size_t num_qubits() const { return num_qubits_; }
    std::span<const Complex> amplitudes() const { return amps_; }

    void apply_rx(std::size_t qubit, double angle);
    void apply_rz(std::size_t qubit, double angle);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_1q(std::size_t qubit, const Mat2 &m);

    double norm_squared() const;
    ProbabilityVector probabilities() const;

   private:
    void check_qubit(std::size_t qubit) const;

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

}  // namespace bornbench

#endif
