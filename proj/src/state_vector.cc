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

#include "bornbench/state_vector.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bornbench {

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxStateVectorQubits) {
        throw std::invalid_argument(
            "statevector qubit count must be in [1, " + std::to_string(kMaxStateVectorQubits) + "]");
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex(0, 0));
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::vector<Complex> amplitudes) {
    StateVector out(num_qubits);
    if (amplitudes.size() != out.amps_.size()) {
        throw std::invalid_argument("amplitude count must be 2^n");
    }
    out.amps_ = std::move(amplitudes);
    if (std::abs(out.norm_squared() - 1) > 1e-10) {
        throw std::invalid_argument("amplitudes are not normalized");
    }
    return out;
}

StateVector StateVector::basis_state(std::size_t num_qubits, BasisIndex x) {
    StateVector out(num_qubits);
    out.amps_[0] = 0;
    out.amps_.at(x) = 1;
    return out;
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range(
            "qubit " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
}

void StateVector::apply_1q(std::size_t qubit, const Mat2 &m) {
    check_qubit(qubit);
    apply_matrix_1q(amps_, qubit_mask(num_qubits_, qubit), m);
}

void StateVector::apply_rx(std::size_t qubit, double angle) {
    apply_1q(qubit, rx_matrix(angle));
}

void StateVector::apply_rz(std::size_t qubit, double angle) {
    check_qubit(qubit);
    // Diagonal, so skip the generic 2x2 path.
    Complex phase0 = std::polar(1.0, -angle / 2);
    Complex phase1 = std::polar(1.0, angle / 2);
    std::uint64_t mask = qubit_mask(num_qubits_, qubit);
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        amps_[i] *= (i & mask) ? phase1 : phase0;
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    std::uint64_t cmask = qubit_mask(num_qubits_, control);
    std::uint64_t tmask = qubit_mask(num_qubits_, target);
    for (std::uint64_t i = 0; i < amps_.size(); i++) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps_[i], amps_[i | tmask]);
        }
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

ProbabilityVector StateVector::probabilities() const {
    std::vector<double> probs(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); i++) {
        probs[i] = std::norm(amps_[i]);
    }
    return ProbabilityVector(num_qubits_, std::move(probs));
}

}  // namespace bornbench
