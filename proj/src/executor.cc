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

#include "bornbench/executor.h"

#include <stdexcept>

#include <fmt/format.h>

namespace bornbench {

namespace {

void check_theta(const CircuitSpec &circuit, std::span<const double> theta) {
    if (theta.size() != circuit.parameter_count) {
        throw std::invalid_argument(
            fmt::format("theta has {} entries, circuit expects {}", theta.size(), circuit.parameter_count));
    }
}

}  // namespace

StateVector simulate(const CircuitSpec &circuit, std::span<const double> theta) {
    check_theta(circuit, theta);
    StateVector state(circuit.num_qubits);
    for (const auto &inst : circuit.instructions()) {
        switch (inst.kind) {
            case GateKind::rx:
                state.apply_rx(inst.qubit_a, theta[inst.param]);
                break;
            case GateKind::rz:
                state.apply_rz(inst.qubit_a, theta[inst.param]);
                break;
            case GateKind::cnot:
                state.apply_cnot(inst.qubit_a, inst.qubit_b);
                break;
            case GateKind::tick:
                break;
        }
    }
    return state;
}

DensityMatrix evolve_density(const CircuitSpec &circuit, std::span<const double> theta, const NoiseModel &noise) {
    check_theta(circuit, theta);
    noise.validate();
    std::vector<Mat2> single = noise.p1 > 0 ? depolarizing_kraus(noise.p1, 1).as_mat2() : std::vector<Mat2>{};
    std::vector<Mat4> pair = noise.p2 > 0 ? depolarizing_kraus(noise.p2, 2).as_mat4() : std::vector<Mat4>{};
    std::vector<Mat2> damping = (noise.t_damp && *noise.t_damp > 0)
                                    ? amplitude_damping_kraus(*noise.t_damp).as_mat2()
                                    : std::vector<Mat2>{};

    DensityMatrix rho(circuit.num_qubits);
    for (const auto &inst : circuit.instructions()) {
        switch (inst.kind) {
            case GateKind::rx:
            case GateKind::rz: {
                double angle = theta[inst.param];
                rho.apply_unitary_1q(inst.qubit_a, inst.kind == GateKind::rx ? rx_matrix(angle) : rz_matrix(angle));
                if (!single.empty()) {
                    rho.apply_channel_1q(inst.qubit_a, single);
                }
                break;
            }
            case GateKind::cnot:
                rho.apply_cnot(inst.qubit_a, inst.qubit_b);
                if (!pair.empty()) {
                    rho.apply_channel_2q(inst.qubit_a, inst.qubit_b, pair);
                }
                break;
            case GateKind::tick:
                if (!damping.empty()) {
                    for (std::size_t q = 0; q < circuit.num_qubits; q++) {
                        rho.apply_channel_1q(q, damping);
                    }
                }
                break;
        }
    }
    return rho;
}

ProbabilityVector evolve_noisy(const CircuitSpec &circuit, std::span<const double> theta, const NoiseModel &noise) {
    auto rho = evolve_density(circuit, theta, noise);
    return apply_readout(rho.probabilities(), noise.readout_matrices(circuit.num_qubits));
}

ProbabilityVector output_distribution(
    const CircuitSpec &circuit, std::span<const double> theta, const NoiseModel *noise) {
    if (noise == nullptr || noise->is_noiseless()) {
        return simulate(circuit, theta).probabilities();
    }
    return evolve_noisy(circuit, theta, *noise);
}

}  // namespace bornbench
