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

#ifndef BORNBENCH_EXECUTOR_H
#define BORNBENCH_EXECUTOR_H

#include <span>

#include "bornbench/circuit.h"
#include "bornbench/density_matrix.h"
#include "bornbench/noise.h"
#include "bornbench/probability.h"
#include "bornbench/state_vector.h"

namespace bornbench {

/// Runs the circuit on |0...0> without noise.
StateVector simulate(const CircuitSpec &circuit, std::span<const double> theta);

/// Density-matrix evolution: each gate's unitary followed by its channel
/// (p1 after rotations, p2 after CNOTs, amplitude damping on every qubit at
/// each sub-covering boundary). Readout is not applied.
DensityMatrix evolve_density(const CircuitSpec &circuit, std::span<const double> theta, const NoiseModel &noise);

/// `evolve_density` followed by the readout confusion map on the diagonal.
ProbabilityVector evolve_noisy(const CircuitSpec &circuit, std::span<const double> theta, const NoiseModel &noise);

/// Exact outcome distribution; uses the statevector path when `noise` is
/// null or noiseless and the density-matrix path otherwise.
ProbabilityVector output_distribution(
    const CircuitSpec &circuit, std::span<const double> theta, const NoiseModel *noise = nullptr);

}  // namespace bornbench

#endif
