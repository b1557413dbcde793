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

#ifndef BORNBENCH_BASIS_H
#define BORNBENCH_BASIS_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace bornbench {

using Complex = std::complex<double>;

/// Index of a computational basis state. Qubit 0 is the most significant bit.
using BasisIndex = std::uint64_t;

/// Largest register the statevector simulator accepts.
inline constexpr std::size_t kMaxStateVectorQubits = 24;
/// Largest register the density-matrix simulator accepts.
inline constexpr std::size_t kMaxDensityMatrixQubits = 10;

inline constexpr std::uint64_t qubit_mask(std::size_t num_qubits, std::size_t qubit) {
    return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

inline constexpr bool qubit_value(BasisIndex x, std::size_t num_qubits, std::size_t qubit) {
    return (x & qubit_mask(num_qubits, qubit)) != 0;
}

/// Renders `x` as `num_qubits` characters, qubit 0 first.
std::string to_bitstring(BasisIndex x, std::size_t num_qubits);

/// Inverse of `to_bitstring`. Throws std::invalid_argument on characters other than 0/1.
BasisIndex from_bitstring(std::string_view bits);

}  // namespace bornbench

#endif
