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

#ifndef BORNBENCH_GATES_H
#define BORNBENCH_GATES_H

#include <array>
#include <cstdint>
#include <span>

#include "bornbench/basis.h"

namespace bornbench {

/// Row-major 2x2 operator.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 operator on |a b>, a being the first target (high bit).
using Mat4 = std::array<Complex, 16>;

/// exp(-i angle X / 2)
Mat2 rx_matrix(double angle);
/// exp(-i angle Z / 2)
Mat2 rz_matrix(double angle);
Mat4 cnot_matrix();

Mat2 conj(const Mat2 &m);
Mat4 conj(const Mat4 &m);
Mat2 adjoint(const Mat2 &m);
Mat4 adjoint(const Mat4 &m);
Mat2 multiply(const Mat2 &a, const Mat2 &b);
Mat4 multiply(const Mat4 &a, const Mat4 &b);
Mat4 kron(const Mat2 &a, const Mat2 &b);

/// Applies `m` to the bit selected by `mask` of every index of `amps`.
void apply_matrix_1q(std::span<Complex> amps, std::uint64_t mask, const Mat2 &m);

/// Applies `m` to the bit pair (mask_a, mask_b) of every index of `amps`.
void apply_matrix_2q(std::span<Complex> amps, std::uint64_t mask_a, std::uint64_t mask_b, const Mat4 &m);

}  // namespace bornbench

#endif
