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

#include "bornbench/gates.h"

#include <cmath>

namespace bornbench {

Mat2 rx_matrix(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return {Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0)};
}

Mat2 rz_matrix(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return {Complex(c, -s), Complex(0, 0), Complex(0, 0), Complex(c, s)};
}

Mat4 cnot_matrix() {
    Mat4 m{};
    m[0 * 4 + 0] = 1;
    m[1 * 4 + 1] = 1;
    m[2 * 4 + 3] = 1;
    m[3 * 4 + 2] = 1;
    return m;
}

Mat2 conj(const Mat2 &m) {
    Mat2 out;
    for (std::size_t k = 0; k < 4; k++) {
        out[k] = std::conj(m[k]);
    }
    return out;
}

Mat4 conj(const Mat4 &m) {
    Mat4 out;
    for (std::size_t k = 0; k < 16; k++) {
        out[k] = std::conj(m[k]);
    }
    return out;
}

Mat2 adjoint(const Mat2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Mat4 adjoint(const Mat4 &m) {
    Mat4 out;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            out[r * 4 + c] = std::conj(m[c * 4 + r]);
        }
    }
    return out;
}

Mat2 multiply(const Mat2 &a, const Mat2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

Mat4 multiply(const Mat4 &a, const Mat4 &b) {
    Mat4 out{};
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t k = 0; k < 4; k++) {
            for (std::size_t c = 0; c < 4; c++) {
                out[r * 4 + c] += a[r * 4 + k] * b[k * 4 + c];
            }
        }
    }
    return out;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (std::size_t ar = 0; ar < 2; ar++) {
        for (std::size_t ac = 0; ac < 2; ac++) {
            for (std::size_t br = 0; br < 2; br++) {
                for (std::size_t bc = 0; bc < 2; bc++) {
                    out[(ar * 2 + br) * 4 + (ac * 2 + bc)] = a[ar * 2 + ac] * b[br * 2 + bc];
                }
            }
        }
    }
    return out;
}

void apply_matrix_1q(std::span<Complex> amps, std::uint64_t mask, const Mat2 &m) {
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        if (i & mask) {
            continue;
        }
        Complex a0 = amps[i];
        Complex a1 = amps[i | mask];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | mask] = m[2] * a0 + m[3] * a1;
    }
}

void apply_matrix_2q(std::span<Complex> amps, std::uint64_t mask_a, std::uint64_t mask_b, const Mat4 &m) {
    const std::uint64_t offsets[4] = {0, mask_b, mask_a, mask_a | mask_b};
    for (std::uint64_t i = 0; i < amps.size(); i++) {
        if (i & (mask_a | mask_b)) {
            continue;
        }
        Complex in[4];
        for (std::size_t k = 0; k < 4; k++) {
            in[k] = amps[i | offsets[k]];
        }
        for (std::size_t r = 0; r < 4; r++) {
            Complex acc = 0;
            for (std::size_t k = 0; k < 4; k++) {
                acc += m[r * 4 + k] * in[k];
            }
            amps[i | offsets[r]] = acc;
        }
    }
}

}  // namespace bornbench
