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

#include "bornbench/basis.h"

#include <stdexcept>

namespace bornbench {

std::string to_bitstring(BasisIndex x, std::size_t num_qubits) {
    std::string out(num_qubits, '0');
    for (std::size_t q = 0; q < num_qubits; q++) {
        if (qubit_value(x, num_qubits, q)) {
            out[q] = '1';
        }
    }
    return out;
}

BasisIndex from_bitstring(std::string_view bits) {
    if (bits.empty() || bits.size() > 63) {
        throw std::invalid_argument("bitstring length must be in [1, 63]");
    }
    BasisIndex x = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring contains a character other than 0 or 1: " + std::string(bits));
        }
        x = (x << 1) | static_cast<BasisIndex>(c == '1');
    }
    return x;
}

}  // namespace bornbench
