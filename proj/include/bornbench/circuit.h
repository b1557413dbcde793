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

#ifndef BORNBENCH_CIRCUIT_H
#define BORNBENCH_CIRCUIT_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bornbench {

class TargetDistribution;

/// Directed CNOT placement.
struct Edge {
    std::uint32_t control = 0;
    std::uint32_t target = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Nominal duration of one vertex-disjoint CNOT sub-covering.
inline constexpr std::uint32_t kSubCoveringNanoseconds = 200;

/// One entangling layer: CNOT sets applied in order. Edges inside a
/// sub-covering touch disjoint qubits and so can run simultaneously.
struct EntanglerLayer {
    std::vector<std::vector<Edge>> sub_coverings;

    /// Total CNOT count (d_C).
    std::size_t cnot_count() const;
    std::uint32_t duration_ns() const {
        return kSubCoveringNanoseconds * static_cast<std::uint32_t>(sub_coverings.size());
    }
    /// All edges in application order.
    std::vector<Edge> edges() const;
    /// Largest qubit index referenced plus one (0 for an empty layer).
    std::size_t min_qubits() const;
    bool sub_coverings_disjoint() const;

    bool operator==(const EntanglerLayer &) const = default;
};

/// Splits an ordered edge list into sub-coverings: each edge goes into the
/// earliest sub-covering after every one that touches its qubits.
EntanglerLayer schedule_edges(const std::vector<Edge> &edges);

/// Parses "0-1,0-2,0-3" (control-target pairs).
std::vector<Edge> parse_edge_list(std::string_view text);
std::string format_edge_list(const std::vector<Edge> &edges);

enum class Axis : std::uint8_t { x, z };

/// The same gate sequence applied to every qubit; each gate owns one parameter.
struct RotationLayer {
    std::vector<Axis> gates;
    /// Index of this layer's first parameter. Qubit q, gate g uses
    /// first_param + q * gates.size() + g.
    std::size_t first_param = 0;

    bool operator==(const RotationLayer &) const = default;
};

enum class GateKind : std::uint8_t {
    rx,
    rz,
    cnot,
    /// End of an entangler sub-covering; carries duration-dependent noise.
    tick,
};

struct Instruction {
    GateKind kind;
    std::uint32_t qubit_a = 0;
    std::uint32_t qubit_b = 0;
    /// Parameter slot for rotations, -1 otherwise.
    std::int32_t param = -1;
};

/// QCBM ansatz: rotation layers interleaved with entangling layers,
/// rot[0] ent[0] rot[1] ... ent[L-1] rot[L]. An L = 0 circuit keeps the
/// first and last rotation layers back to back.
struct CircuitSpec {
    std::size_t num_qubits = 0;
    std::vector<RotationLayer> rotation_layers;
    std::vector<EntanglerLayer> entangler_layers;
    std::size_t parameter_count = 0;

    std::size_t num_entangler_layers() const { return entangler_layers.size(); }
    /// Flattened gate list in application order.
    std::vector<Instruction> instructions() const;

    bool operator==(const CircuitSpec &) const = default;
};

/// Entangling pattern selector (number of CNOTs per layer for the built-in
/// 4-qubit plaquette layouts).
struct AnsatzOptions {
    std::size_t num_qubits = 4;
    int d_c = 2;
    std::size_t num_layers = 1;
    /// Source distribution for the Chow-Liu layer (d_C = 3).
    const TargetDistribution *chow_liu_source = nullptr;
    std::size_t chow_liu_root = 0;
    /// Explicit edges used for every entangling layer instead of the built-in
    /// pattern. Required for d_C != 0 when num_qubits != 4.
    std::optional<std::vector<Edge>> edge_override;
};

CircuitSpec build_circuit(const AnsatzOptions &options);

/// Perfect matchings of the square plaquette 0-1-3-2.
std::vector<Edge> plaquette_matching_a();
std::vector<Edge> plaquette_matching_b();

/// d_C = 2 layer: matching A on even layers, matching B on odd layers.
EntanglerLayer entangler_dc2(std::size_t layer_index);
/// d_C = 4 layer: matching A then matching B.
EntanglerLayer entangler_dc4();

/// n (2 + 3 (L - 1) + 2) for L >= 1; 4n for L = 0.
std::size_t rotation_parameter_count(std::size_t num_qubits, std::size_t num_layers);

}  // namespace bornbench

#endif
