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

#include "bornbench/circuit.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "bornbench/bas.h"
#include "bornbench/chow_liu.h"

namespace bornbench {

std::size_t EntanglerLayer::cnot_count() const {
    std::size_t total = 0;
    for (const auto &cover : sub_coverings) {
        total += cover.size();
    }
    return total;
}

std::vector<Edge> EntanglerLayer::edges() const {
    std::vector<Edge> out;
    for (const auto &cover : sub_coverings) {
        out.insert(out.end(), cover.begin(), cover.end());
    }
    return out;
}

std::size_t EntanglerLayer::min_qubits() const {
    std::size_t n = 0;
    for (const auto &e : edges()) {
        n = std::max<std::size_t>(n, std::max(e.control, e.target) + 1);
    }
    return n;
}

bool EntanglerLayer::sub_coverings_disjoint() const {
    for (const auto &cover : sub_coverings) {
        std::vector<std::uint32_t> used;
        for (const auto &e : cover) {
            used.push_back(e.control);
            used.push_back(e.target);
        }
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
            return false;
        }
    }
    return true;
}

EntanglerLayer schedule_edges(const std::vector<Edge> &edges) {
    EntanglerLayer layer;
    // ready[q] = first sub-covering index where qubit q is free.
    std::vector<std::size_t> ready;
    for (const auto &e : edges) {
        if (e.control == e.target) {
            throw std::invalid_argument(fmt::format("edge {}-{} is a self-loop", e.control, e.target));
        }
        std::size_t hi = std::max(e.control, e.target);
        if (ready.size() <= hi) {
            ready.resize(hi + 1, 0);
        }
        std::size_t slot = std::max(ready[e.control], ready[e.target]);
        if (layer.sub_coverings.size() <= slot) {
            layer.sub_coverings.resize(slot + 1);
        }
        layer.sub_coverings[slot].push_back(e);
        ready[e.control] = ready[e.target] = slot + 1;
    }
    return layer;
}

std::vector<Edge> parse_edge_list(std::string_view text) {
    std::vector<Edge> out;
    auto parse_index = [&](std::string_view token) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
            throw std::invalid_argument(fmt::format("bad qubit index `{}` in edge list `{}`", token, text));
        }
        return v;
    };
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        auto dash = item.find('-');
        if (dash == std::string_view::npos) {
            throw std::invalid_argument(fmt::format("edge `{}` is not of the form control-target", item));
        }
        Edge e{parse_index(item.substr(0, dash)), parse_index(item.substr(dash + 1))};
        if (e.control == e.target) {
            throw std::invalid_argument(fmt::format("edge `{}` has the same control and target", item));
        }
        out.push_back(e);
    }
    return out;
}

std::string format_edge_list(const std::vector<Edge> &edges) {
    std::string out;
    for (const auto &e : edges) {
        if (!out.empty()) {
            out += ',';
        }
        out += fmt::format("{}-{}", e.control, e.target);
    }
    return out;
}

std::vector<Instruction> CircuitSpec::instructions() const {
    std::vector<Instruction> out;
    auto emit_rotations = [&](const RotationLayer &layer) {
        for (std::uint32_t q = 0; q < num_qubits; q++) {
            for (std::size_t g = 0; g < layer.gates.size(); g++) {
                auto param = static_cast<std::int32_t>(layer.first_param + q * layer.gates.size() + g);
                out.push_back({layer.gates[g] == Axis::x ? GateKind::rx : GateKind::rz, q, 0, param});
            }
        }
    };
    for (std::size_t k = 0; k < rotation_layers.size(); k++) {
        emit_rotations(rotation_layers[k]);
        if (k < entangler_layers.size()) {
            for (const auto &cover : entangler_layers[k].sub_coverings) {
                for (const auto &e : cover) {
                    out.push_back({GateKind::cnot, e.control, e.target, -1});
                }
                out.push_back({GateKind::tick, 0, 0, -1});
            }
        }
    }
    return out;
}

std::vector<Edge> plaquette_matching_a() {
    return {{0, 1}, {2, 3}};
}

std::vector<Edge> plaquette_matching_b() {
    return {{0, 2}, {1, 3}};
}

EntanglerLayer entangler_dc2(std::size_t layer_index) {
    EntanglerLayer layer;
    layer.sub_coverings.push_back(layer_index % 2 == 0 ? plaquette_matching_a() : plaquette_matching_b());
    return layer;
}

EntanglerLayer entangler_dc4() {
    EntanglerLayer layer;
    layer.sub_coverings.push_back(plaquette_matching_a());
    layer.sub_coverings.push_back(plaquette_matching_b());
    return layer;
}

std::size_t rotation_parameter_count(std::size_t num_qubits, std::size_t num_layers) {
    if (num_layers == 0) {
        return 4 * num_qubits;
    }
    return num_qubits * (2 + 3 * (num_layers - 1) + 2);
}

CircuitSpec build_circuit(const AnsatzOptions &options) {
    std::size_t n = options.num_qubits;
    std::size_t num_layers = options.num_layers;
    if (n == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    if (options.d_c == 0) {
        if (num_layers != 0) {
            throw std::invalid_argument("d_C = 0 (no entanglers) requires L = 0");
        }
    } else if (options.d_c < 2 || options.d_c > 4) {
        throw std::invalid_argument(fmt::format("unsupported d_C = {}; expected one of 0, 2, 3, 4", options.d_c));
    } else if (num_layers == 0) {
        throw std::invalid_argument("L = 0 requires d_C = 0");
    }

    CircuitSpec circuit;
    circuit.num_qubits = n;

    std::optional<EntanglerLayer> fixed_layer;
    if (options.edge_override) {
        if (options.d_c == 0) {
            throw std::invalid_argument("edge override given for a circuit without entanglers");
        }
        for (const auto &e : *options.edge_override) {
            if (e.control >= n || e.target >= n) {
                throw std::invalid_argument(fmt::format("edge {}-{} outside a {}-qubit register", e.control, e.target, n));
            }
        }
        fixed_layer = schedule_edges(*options.edge_override);
    } else if (options.d_c != 0) {
        if (n != 4) {
            throw std::invalid_argument("built-in entangler layouts need 4 qubits; supply an explicit edge list");
        }
        if (options.d_c == 3) {
            if (options.chow_liu_source == nullptr) {
                throw std::invalid_argument("d_C = 3 needs a Chow-Liu source distribution or an explicit edge list");
            }
            if (options.chow_liu_source->num_bits() != n) {
                throw std::invalid_argument("Chow-Liu source distribution size does not match the register");
            }
            fixed_layer = chow_liu_layer(*options.chow_liu_source, options.chow_liu_root).layer;
        } else if (options.d_c == 4) {
            fixed_layer = entangler_dc4();
        }
    }
    for (std::size_t k = 0; k < num_layers; k++) {
        circuit.entangler_layers.push_back(fixed_layer ? *fixed_layer : entangler_dc2(k));
    }

    std::size_t next_param = 0;
    auto add_rotation = [&](std::vector<Axis> gates) {
        RotationLayer layer{std::move(gates), next_param};
        next_param += n * layer.gates.size();
        circuit.rotation_layers.push_back(std::move(layer));
    };
    add_rotation({Axis::x, Axis::z});
    for (std::size_t k = 1; k < num_layers; k++) {
        add_rotation({Axis::z, Axis::x, Axis::z});
    }
    add_rotation({Axis::z, Axis::x});
    circuit.parameter_count = next_param;
    return circuit;
}

}  // namespace bornbench
