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

#ifndef BORNBENCH_COUPLING_GRAPH_H
#define BORNBENCH_COUPLING_GRAPH_H

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bornbench/circuit.h"

namespace bornbench {

/// Undirected hardware connectivity graph.
class CouplingGraph {
   public:
    CouplingGraph(std::size_t num_vertices, std::string name);

    /// Throws std::invalid_argument on self-loops or vertices out of range.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t num_vertices() const { return adjacency_.size(); }
    const std::string &name() const { return name_; }
    bool has_edge(std::size_t u, std::size_t v) const;
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    const std::set<std::size_t> &neighbours(std::size_t v) const { return adjacency_[v]; }
    /// Undirected edges (u < v), ascending.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// The 4-cycle 0-1-3-2.
    static CouplingGraph plaquette4();
    /// Two rails of `length` vertices joined by a rung at every position.
    /// Rail one is 0..length-1, rail two is length..2*length-1.
    static CouplingGraph ladder(std::size_t length);
    /// `plaquette4`, `ladder2xK`, or a path to an edge-list file.
    static CouplingGraph from_preset_or_file(const std::string &spec);
    /// Text format: first line `n <vertex_count>`, then one `u v` pair per line.
    static CouplingGraph parse(std::string_view text, std::string name);

   private:
    std::string name_;
    std::vector<std::set<std::size_t>> adjacency_;
};

/// logical qubit -> physical vertex
using Embedding = std::vector<std::size_t>;

/// Finds an injective placement of the layer's qubits (0..num_logical-1) such
/// that every CNOT lands on a graph edge. Backtracking over logical qubits in
/// decreasing-degree order, trying physical vertices in ascending order and
/// skipping any with too small a degree. Returns nullopt when no placement
/// exists. `num_logical` defaults to the layer's own qubit span.
std::optional<Embedding> embed_layer(
    const EntanglerLayer &layer, const CouplingGraph &graph, std::optional<std::size_t> num_logical = std::nullopt);

}  // namespace bornbench

#endif
