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

#include "bornbench/coupling_graph.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "bornbench/kv.h"

namespace bornbench {

CouplingGraph::CouplingGraph(std::size_t num_vertices, std::string name)
    : name_(std::move(name)), adjacency_(num_vertices) {
}

void CouplingGraph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) {
        throw std::invalid_argument(fmt::format("coupling graph `{}`: self-loop on {}", name_, u));
    }
    if (u >= num_vertices() || v >= num_vertices()) {
        throw std::invalid_argument(
            fmt::format("coupling graph `{}`: edge {}-{} outside {} vertices", name_, u, v, num_vertices()));
    }
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
}

bool CouplingGraph::has_edge(std::size_t u, std::size_t v) const {
    return u < num_vertices() && adjacency_[u].contains(v);
}

std::vector<std::pair<std::size_t, std::size_t>> CouplingGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < num_vertices(); u++) {
        for (auto v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

CouplingGraph CouplingGraph::plaquette4() {
    CouplingGraph g(4, "plaquette4");
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    g.add_edge(3, 2);
    g.add_edge(2, 0);
    return g;
}

CouplingGraph CouplingGraph::ladder(std::size_t length) {
    if (length == 0) {
        throw std::invalid_argument("ladder length must be positive");
    }
    CouplingGraph g(2 * length, fmt::format("ladder2x{}", length));
    for (std::size_t i = 0; i < length; i++) {
        g.add_edge(i, length + i);
        if (i + 1 < length) {
            g.add_edge(i, i + 1);
            g.add_edge(length + i, length + i + 1);
        }
    }
    return g;
}

CouplingGraph CouplingGraph::from_preset_or_file(const std::string &spec) {
    if (spec == "plaquette4") {
        return plaquette4();
    }
    if (spec.starts_with("ladder2x") && !std::filesystem::exists(spec)) {
        std::string_view digits = std::string_view(spec).substr(8);
        std::size_t length = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), length);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || length == 0) {
            throw ConfigError("bad ladder preset `" + spec + "`; expected ladder2xK with K >= 1");
        }
        return ladder(length);
    }
    return parse(read_text_file(spec), spec);
}

CouplingGraph CouplingGraph::parse(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<CouplingGraph> graph;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) {
            continue;
        }
        if (!graph) {
            std::size_t count = 0;
            if (first != "n" || !(fields >> count)) {
                throw ConfigError(fmt::format("{}:{}: expected `n <vertex_count>`", name, line_no));
            }
            graph.emplace(count, name);
            continue;
        }
        std::size_t u = 0, v = 0;
        std::istringstream pair(line);
        std::string extra;
        if (!(pair >> u >> v) || (pair >> extra)) {
            throw ConfigError(fmt::format("{}:{}: expected `u v`", name, line_no));
        }
        try {
            graph->add_edge(u, v);
        } catch (const std::invalid_argument &ex) {
            throw ConfigError(fmt::format("{}:{}: {}", name, line_no, ex.what()));
        }
    }
    if (!graph) {
        throw ConfigError(name + ": missing `n <vertex_count>` header");
    }
    return *graph;
}

std::optional<Embedding> embed_layer(
    const EntanglerLayer &layer, const CouplingGraph &graph, std::optional<std::size_t> num_logical) {
    std::size_t n = num_logical.value_or(layer.min_qubits());
    if (n < layer.min_qubits()) {
        throw std::invalid_argument("layer references qubits beyond num_logical");
    }
    if (n > graph.num_vertices()) {
        return std::nullopt;
    }

    std::vector<std::set<std::size_t>> logical(n);
    for (const auto &e : layer.edges()) {
        logical[e.control].insert(e.target);
        logical[e.target].insert(e.control);
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; i++) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return logical[a].size() > logical[b].size();
    });

    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    Embedding placement(n, kUnset);
    std::vector<bool> used(graph.num_vertices(), false);

    std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
        if (depth == n) {
            return true;
        }
        std::size_t q = order[depth];
        for (std::size_t v = 0; v < graph.num_vertices(); v++) {
            if (used[v] || graph.degree(v) < logical[q].size()) {
                continue;
            }
            bool consistent = std::all_of(logical[q].begin(), logical[q].end(), [&](std::size_t nb) {
                return placement[nb] == kUnset || graph.has_edge(v, placement[nb]);
            });
            if (!consistent) {
                continue;
            }
            placement[q] = v;
            used[v] = true;
            if (place(depth + 1)) {
                return true;
            }
            placement[q] = kUnset;
            used[v] = false;
        }
        return false;
    };
    if (!place(0)) {
        return std::nullopt;
    }
    return placement;
}

}  // namespace bornbench
