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

#include "bornbench/chow_liu.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace bornbench {

std::vector<std::vector<double>> pairwise_mutual_information(const TargetDistribution &dist) {
    std::size_t n = dist.num_bits();
    if (n < 2) {
        throw std::invalid_argument("mutual information needs at least two bits");
    }
    std::vector<std::vector<double>> mi(n, std::vector<double>(n, 0.0));
    auto probs = dist.probabilities().values();
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            double joint[2][2] = {{0, 0}, {0, 0}};
            for (BasisIndex x = 0; x < probs.size(); x++) {
                joint[qubit_value(x, n, i)][qubit_value(x, n, j)] += probs[x];
            }
            double pi[2] = {joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
            double pj[2] = {joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};
            double total = 0;
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    if (joint[a][b] > 0) {
                        total += joint[a][b] * std::log(joint[a][b] / (pi[a] * pj[b]));
                    }
                }
            }
            mi[i][j] = mi[j][i] = std::max(total, 0.0);
        }
    }
    return mi;
}

ChowLiuResult chow_liu_layer(const TargetDistribution &dist, std::size_t root) {
    std::size_t n = dist.num_bits();
    if (root >= n) {
        throw std::out_of_range("Chow-Liu root out of range");
    }
    auto mi = pairwise_mutual_information(dist);

    struct Candidate {
        long long weight;
        std::uint32_t a, b;
    };
    std::vector<Candidate> candidates;
    for (std::uint32_t i = 0; i < n; i++) {
        for (std::uint32_t j = i + 1; j < n; j++) {
            long long w = std::llround(mi[i][j] * 1e12);
            candidates.push_back({w, i, j});
        }
    }
    bool degenerate = std::all_of(candidates.begin(), candidates.end(),
                                  [&](const Candidate &c) { return c.weight == candidates.front().weight; });
    std::sort(candidates.begin(), candidates.end(), [](const Candidate &x, const Candidate &y) {
        return std::tie(y.weight, x.a, x.b) < std::tie(x.weight, y.a, y.b);
    });

    // Kruskal.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    ChowLiuResult result;
    result.degenerate = degenerate;
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    for (const auto &c : candidates) {
        auto ra = find(c.a), rb = find(c.b);
        if (ra == rb) {
            continue;
        }
        parent[ra] = rb;
        result.tree_edges.push_back({c.a, c.b});
        adjacency[c.a].push_back(c.b);
        adjacency[c.b].push_back(c.a);
    }

    // Orient away from the root, level by level.
    std::vector<std::vector<Edge>> levels;
    std::vector<int> depth(n, -1);
    std::queue<std::uint32_t> frontier;
    depth[root] = 0;
    frontier.push(static_cast<std::uint32_t>(root));
    while (!frontier.empty()) {
        auto v = frontier.front();
        frontier.pop();
        auto children = adjacency[v];
        std::sort(children.begin(), children.end());
        for (auto c : children) {
            if (depth[c] >= 0) {
                continue;
            }
            depth[c] = depth[v] + 1;
            if (levels.size() < static_cast<std::size_t>(depth[c])) {
                levels.resize(depth[c]);
            }
            levels[depth[c] - 1].push_back({v, c});
            frontier.push(c);
        }
    }

    for (auto &level : levels) {
        std::sort(level.begin(), level.end());
        // First-fit split into vertex-disjoint matchings.
        std::vector<std::vector<Edge>> covers;
        for (const auto &e : level) {
            auto fits = [&](const std::vector<Edge> &cover) {
                return std::none_of(cover.begin(), cover.end(), [&](const Edge &f) {
                    return f.control == e.control || f.control == e.target || f.target == e.control ||
                           f.target == e.target;
                });
            };
            auto it = std::find_if(covers.begin(), covers.end(), fits);
            if (it == covers.end()) {
                covers.push_back({e});
            } else {
                it->push_back(e);
            }
        }
        for (auto &cover : covers) {
            result.layer.sub_coverings.push_back(std::move(cover));
        }
    }
    return result;
}

}  // namespace bornbench
