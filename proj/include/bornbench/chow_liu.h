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

#ifndef BORNBENCH_CHOW_LIU_H
#define BORNBENCH_CHOW_LIU_H

#include <cstddef>
#include <vector>

#include "bornbench/bas.h"
#include "bornbench/circuit.h"

namespace bornbench {

/// MI(i, j) in nats between bits i and j under `dist`, from exact pairwise
/// marginals. Symmetric with a zero diagonal.
std::vector<std::vector<double>> pairwise_mutual_information(const TargetDistribution &dist);

struct ChowLiuResult {
    /// Tree edges directed away from the root, grouped by depth; each depth is
    /// split into vertex-disjoint sub-coverings.
    EntanglerLayer layer;
    /// Undirected tree edges as chosen by the spanning-tree search (smaller index first).
    std::vector<Edge> tree_edges;
    /// Set when all pairwise MIs tie, so the tree comes from tie-breaking alone.
    bool degenerate = false;
};

/// Maximum-weight spanning tree over pairwise MI, rooted at `root`.
/// MI values equal to 12 decimal places count as ties and resolve to the
/// lexicographically smallest edge.
ChowLiuResult chow_liu_layer(const TargetDistribution &dist, std::size_t root = 0);

}  // namespace bornbench

#endif
