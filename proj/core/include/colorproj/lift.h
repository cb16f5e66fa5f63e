// Copyright 2026 colorproj Contributors
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

#ifndef COLORPROJ_LIFT_H
#define COLORPROJ_LIFT_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "colorproj/gf2.h"
#include "colorproj/tiling.h"

namespace colorproj {

/// Connected components of the graph with the edges of B removed, and the
/// pairs of components joined by an edge of B.
struct ComponentsGraph {
    std::vector<uint32_t> component_of;
    size_t num_components = 0;
    /// Distinct pairs (i, j), i < j, sorted.
    std::vector<std::pair<uint32_t, uint32_t>> adjacency;
    /// Some edge of B has both endpoints in one component.
    bool has_self_link = false;
};

ComponentsGraph components_graph(const SurfaceTiling &g, const BinaryChain &b);

/// Edges with exactly one endpoint in X.
BinaryChain boundary_of_vertexset(const SurfaceTiling &g, const BinaryChain &x);

/// A vertex set X with boundary_of_vertexset(g, X) == b, or nullopt when none
/// exists. Of the two solutions X and V \ X, returns the smaller one, and
/// the one containing vertex 0 on a tie.
std::optional<BinaryChain> lift_boundary(const SurfaceTiling &g, const BinaryChain &b);

}  // namespace colorproj

#endif
