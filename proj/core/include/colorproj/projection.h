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

#ifndef COLORPROJ_PROJECTION_H
#define COLORPROJ_PROJECTION_H

#include <array>
#include <cstdint>
#include <vector>

#include "colorproj/gf2.h"
#include "colorproj/tiling.h"

namespace colorproj {

struct Hypergraph;

/// Index tables of the projection of the color-code complex onto the
/// subtiling of one color.
struct ProjectionTable {
    Color color = Color::kRed;
    Subtiling subtiling;
    std::vector<int32_t> vertex_map;  // hypergraph vertex -> subtiling vertex, -1 if colored `color`
    std::vector<uint32_t> edge_map;   // hyperedge -> its subtiling edge
    std::vector<int32_t> face_map;    // hyperface -> subtiling face, -1 unless centered on `color`

    size_t num_vertices() const { return vertex_map.size(); }
    size_t num_hyperedges() const { return edge_map.size(); }
    size_t num_hyperfaces() const { return face_map.size(); }
};

ProjectionTable make_projection(const SurfaceTiling &gstar, const Hypergraph &h, Color c);

/// Drops the vertices of the projection color.
BinaryChain project_syndrome(const ProjectionTable &t, const BinaryChain &s);
/// Sends each hyperedge to its edge of the projection color; pairs cancel.
BinaryChain project_error(const ProjectionTable &t, const BinaryChain &x);
/// Sends each hyperface centered on the projection color to its subtiling
/// face and drops the others.
BinaryChain project_faces(const ProjectionTable &t, const BinaryChain &f);
/// Edge set of the image of a single hyperface.
BinaryChain project_stabilizer(const ProjectionTable &t, uint32_t hyperface);

/// Disjoint union of one edge chain per color (red, green, blue) as a chain
/// over the edges of the parent triangulation.
BinaryChain recombine(const std::array<ProjectionTable, 3> &tables, const std::array<BinaryChain, 3> &parts);

}  // namespace colorproj

#endif
