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

#ifndef COLORPROJ_TILING_H
#define COLORPROJ_TILING_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorproj/complex.h"

namespace colorproj {

enum class Color : uint8_t { kRed = 0, kGreen = 1, kBlue = 2 };

inline constexpr std::array<Color, 3> kColors = {Color::kRed, Color::kGreen, Color::kBlue};

char color_letter(Color c);
Color color_from_letter(char c);

/// The color missing from {a, b}; a and b must differ.
Color third_color(Color a, Color b);

struct TilingEdge {
    uint32_t u;
    uint32_t v;
    bool operator==(const TilingEdge &) const = default;
};

class TilingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A closed-surface tiling (V, E, F).
///
/// Faces are lists of edge indices. The constructor rejects loops, multiple
/// edges, edges not lying on exactly two faces, faces with a nonzero
/// boundary, an odd Euler characteristic, and improper vertex colorings.
class SurfaceTiling {
   public:
    SurfaceTiling() = default;
    SurfaceTiling(
        size_t num_vertices,
        std::vector<TilingEdge> edges,
        std::vector<std::vector<uint32_t>> faces,
        std::optional<std::vector<Color>> vertex_colors = std::nullopt);

    size_t num_vertices() const { return num_vertices_; }
    size_t num_edges() const { return edges_.size(); }
    size_t num_faces() const { return faces_.size(); }
    const std::vector<TilingEdge> &edges() const { return edges_; }
    const std::vector<std::vector<uint32_t>> &faces() const { return faces_; }
    const std::optional<std::vector<Color>> &vertex_colors() const { return vertex_colors_; }
    bool has_colors() const { return vertex_colors_.has_value(); }
    Color vertex_color(uint32_t v) const { return (*vertex_colors_)[v]; }

    /// The color absent from the edge's endpoints. Requires vertex colors.
    Color edge_color(uint32_t e) const;

    /// Edge indices incident to v, increasing.
    std::span<const uint32_t> incident_edges(uint32_t v) const;
    /// The two faces containing e, increasing.
    const std::array<uint32_t, 2> &edge_faces(uint32_t e) const { return edge_faces_[e]; }
    uint32_t other_endpoint(uint32_t e, uint32_t v) const;

    /// Neighbors of v sorted by vertex index, each with the connecting edge.
    std::span<const TilingEdge> neighbors(uint32_t v) const;

    int64_t euler_characteristic() const;

    /// Equal as indexed objects, comparing faces as edge sets.
    bool same_cells(const SurfaceTiling &other) const;

    bool operator==(const SurfaceTiling &other) const {
        return num_vertices_ == other.num_vertices_ && edges_ == other.edges_ && faces_ == other.faces_ &&
               vertex_colors_ == other.vertex_colors_;
    }

   private:
    size_t num_vertices_ = 0;
    std::vector<TilingEdge> edges_;
    std::vector<std::vector<uint32_t>> faces_;
    std::optional<std::vector<Color>> vertex_colors_;

    std::vector<uint32_t> incidence_offsets_;
    std::vector<uint32_t> incidence_;
    std::vector<TilingEdge> neighbor_list_;  // (neighbor, edge) per incidence slot
    std::vector<std::array<uint32_t, 2>> edge_faces_;
};

/// Cyclic order of the faces and edges around a vertex: entry i is an
/// incident edge and the face shared by it and entry i+1.
struct VertexRotation {
    std::vector<uint32_t> edges;
    std::vector<uint32_t> faces;
};

/// Throws TilingError when the neighborhood of v is not a single disk.
VertexRotation rotation_around(const SurfaceTiling &t, uint32_t v);

/// The triangulated torus given by the Cayley graph of Z/3r x Z/3r with
/// generators ±(1,0), ±(0,1), ±(1,-1).
///
/// Vertex (a, b) has index a*3r + b and color (a + 2b) mod 3. Edge 3v+d leaves
/// v along (1,0), (0,1), (1,-1) for d = 0, 1, 2. Faces 2v and 2v+1 are the up
/// triangle {(a,b), (a+1,b), (a,b+1)} and the down triangle
/// {(a+1,b), (a,b+1), (a+1,b+1)}.
SurfaceTiling cayley_triangular(int r);

/// Dual tiling: vertex f per face f, the same edge indexing, face v per vertex v.
SurfaceTiling dual_tiling(const SurfaceTiling &t);

/// The monochromatic subtiling G*(c) of a properly 3-colored triangulation.
struct Subtiling {
    Color color;
    SurfaceTiling tiling;
    std::vector<uint32_t> parent_vertex;  // subtiling vertex -> parent vertex
    std::vector<uint32_t> parent_edge;    // subtiling edge -> parent edge
    std::vector<uint32_t> face_center;    // subtiling face -> c-colored parent vertex
};

Subtiling color_subtiling(const SurfaceTiling &gstar, Color c);

/// The cellular homology complex: faces -> edges -> vertices.
TwoComplex homology_complex(const SurfaceTiling &t);

/// Text interchange format ("tiling v1"). load(save(t)) == t.
void write_tiling(std::ostream &out, const SurfaceTiling &t);
SurfaceTiling read_tiling(std::istream &in);
std::string save_tiling(const SurfaceTiling &t);
SurfaceTiling load_tiling(const std::string &text);

}  // namespace colorproj

#endif
