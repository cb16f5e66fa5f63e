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

#ifndef COLORPROJ_COLOR_CODE_H
#define COLORPROJ_COLOR_CODE_H

#include <array>
#include <cstdint>
#include <vector>

#include "colorproj/complex.h"
#include "colorproj/gf2.h"
#include "colorproj/matching.h"
#include "colorproj/projection.h"
#include "colorproj/tiling.h"

namespace colorproj {

/// The 3-uniform hypergraph of a properly 3-colored triangulation.
///
/// Hyperedge f is the vertex triple of face f, stored by color (red, green,
/// blue). Hyperface v lists the hyperedges around vertex v in rotation order.
struct Hypergraph {
    std::vector<Color> vertex_colors;
    std::vector<std::array<uint32_t, 3>> hyperedges;
    std::vector<std::vector<uint32_t>> hyperfaces;

    size_t num_vertices() const { return vertex_colors.size(); }
    size_t num_hyperedges() const { return hyperedges.size(); }
    size_t num_hyperfaces() const { return hyperfaces.size(); }
};

/// Throws TilingError for non-triangular faces, missing or improper colors.
Hypergraph hypergraph_from_dual(const SurfaceTiling &gstar);

/// Hyperfaces -> hyperedges -> vertices.
TwoComplex hypergraph_complex(const Hypergraph &h);

/// The surface code of one monochromatic subtiling, ready to decode.
struct SurfaceCode {
    Subtiling subtiling;
    TwoComplex complex;
    RowEchelon stabilizers;  // echelon form of the face boundaries
    SurfaceDecoder decoder;
};

SurfaceCode build_surface_code(const SurfaceTiling &gstar, Color c);
/// The subtiling of color c of the triangulated torus of size r.
SurfaceCode build_surface_code(int r, Color c);

/// A color code together with everything the decoder needs.
///
/// Qubits, hyperedges, faces of `gstar` and vertices of `g` share one index.
/// Vertices of `gstar` index both hypergraph vertices and hyperfaces.
struct ColorCode {
    int r = 0;  // 0 when built from an arbitrary triangulation
    SurfaceTiling gstar;
    SurfaceTiling g;
    Hypergraph hypergraph;
    TwoComplex complex;
    CssCode css;
    std::array<ProjectionTable, 3> projections;
    std::array<SurfaceDecoder, 3> decoders;
    RowEchelon stabilizers;  // echelon form of the hyperface boundaries

    const ProjectionTable &projection(Color c) const { return projections[static_cast<size_t>(c)]; }
    const SurfaceDecoder &decoder(Color c) const { return decoders[static_cast<size_t>(c)]; }
};

ColorCode build_color_code(const SurfaceTiling &gstar);
ColorCode build_color_code(int r);

/// Terminal vertices of the error x.
BinaryChain color_syndrome(const ColorCode &code, const BinaryChain &x);

}  // namespace colorproj

#endif
