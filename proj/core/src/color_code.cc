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

#include "colorproj/color_code.h"

#include <algorithm>
#include <stdexcept>

namespace colorproj {

Hypergraph hypergraph_from_dual(const SurfaceTiling &gstar) {
    if (!gstar.has_colors()) {
        throw TilingError("hypergraph_from_dual: triangulation has no vertex coloring");
    }
    Hypergraph h;
    h.vertex_colors = *gstar.vertex_colors();
    h.hyperedges.resize(gstar.num_faces());
    for (uint32_t f = 0; f < gstar.num_faces(); f++) {
        const auto &face = gstar.faces()[f];
        if (face.size() != 3) {
            throw TilingError("hypergraph_from_dual: face " + std::to_string(f) + " is not a triangle");
        }
        std::array<int64_t, 3> slot = {-1, -1, -1};
        for (uint32_t e : face) {
            for (uint32_t v : {gstar.edges()[e].u, gstar.edges()[e].v}) {
                auto c = static_cast<size_t>(gstar.vertex_color(v));
                if (slot[c] >= 0 && slot[c] != v) {
                    throw TilingError("hypergraph_from_dual: triangle " + std::to_string(f) + " repeats a color");
                }
                slot[c] = v;
            }
        }
        for (size_t c = 0; c < 3; c++) {
            if (slot[c] < 0) {
                throw TilingError("hypergraph_from_dual: triangle " + std::to_string(f) + " misses a color");
            }
            h.hyperedges[f][c] = static_cast<uint32_t>(slot[c]);
        }
    }
    h.hyperfaces.resize(gstar.num_vertices());
    for (uint32_t v = 0; v < gstar.num_vertices(); v++) {
        h.hyperfaces[v] = rotation_around(gstar, v).faces;
    }
    return h;
}

TwoComplex hypergraph_complex(const Hypergraph &h) {
    std::vector<std::vector<uint32_t>> d2_rows(h.hyperfaces.begin(), h.hyperfaces.end());
    std::vector<std::vector<uint32_t>> d1_rows(h.num_hyperedges());
    for (size_t e = 0; e < h.num_hyperedges(); e++) {
        d1_rows[e].assign(h.hyperedges[e].begin(), h.hyperedges[e].end());
    }
    return TwoComplex(
        BinaryMatrix(h.num_hyperfaces(), h.num_hyperedges(), std::move(d2_rows)),
        BinaryMatrix(h.num_hyperedges(), h.num_vertices(), std::move(d1_rows)));
}

SurfaceCode build_surface_code(const SurfaceTiling &gstar, Color c) {
    SurfaceCode code;
    code.subtiling = color_subtiling(gstar, c);
    code.complex = homology_complex(code.subtiling.tiling);
    code.stabilizers = RowEchelon(code.complex.d2());
    code.decoder = SurfaceDecoder(code.subtiling.tiling);
    return code;
}

SurfaceCode build_surface_code(int r, Color c) {
    return build_surface_code(cayley_triangular(r), c);
}

ColorCode build_color_code(const SurfaceTiling &gstar) {
    ColorCode code;
    code.gstar = gstar;
    code.g = dual_tiling(gstar);
    code.hypergraph = hypergraph_from_dual(gstar);
    code.complex = hypergraph_complex(code.hypergraph);
    code.css = css_from_complex(code.complex);
    for (Color c : kColors) {
        auto i = static_cast<size_t>(c);
        code.projections[i] = make_projection(gstar, code.hypergraph, c);
        code.decoders[i] = SurfaceDecoder(code.projections[i].subtiling.tiling);
    }
    code.stabilizers = RowEchelon(code.complex.d2());
    return code;
}

ColorCode build_color_code(int r) {
    if (r < 1) {
        throw std::invalid_argument("build_color_code: r must be positive");
    }
    ColorCode code = build_color_code(cayley_triangular(r));
    code.r = r;
    return code;
}

BinaryChain color_syndrome(const ColorCode &code, const BinaryChain &x) {
    return syndrome(code.complex, x);
}

}  // namespace colorproj
