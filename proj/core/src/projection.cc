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

#include "colorproj/projection.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "colorproj/color_code.h"

namespace colorproj {

namespace {

void check_dimension(size_t expected, const BinaryChain &x, const char *what) {
    if (x.dimension() != expected) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

ProjectionTable make_projection(const SurfaceTiling &gstar, const Hypergraph &h, Color c) {
    if (h.num_hyperedges() != gstar.num_faces() || h.num_vertices() != gstar.num_vertices()) {
        throw std::invalid_argument("make_projection: hypergraph does not match the triangulation");
    }
    ProjectionTable t;
    t.color = c;
    t.subtiling = color_subtiling(gstar, c);

    t.vertex_map.assign(gstar.num_vertices(), -1);
    for (size_t i = 0; i < t.subtiling.parent_vertex.size(); i++) {
        t.vertex_map[t.subtiling.parent_vertex[i]] = static_cast<int32_t>(i);
    }

    std::vector<int32_t> sub_edge(gstar.num_edges(), -1);
    for (size_t i = 0; i < t.subtiling.parent_edge.size(); i++) {
        sub_edge[t.subtiling.parent_edge[i]] = static_cast<int32_t>(i);
    }
    t.edge_map.resize(gstar.num_faces());
    for (uint32_t f = 0; f < gstar.num_faces(); f++) {
        int32_t found = -1;
        for (uint32_t e : gstar.faces()[f]) {
            if (sub_edge[e] >= 0) {
                if (found >= 0) {
                    throw std::logic_error("make_projection: triangle with two edges of one color");
                }
                found = sub_edge[e];
            }
        }
        if (found < 0) {
            throw std::logic_error("make_projection: triangle without an edge of the projection color");
        }
        t.edge_map[f] = static_cast<uint32_t>(found);
    }

    t.face_map.assign(gstar.num_vertices(), -1);
    for (size_t i = 0; i < t.subtiling.face_center.size(); i++) {
        t.face_map[t.subtiling.face_center[i]] = static_cast<int32_t>(i);
    }
    return t;
}

BinaryChain project_syndrome(const ProjectionTable &t, const BinaryChain &s) {
    check_dimension(t.num_vertices(), s, "project_syndrome");
    std::vector<uint32_t> out;
    out.reserve(s.weight());
    for (uint32_t v : s.support()) {
        if (t.vertex_map[v] >= 0) {
            out.push_back(static_cast<uint32_t>(t.vertex_map[v]));
        }
    }
    // vertex_map is increasing on the vertices it keeps.
    return BinaryChain(t.subtiling.tiling.num_vertices(), std::move(out));
}

BinaryChain project_error(const ProjectionTable &t, const BinaryChain &x) {
    check_dimension(t.num_hyperedges(), x, "project_error");
    std::vector<uint32_t> toggles;
    toggles.reserve(x.weight());
    for (uint32_t f : x.support()) {
        toggles.push_back(t.edge_map[f]);
    }
    return BinaryChain::from_toggles(t.subtiling.tiling.num_edges(), toggles);
}

BinaryChain project_faces(const ProjectionTable &t, const BinaryChain &f) {
    check_dimension(t.num_hyperfaces(), f, "project_faces");
    std::vector<uint32_t> out;
    for (uint32_t v : f.support()) {
        if (t.face_map[v] >= 0) {
            out.push_back(static_cast<uint32_t>(t.face_map[v]));
        }
    }
    return BinaryChain(t.subtiling.tiling.num_faces(), std::move(out));
}

BinaryChain project_stabilizer(const ProjectionTable &t, uint32_t hyperface) {
    if (hyperface >= t.num_hyperfaces()) {
        throw std::out_of_range("project_stabilizer: hyperface out of range");
    }
    const auto &sub = t.subtiling.tiling;
    if (t.face_map[hyperface] < 0) {
        return BinaryChain(sub.num_edges());
    }
    return BinaryChain::from_toggles(sub.num_edges(), sub.faces()[static_cast<size_t>(t.face_map[hyperface])]);
}

BinaryChain recombine(const std::array<ProjectionTable, 3> &tables, const std::array<BinaryChain, 3> &parts) {
    size_t dim = 0;
    for (size_t c = 0; c < 3; c++) {
        check_dimension(tables[c].subtiling.tiling.num_edges(), parts[c], "recombine");
        dim += parts[c].dimension();
    }
    std::vector<uint32_t> out;
    for (size_t c = 0; c < 3; c++) {
        for (uint32_t e : parts[c].support()) {
            out.push_back(tables[c].subtiling.parent_edge[e]);
        }
    }
    std::sort(out.begin(), out.end());
    return BinaryChain(dim, std::move(out));
}

}  // namespace colorproj
