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

#include "colorproj/tiling.h"

#include <algorithm>
#include <set>
#include <utility>

namespace colorproj {

char color_letter(Color c) {
    switch (c) {
        case Color::kRed:
            return 'R';
        case Color::kGreen:
            return 'G';
        case Color::kBlue:
            return 'B';
    }
    return '?';
}

Color color_from_letter(char c) {
    switch (c) {
        case 'R':
        case 'r':
            return Color::kRed;
        case 'G':
        case 'g':
            return Color::kGreen;
        case 'B':
        case 'b':
            return Color::kBlue;
        default:
            throw std::invalid_argument(std::string("not a color letter: ") + c);
    }
}

Color third_color(Color a, Color b) {
    if (a == b) {
        throw std::invalid_argument("third_color needs two distinct colors");
    }
    return static_cast<Color>(3 - static_cast<int>(a) - static_cast<int>(b));
}

SurfaceTiling::SurfaceTiling(
    size_t num_vertices,
    std::vector<TilingEdge> edges,
    std::vector<std::vector<uint32_t>> faces,
    std::optional<std::vector<Color>> vertex_colors)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      vertex_colors_(std::move(vertex_colors)) {
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (size_t e = 0; e < edges_.size(); e++) {
        auto [u, v] = edges_[e];
        if (u >= num_vertices_ || v >= num_vertices_) {
            throw TilingError("edge " + std::to_string(e) + " has an endpoint out of range");
        }
        if (u == v) {
            throw TilingError("edge " + std::to_string(e) + " is a loop");
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw TilingError("edge " + std::to_string(e) + " duplicates an earlier edge");
        }
    }

    // Vertex incidence, CSR style.
    incidence_offsets_.assign(num_vertices_ + 1, 0);
    for (const auto &e : edges_) {
        incidence_offsets_[e.u + 1]++;
        incidence_offsets_[e.v + 1]++;
    }
    for (size_t v = 0; v < num_vertices_; v++) {
        incidence_offsets_[v + 1] += incidence_offsets_[v];
    }
    incidence_.resize(2 * edges_.size());
    std::vector<uint32_t> fill(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
    for (size_t e = 0; e < edges_.size(); e++) {
        incidence_[fill[edges_[e].u]++] = static_cast<uint32_t>(e);
        incidence_[fill[edges_[e].v]++] = static_cast<uint32_t>(e);
    }
    neighbor_list_.resize(incidence_.size());
    for (size_t v = 0; v < num_vertices_; v++) {
        for (uint32_t k = incidence_offsets_[v]; k < incidence_offsets_[v + 1]; k++) {
            uint32_t e = incidence_[k];
            neighbor_list_[k] = {other_endpoint(e, static_cast<uint32_t>(v)), e};
        }
        std::sort(
            neighbor_list_.begin() + incidence_offsets_[v],
            neighbor_list_.begin() + incidence_offsets_[v + 1],
            [](const TilingEdge &a, const TilingEdge &b) { return a.u < b.u; });
    }

    std::vector<uint32_t> face_count(edges_.size(), 0);
    edge_faces_.assign(edges_.size(), {0, 0});
    std::vector<uint8_t> parity(num_vertices_, 0);
    for (size_t f = 0; f < faces_.size(); f++) {
        std::vector<uint32_t> sorted = faces_[f];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw TilingError("face " + std::to_string(f) + " repeats an edge");
        }
        for (uint32_t e : sorted) {
            if (e >= edges_.size()) {
                throw TilingError("face " + std::to_string(f) + " references a missing edge");
            }
            if (face_count[e] >= 2) {
                throw TilingError("edge " + std::to_string(e) + " lies on more than two faces");
            }
            edge_faces_[e][face_count[e]++] = static_cast<uint32_t>(f);
            parity[edges_[e].u] ^= 1;
            parity[edges_[e].v] ^= 1;
        }
        bool open = false;
        for (uint32_t e : sorted) {
            open |= parity[edges_[e].u] | parity[edges_[e].v];
            parity[edges_[e].u] = parity[edges_[e].v] = 0;
        }
        if (open) {
            throw TilingError("face " + std::to_string(f) + " is not a closed walk");
        }
    }
    for (size_t e = 0; e < edges_.size(); e++) {
        if (face_count[e] != 2) {
            throw TilingError("edge " + std::to_string(e) + " does not lie on exactly two faces");
        }
    }
    if (euler_characteristic() % 2 != 0) {
        throw TilingError("odd Euler characteristic");
    }
    if (vertex_colors_) {
        if (vertex_colors_->size() != num_vertices_) {
            throw TilingError("vertex color count does not match vertex count");
        }
        for (size_t e = 0; e < edges_.size(); e++) {
            if ((*vertex_colors_)[edges_[e].u] == (*vertex_colors_)[edges_[e].v]) {
                throw TilingError("vertex coloring is not proper on edge " + std::to_string(e));
            }
        }
    }
}

Color SurfaceTiling::edge_color(uint32_t e) const {
    if (!vertex_colors_) {
        throw std::logic_error("tiling has no vertex colors");
    }
    return third_color((*vertex_colors_)[edges_[e].u], (*vertex_colors_)[edges_[e].v]);
}

std::span<const uint32_t> SurfaceTiling::incident_edges(uint32_t v) const {
    return std::span<const uint32_t>(incidence_).subspan(
        incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]);
}

std::span<const TilingEdge> SurfaceTiling::neighbors(uint32_t v) const {
    return std::span<const TilingEdge>(neighbor_list_)
        .subspan(incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]);
}

uint32_t SurfaceTiling::other_endpoint(uint32_t e, uint32_t v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
}

int64_t SurfaceTiling::euler_characteristic() const {
    return static_cast<int64_t>(num_vertices_) - static_cast<int64_t>(edges_.size()) +
           static_cast<int64_t>(faces_.size());
}

bool SurfaceTiling::same_cells(const SurfaceTiling &other) const {
    if (num_vertices_ != other.num_vertices_ || edges_.size() != other.edges_.size() ||
        faces_.size() != other.faces_.size()) {
        return false;
    }
    for (size_t e = 0; e < edges_.size(); e++) {
        auto a = edges_[e];
        auto b = other.edges_[e];
        if (std::minmax(a.u, a.v) != std::minmax(b.u, b.v)) {
            return false;
        }
    }
    for (size_t f = 0; f < faces_.size(); f++) {
        auto a = faces_[f];
        auto b = other.faces_[f];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            return false;
        }
    }
    return true;
}

VertexRotation rotation_around(const SurfaceTiling &t, uint32_t v) {
    auto incident = t.incident_edges(v);
    VertexRotation rot;
    if (incident.empty()) {
        throw TilingError("isolated vertex " + std::to_string(v));
    }
    uint32_t start = *std::min_element(incident.begin(), incident.end());
    uint32_t e = start;
    uint32_t f = t.edge_faces(e)[0];
    do {
        rot.edges.push_back(e);
        rot.faces.push_back(f);
        uint32_t next = UINT32_MAX;
        for (uint32_t g : t.faces()[f]) {
            if (g != e && (t.edges()[g].u == v || t.edges()[g].v == v)) {
                if (next != UINT32_MAX) {
                    throw TilingError("face " + std::to_string(f) + " passes twice through vertex " + std::to_string(v));
                }
                next = g;
            }
        }
        if (next == UINT32_MAX) {
            throw TilingError("face " + std::to_string(f) + " does not close around vertex " + std::to_string(v));
        }
        const auto &nf = t.edge_faces(next);
        f = nf[0] == f ? nf[1] : nf[0];
        e = next;
        if (rot.edges.size() > incident.size()) {
            throw TilingError("rotation around vertex " + std::to_string(v) + " does not close");
        }
    } while (e != start);
    if (rot.edges.size() != incident.size()) {
        throw TilingError("neighborhood of vertex " + std::to_string(v) + " is not a disk");
    }
    return rot;
}

SurfaceTiling cayley_triangular(int r) {
    if (r < 1) {
        throw std::invalid_argument("cayley_triangular requires r >= 1");
    }
    const uint32_t L = static_cast<uint32_t>(3 * r);
    auto index = [L](uint32_t a, uint32_t b) { return (a % L) * L + (b % L); };
    const uint32_t n = L * L;

    std::vector<TilingEdge> edges(3 * n);
    std::vector<Color> colors(n);
    for (uint32_t a = 0; a < L; a++) {
        for (uint32_t b = 0; b < L; b++) {
            uint32_t v = index(a, b);
            std::array<uint32_t, 3> ends = {index(a + 1, b), index(a, b + 1), index(a + 1, b + L - 1)};
            for (uint32_t d = 0; d < 3; d++) {
                edges[3 * v + d] = {std::min(v, ends[d]), std::max(v, ends[d])};
            }
            colors[v] = static_cast<Color>((a + 2 * b) % 3);
        }
    }

    std::vector<std::vector<uint32_t>> faces(2 * n);
    for (uint32_t a = 0; a < L; a++) {
        for (uint32_t b = 0; b < L; b++) {
            uint32_t v = index(a, b);
            uint32_t up_b = index(a, b + 1);
            uint32_t right = index(a + 1, b);
            // Up: (a,b) -> (a+1,b) -> (a,b+1) -> (a,b).
            faces[2 * v] = {3 * v + 0, 3 * up_b + 2, 3 * v + 1};
            // Down: (a+1,b) -> (a+1,b+1) -> (a,b+1) -> (a+1,b).
            faces[2 * v + 1] = {3 * right + 1, 3 * up_b + 0, 3 * up_b + 2};
        }
    }
    return SurfaceTiling(n, std::move(edges), std::move(faces), std::move(colors));
}

SurfaceTiling dual_tiling(const SurfaceTiling &t) {
    std::vector<TilingEdge> edges(t.num_edges());
    for (size_t e = 0; e < t.num_edges(); e++) {
        const auto &ff = t.edge_faces(static_cast<uint32_t>(e));
        edges[e] = {ff[0], ff[1]};
    }
    std::vector<std::vector<uint32_t>> faces(t.num_vertices());
    for (size_t v = 0; v < t.num_vertices(); v++) {
        faces[v] = rotation_around(t, static_cast<uint32_t>(v)).edges;
    }
    try {
        return SurfaceTiling(t.num_faces(), std::move(edges), std::move(faces));
    } catch (const TilingError &ex) {
        throw TilingError(std::string("dual tiling is degenerate: ") + ex.what());
    }
}

Subtiling color_subtiling(const SurfaceTiling &gstar, Color c) {
    if (!gstar.has_colors()) {
        throw std::invalid_argument("color_subtiling requires a vertex-colored tiling");
    }
    Subtiling sub;
    sub.color = c;
    std::vector<int64_t> vertex_index(gstar.num_vertices(), -1);
    std::vector<Color> colors;
    for (uint32_t v = 0; v < gstar.num_vertices(); v++) {
        if (gstar.vertex_color(v) != c) {
            vertex_index[v] = static_cast<int64_t>(sub.parent_vertex.size());
            sub.parent_vertex.push_back(v);
            colors.push_back(gstar.vertex_color(v));
        }
    }
    std::vector<int64_t> edge_index(gstar.num_edges(), -1);
    std::vector<TilingEdge> edges;
    for (uint32_t e = 0; e < gstar.num_edges(); e++) {
        if (gstar.edge_color(e) == c) {
            edge_index[e] = static_cast<int64_t>(sub.parent_edge.size());
            sub.parent_edge.push_back(e);
            const auto &pe = gstar.edges()[e];
            edges.push_back({static_cast<uint32_t>(vertex_index[pe.u]), static_cast<uint32_t>(vertex_index[pe.v])});
        }
    }
    std::vector<std::vector<uint32_t>> faces;
    for (uint32_t v = 0; v < gstar.num_vertices(); v++) {
        if (gstar.vertex_color(v) != c) {
            continue;
        }
        VertexRotation rot = rotation_around(gstar, v);
        std::vector<uint32_t> face;
        for (uint32_t f : rot.faces) {
            const auto &tri = gstar.faces()[f];
            if (tri.size() != 3) {
                throw TilingError("color_subtiling requires a triangulation");
            }
            uint32_t opposite = UINT32_MAX;
            for (uint32_t e : tri) {
                if (gstar.edges()[e].u != v && gstar.edges()[e].v != v) {
                    opposite = e;
                }
            }
            if (opposite == UINT32_MAX || edge_index[opposite] < 0) {
                throw TilingError("triangle around a colored vertex lacks a monochromatic opposite edge");
            }
            face.push_back(static_cast<uint32_t>(edge_index[opposite]));
        }
        faces.push_back(std::move(face));
        sub.face_center.push_back(v);
    }
    try {
        sub.tiling = SurfaceTiling(sub.parent_vertex.size(), std::move(edges), std::move(faces), std::move(colors));
    } catch (const TilingError &ex) {
        throw TilingError(
            std::string("color subtiling is degenerate (shortest non-boundary cycle too short): ") + ex.what());
    }
    return sub;
}

TwoComplex homology_complex(const SurfaceTiling &t) {
    BinaryMatrix d2(t.num_faces(), t.num_edges(), t.faces());
    std::vector<std::vector<uint32_t>> rows(t.num_edges());
    for (size_t e = 0; e < t.num_edges(); e++) {
        rows[e] = {t.edges()[e].u, t.edges()[e].v};
    }
    BinaryMatrix d1(t.num_edges(), t.num_vertices(), std::move(rows));
    return TwoComplex(std::move(d2), std::move(d1));
}

}  // namespace colorproj
