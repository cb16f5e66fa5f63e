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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "colorproj/color_code.h"
#include "oracles.h"

using namespace colorproj;

namespace {

BinaryChain embed(const ProjectionTable &t, const BinaryChain &b, size_t parent_edges) {
    std::vector<uint32_t> toggles;
    for (uint32_t e : b.support()) {
        toggles.push_back(t.subtiling.parent_edge[e]);
    }
    return BinaryChain::from_toggles(parent_edges, toggles);
}

}  // namespace

TEST(projection, syndrome_examples) {
    ColorCode code = build_color_code(1);
    const ProjectionTable &red = code.projection(Color::kRed);
    const auto &tri = code.hypergraph.hyperedges[0];
    std::vector<uint32_t> all(tri.begin(), tri.end());
    std::sort(all.begin(), all.end());
    BinaryChain s(9, all);
    BinaryChain projected = project_syndrome(red, s);
    std::vector<uint32_t> expected = {uint32_t(red.vertex_map[tri[1]]), uint32_t(red.vertex_map[tri[2]])};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(projected, BinaryChain(6, expected));
    EXPECT_TRUE(project_syndrome(red, BinaryChain(9, {tri[0]})).is_zero());
    EXPECT_TRUE(project_syndrome(red, BinaryChain(9)).is_zero());
}

TEST(projection, vertex_map_is_injective_on_other_colors) {
    ColorCode code = build_color_code(2);
    for (Color c : kColors) {
        const ProjectionTable &t = code.projection(c);
        std::vector<int> hits(t.subtiling.tiling.num_vertices(), 0);
        for (uint32_t v = 0; v < t.num_vertices(); v++) {
            bool dropped = code.hypergraph.vertex_colors[v] == c;
            EXPECT_EQ(t.vertex_map[v] < 0, dropped);
            if (!dropped) {
                hits[t.vertex_map[v]]++;
            }
        }
        for (int h : hits) {
            EXPECT_EQ(h, 1);
        }
    }
}

TEST(projection, edge_map_is_two_to_one_and_pairs_cancel) {
    ColorCode code = build_color_code(1);
    for (Color c : kColors) {
        const ProjectionTable &t = code.projection(c);
        std::vector<std::vector<uint32_t>> pre(t.subtiling.tiling.num_edges());
        for (uint32_t e = 0; e < t.num_hyperedges(); e++) {
            pre[t.edge_map[e]].push_back(e);
        }
        for (size_t i = 0; i < pre.size(); i++) {
            ASSERT_EQ(pre[i].size(), 2u);
            EXPECT_TRUE(project_error(t, BinaryChain(t.num_hyperedges(), pre[i])).is_zero());
            // The single hyperedge maps to the edge joining its other two vertices.
            const auto &tri = code.hypergraph.hyperedges[pre[i][0]];
            const auto &edge = t.subtiling.tiling.edges()[i];
            std::set<uint32_t> ends = {t.subtiling.parent_vertex[edge.u], t.subtiling.parent_vertex[edge.v]};
            std::set<uint32_t> others;
            for (size_t k = 0; k < 3; k++) {
                if (kColors[k] != c) {
                    others.insert(tri[k]);
                }
            }
            EXPECT_EQ(ends, others);
        }
    }
}

TEST(projection, stabilizer_images) {
    ColorCode code = build_color_code(1);
    for (Color c : kColors) {
        const ProjectionTable &t = code.projection(c);
        BinaryChain total(t.subtiling.tiling.num_edges());
        for (uint32_t f = 0; f < t.num_hyperfaces(); f++) {
            BinaryChain img = project_stabilizer(t, f);
            if (code.hypergraph.vertex_colors[f] == c) {
                EXPECT_EQ(img.weight(), 6u);
                for (uint32_t e : img.support()) {
                    EXPECT_EQ(code.gstar.edge_color(t.subtiling.parent_edge[e]), c);
                }
            } else {
                EXPECT_TRUE(img.is_zero());
            }
            total += img;
        }
        EXPECT_TRUE(total.is_zero());
    }
}

TEST(projection, morphism_squares_commute) {
    for (int r = 1; r <= 3; r++) {
        ColorCode code = build_color_code(r);
        for (Color c : kColors) {
            const ProjectionTable &t = code.projection(c);
            TwoComplex sub = homology_complex(t.subtiling.tiling);
            for (uint32_t e = 0; e < t.num_hyperedges(); e++) {
                BinaryChain x(t.num_hyperedges(), {e});
                ASSERT_EQ(syndrome(sub, project_error(t, x)), project_syndrome(t, color_syndrome(code, x)));
            }
            for (uint32_t f = 0; f < t.num_hyperfaces(); f++) {
                BinaryChain face(t.num_hyperfaces(), {f});
                BinaryChain lhs = sub.d2().combine_rows(project_faces(t, face));
                BinaryChain rhs = project_error(t, code.complex.d2().combine_rows(face));
                ASSERT_EQ(lhs, rhs);
                ASSERT_EQ(lhs, project_stabilizer(t, f));
            }
        }
    }
}

TEST(projection, projected_syndrome_of_random_errors) {
    ColorCode code = build_color_code(2);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; it++) {
        BinaryChain x = oracle::random_chain(code.css.n, 0.15, rng);
        for (Color c : kColors) {
            const ProjectionTable &t = code.projection(c);
            EXPECT_EQ(project_syndrome(t, color_syndrome(code, x)),
                      syndrome(homology_complex(t.subtiling.tiling), project_error(t, x)));
        }
    }
}

TEST(projection, recombination_equals_face_boundary) {
    for (int r = 1; r <= 2; r++) {
        ColorCode code = build_color_code(r);
        TwoComplex gstar = homology_complex(code.gstar);
        size_t n = code.css.n;
        auto check = [&](const BinaryChain &x) {
            std::array<BinaryChain, 3> parts;
            BinaryChain summed(code.gstar.num_edges());
            for (size_t c = 0; c < 3; c++) {
                parts[c] = project_error(code.projections[c], x);
                summed += embed(code.projections[c], parts[c], code.gstar.num_edges());
            }
            BinaryChain expected = gstar.d2().combine_rows(x);
            EXPECT_EQ(recombine(code.projections, parts), expected);
            EXPECT_EQ(summed, expected);
        };
        for (uint32_t a = 0; a < n; a++) {
            check(BinaryChain(n, {a}));
            for (uint32_t b = a + 1; b < n; b++) {
                check(BinaryChain(n, {a, b}));
            }
        }
        std::mt19937_64 rng(r);
        for (int it = 0; it < 200; it++) {
            check(oracle::random_chain(n, 0.3, rng));
        }
    }
}

TEST(projection, recombine_basic) {
    ColorCode code = build_color_code(1);
    std::array<BinaryChain, 3> parts = {BinaryChain(9), BinaryChain(9), BinaryChain(9)};
    EXPECT_TRUE(recombine(code.projections, parts).is_zero());
    parts[0] = BinaryChain(9, {4});
    BinaryChain one = recombine(code.projections, parts);
    EXPECT_EQ(one, BinaryChain(27, {code.projections[0].subtiling.parent_edge[4]}));
    parts[1] = BinaryChain(9, {0, 1});
    EXPECT_EQ(recombine(code.projections, parts).weight(), 3u);
    EXPECT_THROW(recombine(code.projections, {BinaryChain(8), BinaryChain(9), BinaryChain(9)}), std::invalid_argument);
}

TEST(projection, kernel_of_combined_projection_is_all_or_nothing) {
    for (int r = 1; r <= 2; r++) {
        ColorCode code = build_color_code(r);
        size_t n = code.css.n;
        // Column e of the stacked matrix is the embedded projection of e.
        std::vector<std::vector<uint32_t>> rows(n);
        for (uint32_t e = 0; e < n; e++) {
            BinaryChain img(code.gstar.num_edges());
            for (size_t c = 0; c < 3; c++) {
                img += embed(code.projections[c], project_error(code.projections[c], BinaryChain(n, {e})),
                             code.gstar.num_edges());
            }
            rows[e] = img.support();
        }
        BinaryMatrix stacked(n, code.gstar.num_edges(), rows);
        EXPECT_EQ(rank(stacked), n - 1);
        std::array<BinaryChain, 3> parts;
        for (size_t c = 0; c < 3; c++) {
            parts[c] = project_error(code.projections[c], BinaryChain::full(n));
            EXPECT_TRUE(parts[c].is_zero());
        }
    }
}

TEST(projection, same_color_edges_share_no_triangle) {
    for (int r = 1; r <= 3; r++) {
        SurfaceTiling t = cayley_triangular(r);
        for (const auto &face : t.faces()) {
            std::set<Color> colors;
            for (uint32_t e : face) {
                colors.insert(t.edge_color(e));
            }
            EXPECT_EQ(colors.size(), 3u);
        }
    }
}
