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

#include "colorproj/matching.h"

#include <gtest/gtest.h>

#include <random>

#include "colorproj/blossom.h"
#include "colorproj/color_code.h"
#include "oracles.h"

using namespace colorproj;

namespace {

std::vector<std::vector<int64_t>> random_weights(size_t n, int64_t max_w, std::mt19937_64 &rng) {
    std::vector<std::vector<int64_t>> w(n, std::vector<int64_t>(n, 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            w[i][j] = w[j][i] = int64_t(rng() % uint64_t(max_w + 1));
        }
    }
    return w;
}

WeightMatrix to_matrix(const std::vector<std::vector<int64_t>> &w) {
    WeightMatrix m(w.size());
    for (size_t i = 0; i < w.size(); i++) {
        for (size_t j = i + 1; j < w.size(); j++) {
            m.set(i, j, w[i][j]);
        }
    }
    return m;
}

void expect_perfect(const Pairing &p, size_t n, const std::vector<std::vector<int64_t>> &w) {
    std::vector<int> seen(n, 0);
    int64_t total = 0;
    for (auto [a, b] : p.pairs) {
        EXPECT_LT(a, b);
        seen[a]++;
        seen[b]++;
        total += w[a][b];
    }
    for (int s : seen) {
        EXPECT_EQ(s, 1);
    }
    EXPECT_EQ(total, p.total_weight);
}

}  // namespace

TEST(blossom, max_weight_matching_small_graphs) {
    // Maximum-weight (not necessarily perfect) matching on sparse graphs,
    // checked against enumeration of all matchings.
    std::mt19937_64 rng(17);
    for (int it = 0; it < 300; it++) {
        uint32_t n = 2 + uint32_t(rng() % 7);
        std::vector<WeightedEdge> edges;
        for (uint32_t i = 0; i < n; i++) {
            for (uint32_t j = i + 1; j < n; j++) {
                if (rng() % 2) {
                    edges.push_back({i, j, int64_t(rng() % 10)});
                }
            }
        }
        BlossomMatcher m(n, edges, false);
        auto mate = m.solve();
        int64_t got = 0;
        for (const auto &e : edges) {
            if (mate[e.u] == int32_t(e.v)) {
                got += e.weight;
            }
        }
        int64_t best = 0;
        for (uint64_t mask = 0; mask < (uint64_t{1} << edges.size()); mask++) {
            std::vector<int> used(n, 0);
            int64_t s = 0;
            bool ok = true;
            for (size_t k = 0; k < edges.size() && ok; k++) {
                if ((mask >> k) & 1) {
                    ok = !used[edges[k].u] && !used[edges[k].v];
                    used[edges[k].u] = used[edges[k].v] = 1;
                    s += edges[k].weight;
                }
            }
            if (ok) {
                best = std::max(best, s);
            }
        }
        EXPECT_EQ(got, best) << "iteration " << it;
    }
}

TEST(min_weight_perfect_matching, trivial_examples) {
    WeightMatrix two(2);
    two.set(0, 1, 5);
    Pairing p = min_weight_perfect_matching(two);
    ASSERT_EQ(p.pairs.size(), 1u);
    EXPECT_EQ(p.pairs[0], std::make_pair(0u, 1u));
    EXPECT_EQ(p.total_weight, 5);

    WeightMatrix four(4);
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = i + 1; j < 4; j++) {
            four.set(i, j, 10);
        }
    }
    four.set(0, 1, 1);
    four.set(2, 3, 1);
    p = min_weight_perfect_matching(four);
    EXPECT_EQ(p.total_weight, 2);
    EXPECT_EQ(p.pairs, (std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {2, 3}}));

    EXPECT_TRUE(min_weight_perfect_matching(WeightMatrix(0)).pairs.empty());
    EXPECT_THROW(min_weight_perfect_matching(WeightMatrix(3)), std::invalid_argument);
    WeightMatrix neg(2);
    neg.set(0, 1, -1);
    EXPECT_THROW(min_weight_perfect_matching(neg), std::invalid_argument);
}

TEST(min_weight_perfect_matching, matches_exhaustive_on_random_instances) {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 1500; it++) {
        size_t n = 2 * (1 + rng() % 5);
        auto w = random_weights(n, it % 3 == 0 ? 3 : 40, rng);
        int64_t best = oracle::exhaustive_min_pairing(w);
        for (TieBreak tb : {TieBreak::kAny, TieBreak::kLexicographic}) {
            Pairing p = min_weight_perfect_matching(to_matrix(w), tb);
            EXPECT_EQ(p.total_weight, best);
            expect_perfect(p, n, w);
        }
    }
}

TEST(min_weight_perfect_matching, lexicographic_tie_break) {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 400; it++) {
        size_t n = 2 * (1 + rng() % 5);
        auto w = random_weights(n, 2, rng);
        Pairing p = min_weight_perfect_matching(to_matrix(w), TieBreak::kLexicographic);
        EXPECT_EQ(p.pairs, oracle::exhaustive_lex_min_pairing(w)) << "iteration " << it;
    }
}

TEST(min_weight_perfect_matching, sparse_start_is_exact_on_large_instances) {
    // Above the complete-graph cutoff the solver starts from a nearest
    // neighbour subgraph. Compare against a plain solve on the full graph.
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; it++) {
        size_t n = 40 + 2 * (rng() % 30);
        std::vector<std::pair<int, int>> pts(n);
        for (auto &pt : pts) {
            pt = {int(rng() % 30), int(rng() % 30)};
        }
        WeightMatrix w(n);
        std::vector<WeightedEdge> edges;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                int64_t d = std::abs(pts[i].first - pts[j].first) + std::abs(pts[i].second - pts[j].second);
                w.set(i, j, d);
                edges.push_back({uint32_t(i), uint32_t(j), 100 - d});
            }
        }
        BlossomMatcher full(n, edges, true);
        auto mate = full.solve();
        int64_t expected = 0;
        for (size_t i = 0; i < n; i++) {
            if (size_t(mate[i]) > i) {
                expected += w(i, size_t(mate[i]));
            }
        }
        EXPECT_EQ(min_weight_perfect_matching(w, TieBreak::kAny).total_weight, expected);
    }
}

TEST(shortest_paths, distances_and_paths) {
    SurfaceTiling red = color_subtiling(cayley_triangular(1), Color::kRed).tiling;
    ShortestPaths sp(red);
    auto floyd = oracle::floyd_distances(red);
    for (uint32_t a = 0; a < red.num_vertices(); a++) {
        EXPECT_EQ(sp.distance(a, a), 0u);
        for (uint32_t b = 0; b < red.num_vertices(); b++) {
            EXPECT_EQ(int64_t(sp.distance(a, b)), floyd[a][b]);
            auto path = sp.path(a, b);
            EXPECT_EQ(path.size(), sp.distance(a, b));
            BinaryChain chain = BinaryChain::from_toggles(red.num_edges(), path);
            BinaryChain ends = a == b ? BinaryChain(red.num_vertices())
                                      : BinaryChain(red.num_vertices(), {std::min(a, b), std::max(a, b)});
            EXPECT_EQ(syndrome(homology_complex(red), chain), ends);
        }
    }
    // Adjacent vertices are at distance 1; the farthest pair on this
    // 6-vertex cubic graph is at distance 2.
    EXPECT_EQ(sp.distance(red.edges()[0].u, red.edges()[0].v), 1u);
    uint32_t diameter = 0;
    for (uint32_t a = 0; a < 6; a++) {
        for (uint32_t b = 0; b < 6; b++) {
            diameter = std::max(diameter, sp.distance(a, b));
        }
    }
    EXPECT_EQ(diameter, 2u);
}

TEST(shortest_paths, canonical_bfs_predecessor) {
    // Reference search: FIFO queue, neighbours scanned in increasing index,
    // each vertex remembers the vertex that discovered it.
    SurfaceTiling t = cayley_triangular(2);
    ShortestPaths sp(t);
    for (uint32_t root : {0u, 7u, 20u}) {
        std::vector<int> parent(t.num_vertices(), -1);
        std::vector<uint8_t> seen(t.num_vertices(), 0);
        std::vector<uint32_t> queue = {root};
        seen[root] = 1;
        for (size_t h = 0; h < queue.size(); h++) {
            std::vector<uint32_t> nbs;
            for (const auto &e : t.edges()) {
                if (e.u == queue[h]) {
                    nbs.push_back(e.v);
                } else if (e.v == queue[h]) {
                    nbs.push_back(e.u);
                }
            }
            std::sort(nbs.begin(), nbs.end());
            for (uint32_t w : nbs) {
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = int(queue[h]);
                    queue.push_back(w);
                }
            }
        }
        for (uint32_t v = root + 1; v < t.num_vertices(); v++) {
            std::vector<uint32_t> walk;
            for (uint32_t x = v; x != root; x = uint32_t(parent[x])) {
                walk.push_back(x);
            }
            walk.push_back(root);
            auto path = sp.path(root, v);
            ASSERT_EQ(path.size() + 1, walk.size());
            for (size_t i = 0; i < path.size(); i++) {
                const auto &e = t.edges()[path[i]];
                EXPECT_EQ(std::min(e.u, e.v), std::min(walk[i], walk[i + 1]));
                EXPECT_EQ(std::max(e.u, e.v), std::max(walk[i], walk[i + 1]));
            }
        }
    }
}

TEST(defect_distances, table_and_search_paths_agree) {
    SurfaceTiling t = color_subtiling(cayley_triangular(3), Color::kGreen).tiling;
    std::vector<uint32_t> defects = {0, 5, 17, 40};
    DefectDistances dd = all_pairs_defect_distances(t, defects);
    auto floyd = oracle::floyd_distances(t);
    for (size_t i = 0; i < defects.size(); i++) {
        for (size_t j = 0; j < defects.size(); j++) {
            EXPECT_EQ(dd.weights(i, j), floyd[defects[i]][defects[j]]);
        }
    }
    EXPECT_THROW(all_pairs_defect_distances(t, std::vector<uint32_t>{1000}), std::out_of_range);
}

TEST(shortest_paths, rejects_disconnected_graph) {
    // Two disjoint triangulated tori side by side.
    SurfaceTiling a = cayley_triangular(1);
    std::vector<TilingEdge> edges = a.edges();
    std::vector<std::vector<uint32_t>> faces = a.faces();
    for (const auto &e : a.edges()) {
        edges.push_back({e.u + 9, e.v + 9});
    }
    for (const auto &f : a.faces()) {
        std::vector<uint32_t> g;
        for (uint32_t e : f) {
            g.push_back(e + 27);
        }
        faces.push_back(g);
    }
    SurfaceTiling two(18, edges, faces);
    EXPECT_THROW(ShortestPaths{two}, std::invalid_argument);
}

TEST(decode_surface, examples) {
    SurfaceTiling red = color_subtiling(cayley_triangular(1), Color::kRed).tiling;
    EXPECT_TRUE(decode_surface(red, BinaryChain(6)).is_zero());
    for (uint32_t e = 0; e < red.num_edges(); e++) {
        const auto &edge = red.edges()[e];
        BinaryChain s(6, {std::min(edge.u, edge.v), std::max(edge.u, edge.v)});
        EXPECT_EQ(decode_surface(red, s), BinaryChain(9, {e}));
        EXPECT_EQ(brute_force_min_chain(red, s), BinaryChain(9, {e}));
    }
    EXPECT_THROW(decode_surface(red, BinaryChain(6, {0})), std::invalid_argument);
    EXPECT_TRUE(brute_force_min_chain(red, BinaryChain(6)).is_zero());
    EXPECT_THROW(brute_force_min_chain(cayley_triangular(1), BinaryChain(9)), std::invalid_argument);
}

TEST(decode_surface, optimal_on_every_error_pattern_of_smallest_subtiling) {
    for (Color c : kColors) {
        SurfaceTiling t = color_subtiling(cayley_triangular(1), c).tiling;
        TwoComplex cx = homology_complex(t);
        for (uint32_t mask = 0; mask < 512; mask++) {
            std::vector<uint8_t> bits(9);
            for (size_t i = 0; i < 9; i++) {
                bits[i] = (mask >> i) & 1;
            }
            BinaryChain s = syndrome(cx, BinaryChain::from_indicator(bits));
            BinaryChain b = decode_surface(t, s);
            EXPECT_EQ(syndrome(cx, b), s);
            EXPECT_EQ(b.weight(), brute_force_min_chain(t, s).weight()) << "mask " << mask;
        }
    }
}

TEST(decode_surface, boundary_correct_and_deterministic_on_larger_codes) {
    std::mt19937_64 rng(37);
    for (int r : {2, 4}) {
        SurfaceTiling t = color_subtiling(cayley_triangular(r), Color::kBlue).tiling;
        TwoComplex cx = homology_complex(t);
        SurfaceDecoder dec(t);
        for (int it = 0; it < 100; it++) {
            BinaryChain x = oracle::random_chain(t.num_edges(), 0.12, rng);
            BinaryChain s = syndrome(cx, x);
            SurfaceDecoding d = dec.decode(s);
            EXPECT_EQ(syndrome(cx, d.correction), s);
            EXPECT_LE(int64_t(d.correction.weight()), d.pairing.total_weight);
            EXPECT_EQ(dec.decode(s).correction, d.correction);
        }
    }
}
