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

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "colorproj/blossom.h"

namespace colorproj {

namespace {

constexpr size_t kCompleteBelow = 32;
constexpr size_t kInitialNeighbors = 8;

struct SubsetSolution {
    std::vector<std::pair<uint32_t, uint32_t>> pairs;  // original indices, first < second
    int64_t total = 0;
};

void add_nearest_candidates(
    const WeightMatrix &w, std::span<const uint32_t> verts, size_t k, std::vector<uint8_t> &flags) {
    const size_t d = verts.size();
    std::vector<uint32_t> order;
    order.reserve(d);
    for (size_t i = 0; i < d; i++) {
        order.clear();
        for (size_t j = 0; j < d; j++) {
            if (j != i) {
                order.push_back(static_cast<uint32_t>(j));
            }
        }
        size_t take = std::min(k, order.size());
        auto closer = [&](uint32_t a, uint32_t b) {
            int64_t wa = w(verts[i], verts[a]);
            int64_t wb = w(verts[i], verts[b]);
            return wa != wb ? wa < wb : a < b;
        };
        std::partial_sort(order.begin(), order.begin() + take, order.end(), closer);
        for (size_t q = 0; q < take; q++) {
            flags[i * d + order[q]] = 1;
            flags[order[q] * d + i] = 1;
        }
    }
}

// Minimum-weight perfect matching on the complete graph over `verts`.
SubsetSolution solve_subset(const WeightMatrix &w, std::span<const uint32_t> verts) {
    const size_t d = verts.size();
    SubsetSolution out;
    if (d == 0) {
        return out;
    }
    if (d == 2) {
        out.pairs.emplace_back(std::min(verts[0], verts[1]), std::max(verts[0], verts[1]));
        out.total = w(verts[0], verts[1]);
        return out;
    }

    int64_t max_w = 0;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = i + 1; j < d; j++) {
            max_w = std::max(max_w, w(verts[i], verts[j]));
        }
    }
    // Maximising sum of 2(C - w) over perfect matchings minimises sum of w.
    // Even weights let the warm start use integral duals.
    const int64_t c = max_w + 1;
    auto gain = [&](size_t i, size_t j) { return 2 * (c - w(verts[i], verts[j])); };

    std::vector<uint8_t> flags(d * d, 0);
    size_t k = kInitialNeighbors;
    if (d <= kCompleteBelow) {
        k = d;
    }
    add_nearest_candidates(w, verts, k, flags);

    std::vector<WeightedEdge> edges;
    while (true) {
        edges.clear();
        for (size_t i = 0; i < d; i++) {
            for (size_t j = i + 1; j < d; j++) {
                if (flags[i * d + j]) {
                    edges.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), gain(i, j)});
                }
            }
        }
        BlossomMatcher matcher(d, edges, true);
        matcher.warm_start();
        std::vector<int32_t> mate = matcher.solve();
        bool perfect = std::none_of(mate.begin(), mate.end(), [](int32_t m) { return m < 0; });
        if (!perfect) {
            if (k >= d) {
                throw std::logic_error("matching: complete graph without a perfect matching");
            }
            k *= 2;
            add_nearest_candidates(w, verts, k, flags);
            continue;
        }

        size_t added = 0;
        for (size_t i = 0; i < d; i++) {
            for (size_t j = i + 1; j < d; j++) {
                if (!flags[i * d + j] &&
                    matcher.pair_slack(static_cast<uint32_t>(i), static_cast<uint32_t>(j), gain(i, j)) < 0) {
                    flags[i * d + j] = 1;
                    flags[j * d + i] = 1;
                    added++;
                }
            }
        }
        if (added > 0) {
            continue;
        }

        for (size_t i = 0; i < d; i++) {
            size_t j = static_cast<size_t>(mate[i]);
            if (i < j) {
                uint32_t a = verts[i];
                uint32_t b = verts[j];
                out.pairs.emplace_back(std::min(a, b), std::max(a, b));
                out.total += w(a, b);
            }
        }
        return out;
    }
}

uint32_t partner_of(const SubsetSolution &sol, uint32_t a) {
    for (const auto &[x, y] : sol.pairs) {
        if (x == a) {
            return y;
        }
        if (y == a) {
            return x;
        }
    }
    throw std::logic_error("matching: vertex missing from solution");
}

}  // namespace

Pairing min_weight_perfect_matching(const WeightMatrix &w, TieBreak tie_break) {
    const size_t n = w.size();
    if (n % 2 != 0) {
        throw std::invalid_argument("min_weight_perfect_matching: odd number of vertices");
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (w(i, j) < 0 || w(i, j) != w(j, i)) {
                throw std::invalid_argument("min_weight_perfect_matching: weights must be symmetric and non-negative");
            }
        }
    }
    std::vector<uint32_t> all(n);
    for (size_t i = 0; i < n; i++) {
        all[i] = static_cast<uint32_t>(i);
    }
    SubsetSolution best = solve_subset(w, all);

    Pairing result;
    result.total_weight = best.total;
    if (tie_break == TieBreak::kAny) {
        result.pairs = std::move(best.pairs);
        std::sort(result.pairs.begin(), result.pairs.end());
        return result;
    }

    // Fix partners greedily: the smallest unmatched vertex takes the smallest
    // partner that still extends to an optimal pairing.
    std::vector<uint32_t> remaining = all;
    int64_t remaining_opt = best.total;
    SubsetSolution current = std::move(best);
    while (!remaining.empty()) {
        uint32_t a = remaining[0];
        uint32_t chosen = partner_of(current, a);
        std::vector<uint32_t> rest;
        for (size_t q = 1; q < remaining.size() && remaining[q] < chosen; q++) {
            uint32_t b = remaining[q];
            rest.clear();
            for (uint32_t v : remaining) {
                if (v != a && v != b) {
                    rest.push_back(v);
                }
            }
            SubsetSolution trial = solve_subset(w, rest);
            if (trial.total + w(a, b) == remaining_opt) {
                chosen = b;
                trial.pairs.emplace_back(a, b);
                current = std::move(trial);
                break;
            }
        }
        result.pairs.emplace_back(a, chosen);
        remaining_opt -= w(a, chosen);
        std::erase_if(remaining, [&](uint32_t v) { return v == a || v == chosen; });
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

ShortestPaths::ShortestPaths(const SurfaceTiling &t) : n_(t.num_vertices()) {
    offsets_.assign(n_ + 1, 0);
    for (uint32_t v = 0; v < n_; v++) {
        auto nb = t.neighbors(v);
        offsets_[v + 1] = offsets_[v] + static_cast<uint32_t>(nb.size());
        adjacency_.insert(adjacency_.end(), nb.begin(), nb.end());
    }
    std::vector<uint32_t> dist(n_);
    std::vector<uint32_t> pred(n_);
    if (n_ > 0) {
        search(0, dist, pred);
        if (std::any_of(dist.begin(), dist.end(), [](uint32_t d) { return d == std::numeric_limits<uint32_t>::max(); })) {
            throw std::invalid_argument("shortest paths: tiling graph is disconnected");
        }
    }
    if (n_ <= kTableLimit) {
        dist_.resize(n_ * n_);
        pred_.resize(n_ * n_);
        for (uint32_t s = 0; s < n_; s++) {
            search(s, dist, pred);
            for (size_t v = 0; v < n_; v++) {
                dist_[s * n_ + v] = static_cast<uint16_t>(dist[v]);
                pred_[s * n_ + v] = pred[v];
            }
        }
    }
}

void ShortestPaths::search(uint32_t source, std::vector<uint32_t> &dist, std::vector<uint32_t> &pred_edge) const {
    constexpr uint32_t kUnseen = std::numeric_limits<uint32_t>::max();
    dist.assign(n_, kUnseen);
    pred_edge.assign(n_, kUnseen);
    std::vector<uint32_t> queue;
    queue.reserve(n_);
    queue.push_back(source);
    dist[source] = 0;
    for (size_t head = 0; head < queue.size(); head++) {
        uint32_t v = queue[head];
        for (uint32_t q = offsets_[v]; q < offsets_[v + 1]; q++) {
            const TilingEdge &nb = adjacency_[q];
            if (dist[nb.u] == kUnseen) {
                dist[nb.u] = dist[v] + 1;
                pred_edge[nb.u] = nb.v;
                queue.push_back(nb.u);
            }
        }
    }
}

uint32_t ShortestPaths::distance(uint32_t a, uint32_t b) const {
    if (a >= n_ || b >= n_) {
        throw std::out_of_range("shortest paths: vertex out of range");
    }
    if (has_tables()) {
        return dist_[static_cast<size_t>(a) * n_ + b];
    }
    std::vector<uint32_t> dist;
    std::vector<uint32_t> pred;
    search(a, dist, pred);
    return dist[b];
}

namespace {

template <typename PredFn>
std::vector<uint32_t> walk_back(uint32_t root, uint32_t target, const std::vector<uint32_t> &offsets,
                                const std::vector<TilingEdge> &adjacency, PredFn pred) {
    std::vector<uint32_t> edges;
    uint32_t v = target;
    while (v != root) {
        uint32_t e = pred(v);
        edges.push_back(e);
        for (uint32_t q = offsets[v]; q < offsets[v + 1]; q++) {
            if (adjacency[q].v == e) {
                v = adjacency[q].u;
                break;
            }
        }
    }
    return edges;
}

}  // namespace

std::vector<uint32_t> ShortestPaths::path(uint32_t a, uint32_t b) const {
    if (a >= n_ || b >= n_) {
        throw std::out_of_range("shortest paths: vertex out of range");
    }
    uint32_t root = std::min(a, b);
    uint32_t target = std::max(a, b);
    if (has_tables()) {
        const uint32_t *row = pred_.data() + static_cast<size_t>(root) * n_;
        return walk_back(root, target, offsets_, adjacency_, [&](uint32_t v) { return row[v]; });
    }
    std::vector<uint32_t> dist;
    std::vector<uint32_t> pred;
    search(root, dist, pred);
    return walk_back(root, target, offsets_, adjacency_, [&](uint32_t v) { return pred[v]; });
}

DefectDistances all_pairs_defect_distances(const ShortestPaths &paths, std::span<const uint32_t> defects) {
    const size_t d = defects.size();
    for (uint32_t v : defects) {
        if (v >= paths.num_vertices()) {
            throw std::out_of_range("defect vertex out of range");
        }
    }
    DefectDistances out;
    out.defects.assign(defects.begin(), defects.end());
    out.weights = WeightMatrix(d);
    if (paths.has_tables()) {
        for (size_t i = 0; i < d; i++) {
            for (size_t j = i + 1; j < d; j++) {
                out.weights.set(i, j, paths.distance(defects[i], defects[j]));
            }
        }
        return out;
    }
    out.pred_edges.resize(d);
    std::vector<uint32_t> dist;
    for (size_t i = 0; i < d; i++) {
        paths.search(defects[i], dist, out.pred_edges[i]);
        for (size_t j = i + 1; j < d; j++) {
            out.weights.set(i, j, dist[defects[j]]);
        }
    }
    return out;
}

DefectDistances all_pairs_defect_distances(const SurfaceTiling &t, std::span<const uint32_t> defects) {
    return all_pairs_defect_distances(ShortestPaths(t), defects);
}

SurfaceDecoder::SurfaceDecoder(const SurfaceTiling &t, TieBreak tie_break)
    : tiling_(t), paths_(t), tie_break_(tie_break) {
}

SurfaceDecoding SurfaceDecoder::decode(const BinaryChain &syndrome) const {
    if (syndrome.dimension() != tiling_.num_vertices()) {
        throw std::invalid_argument("surface decoder: syndrome dimension mismatch");
    }
    const auto &defects = syndrome.support();
    if (defects.size() % 2 != 0) {
        throw std::invalid_argument("surface decoder: odd number of defects");
    }
    DefectDistances dd = all_pairs_defect_distances(paths_, defects);
    SurfaceDecoding out;
    out.pairing = min_weight_perfect_matching(dd.weights, tie_break_);

    std::vector<uint8_t> flips(tiling_.num_edges(), 0);
    for (const auto &[i, j] : out.pairing.pairs) {
        uint32_t a = defects[i];
        uint32_t b = defects[j];
        std::vector<uint32_t> edges;
        if (dd.pred_edges.empty()) {
            edges = paths_.path(a, b);
        } else {
            // Defects are sorted, so defect i has the smaller vertex.
            const auto &pred = dd.pred_edges[i];
            uint32_t v = b;
            while (v != a) {
                uint32_t e = pred[v];
                edges.push_back(e);
                v = tiling_.other_endpoint(e, v);
            }
        }
        for (uint32_t e : edges) {
            flips[e] ^= 1;
        }
    }
    out.correction = BinaryChain::from_indicator(flips);
    return out;
}

BinaryChain decode_surface(const SurfaceTiling &t, const BinaryChain &s) {
    return SurfaceDecoder(t, TieBreak::kLexicographic).decode(s).correction;
}

BinaryChain brute_force_min_chain(const SurfaceTiling &t, const BinaryChain &s) {
    const size_t m = t.num_edges();
    if (m > 20) {
        throw std::invalid_argument("brute_force_min_chain: at most 20 edges supported");
    }
    if (s.dimension() != t.num_vertices()) {
        throw std::invalid_argument("brute_force_min_chain: dimension mismatch");
    }
    const size_t words = (t.num_vertices() + 63) / 64;
    std::vector<uint64_t> target(words, 0);
    for (uint32_t v : s.support()) {
        target[v / 64] ^= uint64_t{1} << (v % 64);
    }
    std::vector<uint64_t> boundary(words, 0);
    uint64_t chosen = 0;
    int best_weight = -1;
    uint64_t best = 0;
    const uint64_t total = uint64_t{1} << m;
    // Gray-code walk: one edge toggles per step.
    for (uint64_t step = 0; step < total; step++) {
        if (step > 0) {
            int e = std::countr_zero(step);
            chosen ^= uint64_t{1} << e;
            for (uint32_t v : {t.edges()[e].u, t.edges()[e].v}) {
                boundary[v / 64] ^= uint64_t{1} << (v % 64);
            }
        }
        int weight = std::popcount(chosen);
        if (boundary == target && (best_weight < 0 || weight < best_weight ||
                                   (weight == best_weight && chosen < best))) {
            best_weight = weight;
            best = chosen;
        }
    }
    if (best_weight < 0) {
        throw std::invalid_argument("brute_force_min_chain: no chain has this boundary");
    }
    std::vector<uint32_t> support;
    for (size_t e = 0; e < m; e++) {
        if ((best >> e) & 1) {
            support.push_back(static_cast<uint32_t>(e));
        }
    }
    return BinaryChain(m, support);
}

}  // namespace colorproj
