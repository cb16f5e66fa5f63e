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

#ifndef COLORPROJ_MATCHING_H
#define COLORPROJ_MATCHING_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "colorproj/gf2.h"
#include "colorproj/tiling.h"

namespace colorproj {

/// Dense symmetric matrix of non-negative integer pair weights.
class WeightMatrix {
   public:
    WeightMatrix() = default;
    explicit WeightMatrix(size_t size) : size_(size), data_(size * size, 0) {
    }

    size_t size() const { return size_; }
    int64_t operator()(size_t i, size_t j) const { return data_[i * size_ + j]; }
    /// Sets both (i, j) and (j, i).
    void set(size_t i, size_t j, int64_t w) {
        data_[i * size_ + j] = w;
        data_[j * size_ + i] = w;
    }

   private:
    size_t size_ = 0;
    std::vector<int64_t> data_;
};

struct Pairing {
    /// Pairs (i, j) with i < j, sorted.
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    int64_t total_weight = 0;
};

enum class TieBreak {
    /// Among all optimal pairings, the one whose sorted pair list is
    /// lexicographically smallest. Costs extra solves.
    kLexicographic,
    /// Some optimal pairing, chosen deterministically.
    kAny,
};

/// Exact minimum-weight perfect matching on the complete graph.
///
/// Solves a sparse nearest-neighbour subgraph first and then certifies the
/// dual solution against every pair, adding violated pairs until the
/// certificate holds; the answer is always optimal on the complete graph.
/// Throws std::invalid_argument on odd size or negative weights.
Pairing min_weight_perfect_matching(const WeightMatrix &w, TieBreak tie_break = TieBreak::kLexicographic);

/// Canonical breadth-first shortest paths on the 1-skeleton of a tiling.
///
/// Neighbours are explored in increasing vertex index and every vertex keeps
/// the edge by which it was first discovered. Small graphs get all-pairs
/// tables at construction; larger ones run one search per query source.
class ShortestPaths {
   public:
    static constexpr size_t kTableLimit = 2048;

    ShortestPaths() = default;
    /// Throws std::invalid_argument if the graph is disconnected.
    explicit ShortestPaths(const SurfaceTiling &t);

    size_t num_vertices() const { return n_; }
    bool has_tables() const { return !dist_.empty(); }

    uint32_t distance(uint32_t a, uint32_t b) const;
    /// Edges of the canonical path between a and b, from the search rooted
    /// at min(a, b).
    std::vector<uint32_t> path(uint32_t a, uint32_t b) const;

    /// BFS from `source` into caller-provided buffers of size num_vertices().
    void search(uint32_t source, std::vector<uint32_t> &dist, std::vector<uint32_t> &pred_edge) const;

   private:
    size_t n_ = 0;
    std::vector<uint32_t> offsets_;
    std::vector<TilingEdge> adjacency_;  // (neighbor, edge), neighbours increasing
    std::vector<uint16_t> dist_;
    std::vector<uint32_t> pred_;
};

/// Distances between defects plus enough data to rebuild canonical paths.
struct DefectDistances {
    std::vector<uint32_t> defects;
    WeightMatrix weights;
    /// Per-defect searches, filled only when the tiling has no tables.
    std::vector<std::vector<uint32_t>> pred_edges;
};

DefectDistances all_pairs_defect_distances(const ShortestPaths &paths, std::span<const uint32_t> defects);
DefectDistances all_pairs_defect_distances(const SurfaceTiling &t, std::span<const uint32_t> defects);

struct SurfaceDecoding {
    BinaryChain correction;  // over edges
    Pairing pairing;         // indices into the syndrome support
};

/// Minimum-weight matching decoder for the surface code of a tiling.
class SurfaceDecoder {
   public:
    SurfaceDecoder() = default;
    explicit SurfaceDecoder(const SurfaceTiling &t, TieBreak tie_break = TieBreak::kAny);

    const SurfaceTiling &tiling() const { return tiling_; }
    const ShortestPaths &paths() const { return paths_; }

    /// Throws std::invalid_argument on odd syndrome weight or dimension mismatch.
    SurfaceDecoding decode(const BinaryChain &syndrome) const;

   private:
    SurfaceTiling tiling_;
    ShortestPaths paths_;
    TieBreak tie_break_ = TieBreak::kAny;
};

/// One-shot decode; the chain returned has boundary s and minimum weight.
BinaryChain decode_surface(const SurfaceTiling &t, const BinaryChain &s);

/// Exhaustive minimum-weight chain with boundary s. Limited to 20 edges.
BinaryChain brute_force_min_chain(const SurfaceTiling &t, const BinaryChain &s);

}  // namespace colorproj

#endif
