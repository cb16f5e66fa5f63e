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

#ifndef COLORPROJ_BLOSSOM_H
#define COLORPROJ_BLOSSOM_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace colorproj {

struct WeightedEdge {
    uint32_t u;
    uint32_t v;
    int64_t weight;
};

/// Maximum-weight matching on a general graph by Edmonds' primal-dual
/// blossom method, in Galil's O(n^3) formulation.
///
/// With `max_cardinality` set, the result is a maximum-weight matching among
/// the maximum-cardinality ones. After `solve()`, the final dual solution is
/// available through `pair_slack`, which evaluates the reduced cost of any
/// vertex pair (edge of the graph or not). A perfect matching together with
/// a non-negative `pair_slack` on every pair of a larger graph certifies
/// optimality on that larger graph.
///
/// All arithmetic is integral. Slacks are reported doubled.
class BlossomMatcher {
   public:
    BlossomMatcher(size_t num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality);

    /// Start from per-vertex duals (the heaviest incident edge) and a greedy
    /// matching on tight edges instead of the empty matching. Only valid in
    /// max-cardinality mode and requires every edge weight to be even.
    void warm_start();

    /// Returns the mate of every vertex, or -1 for unmatched vertices.
    std::vector<int32_t> solve();

    /// Doubled reduced cost of the pair (u, v) with weight w under the final
    /// duals: y_u + y_v + sum of enclosing blossom duals - w, times two.
    int64_t pair_slack(uint32_t u, uint32_t v, int64_t w) const;

   private:
    int64_t slack(int k) const;
    void collect_leaves(int b, std::vector<int> &out) const;
    void assign_label(int w, int t, int p);
    int scan_blossom(int v, int w);
    void add_blossom(int base, int k);
    void expand_blossom(int b, bool end_stage);
    void augment_blossom(int b, int v);
    void augment_matching(int k);

    int n_;
    bool max_cardinality_;
    std::vector<WeightedEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<int> neighbor_offsets_;
    std::vector<int> neighbor_ends_;

    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> label_end_;
    std::vector<int> in_blossom_;
    std::vector<int> blossom_parent_;
    std::vector<std::vector<int>> blossom_children_;
    std::vector<int> blossom_base_;
    std::vector<std::vector<int>> blossom_endpoints_;
    std::vector<int> best_edge_;
    std::vector<std::vector<int>> blossom_best_edges_;
    std::vector<uint8_t> has_best_edges_;
    std::vector<int> unused_blossoms_;
    std::vector<int64_t> dual_;
    std::vector<uint8_t> allow_edge_;
    std::vector<int> queue_;

    std::vector<int> best_edge_to_;  // scratch for add_blossom
};

}  // namespace colorproj

#endif
