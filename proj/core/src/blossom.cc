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

#include "colorproj/blossom.h"

#include <algorithm>
#include <stdexcept>

namespace colorproj {

namespace {

// Index with Python-style wraparound for negative positions.
template <typename T>
T &wrap_at(std::vector<T> &v, int j) {
    return v[static_cast<size_t>(j < 0 ? j + static_cast<int>(v.size()) : j)];
}

int position_of(const std::vector<int> &v, int x) {
    return static_cast<int>(std::find(v.begin(), v.end(), x) - v.begin());
}

}  // namespace

BlossomMatcher::BlossomMatcher(size_t num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality)
    : n_(static_cast<int>(num_vertices)), max_cardinality_(max_cardinality), edges_(edges.begin(), edges.end()) {
    const int m = static_cast<int>(edges_.size());
    endpoint_.resize(2 * m);
    std::vector<int> degree(n_ + 1, 0);
    int64_t max_weight = 0;
    for (int k = 0; k < m; k++) {
        const auto &e = edges_[k];
        if (e.u == e.v || e.u >= num_vertices || e.v >= num_vertices) {
            throw std::invalid_argument("blossom matcher: bad edge");
        }
        endpoint_[2 * k] = static_cast<int>(e.u);
        endpoint_[2 * k + 1] = static_cast<int>(e.v);
        degree[e.u + 1]++;
        degree[e.v + 1]++;
        max_weight = std::max(max_weight, e.weight);
    }
    neighbor_offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; v++) {
        neighbor_offsets_[v + 1] = neighbor_offsets_[v] + degree[v + 1];
    }
    neighbor_ends_.resize(2 * m);
    std::vector<int> fill(neighbor_offsets_.begin(), neighbor_offsets_.end() - 1);
    for (int k = 0; k < m; k++) {
        neighbor_ends_[fill[edges_[k].u]++] = 2 * k + 1;
        neighbor_ends_[fill[edges_[k].v]++] = 2 * k;
    }

    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    label_end_.assign(2 * n_, -1);
    in_blossom_.resize(n_);
    for (int v = 0; v < n_; v++) {
        in_blossom_[v] = v;
    }
    blossom_parent_.assign(2 * n_, -1);
    blossom_children_.assign(2 * n_, {});
    blossom_base_.assign(2 * n_, -1);
    for (int v = 0; v < n_; v++) {
        blossom_base_[v] = v;
    }
    blossom_endpoints_.assign(2 * n_, {});
    best_edge_.assign(2 * n_, -1);
    blossom_best_edges_.assign(2 * n_, {});
    has_best_edges_.assign(2 * n_, 0);
    for (int b = n_; b < 2 * n_; b++) {
        unused_blossoms_.push_back(b);
    }
    dual_.assign(2 * n_, 0);
    for (int v = 0; v < n_; v++) {
        dual_[v] = max_weight;
    }
    allow_edge_.assign(m, 0);
    best_edge_to_.assign(2 * n_, -1);
}

void BlossomMatcher::warm_start() {
    if (!max_cardinality_) {
        throw std::logic_error("warm_start requires max-cardinality mode");
    }
    std::vector<int64_t> best(n_, 0);
    std::vector<uint8_t> seen(n_, 0);
    for (const auto &e : edges_) {
        if (e.weight % 2 != 0) {
            throw std::invalid_argument("warm_start requires even edge weights");
        }
        for (uint32_t x : {e.u, e.v}) {
            if (!seen[x] || e.weight > best[x]) {
                best[x] = e.weight;
                seen[x] = 1;
            }
        }
    }
    for (int v = 0; v < n_; v++) {
        dual_[v] = best[v];
    }
    for (int k = 0; k < static_cast<int>(edges_.size()); k++) {
        int u = static_cast<int>(edges_[k].u);
        int v = static_cast<int>(edges_[k].v);
        if (mate_[u] == -1 && mate_[v] == -1 && slack(k) == 0) {
            mate_[u] = 2 * k + 1;
            mate_[v] = 2 * k;
        }
    }
}

int64_t BlossomMatcher::slack(int k) const {
    const auto &e = edges_[k];
    return dual_[e.u] + dual_[e.v] - 2 * e.weight;
}

void BlossomMatcher::collect_leaves(int b, std::vector<int> &out) const {
    if (b < n_) {
        out.push_back(b);
        return;
    }
    for (int t : blossom_children_[b]) {
        collect_leaves(t, out);
    }
}

void BlossomMatcher::assign_label(int w, int t, int p) {
    int b = in_blossom_[w];
    label_[w] = label_[b] = t;
    label_end_[w] = label_end_[b] = p;
    best_edge_[w] = best_edge_[b] = -1;
    if (t == 1) {
        collect_leaves(b, queue_);
    } else if (t == 2) {
        int base = blossom_base_[b];
        assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
}

// Trace back from v and w to find either a new blossom's base or an
// augmenting path. Returns the base, or -1 when the roots differ.
int BlossomMatcher::scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
        int b = in_blossom_[v];
        if (label_[b] & 4) {
            base = blossom_base_[b];
            break;
        }
        path.push_back(b);
        label_[b] = 5;
        if (label_end_[b] == -1) {
            v = -1;
        } else {
            v = endpoint_[label_end_[b]];
            b = in_blossom_[v];
            v = endpoint_[label_end_[b]];
        }
        if (w != -1) {
            std::swap(v, w);
        }
    }
    for (int b : path) {
        label_[b] = 1;
    }
    return base;
}

void BlossomMatcher::add_blossom(int base, int k) {
    int v = static_cast<int>(edges_[k].u);
    int w = static_cast<int>(edges_[k].v);
    int bb = in_blossom_[base];
    int bv = in_blossom_[v];
    int bw = in_blossom_[w];
    int b = unused_blossoms_.back();
    unused_blossoms_.pop_back();
    blossom_base_[b] = base;
    blossom_parent_[b] = -1;
    blossom_parent_[bb] = b;
    auto &path = blossom_children_[b];
    auto &endps = blossom_endpoints_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
        blossom_parent_[bv] = b;
        path.push_back(bv);
        endps.push_back(label_end_[bv]);
        v = endpoint_[label_end_[bv]];
        bv = in_blossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        blossom_parent_[bw] = b;
        path.push_back(bw);
        endps.push_back(label_end_[bw] ^ 1);
        w = endpoint_[label_end_[bw]];
        bw = in_blossom_[w];
    }
    label_[b] = 1;
    label_end_[b] = label_end_[bb];
    dual_[b] = 0;

    std::vector<int> leaves;
    collect_leaves(b, leaves);
    for (int x : leaves) {
        if (label_[in_blossom_[x]] == 2) {
            queue_.push_back(x);
        }
        in_blossom_[x] = b;
    }

    // Least-slack edges from the new blossom to each neighbouring S-blossom.
    std::vector<int> touched;
    auto consider = [&](int kk) {
        int i = static_cast<int>(edges_[kk].u);
        int j = static_cast<int>(edges_[kk].v);
        if (in_blossom_[j] == b) {
            std::swap(i, j);
        }
        int bj = in_blossom_[j];
        if (bj != b && label_[bj] == 1) {
            if (best_edge_to_[bj] == -1) {
                touched.push_back(bj);
                best_edge_to_[bj] = kk;
            } else if (slack(kk) < slack(best_edge_to_[bj])) {
                best_edge_to_[bj] = kk;
            }
        }
    };
    for (int sub : path) {
        if (!has_best_edges_[sub]) {
            std::vector<int> sub_leaves;
            collect_leaves(sub, sub_leaves);
            for (int x : sub_leaves) {
                for (int q = neighbor_offsets_[x]; q < neighbor_offsets_[x + 1]; q++) {
                    consider(neighbor_ends_[q] / 2);
                }
            }
        } else {
            for (int kk : blossom_best_edges_[sub]) {
                consider(kk);
            }
        }
        blossom_best_edges_[sub].clear();
        has_best_edges_[sub] = 0;
        best_edge_[sub] = -1;
    }
    std::sort(touched.begin(), touched.end());
    auto &best_list = blossom_best_edges_[b];
    best_list.clear();
    for (int bj : touched) {
        best_list.push_back(best_edge_to_[bj]);
        best_edge_to_[bj] = -1;
    }
    has_best_edges_[b] = 1;
    best_edge_[b] = -1;
    for (int kk : best_list) {
        if (best_edge_[b] == -1 || slack(kk) < slack(best_edge_[b])) {
            best_edge_[b] = kk;
        }
    }
}

void BlossomMatcher::expand_blossom(int b, bool end_stage) {
    const std::vector<int> children = blossom_children_[b];
    for (int s : children) {
        blossom_parent_[s] = -1;
        if (s < n_) {
            in_blossom_[s] = s;
        } else if (end_stage && dual_[s] == 0) {
            expand_blossom(s, end_stage);
        } else {
            std::vector<int> leaves;
            collect_leaves(s, leaves);
            for (int x : leaves) {
                in_blossom_[x] = s;
            }
        }
    }

    if (!end_stage && label_[b] == 2) {
        // Relabel the sub-blossoms on the even-length path from the entry
        // child to the base; the rest become unlabeled or T.
        auto &childs = blossom_children_[b];
        auto &endps = blossom_endpoints_[b];
        int entry_child = in_blossom_[endpoint_[label_end_[b] ^ 1]];
        int j = position_of(childs, entry_child);
        int jstep;
        int endptrick;
        if (j & 1) {
            j -= static_cast<int>(childs.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        int p = label_end_[b];
        while (j != 0) {
            label_[endpoint_[p ^ 1]] = 0;
            label_[endpoint_[wrap_at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
            assign_label(endpoint_[p ^ 1], 2, p);
            allow_edge_[wrap_at(endps, j - endptrick) / 2] = 1;
            j += jstep;
            p = wrap_at(endps, j - endptrick) ^ endptrick;
            allow_edge_[p / 2] = 1;
            j += jstep;
        }
        int bv = wrap_at(childs, j);
        label_[endpoint_[p ^ 1]] = label_[bv] = 2;
        label_end_[endpoint_[p ^ 1]] = label_end_[bv] = p;
        best_edge_[bv] = -1;
        j += jstep;
        while (wrap_at(childs, j) != entry_child) {
            bv = wrap_at(childs, j);
            if (label_[bv] == 1) {
                j += jstep;
                continue;
            }
            std::vector<int> leaves;
            collect_leaves(bv, leaves);
            int v = leaves.back();
            for (int x : leaves) {
                if (label_[x] != 0) {
                    v = x;
                    break;
                }
            }
            if (label_[v] != 0) {
                label_[v] = 0;
                label_[endpoint_[mate_[blossom_base_[bv]]]] = 0;
                assign_label(v, 2, label_end_[v]);
            }
            j += jstep;
        }
    }

    label_[b] = label_end_[b] = -1;
    blossom_children_[b].clear();
    blossom_endpoints_[b].clear();
    blossom_base_[b] = -1;
    blossom_best_edges_[b].clear();
    has_best_edges_[b] = 0;
    best_edge_[b] = -1;
    unused_blossoms_.push_back(b);
}

// Swap matched/unmatched edges along the even path inside b from v to the
// base, then rotate b so that v becomes its base.
void BlossomMatcher::augment_blossom(int b, int v) {
    int t = v;
    while (blossom_parent_[t] != b) {
        t = blossom_parent_[t];
    }
    if (t >= n_) {
        augment_blossom(t, v);
    }
    auto &childs = blossom_children_[b];
    auto &endps = blossom_endpoints_[b];
    int i = position_of(childs, t);
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
        j -= static_cast<int>(childs.size());
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    while (j != 0) {
        j += jstep;
        t = wrap_at(childs, j);
        int p = wrap_at(endps, j - endptrick) ^ endptrick;
        if (t >= n_) {
            augment_blossom(t, endpoint_[p]);
        }
        j += jstep;
        t = wrap_at(childs, j);
        if (t >= n_) {
            augment_blossom(t, endpoint_[p ^ 1]);
        }
        mate_[endpoint_[p]] = p ^ 1;
        mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossom_base_[b] = blossom_base_[childs[0]];
}

void BlossomMatcher::augment_matching(int k) {
    int v = static_cast<int>(edges_[k].u);
    int w = static_cast<int>(edges_[k].v);
    for (auto [s, p] : {std::pair<int, int>{v, 2 * k + 1}, std::pair<int, int>{w, 2 * k}}) {
        while (true) {
            int bs = in_blossom_[s];
            if (bs >= n_) {
                augment_blossom(bs, s);
            }
            mate_[s] = p;
            if (label_end_[bs] == -1) {
                break;
            }
            int t = endpoint_[label_end_[bs]];
            int bt = in_blossom_[t];
            s = endpoint_[label_end_[bt]];
            int j = endpoint_[label_end_[bt] ^ 1];
            if (bt >= n_) {
                augment_blossom(bt, j);
            }
            mate_[j] = label_end_[bt];
            p = label_end_[bt] ^ 1;
        }
    }
}

std::vector<int32_t> BlossomMatcher::solve() {
    const int m = static_cast<int>(edges_.size());
    for (int stage = 0; stage < n_; stage++) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(best_edge_.begin(), best_edge_.end(), -1);
        for (int b = n_; b < 2 * n_; b++) {
            blossom_best_edges_[b].clear();
            has_best_edges_[b] = 0;
        }
        std::fill(allow_edge_.begin(), allow_edge_.end(), 0);
        queue_.clear();

        for (int v = 0; v < n_; v++) {
            if (mate_[v] == -1 && label_[in_blossom_[v]] == 0) {
                assign_label(v, 1, -1);
            }
        }

        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                int v = queue_.back();
                queue_.pop_back();
                for (int q = neighbor_offsets_[v]; q < neighbor_offsets_[v + 1]; q++) {
                    int p = neighbor_ends_[q];
                    int k = p / 2;
                    int w = endpoint_[p];
                    if (in_blossom_[v] == in_blossom_[w]) {
                        continue;
                    }
                    int64_t kslack = 0;
                    if (!allow_edge_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0) {
                            allow_edge_[k] = 1;
                        }
                    }
                    if (allow_edge_[k]) {
                        if (label_[in_blossom_[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[in_blossom_[w]] == 1) {
                            int base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label_[w] == 0) {
                            label_[w] = 2;
                            label_end_[w] = p ^ 1;
                        }
                    } else if (label_[in_blossom_[w]] == 1) {
                        int b = in_blossom_[v];
                        if (best_edge_[b] == -1 || kslack < slack(best_edge_[b])) {
                            best_edge_[b] = k;
                        }
                    } else if (label_[w] == 0) {
                        if (best_edge_[w] == -1 || kslack < slack(best_edge_[w])) {
                            best_edge_[w] = k;
                        }
                    }
                }
            }
            if (augmented) {
                break;
            }

            // No tight edge left to explore: pick the dual adjustment.
            int delta_type = -1;
            int64_t delta = 0;
            int delta_edge = -1;
            int delta_blossom = -1;
            if (!max_cardinality_) {
                delta_type = 1;
                delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
            }
            for (int v = 0; v < n_; v++) {
                if (label_[in_blossom_[v]] == 0 && best_edge_[v] != -1) {
                    int64_t d = slack(best_edge_[v]);
                    if (delta_type == -1 || d < delta) {
                        delta = d;
                        delta_type = 2;
                        delta_edge = best_edge_[v];
                    }
                }
            }
            for (int b = 0; b < 2 * n_; b++) {
                if (blossom_parent_[b] == -1 && label_[b] == 1 && best_edge_[b] != -1) {
                    int64_t d = slack(best_edge_[b]) / 2;
                    if (delta_type == -1 || d < delta) {
                        delta = d;
                        delta_type = 3;
                        delta_edge = best_edge_[b];
                    }
                }
            }
            for (int b = n_; b < 2 * n_; b++) {
                if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1 && label_[b] == 2 &&
                    (delta_type == -1 || dual_[b] < delta)) {
                    delta = dual_[b];
                    delta_type = 4;
                    delta_blossom = b;
                }
            }
            if (delta_type == -1) {
                delta_type = 1;
                delta = std::max<int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n_));
            }

            for (int v = 0; v < n_; v++) {
                int l = label_[in_blossom_[v]];
                if (l == 1) {
                    dual_[v] -= delta;
                } else if (l == 2) {
                    dual_[v] += delta;
                }
            }
            for (int b = n_; b < 2 * n_; b++) {
                if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1) {
                    if (label_[b] == 1) {
                        dual_[b] += delta;
                    } else if (label_[b] == 2) {
                        dual_[b] -= delta;
                    }
                }
            }

            if (delta_type == 1) {
                break;
            } else if (delta_type == 2) {
                allow_edge_[delta_edge] = 1;
                int i = static_cast<int>(edges_[delta_edge].u);
                int j = static_cast<int>(edges_[delta_edge].v);
                if (label_[in_blossom_[i]] == 0) {
                    std::swap(i, j);
                }
                queue_.push_back(i);
            } else if (delta_type == 3) {
                allow_edge_[delta_edge] = 1;
                queue_.push_back(static_cast<int>(edges_[delta_edge].u));
            } else {
                expand_blossom(delta_blossom, false);
            }
        }

        if (!augmented) {
            break;
        }
        for (int b = n_; b < 2 * n_; b++) {
            if (blossom_parent_[b] == -1 && blossom_base_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) {
                expand_blossom(b, true);
            }
        }
    }
    (void)m;

    std::vector<int32_t> result(n_, -1);
    for (int v = 0; v < n_; v++) {
        if (mate_[v] >= 0) {
            result[v] = endpoint_[mate_[v]];
        }
    }
    return result;
}

int64_t BlossomMatcher::pair_slack(uint32_t u, uint32_t v, int64_t w) const {
    int64_t s = dual_[u] + dual_[v] - 2 * w;
    if (in_blossom_[u] != in_blossom_[v] || in_blossom_[u] < n_) {
        return s;
    }
    // Walk both parent chains up to their lowest common blossom, then add the
    // duals of it and everything enclosing it.
    auto depth = [&](int x) {
        int d = 0;
        for (; blossom_parent_[x] != -1; x = blossom_parent_[x]) {
            d++;
        }
        return d;
    };
    int a = static_cast<int>(u);
    int b = static_cast<int>(v);
    int da = depth(a);
    int db = depth(b);
    for (; da > db; da--) {
        a = blossom_parent_[a];
    }
    for (; db > da; db--) {
        b = blossom_parent_[b];
    }
    while (a != b) {
        a = blossom_parent_[a];
        b = blossom_parent_[b];
    }
    for (; a != -1; a = blossom_parent_[a]) {
        s += 2 * dual_[a];
    }
    return s;
}

}  // namespace colorproj
