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

#include "colorproj/lift.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace colorproj {

ComponentsGraph components_graph(const SurfaceTiling &g, const BinaryChain &b) {
    if (b.dimension() != g.num_edges()) {
        throw std::invalid_argument("components_graph: dimension mismatch");
    }
    const size_t n = g.num_vertices();
    std::vector<uint8_t> removed(g.num_edges(), 0);
    for (uint32_t e : b.support()) {
        removed[e] = 1;
    }

    ComponentsGraph out;
    constexpr uint32_t kUnset = UINT32_MAX;
    out.component_of.assign(n, kUnset);
    std::vector<uint32_t> stack;
    for (uint32_t s = 0; s < n; s++) {
        if (out.component_of[s] != kUnset) {
            continue;
        }
        auto id = static_cast<uint32_t>(out.num_components++);
        out.component_of[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            uint32_t v = stack.back();
            stack.pop_back();
            for (const TilingEdge &nb : g.neighbors(v)) {
                if (!removed[nb.v] && out.component_of[nb.u] == kUnset) {
                    out.component_of[nb.u] = id;
                    stack.push_back(nb.u);
                }
            }
        }
    }

    for (uint32_t e : b.support()) {
        uint32_t i = out.component_of[g.edges()[e].u];
        uint32_t j = out.component_of[g.edges()[e].v];
        if (i == j) {
            out.has_self_link = true;
        } else {
            out.adjacency.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(out.adjacency.begin(), out.adjacency.end());
    out.adjacency.erase(std::unique(out.adjacency.begin(), out.adjacency.end()), out.adjacency.end());
    return out;
}

BinaryChain boundary_of_vertexset(const SurfaceTiling &g, const BinaryChain &x) {
    if (x.dimension() != g.num_vertices()) {
        throw std::invalid_argument("boundary_of_vertexset: dimension mismatch");
    }
    std::vector<uint8_t> in(g.num_vertices(), 0);
    for (uint32_t v : x.support()) {
        in[v] = 1;
    }
    std::vector<uint32_t> out;
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        if (in[g.edges()[e].u] != in[g.edges()[e].v]) {
            out.push_back(e);
        }
    }
    return BinaryChain(g.num_edges(), std::move(out));
}

std::optional<BinaryChain> lift_boundary(const SurfaceTiling &g, const BinaryChain &b) {
    ComponentsGraph cg = components_graph(g, b);
    if (cg.has_self_link) {
        return std::nullopt;
    }

    const size_t k = cg.num_components;
    std::vector<std::vector<uint32_t>> adj(k);
    for (const auto &[i, j] : cg.adjacency) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    // Two-color the components graph; side 0 holds the component of vertex 0.
    std::vector<int8_t> side(k, -1);
    std::vector<uint32_t> queue;
    for (uint32_t s = 0; s < k; s++) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        queue.assign(1, s);
        for (size_t head = 0; head < queue.size(); head++) {
            uint32_t c = queue[head];
            for (uint32_t d : adj[c]) {
                if (side[d] < 0) {
                    side[d] = static_cast<int8_t>(1 - side[c]);
                    queue.push_back(d);
                } else if (side[d] == side[c]) {
                    return std::nullopt;
                }
            }
        }
    }

    const size_t n = g.num_vertices();
    std::vector<uint32_t> x0;
    std::vector<uint32_t> x1;
    for (uint32_t v = 0; v < n; v++) {
        (side[cg.component_of[v]] == 0 ? x0 : x1).push_back(v);
    }
    if (x1.size() < x0.size()) {
        return BinaryChain(n, std::move(x1));
    }
    return BinaryChain(n, std::move(x0));
}

}  // namespace colorproj
