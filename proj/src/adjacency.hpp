#pragma once

#include <cstddef>
#include <vector>

#include "bicascade/graph.hpp"

namespace bicascade::detail {

// Compressed adjacency over the unified vertex numbering; each entry keeps its edge index.
struct Adjacency {
    struct Arc {
        std::size_t to;
        std::size_t edge;
    };

    explicit Adjacency(const BipartiteGraph& g) : offsets(g.vertex_count() + 1, 0)
    {
        const std::size_t nl = g.n_left();
        const auto edges = g.edges();
        for (const Edge& e : edges) {
            ++offsets[e.l + 1];
            ++offsets[nl + e.r + 1];
        }
        for (std::size_t v = 0; v + 1 < offsets.size(); ++v)
            offsets[v + 1] += offsets[v];
        arcs.resize(2 * edges.size());
        std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::size_t u = edges[i].l;
            const std::size_t w = nl + edges[i].r;
            arcs[fill[u]++] = {w, i};
            arcs[fill[w]++] = {u, i};
        }
    }

    std::size_t vertices() const { return offsets.size() - 1; }
    const Arc* begin(std::size_t v) const { return arcs.data() + offsets[v]; }
    const Arc* end(std::size_t v) const { return arcs.data() + offsets[v + 1]; }

    std::vector<std::size_t> offsets;
    std::vector<Arc> arcs;
};

} // namespace bicascade::detail
