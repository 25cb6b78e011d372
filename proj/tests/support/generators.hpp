#pragma once

// Seeded random inputs for property tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bicascade/graph.hpp"
#include "bicascade/rng.hpp"

namespace gen {

using bicascade::BipartiteGraph;
using bicascade::Edge;
using bicascade::Rng;

/// Balanced graph on n + n vertices, every right vertex joined to d distinct random left vertices.
inline BipartiteGraph half_regular(std::size_t n, std::size_t d, Rng& rng)
{
    std::vector<Edge> edges;
    std::vector<std::uint32_t> pool(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t j = i + rng.below(n - i);
            std::swap(pool[i], pool[j]);
            edges.push_back({pool[i], static_cast<std::uint32_t>(r)});
        }
    }
    return BipartiteGraph(n, n, std::move(edges));
}

/// Each of the n_left * n_right possible edges present with probability density.
inline BipartiteGraph random_bipartite(std::size_t n_left, std::size_t n_right, double density, Rng& rng)
{
    std::vector<Edge> edges;
    for (std::uint32_t l = 0; l < n_left; ++l)
        for (std::uint32_t r = 0; r < n_right; ++r)
            if (rng.bernoulli(density))
                edges.push_back({l, r});
    return BipartiteGraph(n_left, n_right, std::move(edges));
}

/// Random graph with at most max_edges edges on at most max_side vertices per side.
inline BipartiteGraph small_graph(Rng& rng, std::size_t max_side = 4, std::size_t max_edges = 10)
{
    const std::size_t nl = 1 + rng.below(max_side);
    const std::size_t nr = 1 + rng.below(max_side);
    std::vector<Edge> all;
    for (std::uint32_t l = 0; l < nl; ++l)
        for (std::uint32_t r = 0; r < nr; ++r)
            all.push_back({l, r});
    std::vector<Edge> edges;
    for (const Edge& e : all)
        if (rng.bernoulli(0.5) && edges.size() < max_edges)
            edges.push_back(e);
    return BipartiteGraph(nl, nr, std::move(edges));
}

inline std::vector<std::size_t> permutation(std::size_t n, Rng& rng)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(p[i - 1], p[rng.below(i)]);
    return p;
}

inline BipartiteGraph shuffled(const BipartiteGraph& g, Rng& rng)
{
    const auto lp = permutation(g.n_left(), rng);
    const auto rp = permutation(g.n_right(), rng);
    return g.relabeled(lp, rp);
}

/// Simple undirected graph as an edge list.
struct Simple {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline Simple gnp(std::size_t n, double density, Rng& rng)
{
    Simple g{n, {}};
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(density))
                g.edges.emplace_back(u, v);
    return g;
}

/// Vertices split at random into triangles, plus extra edges with probability noise.
inline Simple planted_triangles(std::size_t n, double noise, Rng& rng)
{
    const auto p = permutation(n, rng);
    Simple g{n, {}};
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i + 2 < n; i += 3)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b)
                adj[p[i + a]][p[i + b]] = adj[p[i + b]][p[i + a]] = 1;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (adj[u][v] || rng.bernoulli(noise))
                g.edges.emplace_back(u, v);
    return g;
}

} // namespace gen
