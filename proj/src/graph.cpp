#include "bicascade/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "union_find.hpp"

namespace bicascade {

namespace {

std::string edge_text(Edge e)
{
    return "(" + std::to_string(e.l) + ", " + std::to_string(e.r) + ")";
}

} // namespace

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right, std::vector<Edge> edges)
    : n_left_(n_left), n_right_(n_right), edges_(std::move(edges))
{
    for (const Edge& e : edges_) {
        if (e.l >= n_left_ || e.r >= n_right_)
            throw std::invalid_argument("edge " + edge_text(e) + " out of range for sides of size " +
                                        std::to_string(n_left_) + " and " + std::to_string(n_right_));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("duplicate edge " + edge_text(*dup));
}

bool BipartiteGraph::has_edge(Edge e) const noexcept
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::size_t> BipartiteGraph::left_degrees() const
{
    std::vector<std::size_t> deg(n_left_, 0);
    for (const Edge& e : edges_)
        ++deg[e.l];
    return deg;
}

std::vector<std::size_t> BipartiteGraph::right_degrees() const
{
    std::vector<std::size_t> deg(n_right_, 0);
    for (const Edge& e : edges_)
        ++deg[e.r];
    return deg;
}

std::size_t BipartiteGraph::max_degree() const
{
    std::size_t best = 0;
    for (std::size_t v : left_degrees())
        best = std::max(best, v);
    for (std::size_t v : right_degrees())
        best = std::max(best, v);
    return best;
}

BipartiteGraph BipartiteGraph::with_edge(Edge e) const
{
    if (has_edge(e))
        throw std::invalid_argument("duplicate edge " + edge_text(e));
    auto edges = edges_;
    edges.push_back(e);
    return BipartiteGraph(n_left_, n_right_, std::move(edges));
}

BipartiteGraph BipartiteGraph::subgraph(const std::vector<bool>& keep) const
{
    if (keep.size() != edges_.size())
        throw std::invalid_argument("edge mask size does not match edge count");
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep[i])
            kept.push_back(edges_[i]);
    return BipartiteGraph(n_left_, n_right_, std::move(kept));
}

BipartiteGraph BipartiteGraph::relabeled(std::span<const std::size_t> left_perm,
                                         std::span<const std::size_t> right_perm) const
{
    if (left_perm.size() != n_left_ || right_perm.size() != n_right_)
        throw std::invalid_argument("permutation size does not match side size");
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const Edge& e : edges_)
        edges.push_back({static_cast<std::uint32_t>(left_perm[e.l]), static_cast<std::uint32_t>(right_perm[e.r])});
    return BipartiteGraph(n_left_, n_right_, std::move(edges));
}

BipartiteGraph make_graph(std::size_t n_left, std::size_t n_right, std::vector<Edge> edges)
{
    return BipartiteGraph(n_left, n_right, std::move(edges));
}

bool validate(const BipartiteGraph& g, DegreeConstraint c)
{
    if (!g.is_balanced())
        return false;
    for (std::size_t deg : g.right_degrees())
        if (deg < c.d)
            return false;
    return true;
}

BipartiteGraph gen_matching(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("matching needs n >= 1");
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        edges.push_back({i, i});
    return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph gen_star(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("star needs k >= 1");
    std::vector<Edge> edges;
    for (std::uint32_t j = 0; j < k; ++j)
        edges.push_back({0, j});
    return BipartiteGraph(k, k, std::move(edges));
}

BipartiteGraph gen_kdd(std::size_t n, std::size_t d)
{
    if (d == 0)
        throw std::invalid_argument("K_{d,d} decomposition needs d >= 1");
    if (n == 0 || n % d != 0)
        throw std::invalid_argument("K_{d,d} decomposition needs d to divide n (n=" + std::to_string(n) +
                                    ", d=" + std::to_string(d) + ")");
    std::vector<Edge> edges;
    for (std::size_t block = 0; block < n / d; ++block)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                edges.push_back({static_cast<std::uint32_t>(block * d + a), static_cast<std::uint32_t>(block * d + b)});
    return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph gen_kdn(std::size_t n, std::size_t d)
{
    if (d == 0 || d > n)
        throw std::invalid_argument("K_{d,n} needs 1 <= d <= n (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    std::vector<Edge> edges;
    for (std::uint32_t hub = 0; hub < d; ++hub)
        for (std::uint32_t r = 0; r < n; ++r)
            edges.push_back({hub, r});
    return BipartiteGraph(n, n, std::move(edges));
}

std::vector<std::size_t> component_labels(const BipartiteGraph& g)
{
    const std::size_t n = g.vertex_count();
    detail::UnionFind uf(n);
    for (const Edge& e : g.edges())
        uf.add_edge(e.l, g.n_left() + e.r);

    std::vector<std::size_t> root_label(n, n);
    std::vector<std::size_t> labels(n);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t root = uf.find(v);
        if (root_label[root] == n)
            root_label[root] = next++;
        labels[v] = root_label[root];
    }
    return labels;
}

ComponentStats components(const BipartiteGraph& g)
{
    const auto labels = component_labels(g);
    const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

    ComponentStats stats;
    stats.component_sizes.assign(count, 0);
    stats.component_edge_counts.assign(count, 0);
    for (std::size_t label : labels)
        ++stats.component_sizes[label];
    for (const Edge& e : g.edges())
        ++stats.component_edge_counts[labels[e.l]];
    stats.isolated_count = static_cast<std::size_t>(
        std::count(stats.component_sizes.begin(), stats.component_sizes.end(), std::size_t{1}));
    return stats;
}

std::size_t isolated_left_count(const BipartiteGraph& g)
{
    const auto deg = g.left_degrees();
    return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), std::size_t{0}));
}

} // namespace bicascade
