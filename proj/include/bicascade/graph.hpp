#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bicascade {

/// Edge between left vertex `l` and right vertex `r`; sides are indexed independently from 0.
struct Edge {
    std::uint32_t l = 0;
    std::uint32_t r = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Minimum degree required of every vertex on the right side.
struct DegreeConstraint {
    std::size_t d = 0;
};

/**
 * Immutable bipartite graph with explicit left/right sides.
 *
 * Edges are kept sorted lexicographically and are unique. Wherever a single
 * vertex numbering is needed (components, cascades) left vertex i is i and
 * right vertex j is n_left + j.
 */
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Throws std::invalid_argument on an out-of-range index or a duplicate edge.
    BipartiteGraph(std::size_t n_left, std::size_t n_right, std::vector<Edge> edges);

    std::size_t n_left() const noexcept { return n_left_; }
    std::size_t n_right() const noexcept { return n_right_; }
    std::size_t vertex_count() const noexcept { return n_left_ + n_right_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool is_balanced() const noexcept { return n_left_ == n_right_; }
    bool has_edge(Edge e) const noexcept;

    std::vector<std::size_t> left_degrees() const;
    std::vector<std::size_t> right_degrees() const;
    std::size_t max_degree() const;

    /// Copy with `e` added; throws if it is already present or out of range.
    BipartiteGraph with_edge(Edge e) const;
    /// Copy keeping only the edges whose bit is set in `keep` (indexed like edges()).
    BipartiteGraph subgraph(const std::vector<bool>& keep) const;
    /// Copy with left vertex i renamed left_perm[i] and right vertex j renamed right_perm[j].
    BipartiteGraph relabeled(std::span<const std::size_t> left_perm, std::span<const std::size_t> right_perm) const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::size_t n_left_ = 0;
    std::size_t n_right_ = 0;
    std::vector<Edge> edges_;
};

struct ComponentStats {
    std::vector<std::size_t> component_sizes;
    std::vector<std::size_t> component_edge_counts; // aligned with component_sizes
    std::size_t isolated_count = 0;
};

BipartiteGraph make_graph(std::size_t n_left, std::size_t n_right, std::vector<Edge> edges);

/// Balanced, and every right vertex has degree at least c.d.
bool validate(const BipartiteGraph& g, DegreeConstraint c);

BipartiteGraph gen_matching(std::size_t n);
/// k-star centred on left vertex 0 plus k-1 isolated left vertices.
BipartiteGraph gen_star(std::size_t k);
/// n/d disjoint copies of K_{d,d}.
BipartiteGraph gen_kdd(std::size_t n, std::size_t d);
/// Left vertices 0..d-1 joined to every right vertex; the other n-d left vertices isolated.
BipartiteGraph gen_kdn(std::size_t n, std::size_t d);

/// Components ordered by their smallest vertex.
ComponentStats components(const BipartiteGraph& g);

/// Component id of every vertex (unified numbering), ids dense from 0 in order of first vertex.
std::vector<std::size_t> component_labels(const BipartiteGraph& g);

/// Left vertices with no incident edge.
std::size_t isolated_left_count(const BipartiteGraph& g);

} // namespace bicascade
