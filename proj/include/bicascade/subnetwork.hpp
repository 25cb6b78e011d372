#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bicascade/extremal.hpp"
#include "bicascade/graph.hpp"
#include "bicascade/infection.hpp"

namespace bicascade {

/**
 * An instance of the optimal bipartite subnetwork problem: choose a
 * spanning subgraph of `graph` in which every right vertex keeps degree at
 * least d, minimising the expected infected fraction.
 *
 * `certificate` is the isolated-left count an optimal solution reaches when
 * the instance came from a reduction whose source problem is solvable.
 */
struct SubnetworkInstance {
    BipartiteGraph graph;
    DegreeConstraint d;
    std::optional<std::size_t> certificate;

    bool feasible() const;
};

inline constexpr std::size_t subnetwork_exact_edge_limit = 20;

/**
 * Exhaustive search over the inclusion-minimal feasible subgraphs (exactly d
 * edges kept per right vertex). Adding edges never lowers the infected
 * fraction, so the minimum over all feasible subgraphs is attained there.
 * Throws infeasible_error or capacity_error (more than 20 edges).
 */
SearchResult best_subnetwork_exact(const SubnetworkInstance& inst, InfectionParams ip, const ExactOptions& opts = {});

/// Per right vertex, keep the d edges whose left endpoints have the lowest degree in the instance (ties by index).
BipartiteGraph greedy_truncation(const SubnetworkInstance& inst);

struct LocalSearchOptions {
    std::size_t iterations = 1000;
    std::uint64_t seed = 0;
    ExactOptions exact;
    /// Samples per candidate when a candidate is beyond exact capacity.
    std::size_t mc_samples = 20000;
    /// Feasible subgraph of the instance to start from; greedy_truncation when absent.
    std::optional<BipartiteGraph> start;
};

/**
 * Randomised local search. Moves either drop an edge from a right vertex
 * above its degree bound or swap one of a right vertex's edges for an unused
 * instance edge at that vertex; a move is kept when it does not increase the
 * objective. Deterministic per seed.
 */
SearchResult best_subnetwork_local(const SubnetworkInstance& inst, InfectionParams ip, const LocalSearchOptions& opts = {});

/// Exact set cover: sets over {0, ..., universe_size - 1}, all of size at most k.
struct ExactCoverInstance {
    std::size_t universe_size = 0;
    std::size_t k = 0;
    std::vector<std::vector<std::size_t>> sets;
};

/// Pads every set below size k with fresh universe elements, growing the universe.
ExactCoverInstance pad_exact_cover(const ExactCoverInstance& in);

/**
 * Left vertices are the (padded) sets, right vertices the universe
 * elements, d = 1. The certificate is |F| - |U|/k when k divides the padded
 * universe size.
 */
SubnetworkInstance reduce_exact_cover(const ExactCoverInstance& in);

/// L = R = V with (l_i, r_j) an edge iff v_i ~ v_j or i = j. Requires d >= 2.
SubnetworkInstance reduce_clique_decomposition(const std::vector<std::pair<std::size_t, std::size_t>>& adjacency,
                                               std::size_t n_vertices, std::size_t d);

inline constexpr std::size_t decomposition_vertex_limit = 24;

struct KddDecomposition {
    bool exists = false;
    /// Witness blocks: d left and d right vertices inducing a complete K_{d,d}.
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
};

/// Backtracking partition of all vertices into complete K_{d,d} blocks; at most 24 vertices.
KddDecomposition kdd_decomposition(const BipartiteGraph& g, std::size_t d);

inline bool kdd_decomposition_exists(const BipartiteGraph& g, std::size_t d) { return kdd_decomposition(g, d).exists; }

} // namespace bicascade
