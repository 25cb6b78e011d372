#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bicascade/graph.hpp"

namespace bicascade {

/**
 * Canonical representative of a bipartite graph under independent
 * permutations of the left and right sides.
 *
 * Each connected component is labelled by the lexicographically largest
 * row-major adjacency matrix (rows = left vertices, columns = right
 * vertices) over all orderings. Components are then laid out in descending
 * order of their codes, so isolated vertices come last. `key` is the
 * concatenated component codes and identifies the isomorphism class.
 *
 * Components with more than 64 right vertices are rejected.
 */
struct CanonicalForm {
    BipartiteGraph graph;
    std::vector<std::uint64_t> key;
};

CanonicalForm canonicalize(const BipartiteGraph& g);
BipartiteGraph canonical_form(const BipartiteGraph& g);
bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

/**
 * Lazily yields one canonical representative per isomorphism class of
 * balanced bipartite graphs on n + n vertices where every right vertex has
 * degree exactly d.
 *
 * Candidates are non-decreasing sequences of right-neighbourhood masks whose
 * first entry is {0, ..., d-1}; duplicates are rejected by canonical key.
 * Supports n <= 64.
 */
class HalfRegularEnumerator {
public:
    HalfRegularEnumerator(std::size_t n, std::size_t d);

    std::optional<BipartiteGraph> next();

    std::size_t candidates_examined() const noexcept { return examined_; }

private:
    bool advance();
    BipartiteGraph current_graph() const;

    std::size_t n_;
    std::size_t d_;
    std::vector<std::uint64_t> masks_;   // all d-subsets of the left side, ascending
    std::vector<std::size_t> odometer_;  // indices into masks_, non-decreasing
    bool exhausted_ = false;
    bool started_ = false;
    std::size_t examined_ = 0;
    std::set<std::vector<std::uint64_t>> seen_;
};

/// Collects the whole HalfRegularEnumerator sequence.
std::vector<BipartiteGraph> enumerate_half_regular(std::size_t n, std::size_t d);

} // namespace bicascade
