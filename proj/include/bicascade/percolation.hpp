#pragma once

#include <cstddef>
#include <cstdint>

#include "bicascade/graph.hpp"

namespace bicascade {

/// Edge retention probability for p-edge percolation.
struct PercParams {
    double p = 0.0;
};

enum class FunctionalKind {
    escape_weight,  // sum_v (1 - mu)^{|C(v)|}
    isolated_count, // number of isolated vertices
    susceptibility, // (1/|V|) sum_v |C(v)|
    sum_sq_sizes,   // sum_C |C|^2
    sum_sq_edges,   // sum_C |E(C)|^2
};

/**
 * A component-additive functional of a graph: the sum over components of a
 * term depending only on the component's vertex and edge counts.
 */
class Functional {
public:
    static Functional escape_weight(double mu);
    static Functional isolated_count() { return Functional(FunctionalKind::isolated_count, 0.0); }
    static Functional susceptibility() { return Functional(FunctionalKind::susceptibility, 0.0); }
    static Functional sum_sq_sizes() { return Functional(FunctionalKind::sum_sq_sizes, 0.0); }
    static Functional sum_sq_edges() { return Functional(FunctionalKind::sum_sq_edges, 0.0); }

    FunctionalKind kind() const noexcept { return kind_; }
    double mu() const noexcept { return mu_; }

    /// Contribution of one component with `size` vertices and `edges` edges in a graph of `total_vertices`.
    double term(std::size_t size, std::size_t edges, std::size_t total_vertices) const;

private:
    Functional(FunctionalKind kind, double mu) : kind_(kind), mu_(mu) {}

    FunctionalKind kind_;
    double mu_;
};

/// Monte Carlo mean with its standard error, or an exact value.
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
    bool exact = false;

    static Estimate exact_value(double v) { return {v, 0.0, 0, true}; }
};

struct ExactOptions {
    /// Largest number of edges in one connected component that exact evaluation will enumerate.
    std::size_t edge_limit = 24;
    /// Worker threads; 0 means hardware concurrency. Results do not depend on this.
    unsigned threads = 0;
};

struct MonteCarloOptions {
    unsigned threads = 0;
};

void check_probability(double value, const char* name);

/// Each edge kept independently with probability pp.p; deterministic per seed.
BipartiteGraph percolate_sample(const BipartiteGraph& g, PercParams pp, std::uint64_t seed);

double eval_functional(const BipartiteGraph& g, const Functional& f);

/**
 * Exact expectation of f after p-edge percolation.
 *
 * The functional is additive over the components of g, so each component
 * is enumerated on its own: every subset of its edges is visited in
 * Gray-code order with a union-find that is extended on insertions and
 * rebuilt on removals. Throws capacity_error when a component has more than
 * opts.edge_limit edges.
 */
double exact_expectation(const BipartiteGraph& g, PercParams pp, const Functional& f, const ExactOptions& opts = {});

/// Largest per-component edge count, i.e. what ExactOptions::edge_limit is compared against.
std::size_t largest_component_edges(const BipartiteGraph& g);

Estimate mc_expectation(const BipartiteGraph& g, PercParams pp, const Functional& f, std::size_t samples,
                        std::uint64_t seed, const MonteCarloOptions& opts = {});

} // namespace bicascade
