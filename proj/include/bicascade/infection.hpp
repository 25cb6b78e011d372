#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bicascade/graph.hpp"
#include "bicascade/percolation.hpp"
#include "bicascade/rng.hpp"

namespace bicascade {

/// mu: probability a vertex is infected by nature; p: per-edge transmission probability.
struct InfectionParams {
    double mu = 0.0;
    double p = 0.0;
};

void check_params(InfectionParams ip);

/// Expected infected fraction: 1 - E[sum_v (1-mu)^{|C(v)|}] / |V| under p-edge percolation.
double infected_fraction_exact(const BipartiteGraph& g, InfectionParams ip, const ExactOptions& opts = {});

/// Random choices of one cascade: nature infections per vertex, transmission indicator per edge.
struct CascadeDraws {
    std::vector<bool> nature;    // unified vertex numbering
    std::vector<bool> transmits; // indexed like g.edges()
};

CascadeDraws draw_cascade(const BipartiteGraph& g, InfectionParams ip, Rng& rng);

/**
 * Synchronous independent cascade driven by pre-drawn randomness. Each round
 * every vertex infected in the previous round tries each still-uninfected
 * neighbour once, succeeding when that edge's indicator is set. `order`
 * permutes the processing order of vertices within a round (identity when
 * empty). Returns the final infected set.
 */
std::vector<bool> run_cascade(const BipartiteGraph& g, const CascadeDraws& draws, std::span<const std::size_t> order = {});

/// One seeded cascade; the same seed always yields the same infected set.
std::vector<bool> cascade_sample(const BipartiteGraph& g, InfectionParams ip, std::uint64_t seed);

Estimate infected_fraction_mc(const BipartiteGraph& g, InfectionParams ip, std::size_t samples, std::uint64_t seed,
                              const MonteCarloOptions& opts = {});

// Closed forms for a k-star with k-1 isolated left vertices.

/// Infection probability of a left vertex of degree j whose neighbours are leaves.
double l_prob(std::size_t j, InfectionParams ip);
/// Infection probability of a leaf attached to a centre of degree j (j >= 1).
double r_prob(std::size_t j, InfectionParams ip);
double star_expected_fraction(std::size_t k, InfectionParams ip);
/// Limit of star_expected_fraction as k grows.
double star_limit(InfectionParams ip);

struct StarDiagnostics {
    double d;      // (E[I_k] - E[I_1]) / (1 - mu)
    double delta1; // 2 (E[I_{k-1}] - E[I_k]) / (1 - mu)
    double delta2; // 2 (E[I_k] - E[I_{k+1}]) / (1 - mu)
};

/// Requires k >= 2 and mu < 1.
StarDiagnostics delta_diagnostics(std::size_t k, InfectionParams ip);

/// Infected fraction of a K_{d,d} decomposition (any number of blocks).
double kdd_exact(std::size_t d, InfectionParams ip, const ExactOptions& opts = {});
/// Infected fraction of K_{d,n} plus n-d isolated left vertices as n grows; 0 at mu = 0.
double kdn_limit(std::size_t d, InfectionParams ip);
/// Infected fraction of gen_kdn(n, d) at finite n.
double kdn_exact(std::size_t n, std::size_t d, InfectionParams ip, const ExactOptions& opts = {});

/// y^k by repeated multiplication up to exponent 64, by squaring beyond.
double power(double y, std::size_t k);

} // namespace bicascade
