#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bicascade/graph.hpp"
#include "bicascade/infection.hpp"
#include "bicascade/percolation.hpp"

namespace bicascade {

inline constexpr double search_tie_tolerance = 1e-12;

struct SearchResult {
    std::vector<BipartiteGraph> minimizers; // every candidate within search_tie_tolerance of value
    double value = 0.0;
    std::size_t evaluated_count = 0;
};

/// Exhaustive minimum of the exact infected fraction over all half-d-regular graphs on n + n vertices.
SearchResult best_half_regular(std::size_t n, std::size_t d, InfectionParams ip, const ExactOptions& opts = {});

/// Minimum of an arbitrary objective over the same enumeration; ties within `tie_tol`.
template <class Objective>
SearchResult minimize_over_half_regular(std::size_t n, std::size_t d, Objective&& objective, double tie_tol);

/// Recognisable structures a graph may be isomorphic to.
std::vector<std::string> classify(const BipartiteGraph& g);

enum class PhaseWinner { kdd, kdn, tie };

const char* to_string(PhaseWinner w);
PhaseWinner parse_phase_winner(const std::string& text);

struct PhaseCell {
    PhaseWinner winner = PhaseWinner::tie;
    double delta = 0.0; // K_{d,d} value minus K_{d,n} value; negative favours K_{d,d}
};

struct PhaseDiagram {
    std::size_t d = 0;
    std::vector<double> mu_grid;
    std::vector<double> p_grid;
    std::vector<std::vector<PhaseCell>> cells; // cells[i][j] at (mu_grid[i], p_grid[j])
};

struct PhaseOptions {
    double tie_tol = 1e-9;
    /// When set, K_{d,n} is evaluated exactly at this n instead of its limit, and K_{d,d} at the same n.
    std::optional<std::size_t> finite_n;
    ExactOptions exact;
};

PhaseCell phase_cell(std::size_t d, InfectionParams ip, const PhaseOptions& opts = {});
PhaseDiagram phase_region(std::size_t d, std::vector<double> mu_grid, std::vector<double> p_grid, const PhaseOptions& opts = {});

/// Evenly spaced grid 0, 1/steps, ..., 1.
std::vector<double> unit_grid(std::size_t steps);

/**
 * Smallest mu in (0, 1) where K_{d,n} (limit) stops being worse than
 * K_{d,d}, located by a sign scan followed by bisection to `tol`. Returns
 * nullopt if K_{d,d} never loses on the scan.
 */
std::optional<double> phase_boundary(std::size_t d, double p, double tol = 1e-13, const ExactOptions& opts = {});

/// mu at which the limiting n-star and the perfect matching have equal infected fraction.
std::optional<double> matching_star_crossover(double p, double tol = 1e-13);

/// Which structured candidates attain the enumerated optimum for (n, d, ip).
struct ConjectureReport {
    SearchResult search;
    bool kdd_feasible = false;        // d divides n
    bool kdd_optimal = false;
    bool kdn_optimal = false;         // K_{d,n} with n - d isolated left vertices
    bool kdn_two_feasible = false;    // K_{d,n} with n - 2 isolated left vertices is a graph on 2n vertices only when d = 2
    bool kdn_two_optimal = false;
    bool holds() const { return kdd_optimal || kdn_optimal; }
};

ConjectureReport test_conjecture(std::size_t n, std::size_t d, InfectionParams ip, const ExactOptions& opts = {});

} // namespace bicascade

#include "bicascade/extremal_impl.hpp"
