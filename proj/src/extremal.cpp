#include "bicascade/extremal.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "bicascade/enumerate.hpp"

namespace bicascade {

namespace {

constexpr std::size_t scan_points = 1000;
constexpr double scan_floor = 1e-12;

int sign(double x) { return (x > 0.0) - (x < 0.0); }

// First mu in (0, 1) where f leaves the sign it has just above 0, refined by bisection.
std::optional<double> first_sign_change(const std::function<double(double)>& f, double tol)
{
    const int initial = sign(f(scan_floor));
    if (initial == 0)
        return std::nullopt;
    double lo = scan_floor;
    for (std::size_t i = 1; i < scan_points; ++i) {
        const double mu = static_cast<double>(i) / static_cast<double>(scan_points);
        if (sign(f(mu)) != initial) {
            double hi = mu;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                if (sign(f(mid)) == initial)
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        }
        lo = mu;
    }
    return std::nullopt;
}

} // namespace

SearchResult best_half_regular(std::size_t n, std::size_t d, InfectionParams ip, const ExactOptions& opts)
{
    check_params(ip);
    return minimize_over_half_regular(
        n, d, [&](const BipartiteGraph& g) { return infected_fraction_exact(g, ip, opts); }, search_tie_tolerance);
}

std::vector<std::string> classify(const BipartiteGraph& g)
{
    std::vector<std::string> names;
    if (!g.is_balanced() || g.n_left() == 0)
        return names;
    const std::size_t n = g.n_left();
    const auto rdeg = g.right_degrees();
    const std::size_t d = rdeg.front();
    for (std::size_t v : rdeg)
        if (v != d)
            return names;
    if (d == 0)
        return names;

    if (d == 1 && isomorphic(g, gen_matching(n)))
        names.emplace_back("matching");
    if (d == 1 && isomorphic(g, gen_star(n)))
        names.emplace_back("star");
    if (n % d == 0 && isomorphic(g, gen_kdd(n, d)))
        names.emplace_back("kdd");
    if (isomorphic(g, gen_kdn(n, d)))
        names.emplace_back("kdn");
    return names;
}

const char* to_string(PhaseWinner w)
{
    switch (w) {
    case PhaseWinner::kdd:
        return "KDD";
    case PhaseWinner::kdn:
        return "KDN";
    case PhaseWinner::tie:
        return "TIE";
    }
    return "TIE";
}

PhaseWinner parse_phase_winner(const std::string& text)
{
    if (text == "KDD")
        return PhaseWinner::kdd;
    if (text == "KDN")
        return PhaseWinner::kdn;
    if (text == "TIE")
        return PhaseWinner::tie;
    throw std::invalid_argument("unknown phase winner '" + text + "'");
}

PhaseCell phase_cell(std::size_t d, InfectionParams ip, const PhaseOptions& opts)
{
    check_params(ip);
    double kdd = 0.0;
    double kdn = 0.0;
    if (opts.finite_n) {
        const std::size_t n = *opts.finite_n;
        kdd = n % d == 0 ? infected_fraction_exact(gen_kdd(n, d), ip, opts.exact) : kdd_exact(d, ip, opts.exact);
        kdn = kdn_exact(n, d, ip, opts.exact);
    } else {
        kdd = kdd_exact(d, ip, opts.exact);
        kdn = kdn_limit(d, ip);
    }
    PhaseCell cell;
    cell.delta = kdd - kdn;
    if (std::abs(cell.delta) <= opts.tie_tol)
        cell.winner = PhaseWinner::tie;
    else
        cell.winner = cell.delta < 0.0 ? PhaseWinner::kdd : PhaseWinner::kdn;
    return cell;
}

PhaseDiagram phase_region(std::size_t d, std::vector<double> mu_grid, std::vector<double> p_grid, const PhaseOptions& opts)
{
    if (d == 0)
        throw std::invalid_argument("phase diagram needs d >= 1");
    for (double mu : mu_grid)
        check_probability(mu, "mu");
    for (double p : p_grid)
        check_probability(p, "p");
    std::sort(mu_grid.begin(), mu_grid.end());
    std::sort(p_grid.begin(), p_grid.end());

    PhaseDiagram out;
    out.d = d;
    out.cells.assign(mu_grid.size(), std::vector<PhaseCell>(p_grid.size()));
    for (std::size_t i = 0; i < mu_grid.size(); ++i)
        for (std::size_t j = 0; j < p_grid.size(); ++j)
            out.cells[i][j] = phase_cell(d, {mu_grid[i], p_grid[j]}, opts);
    out.mu_grid = std::move(mu_grid);
    out.p_grid = std::move(p_grid);
    return out;
}

std::vector<double> unit_grid(std::size_t steps)
{
    if (steps == 0)
        throw std::invalid_argument("grid needs at least one step");
    std::vector<double> grid(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        grid[i] = static_cast<double>(i) / static_cast<double>(steps);
    return grid;
}

std::optional<double> phase_boundary(std::size_t d, double p, double tol, const ExactOptions& opts)
{
    check_probability(p, "p");
    if (d == 0)
        throw std::invalid_argument("phase boundary needs d >= 1");
    // Without transmission both sides equal mu everywhere.
    if (p == 0.0)
        return std::nullopt;
    return first_sign_change([&](double mu) { return kdd_exact(d, {mu, p}, opts) - kdn_limit(d, {mu, p}); }, tol);
}

std::optional<double> matching_star_crossover(double p, double tol)
{
    check_probability(p, "p");
    return first_sign_change([&](double mu) { return star_limit({mu, p}) - star_expected_fraction(1, {mu, p}); }, tol);
}

ConjectureReport test_conjecture(std::size_t n, std::size_t d, InfectionParams ip, const ExactOptions& opts)
{
    ConjectureReport report;
    report.search = best_half_regular(n, d, ip, opts);
    auto any_iso = [&](const BipartiteGraph& target) {
        for (const auto& g : report.search.minimizers)
            if (isomorphic(g, target))
                return true;
        return false;
    };
    report.kdd_feasible = d >= 1 && n % d == 0;
    report.kdd_optimal = report.kdd_feasible && any_iso(gen_kdd(n, d));
    report.kdn_optimal = d >= 1 && d <= n && any_iso(gen_kdn(n, d));
    report.kdn_two_feasible = d == 2 && n >= 2;
    report.kdn_two_optimal = report.kdn_two_feasible && any_iso(gen_kdn(n, 2));
    return report;
}

} // namespace bicascade
