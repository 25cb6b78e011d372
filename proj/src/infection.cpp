#include "bicascade/infection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "adjacency.hpp"
#include "parallel.hpp"

namespace bicascade {

namespace {

void check_order(std::span<const std::size_t> order, std::size_t n)
{
    if (order.empty())
        return;
    if (order.size() != n)
        throw std::invalid_argument("processing order must list every vertex once");
    std::vector<bool> seen(n, false);
    for (std::size_t v : order) {
        if (v >= n || seen[v])
            throw std::invalid_argument("processing order must be a permutation of the vertices");
        seen[v] = true;
    }
}

// Reusable cascade state for repeated sampling on one graph.
class CascadeRunner {
public:
    explicit CascadeRunner(const BipartiteGraph& g) : adj_(g), edge_count_(g.edge_count()), infected_(adj_.vertices()), open_(edge_count_)
    {
        frontier_.reserve(adj_.vertices());
        next_.reserve(adj_.vertices());
    }

    std::size_t sample_count(InfectionParams ip, Rng& rng)
    {
        const std::size_t n = adj_.vertices();
        frontier_.clear();
        for (std::size_t v = 0; v < n; ++v) {
            infected_[v] = rng.bernoulli(ip.mu);
            if (infected_[v])
                frontier_.push_back(v);
        }
        for (std::size_t e = 0; e < edge_count_; ++e)
            open_[e] = rng.bernoulli(ip.p);

        std::size_t count = frontier_.size();
        while (!frontier_.empty()) {
            next_.clear();
            for (std::size_t v : frontier_) {
                for (const auto* arc = adj_.begin(v); arc != adj_.end(v); ++arc) {
                    if (!infected_[arc->to] && open_[arc->edge]) {
                        infected_[arc->to] = 1;
                        next_.push_back(arc->to);
                    }
                }
            }
            count += next_.size();
            frontier_.swap(next_);
        }
        return count;
    }

private:
    detail::Adjacency adj_;
    std::size_t edge_count_;
    std::vector<char> infected_;
    std::vector<char> open_;
    std::vector<std::size_t> frontier_;
    std::vector<std::size_t> next_;
};

} // namespace

void check_params(InfectionParams ip)
{
    check_probability(ip.mu, "mu");
    check_probability(ip.p, "p");
}

double power(double y, std::size_t k)
{
    if (k <= 64) {
        double out = 1.0;
        for (std::size_t i = 0; i < k; ++i)
            out *= y;
        return out;
    }
    double out = 1.0;
    double base = y;
    while (k) {
        if (k & 1U)
            out *= base;
        base *= base;
        k >>= 1U;
    }
    return out;
}

double infected_fraction_exact(const BipartiteGraph& g, InfectionParams ip, const ExactOptions& opts)
{
    check_params(ip);
    if (g.vertex_count() == 0)
        throw std::invalid_argument("infected fraction is undefined on a graph with no vertices");
    const double escape = exact_expectation(g, PercParams{ip.p}, Functional::escape_weight(ip.mu), opts);
    return 1.0 - escape / static_cast<double>(g.vertex_count());
}

CascadeDraws draw_cascade(const BipartiteGraph& g, InfectionParams ip, Rng& rng)
{
    check_params(ip);
    CascadeDraws draws;
    draws.nature.resize(g.vertex_count());
    draws.transmits.resize(g.edge_count());
    for (std::size_t v = 0; v < draws.nature.size(); ++v)
        draws.nature[v] = rng.bernoulli(ip.mu);
    for (std::size_t e = 0; e < draws.transmits.size(); ++e)
        draws.transmits[e] = rng.bernoulli(ip.p);
    return draws;
}

std::vector<bool> run_cascade(const BipartiteGraph& g, const CascadeDraws& draws, std::span<const std::size_t> order)
{
    const std::size_t n = g.vertex_count();
    if (draws.nature.size() != n || draws.transmits.size() != g.edge_count())
        throw std::invalid_argument("cascade draws do not match the graph");
    check_order(order, n);

    std::vector<std::size_t> rank(n);
    if (order.empty())
        std::iota(rank.begin(), rank.end(), 0);
    else
        for (std::size_t i = 0; i < n; ++i)
            rank[order[i]] = i;

    const detail::Adjacency adj(g);
    std::vector<bool> infected = draws.nature;
    std::vector<std::size_t> frontier;
    for (std::size_t v = 0; v < n; ++v)
        if (infected[v])
            frontier.push_back(v);

    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            for (const auto* arc = adj.begin(v); arc != adj.end(v); ++arc) {
                if (!infected[arc->to] && draws.transmits[arc->edge]) {
                    infected[arc->to] = true;
                    next.push_back(arc->to);
                }
            }
        }
        frontier = std::move(next);
    }
    return infected;
}

std::vector<bool> cascade_sample(const BipartiteGraph& g, InfectionParams ip, std::uint64_t seed)
{
    Rng rng = Rng::substream(seed, 0);
    return run_cascade(g, draw_cascade(g, ip, rng));
}

Estimate infected_fraction_mc(const BipartiteGraph& g, InfectionParams ip, std::size_t samples, std::uint64_t seed,
                              const MonteCarloOptions& opts)
{
    check_params(ip);
    if (samples < 2)
        throw std::invalid_argument("Monte Carlo estimation needs at least 2 samples");
    if (g.vertex_count() == 0)
        throw std::invalid_argument("infected fraction is undefined on a graph with no vertices");

    const double scale = 1.0 / static_cast<double>(g.vertex_count());
    auto make_sampler = [&] {
        return [&, runner = CascadeRunner(g)](std::size_t index) mutable {
            Rng rng = Rng::substream(seed, index);
            return static_cast<double>(runner.sample_count(ip, rng)) * scale;
        };
    };
    const auto stats = detail::chunked_samples(samples, opts.threads, make_sampler);
    return {stats.mean(), stats.std_error(), samples, false};
}

double l_prob(std::size_t j, InfectionParams ip)
{
    check_params(ip);
    const double y = 1.0 - ip.mu * ip.p;
    return 1.0 - (1.0 - ip.mu) * power(y, j);
}

double r_prob(std::size_t j, InfectionParams ip)
{
    check_params(ip);
    if (j == 0)
        throw std::invalid_argument("r_prob needs a centre of degree at least 1");
    const double y = 1.0 - ip.mu * ip.p;
    const double q = 1.0 - ip.mu;
    return ip.mu + ip.p - ip.mu * ip.p - q * q * ip.p * power(y, j - 1);
}

double star_expected_fraction(std::size_t k, InfectionParams ip)
{
    if (k == 0)
        throw std::invalid_argument("star needs k >= 1");
    const auto kd = static_cast<double>(k);
    return (l_prob(k, ip) + (kd - 1.0) * l_prob(0, ip) + kd * r_prob(k, ip)) / (2.0 * kd);
}

double star_limit(InfectionParams ip)
{
    check_params(ip);
    return (ip.mu + (ip.mu + ip.p - ip.mu * ip.p)) / 2.0;
}

StarDiagnostics delta_diagnostics(std::size_t k, InfectionParams ip)
{
    check_params(ip);
    if (k < 2)
        throw std::invalid_argument("delta diagnostics need k >= 2");
    if (ip.mu >= 1.0)
        throw std::invalid_argument("delta diagnostics divide by 1 - mu and need mu < 1");

    const double mu = ip.mu;
    const double p = ip.p;
    const double y = 1.0 - mu * p;
    const auto kd = static_cast<double>(k);
    const double yk = power(y, k);
    const double yk1 = power(y, k - 1);
    const double yk2 = power(y, k - 2);

    StarDiagnostics out{};
    out.d = (1.0 - yk) / (2.0 * kd) + p / 2.0 - (1.0 - mu) * p * yk1 / 2.0 - mu * p;
    out.delta1 = 1.0 / (kd - 1.0) - 1.0 / kd + yk / kd - yk1 / (kd - 1.0) + (1.0 - mu) * p * yk2 * (y - 1.0);
    out.delta2 = 1.0 / kd - 1.0 / (kd + 1.0) + yk * y / (kd + 1.0) - yk / kd + (1.0 - mu) * p * yk1 * (y - 1.0);
    return out;
}

double kdd_exact(std::size_t d, InfectionParams ip, const ExactOptions& opts)
{
    return infected_fraction_exact(gen_kdd(d, d), ip, opts);
}

double kdn_limit(std::size_t d, InfectionParams ip)
{
    check_params(ip);
    if (d == 0)
        throw std::invalid_argument("K_{d,n} needs d >= 1");
    if (ip.mu == 0.0)
        return 0.0;
    return ip.mu / 2.0 + (1.0 - (1.0 - ip.mu) * power(1.0 - ip.p, d)) / 2.0;
}

double kdn_exact(std::size_t n, std::size_t d, InfectionParams ip, const ExactOptions& opts)
{
    return infected_fraction_exact(gen_kdn(n, d), ip, opts);
}

} // namespace bicascade
