#include "bicascade/percolation.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bicascade/error.hpp"
#include "bicascade/rng.hpp"
#include "parallel.hpp"
#include "union_find.hpp"

namespace bicascade {

namespace {

// Fixed high-order edge bits per component; chunk count is 2^this regardless of threads.
constexpr std::size_t split_bits = 6;

struct LocalComponent {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // local endpoints
};

std::vector<LocalComponent> split_components(const BipartiteGraph& g)
{
    const auto labels = component_labels(g);
    const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<LocalComponent> parts(count);
    std::vector<std::size_t> local(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        local[v] = parts[labels[v]].vertices++;
    for (const Edge& e : g.edges()) {
        const std::size_t u = e.l;
        const std::size_t w = g.n_left() + e.r;
        parts[labels[u]].edges.emplace_back(local[u], local[w]);
    }
    return parts;
}

// Functional terms tabulated by (component size, component edge count).
class TermTable {
public:
    TermTable(const Functional& f, std::size_t max_size, std::size_t max_edges, std::size_t total_vertices)
        : stride_(max_edges + 1), values_((max_size + 1) * stride_, 0.0)
    {
        for (std::size_t s = 1; s <= max_size; ++s)
            for (std::size_t e = 0; e <= max_edges; ++e)
                values_[s * stride_ + e] = f.term(s, e, total_vertices);
    }
    double operator()(std::size_t size, std::size_t edges) const { return values_[size * stride_ + edges]; }

private:
    std::size_t stride_;
    std::vector<double> values_;
};

double component_value(detail::UnionFind& uf, std::size_t vertices, const TermTable& term)
{
    double value = 0.0;
    for (std::size_t v = 0; v < vertices; ++v)
        if (uf.find(v) == v)
            value += term(uf.size_of_root(v), uf.edges_of_root(v));
    return value;
}

double component_expectation(const LocalComponent& comp, PercParams pp, const TermTable& term, unsigned threads)
{
    const std::size_t m = comp.edges.size();
    if (m == 0)
        return static_cast<double>(comp.vertices) * term(1, 0);
    if (pp.p == 0.0)
        return static_cast<double>(comp.vertices) * term(1, 0);
    if (pp.p == 1.0)
        return term(comp.vertices, m);

    std::vector<double> weight(m + 1);
    for (std::size_t k = 0; k <= m; ++k)
        weight[k] = std::pow(pp.p, static_cast<double>(k)) * std::pow(1.0 - pp.p, static_cast<double>(m - k));

    const std::size_t high = std::min(split_bits, m);
    const std::size_t low = m - high;
    const std::size_t chunks = std::size_t{1} << high;
    std::vector<double> partial(chunks, 0.0);

    detail::parallel_for(chunks, threads, [&](std::size_t chunk) {
        detail::UnionFind uf(comp.vertices);
        std::vector<bool> present(m, false);
        std::size_t present_count = 0;
        for (std::size_t b = 0; b < high; ++b) {
            if (chunk >> b & 1U) {
                present[low + b] = true;
                ++present_count;
            }
        }
        auto rebuild = [&] {
            uf.reset();
            for (std::size_t i = 0; i < m; ++i)
                if (present[i])
                    uf.add_edge(comp.edges[i].first, comp.edges[i].second);
            return component_value(uf, comp.vertices, term);
        };

        double value = rebuild();
        detail::CompensatedSum sum;
        sum.add(weight[present_count] * value);

        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t i = 1; i < steps; ++i) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(i));
            present[bit] = !present[bit];
            if (present[bit]) {
                ++present_count;
                const auto [u, w] = comp.edges[bit];
                const std::size_t ru = uf.find(u);
                const std::size_t rw = uf.find(w);
                if (ru == rw) {
                    const std::size_t s = uf.size_of_root(ru);
                    const std::size_t e = uf.edges_of_root(ru);
                    value += term(s, e + 1) - term(s, e);
                    uf.add_edge(ru, rw);
                } else {
                    value -= term(uf.size_of_root(ru), uf.edges_of_root(ru)) + term(uf.size_of_root(rw), uf.edges_of_root(rw));
                    const std::size_t root = uf.add_edge(ru, rw);
                    value += term(uf.size_of_root(root), uf.edges_of_root(root));
                }
            } else {
                --present_count;
                value = rebuild();
            }
            sum.add(weight[present_count] * value);
        }
        partial[chunk] = sum.value();
    });

    detail::CompensatedSum total;
    for (double v : partial)
        total.add(v);
    return total.value();
}

} // namespace

void check_probability(double value, const char* name)
{
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
}

Functional Functional::escape_weight(double mu)
{
    check_probability(mu, "mu");
    return Functional(FunctionalKind::escape_weight, mu);
}

double Functional::term(std::size_t size, std::size_t edges, std::size_t total_vertices) const
{
    const auto s = static_cast<double>(size);
    switch (kind_) {
    case FunctionalKind::escape_weight:
        return s * std::pow(1.0 - mu_, s);
    case FunctionalKind::isolated_count:
        return size == 1 ? 1.0 : 0.0;
    case FunctionalKind::susceptibility:
        return total_vertices == 0 ? 0.0 : s * s / static_cast<double>(total_vertices);
    case FunctionalKind::sum_sq_sizes:
        return s * s;
    case FunctionalKind::sum_sq_edges:
        return static_cast<double>(edges) * static_cast<double>(edges);
    }
    return 0.0;
}

BipartiteGraph percolate_sample(const BipartiteGraph& g, PercParams pp, std::uint64_t seed)
{
    check_probability(pp.p, "p");
    Rng rng = Rng::substream(seed, 0);
    std::vector<bool> keep(g.edge_count());
    for (std::size_t i = 0; i < keep.size(); ++i)
        keep[i] = rng.bernoulli(pp.p);
    return g.subgraph(keep);
}

double eval_functional(const BipartiteGraph& g, const Functional& f)
{
    const ComponentStats stats = components(g);
    double value = 0.0;
    for (std::size_t c = 0; c < stats.component_sizes.size(); ++c)
        value += f.term(stats.component_sizes[c], stats.component_edge_counts[c], g.vertex_count());
    return value;
}

std::size_t largest_component_edges(const BipartiteGraph& g)
{
    const ComponentStats stats = components(g);
    std::size_t best = 0;
    for (std::size_t e : stats.component_edge_counts)
        best = std::max(best, e);
    return best;
}

double exact_expectation(const BipartiteGraph& g, PercParams pp, const Functional& f, const ExactOptions& opts)
{
    check_probability(pp.p, "p");
    const auto parts = split_components(g);

    std::size_t max_size = 1;
    std::size_t max_edges = 0;
    for (const auto& part : parts) {
        if (part.edges.size() > opts.edge_limit)
            throw capacity_error("exact evaluation is limited to " + std::to_string(opts.edge_limit) +
                                     " edges per connected component; found a component with " +
                                     std::to_string(part.edges.size()),
                                 opts.edge_limit, part.edges.size());
        max_size = std::max(max_size, part.vertices);
        max_edges = std::max(max_edges, part.edges.size());
    }
    const TermTable term(f, max_size, max_edges, g.vertex_count());

    detail::CompensatedSum total;
    for (const auto& part : parts)
        total.add(component_expectation(part, pp, term, opts.threads));
    return total.value();
}

Estimate mc_expectation(const BipartiteGraph& g, PercParams pp, const Functional& f, std::size_t samples,
                        std::uint64_t seed, const MonteCarloOptions& opts)
{
    check_probability(pp.p, "p");
    if (samples < 2)
        throw std::invalid_argument("Monte Carlo estimation needs at least 2 samples");

    const std::size_t nv = g.vertex_count();
    const std::size_t nl = g.n_left();
    const auto edges = g.edges();
    const TermTable term(f, std::max<std::size_t>(nv, 1), edges.size(), nv);

    auto make_sampler = [&] {
        return [&, uf = detail::UnionFind(nv)](std::size_t index) mutable {
            Rng rng = Rng::substream(seed, index);
            uf.reset();
            for (const Edge& e : edges)
                if (rng.bernoulli(pp.p))
                    uf.add_edge(e.l, nl + e.r);
            return component_value(uf, nv, term);
        };
    };
    const auto stats = detail::chunked_samples(samples, opts.threads, make_sampler);
    return {stats.mean(), stats.std_error(), samples, false};
}

} // namespace bicascade
