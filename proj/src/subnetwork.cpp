#include "bicascade/subnetwork.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "bicascade/error.hpp"
#include "bicascade/rng.hpp"

namespace bicascade {

namespace {

void require_feasible(const SubnetworkInstance& inst)
{
    const auto deg = inst.graph.right_degrees();
    for (std::size_t r = 0; r < deg.size(); ++r)
        if (deg[r] < inst.d.d)
            throw infeasible_error("right vertex " + std::to_string(r) + " has degree " + std::to_string(deg[r]) +
                                   " below the required " + std::to_string(inst.d.d));
}

// Instance edges incident to each right vertex, as indices into graph.edges().
std::vector<std::vector<std::size_t>> edges_by_right(const BipartiteGraph& g)
{
    std::vector<std::vector<std::size_t>> out(g.n_right());
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        out[edges[i].r].push_back(i);
    return out;
}

// Advances `combo` (sorted indices into [0, n)) to the next k-combination; false when done.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n)
{
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j)
                combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

class Evaluator {
public:
    Evaluator(InfectionParams ip, const ExactOptions& exact, std::size_t mc_samples, std::uint64_t seed)
        : ip_(ip), exact_(exact), mc_samples_(mc_samples), seed_(seed)
    {
    }

    double operator()(const BipartiteGraph& g)
    {
        ++evaluated_;
        if (largest_component_edges(g) <= exact_.edge_limit)
            return infected_fraction_exact(g, ip_, exact_);
        // Common random numbers across candidates keep comparisons stable.
        return infected_fraction_mc(g, ip_, mc_samples_, seed_, {exact_.threads}).mean;
    }

    std::size_t evaluated() const { return evaluated_; }

private:
    InfectionParams ip_;
    ExactOptions exact_;
    std::size_t mc_samples_;
    std::uint64_t seed_;
    std::size_t evaluated_ = 0;
};

} // namespace

bool SubnetworkInstance::feasible() const
{
    for (std::size_t deg : graph.right_degrees())
        if (deg < d.d)
            return false;
    return true;
}

SearchResult best_subnetwork_exact(const SubnetworkInstance& inst, InfectionParams ip, const ExactOptions& opts)
{
    check_params(ip);
    require_feasible(inst);
    const BipartiteGraph& g = inst.graph;
    if (g.edge_count() > subnetwork_exact_edge_limit)
        throw capacity_error("exact subnetwork search is limited to " + std::to_string(subnetwork_exact_edge_limit) +
                                 " instance edges; instance has " + std::to_string(g.edge_count()),
                             subnetwork_exact_edge_limit, g.edge_count());

    const std::size_t d = inst.d.d;
    const auto incident = edges_by_right(g);
    std::vector<std::vector<std::size_t>> choice(g.n_right(), std::vector<std::size_t>(d));
    for (auto& c : choice)
        std::iota(c.begin(), c.end(), 0);

    std::vector<std::pair<double, BipartiteGraph>> near;
    double best = 0.0;
    std::size_t evaluated = 0;
    while (true) {
        std::vector<bool> keep(g.edge_count(), false);
        for (std::size_t r = 0; r < g.n_right(); ++r)
            for (std::size_t idx : choice[r])
                keep[incident[r][idx]] = true;
        BipartiteGraph candidate = g.subgraph(keep);
        const double value = infected_fraction_exact(candidate, ip, opts);
        ++evaluated;
        if (near.empty() || value < best)
            best = value;
        if (value <= best + search_tie_tolerance)
            near.emplace_back(value, std::move(candidate));
        std::erase_if(near, [&](const auto& entry) { return entry.first > best + search_tie_tolerance; });

        // Odometer over the per-vertex combinations.
        std::size_t r = 0;
        for (; r < g.n_right(); ++r) {
            if (next_combination(choice[r], incident[r].size()))
                break;
            std::iota(choice[r].begin(), choice[r].end(), 0);
        }
        if (r == g.n_right())
            break;
    }

    SearchResult result;
    result.value = best;
    result.evaluated_count = evaluated;
    for (auto& entry : near)
        result.minimizers.push_back(std::move(entry.second));
    return result;
}

BipartiteGraph greedy_truncation(const SubnetworkInstance& inst)
{
    require_feasible(inst);
    const BipartiteGraph& g = inst.graph;
    const auto ldeg = g.left_degrees();
    const auto incident = edges_by_right(g);
    const auto edges = g.edges();

    std::vector<bool> keep(g.edge_count(), false);
    for (std::size_t r = 0; r < g.n_right(); ++r) {
        auto options = incident[r];
        std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
            if (ldeg[edges[a].l] != ldeg[edges[b].l])
                return ldeg[edges[a].l] < ldeg[edges[b].l];
            return edges[a].l < edges[b].l;
        });
        for (std::size_t i = 0; i < inst.d.d; ++i)
            keep[options[i]] = true;
    }
    return g.subgraph(keep);
}

SearchResult best_subnetwork_local(const SubnetworkInstance& inst, InfectionParams ip, const LocalSearchOptions& opts)
{
    check_params(ip);
    require_feasible(inst);
    const BipartiteGraph& g = inst.graph;
    const auto edges = g.edges();
    const auto incident = edges_by_right(g);

    std::vector<bool> keep(g.edge_count(), false);
    const BipartiteGraph start = opts.start ? *opts.start : greedy_truncation(inst);
    if (start.n_left() != g.n_left() || start.n_right() != g.n_right())
        throw std::invalid_argument("local search start has different sides from the instance");
    for (const Edge& e : start.edges()) {
        const auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e)
            throw std::invalid_argument("local search start uses an edge missing from the instance");
        keep[static_cast<std::size_t>(it - edges.begin())] = true;
    }
    if (!SubnetworkInstance{start, inst.d, std::nullopt}.feasible())
        throw infeasible_error("local search start violates the degree constraint");

    Evaluator evaluate(ip, opts.exact, opts.mc_samples, opts.seed);
    double current = evaluate(start);
    Rng rng(opts.seed);

    for (std::size_t it = 0; it < opts.iterations; ++it) {
        // Right vertices above the bound can drop; those with unused instance edges can swap.
        std::vector<std::size_t> droppable;
        std::vector<std::size_t> swappable;
        for (std::size_t r = 0; r < g.n_right(); ++r) {
            std::size_t used = 0;
            for (std::size_t e : incident[r])
                used += keep[e] ? 1 : 0;
            if (used > inst.d.d)
                droppable.push_back(r);
            if (used > 0 && used < incident[r].size())
                swappable.push_back(r);
        }
        if (droppable.empty() && swappable.empty())
            break;

        std::vector<bool> trial = keep;
        const bool drop = !droppable.empty() && (swappable.empty() || rng.below(2) == 0);
        const std::size_t r = drop ? droppable[rng.below(droppable.size())] : swappable[rng.below(swappable.size())];
        std::vector<std::size_t> on;
        std::vector<std::size_t> off;
        for (std::size_t e : incident[r])
            (keep[e] ? on : off).push_back(e);
        trial[on[rng.below(on.size())]] = false;
        if (!drop)
            trial[off[rng.below(off.size())]] = true;

        const double value = evaluate(g.subgraph(trial));
        if (value <= current) {
            current = value;
            keep = std::move(trial);
        }
    }

    SearchResult result;
    result.minimizers.push_back(g.subgraph(keep));
    result.value = current;
    result.evaluated_count = evaluate.evaluated();
    return result;
}

ExactCoverInstance pad_exact_cover(const ExactCoverInstance& in)
{
    if (in.k == 0)
        throw std::invalid_argument("exact cover needs k >= 1");
    ExactCoverInstance out = in;
    for (std::size_t s = 0; s < out.sets.size(); ++s) {
        auto& set = out.sets[s];
        std::set<std::size_t> unique(set.begin(), set.end());
        if (unique.size() != set.size())
            throw std::invalid_argument("set " + std::to_string(s) + " repeats an element");
        for (std::size_t x : set)
            if (x >= in.universe_size)
                throw std::invalid_argument("set " + std::to_string(s) + " contains element " + std::to_string(x) +
                                            " outside a universe of size " + std::to_string(in.universe_size));
        if (set.size() > in.k)
            throw std::invalid_argument("set " + std::to_string(s) + " has " + std::to_string(set.size()) +
                                        " elements, more than k = " + std::to_string(in.k));
        while (set.size() < in.k)
            set.push_back(out.universe_size++);
    }
    return out;
}

SubnetworkInstance reduce_exact_cover(const ExactCoverInstance& in)
{
    const ExactCoverInstance padded = pad_exact_cover(in);
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < padded.sets.size(); ++s)
        for (std::size_t x : padded.sets[s])
            edges.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(x)});

    SubnetworkInstance inst{BipartiteGraph(padded.sets.size(), padded.universe_size, std::move(edges)), {1}, std::nullopt};
    const std::size_t blocks = padded.universe_size / padded.k;
    if (padded.universe_size % padded.k == 0 && blocks <= padded.sets.size())
        inst.certificate = padded.sets.size() - blocks;
    return inst;
}

SubnetworkInstance reduce_clique_decomposition(const std::vector<std::pair<std::size_t, std::size_t>>& adjacency,
                                               std::size_t n_vertices, std::size_t d)
{
    if (d < 2)
        throw std::invalid_argument("clique-decomposition reduction needs d >= 2");
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (auto [u, v] : adjacency) {
        if (u >= n_vertices || v >= n_vertices)
            throw std::invalid_argument("vertex pair (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        if (u == v)
            continue;
        pairs.emplace(u, v);
        pairs.emplace(v, u);
    }
    for (std::size_t i = 0; i < n_vertices; ++i)
        pairs.emplace(i, i);

    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs)
        edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
    return {BipartiteGraph(n_vertices, n_vertices, std::move(edges)), {d}, std::nullopt};
}

KddDecomposition kdd_decomposition(const BipartiteGraph& g, std::size_t d)
{
    if (d == 0)
        throw std::invalid_argument("K_{d,d} decomposition needs d >= 1");
    if (g.vertex_count() > decomposition_vertex_limit)
        throw capacity_error("decomposition search is limited to " + std::to_string(decomposition_vertex_limit) + " vertices",
                             decomposition_vertex_limit, g.vertex_count());

    KddDecomposition out;
    const std::size_t n = g.n_left();
    if (!g.is_balanced() || n % d != 0)
        return out;

    std::vector<std::uint32_t> nbr(n, 0); // right neighbourhoods of left vertices
    for (const Edge& e : g.edges())
        nbr[e.l] |= std::uint32_t{1} << e.r;

    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> blocks;

    // Blocks are built around the lowest unassigned left vertex.
    auto solve = [&](auto&& self, std::uint32_t free_left, std::uint32_t free_right) -> bool {
        if (free_left == 0)
            return true;
        const int anchor = std::countr_zero(free_left);
        const std::uint32_t rest = free_left & ~(std::uint32_t{1} << anchor);

        // Choose d-1 companions from `rest` keeping a common neighbourhood of size >= d.
        std::vector<int> pool;
        for (std::uint32_t m = rest; m; m &= m - 1)
            pool.push_back(std::countr_zero(m));

        auto pick_left = [&](auto&& pick, std::size_t from, std::size_t need, std::uint32_t chosen, std::uint32_t common) -> bool {
            if (static_cast<std::size_t>(std::popcount(common)) < d)
                return false;
            if (need == 0) {
                // Any d of the common free right vertices; try each subset.
                std::vector<int> rights;
                for (std::uint32_t m = common; m; m &= m - 1)
                    rights.push_back(std::countr_zero(m));
                std::vector<std::size_t> combo(d);
                std::iota(combo.begin(), combo.end(), 0);
                do {
                    std::uint32_t right_mask = 0;
                    for (std::size_t c : combo)
                        right_mask |= std::uint32_t{1} << rights[c];
                    blocks.emplace_back(chosen, right_mask);
                    if (self(self, free_left & ~chosen, free_right & ~right_mask))
                        return true;
                    blocks.pop_back();
                } while (next_combination(combo, rights.size()));
                return false;
            }
            for (std::size_t i = from; i + need <= pool.size(); ++i) {
                const int v = pool[i];
                if (pick(pick, i + 1, need - 1, chosen | (std::uint32_t{1} << v), common & nbr[static_cast<std::size_t>(v)]))
                    return true;
            }
            return false;
        };
        return pick_left(pick_left, 0, d - 1, std::uint32_t{1} << anchor, nbr[static_cast<std::size_t>(anchor)] & free_right);
    };

    if (solve(solve, all, all)) {
        out.exists = true;
        for (auto [lm, rm] : blocks) {
            std::vector<std::size_t> ls;
            std::vector<std::size_t> rs;
            for (std::uint32_t m = lm; m; m &= m - 1)
                ls.push_back(static_cast<std::size_t>(std::countr_zero(m)));
            for (std::uint32_t m = rm; m; m &= m - 1)
                rs.push_back(static_cast<std::size_t>(std::countr_zero(m)));
            out.blocks.emplace_back(std::move(ls), std::move(rs));
        }
    }
    return out;
}

} // namespace bicascade
