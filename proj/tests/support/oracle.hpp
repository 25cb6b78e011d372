#pragma once

// Brute-force reference implementations used by the tests. They share no code
// with the library beyond the graph container and are meant for tiny inputs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bicascade/graph.hpp"

namespace oracle {

using bicascade::BipartiteGraph;
using bicascade::Edge;

inline std::vector<std::vector<std::size_t>> neighbours(const BipartiteGraph& g, std::uint64_t edge_mask = ~0ULL)
{
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!((edge_mask >> i) & 1ULL))
            continue;
        const std::size_t a = edges[i].l, b = g.n_left() + edges[i].r;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

/// Component label per vertex by breadth-first search.
inline std::vector<std::size_t> bfs_labels(const std::vector<std::vector<std::size_t>>& adj)
{
    const std::size_t none = adj.size();
    std::vector<std::size_t> label(adj.size(), none);
    std::size_t next = 0;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        if (label[s] != none)
            continue;
        std::queue<std::size_t> q;
        q.push(s);
        label[s] = next;
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (std::size_t w : adj[v])
                if (label[w] == none) {
                    label[w] = next;
                    q.push(w);
                }
        }
        ++next;
    }
    return label;
}

inline double mask_weight(std::uint64_t mask, std::size_t bits, double prob)
{
    double w = 1.0;
    for (std::size_t i = 0; i < bits; ++i)
        w *= ((mask >> i) & 1ULL) ? prob : 1.0 - prob;
    return w;
}

struct Component {
    std::size_t size;
    std::size_t edges;
};

inline std::vector<Component> percolated_components(const BipartiteGraph& g, std::uint64_t mask)
{
    const auto label = bfs_labels(neighbours(g, mask));
    const std::size_t count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<Component> comps(count, {0, 0});
    for (std::size_t v = 0; v < label.size(); ++v)
        ++comps[label[v]].size;
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if ((mask >> i) & 1ULL)
            ++comps[label[edges[i].l]].edges;
    return comps;
}

/// Compensated running sum; the oracles add up to 2^24 tiny terms.
struct Neumaier {
    double sum = 0.0, c = 0.0;
    void add(double x)
    {
        const double t = sum + x;
        c += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + c; }
};

/// E[sum over components of term(size, edges)] under p-edge percolation, by listing all 2^|E| subsets.
inline double percolation_expectation(const BipartiteGraph& g, double p,
                                      const std::function<double(std::size_t, std::size_t)>& term)
{
    const std::size_t m = g.edge_count();
    if (m > 24)
        throw std::invalid_argument("oracle: too many edges");
    Neumaier total;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        double value = 0.0;
        for (const auto& c : percolated_components(g, mask))
            value += term(c.size, c.edges);
        total.add(mask_weight(mask, m, p) * value);
    }
    return total.value();
}

/**
 * Infection probability of every vertex by listing every nature outcome and
 * every edge outcome and running the spread literally: a vertex ends up
 * infected iff it can be reached from a vertex infected by nature through
 * edges whose transmission coin came up heads.
 */
inline std::vector<double> vertex_infection_probs(const BipartiteGraph& g, double mu, double p)
{
    const std::size_t nv = g.vertex_count(), m = g.edge_count();
    if (nv + m > 24)
        throw std::invalid_argument("oracle: instance too large");
    std::vector<Neumaier> prob(nv);
    for (std::uint64_t emask = 0; emask < (1ULL << m); ++emask) {
        const double we = mask_weight(emask, m, p);
        if (we == 0.0)
            continue;
        const auto adj = neighbours(g, emask);
        for (std::uint64_t vmask = 0; vmask < (1ULL << nv); ++vmask) {
            const double w = we * mask_weight(vmask, nv, mu);
            if (w == 0.0)
                continue;
            std::vector<char> infected(nv, 0);
            std::queue<std::size_t> q;
            for (std::size_t v = 0; v < nv; ++v)
                if ((vmask >> v) & 1ULL) {
                    infected[v] = 1;
                    q.push(v);
                }
            while (!q.empty()) {
                const std::size_t v = q.front();
                q.pop();
                for (std::size_t u : adj[v])
                    if (!infected[u]) {
                        infected[u] = 1;
                        q.push(u);
                    }
            }
            for (std::size_t v = 0; v < nv; ++v)
                if (infected[v])
                    prob[v].add(w);
        }
    }
    std::vector<double> out;
    for (const auto& x : prob)
        out.push_back(x.value());
    return out;
}

inline double infected_fraction(const BipartiteGraph& g, double mu, double p)
{
    const auto probs = vertex_infection_probs(g, mu, p);
    return std::accumulate(probs.begin(), probs.end(), 0.0) / static_cast<double>(g.vertex_count());
}

/// Same quantity through the percolation identity; much cheaper than the literal cascade.
inline double infected_fraction_percolation(const BipartiteGraph& g, double mu, double p)
{
    const double escape =
        percolation_expectation(g, p, [mu](std::size_t s, std::size_t) { return s * std::pow(1 - mu, s); });
    return 1.0 - escape / static_cast<double>(g.vertex_count());
}

/// Every balanced graph with each right vertex of degree exactly d, one per labelled choice.
inline std::vector<BipartiteGraph> all_labelled_half_regular(std::size_t n, std::size_t d)
{
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m)
        if (static_cast<std::size_t>(__builtin_popcountll(m)) == d)
            subsets.push_back(m);
    std::vector<BipartiteGraph> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<Edge> edges;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t l = 0; l < n; ++l)
                if ((subsets[pick[r]] >> l) & 1ULL)
                    edges.push_back({static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r)});
        out.emplace_back(n, n, std::move(edges));
        std::size_t i = 0;
        while (i < n && ++pick[i] == subsets.size())
            pick[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

/// Isomorphism by trying every pair of side permutations.
inline bool isomorphic_bruteforce(const BipartiteGraph& a, const BipartiteGraph& b)
{
    if (a.n_left() != b.n_left() || a.n_right() != b.n_right() || a.edge_count() != b.edge_count())
        return false;
    std::vector<std::size_t> lp(a.n_left()), rp(a.n_right());
    std::iota(lp.begin(), lp.end(), 0);
    do {
        std::iota(rp.begin(), rp.end(), 0);
        do {
            if (a.relabeled(lp, rp) == b)
                return true;
        } while (std::next_permutation(rp.begin(), rp.end()));
    } while (std::next_permutation(lp.begin(), lp.end()));
    return false;
}

/// Exact cover by plain recursion on the lowest uncovered element.
inline bool exact_cover_exists(std::size_t universe, const std::vector<std::vector<std::size_t>>& sets)
{
    std::vector<char> covered(universe, 0);
    std::function<bool()> solve = [&]() -> bool {
        std::size_t e = 0;
        while (e < universe && covered[e])
            ++e;
        if (e == universe)
            return true;
        for (const auto& s : sets) {
            if (std::find(s.begin(), s.end(), e) == s.end())
                continue;
            bool clash = false;
            for (std::size_t x : s)
                clash = clash || covered[x];
            if (clash)
                continue;
            for (std::size_t x : s)
                covered[x] = 1;
            if (solve())
                return true;
            for (std::size_t x : s)
                covered[x] = 0;
        }
        return false;
    };
    return solve();
}

/// Partition of the vertex set into vertex-disjoint cliques of size k.
inline bool clique_partition_exists(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    std::size_t k)
{
    if (k == 0 || n % k != 0)
        return false;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges)
        adj[u][v] = adj[v][u] = 1;
    std::vector<char> used(n, 0);
    std::function<bool()> solve = [&]() -> bool {
        std::size_t first = 0;
        while (first < n && used[first])
            ++first;
        if (first == n)
            return true;
        std::vector<std::size_t> group{first};
        used[first] = 1;
        std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
            if (group.size() == k)
                return solve();
            for (std::size_t v = from; v < n; ++v) {
                if (used[v])
                    continue;
                bool ok = true;
                for (std::size_t u : group)
                    ok = ok && adj[u][v];
                if (!ok)
                    continue;
                used[v] = 1;
                group.push_back(v);
                if (extend(v + 1))
                    return true;
                group.pop_back();
                used[v] = 0;
            }
            return false;
        };
        const bool found = extend(first + 1);
        used[first] = 0;
        return found;
    };
    return solve();
}

/// Partition of both sides into complete K_{d,d} blocks, by trying every combination.
inline bool kdd_partition_exists(const BipartiteGraph& g, std::size_t d)
{
    const std::size_t nl = g.n_left(), nr = g.n_right();
    if (d == 0 || nl != nr || nl % d != 0)
        return false;
    std::vector<char> used_l(nl, 0), used_r(nr, 0);
    std::function<bool()> solve;
    auto combinations = [](const std::vector<std::size_t>& pool, std::size_t k,
                           const std::function<bool(const std::vector<std::size_t>&)>& visit) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        if (k > pool.size())
            return false;
        while (true) {
            std::vector<std::size_t> pick;
            for (std::size_t i : idx)
                pick.push_back(pool[i]);
            if (visit(pick))
                return true;
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == pool.size() - k + i - 1)
                --i;
            if (i == 0)
                return false;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    };
    solve = [&]() -> bool {
        std::size_t first = 0;
        while (first < nl && used_l[first])
            ++first;
        if (first == nl)
            return true;
        std::vector<std::size_t> free_l, free_r;
        for (std::size_t l = first + 1; l < nl; ++l)
            if (!used_l[l])
                free_l.push_back(l);
        for (std::size_t r = 0; r < nr; ++r)
            if (!used_r[r])
                free_r.push_back(r);
        return combinations(free_l, d - 1, [&](const std::vector<std::size_t>& others) {
            std::vector<std::size_t> left = others;
            left.push_back(first);
            return combinations(free_r, d, [&](const std::vector<std::size_t>& right) {
                for (std::size_t l : left)
                    for (std::size_t r : right)
                        if (!g.has_edge({static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r)}))
                            return false;
                for (std::size_t l : left)
                    used_l[l] = 1;
                for (std::size_t r : right)
                    used_r[r] = 1;
                const bool ok = solve();
                for (std::size_t l : left)
                    used_l[l] = 0;
                for (std::size_t r : right)
                    used_r[r] = 0;
                return ok;
            });
        });
    };
    return solve();
}

/// Minimum of `value` over every spanning subgraph of g keeping each right degree >= d.
inline double subnetwork_bruteforce(const BipartiteGraph& g, std::size_t d,
                                    const std::function<double(const BipartiteGraph&)>& value)
{
    const std::size_t m = g.edge_count();
    double best = INFINITY;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<bool> keep(m);
        for (std::size_t i = 0; i < m; ++i)
            keep[i] = (mask >> i) & 1ULL;
        const BipartiteGraph sub = g.subgraph(keep);
        const auto deg = sub.right_degrees();
        if (std::any_of(deg.begin(), deg.end(), [&](std::size_t x) { return x < d; }))
            continue;
        best = std::min(best, value(sub));
    }
    return best;
}

/**
 * Expected infected fraction of the j-star (with its j - 1 isolated left
 * vertices) under the threshold model, by listing every threshold
 * assignment of the centre and leaves. Thresholds above j can never be met
 * on the star, so they are folded together with "never".
 */
inline double star_threshold_bruteforce(std::size_t j, const std::vector<double>& probs, double residual)
{
    // Fold thresholds > j (centre) and > 1 (leaf) into "never".
    const std::size_t classes = j + 2; // 0..j, and never
    std::vector<double> w(classes, 0.0);
    for (std::size_t i = 0; i < probs.size(); ++i)
        w[std::min(i, j + 1)] += probs[i];
    w[j + 1] += residual;

    auto leaf_w = [&](std::size_t t) { return t < w.size() ? w[t] : 0.0; };
    double total = 0.0;
    // Enumerate centre threshold and every leaf threshold in {0, 1, other}.
    std::vector<std::size_t> leaf(j, 0);
    const double other = 1.0 - leaf_w(0) - leaf_w(1);
    for (std::size_t c = 0; c < classes; ++c) {
        std::fill(leaf.begin(), leaf.end(), 0);
        while (true) {
            double weight = w[c];
            for (std::size_t t : leaf) {
                weight *= t == 0 ? leaf_w(0) : t == 1 ? leaf_w(1) : other;
            }
            if (weight != 0.0) {
                // Synchronous spread on the star.
                bool centre = c == 0;
                std::vector<bool> inf(j);
                for (std::size_t i = 0; i < j; ++i)
                    inf[i] = leaf[i] == 0;
                bool changed = true;
                while (changed) {
                    changed = false;
                    std::size_t count = 0;
                    for (bool b : inf)
                        count += b;
                    if (!centre && c <= j && count >= c) {
                        centre = true;
                        changed = true;
                    }
                    for (std::size_t i = 0; i < j; ++i)
                        if (!inf[i] && centre && leaf[i] == 1) {
                            inf[i] = true;
                            changed = true;
                        }
                }
                std::size_t infected = centre ? 1 : 0;
                for (bool b : inf)
                    infected += b;
                // j - 1 isolated left vertices: infected only by nature.
                const double isolated = static_cast<double>(j - 1) * leaf_w(0);
                total += weight * (static_cast<double>(infected) + isolated);
            }
            std::size_t i = 0;
            while (i < j && ++leaf[i] == 3)
                leaf[i++] = 0;
            if (i == j)
                break;
        }
    }
    return total / static_cast<double>(2 * j);
}

} // namespace oracle
