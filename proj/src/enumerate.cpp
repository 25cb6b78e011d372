#include "bicascade/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "bicascade/error.hpp"

namespace bicascade {

namespace {

constexpr std::size_t max_component_right = 64;

std::uint64_t position_bit(std::size_t pos) { return std::uint64_t{1} << (63 - pos); }

// Search for the largest row-major adjacency string of one connected component.
class ComponentCanon {
public:
    explicit ComponentCanon(std::vector<std::uint64_t> neighbours, std::size_t right_count)
        : nbr_(std::move(neighbours)), a_(nbr_.size()), b_(right_count)
    {
        rows_.reserve(a_);
        order_.reserve(a_);
    }

    void run()
    {
        std::vector<std::uint64_t> cells;
        if (b_ > 0)
            cells.push_back(b_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << b_) - 1);
        descend(cells, 0);
    }

    const std::vector<std::uint64_t>& rows() const { return best_rows_; }
    const std::vector<std::size_t>& left_order() const { return best_order_; }

    /// Final position of every local right vertex.
    std::vector<std::size_t> right_positions() const
    {
        std::vector<std::size_t> pos(b_);
        std::size_t next = 0;
        for (std::uint64_t cell : best_cells_) {
            while (cell) {
                const int j = std::countr_zero(cell);
                pos[static_cast<std::size_t>(j)] = next++;
                cell &= cell - 1;
            }
        }
        return pos;
    }

private:
    std::uint64_t row_for(std::size_t u, const std::vector<std::uint64_t>& cells) const
    {
        std::uint64_t row = 0;
        std::size_t pos = 0;
        for (std::uint64_t cell : cells) {
            const auto hits = static_cast<std::size_t>(std::popcount(nbr_[u] & cell));
            for (std::size_t k = 0; k < hits; ++k)
                row |= position_bit(pos + k);
            pos += static_cast<std::size_t>(std::popcount(cell));
        }
        return row;
    }

    // <0, 0, >0 comparing the current path (plus `next_row`) against the incumbent prefix.
    int compare_prefix(std::uint64_t next_row) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] != best_rows_[i])
                return rows_[i] < best_rows_[i] ? -1 : 1;
        const std::uint64_t incumbent = best_rows_[rows_.size()];
        if (next_row != incumbent)
            return next_row < incumbent ? -1 : 1;
        return 0;
    }

    void descend(const std::vector<std::uint64_t>& cells, std::uint64_t used)
    {
        const std::size_t level = rows_.size();
        if (level == a_) {
            if (!have_best_ || std::lexicographical_compare(best_rows_.begin(), best_rows_.end(), rows_.begin(), rows_.end())) {
                best_rows_ = rows_;
                best_order_ = order_;
                best_cells_ = cells;
                have_best_ = true;
            }
            return;
        }

        std::uint64_t max_row = 0;
        bool any = false;
        std::vector<std::uint64_t> candidate_rows(a_, 0);
        for (std::size_t u = 0; u < a_; ++u) {
            if (used >> u & 1U)
                continue;
            candidate_rows[u] = row_for(u, cells);
            if (!any || candidate_rows[u] > max_row)
                max_row = candidate_rows[u];
            any = true;
        }
        if (have_best_ && compare_prefix(max_row) < 0)
            return;

        std::vector<std::uint64_t> tried;
        for (std::size_t u = 0; u < a_; ++u) {
            if ((used >> u & 1U) || candidate_rows[u] != max_row)
                continue;
            // Left twins lead to isomorphic subtrees.
            if (std::find(tried.begin(), tried.end(), nbr_[u]) != tried.end())
                continue;
            tried.push_back(nbr_[u]);

            std::vector<std::uint64_t> refined;
            refined.reserve(cells.size() + 1);
            for (std::uint64_t cell : cells) {
                const std::uint64_t in = cell & nbr_[u];
                const std::uint64_t out = cell & ~nbr_[u];
                if (in)
                    refined.push_back(in);
                if (out)
                    refined.push_back(out);
            }
            rows_.push_back(max_row);
            order_.push_back(u);
            descend(refined, used | (std::uint64_t{1} << u));
            rows_.pop_back();
            order_.pop_back();
            if (have_best_ && compare_prefix(max_row) < 0)
                return;
        }
    }

    std::vector<std::uint64_t> nbr_;
    std::size_t a_;
    std::size_t b_;

    std::vector<std::uint64_t> rows_;
    std::vector<std::size_t> order_;

    bool have_best_ = false;
    std::vector<std::uint64_t> best_rows_;
    std::vector<std::size_t> best_order_;
    std::vector<std::uint64_t> best_cells_;
};

struct ComponentCode {
    std::vector<std::uint64_t> key; // {a + b, a, b, rows...}
    std::vector<std::size_t> left;  // global left ids in canonical row order
    std::vector<std::size_t> right; // global right ids in canonical column order
    std::vector<std::uint64_t> rows;
};

} // namespace

CanonicalForm canonicalize(const BipartiteGraph& g)
{
    const std::size_t nl = g.n_left();
    const auto labels = component_labels(g);
    const std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;

    std::vector<std::vector<std::size_t>> lefts(count), rights(count);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (v < nl)
            lefts[labels[v]].push_back(v);
        else
            rights[labels[v]].push_back(v - nl);
    }

    // Local right index of every right vertex within its component.
    std::vector<std::size_t> local_right(g.n_right());
    for (const auto& rs : rights)
        for (std::size_t j = 0; j < rs.size(); ++j)
            local_right[rs[j]] = j;
    std::vector<std::size_t> local_left(nl);
    for (const auto& ls : lefts)
        for (std::size_t i = 0; i < ls.size(); ++i)
            local_left[ls[i]] = i;

    std::vector<std::vector<std::uint64_t>> nbrs(count);
    for (std::size_t c = 0; c < count; ++c) {
        if (rights[c].size() > max_component_right)
            throw capacity_error("canonical form supports components with at most 64 right vertices", max_component_right,
                                 rights[c].size());
        nbrs[c].assign(lefts[c].size(), 0);
    }
    for (const Edge& e : g.edges()) {
        const std::size_t c = labels[e.l];
        nbrs[c][local_left[e.l]] |= std::uint64_t{1} << local_right[e.r];
    }

    std::vector<ComponentCode> codes(count);
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t a = lefts[c].size();
        const std::size_t b = rights[c].size();
        ComponentCanon canon(nbrs[c], b);
        canon.run();

        ComponentCode& code = codes[c];
        code.rows = canon.rows();
        code.key = {a + b, a, b};
        code.key.insert(code.key.end(), code.rows.begin(), code.rows.end());
        for (std::size_t local : canon.left_order())
            code.left.push_back(lefts[c][local]);
        const auto positions = canon.right_positions();
        code.right.assign(b, 0);
        for (std::size_t j = 0; j < b; ++j)
            code.right[positions[j]] = rights[c][j];
    }
    std::sort(codes.begin(), codes.end(), [](const ComponentCode& x, const ComponentCode& y) { return x.key > y.key; });

    CanonicalForm out;
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    std::uint32_t left_base = 0;
    std::uint32_t right_base = 0;
    for (const ComponentCode& code : codes) {
        out.key.insert(out.key.end(), code.key.begin(), code.key.end());
        for (std::size_t i = 0; i < code.rows.size(); ++i) {
            std::uint64_t row = code.rows[i];
            while (row) {
                const int bit = std::countl_zero(row);
                edges.push_back({left_base + static_cast<std::uint32_t>(i), right_base + static_cast<std::uint32_t>(bit)});
                row &= ~(std::uint64_t{1} << (63 - bit));
            }
        }
        left_base += static_cast<std::uint32_t>(code.left.size());
        right_base += static_cast<std::uint32_t>(code.right.size());
    }
    out.graph = BipartiteGraph(g.n_left(), g.n_right(), std::move(edges));
    return out;
}

BipartiteGraph canonical_form(const BipartiteGraph& g) { return canonicalize(g).graph; }

bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b)
{
    if (a.n_left() != b.n_left() || a.n_right() != b.n_right() || a.edge_count() != b.edge_count())
        return false;
    return canonicalize(a).key == canonicalize(b).key;
}

HalfRegularEnumerator::HalfRegularEnumerator(std::size_t n, std::size_t d) : n_(n), d_(d)
{
    if (n == 0)
        throw std::invalid_argument("enumeration needs n >= 1");
    if (n > 64)
        throw capacity_error("enumeration supports n <= 64", 64, n);
    if (d > n) {
        exhausted_ = true;
        return;
    }
    const std::uint64_t limit = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (d == 0) {
        masks_.push_back(0);
    } else {
        // Gosper's hack over all n-bit masks with d bits set, ascending.
        std::uint64_t m = (d == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
        while (true) {
            masks_.push_back(m);
            const std::uint64_t c = m & (0 - m);
            const std::uint64_t r = m + c;
            if (r == 0)
                break;
            const std::uint64_t next = (((r ^ m) >> 2) / c) | r;
            if ((next & ~limit) != 0)
                break;
            m = next;
        }
    }
    odometer_.assign(n, 0);
}

bool HalfRegularEnumerator::advance()
{
    const std::size_t top = masks_.size() - 1;
    for (std::size_t i = n_; i-- > 1;) {
        if (odometer_[i] < top) {
            const std::size_t value = odometer_[i] + 1;
            for (std::size_t j = i; j < n_; ++j)
                odometer_[j] = value;
            return true;
        }
    }
    return false;
}

BipartiteGraph HalfRegularEnumerator::current_graph() const
{
    std::vector<Edge> edges;
    edges.reserve(n_ * d_);
    for (std::size_t r = 0; r < n_; ++r) {
        std::uint64_t m = masks_[odometer_[r]];
        while (m) {
            edges.push_back({static_cast<std::uint32_t>(std::countr_zero(m)), static_cast<std::uint32_t>(r)});
            m &= m - 1;
        }
    }
    return BipartiteGraph(n_, n_, std::move(edges));
}

std::optional<BipartiteGraph> HalfRegularEnumerator::next()
{
    while (!exhausted_) {
        if (started_ && !advance()) {
            exhausted_ = true;
            break;
        }
        started_ = true;
        ++examined_;
        CanonicalForm form = canonicalize(current_graph());
        if (seen_.insert(form.key).second)
            return std::move(form.graph);
    }
    return std::nullopt;
}

std::vector<BipartiteGraph> enumerate_half_regular(std::size_t n, std::size_t d)
{
    HalfRegularEnumerator it(n, d);
    std::vector<BipartiteGraph> out;
    while (auto g = it.next())
        out.push_back(std::move(*g));
    return out;
}

} // namespace bicascade
