#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace bicascade::detail {

// Union by size with path halving. Tracks vertex and edge counts per root.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), edges_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    void reset()
    {
        std::iota(parent_.begin(), parent_.end(), 0);
        std::fill(size_.begin(), size_.end(), 1);
        std::fill(edges_.begin(), edges_.end(), 0);
    }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    std::size_t size_of_root(std::size_t root) const { return size_[root]; }
    std::size_t edges_of_root(std::size_t root) const { return edges_[root]; }

    /// Adds one edge between a and b. Returns the surviving root.
    std::size_t add_edge(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            ++edges_[a];
            return a;
        }
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        edges_[a] += edges_[b] + 1;
        return a;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> edges_;
};

} // namespace bicascade::detail
