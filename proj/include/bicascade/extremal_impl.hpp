#pragma once

// Template definitions for extremal.hpp.

#include <stdexcept>
#include <utility>

#include "bicascade/enumerate.hpp"

namespace bicascade {

template <class Objective>
SearchResult minimize_over_half_regular(std::size_t n, std::size_t d, Objective&& objective, double tie_tol)
{
    HalfRegularEnumerator it(n, d);
    std::vector<std::pair<double, BipartiteGraph>> near;
    double best = 0.0;
    std::size_t evaluated = 0;

    while (auto g = it.next()) {
        const double value = objective(*g);
        ++evaluated;
        if (near.empty() || value < best)
            best = value;
        if (value <= best + tie_tol)
            near.emplace_back(value, std::move(*g));
        std::erase_if(near, [&](const auto& entry) { return entry.first > best + tie_tol; });
    }
    if (near.empty())
        throw std::invalid_argument("no half-d-regular graph exists for this (n, d)");

    SearchResult result;
    result.value = best;
    result.evaluated_count = evaluated;
    for (auto& entry : near)
        result.minimizers.push_back(std::move(entry.second));
    return result;
}

} // namespace bicascade
