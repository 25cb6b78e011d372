#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "bicascade/graph.hpp"
#include "bicascade/infection.hpp"
#include "bicascade/percolation.hpp"

namespace bicascade {

/// Threshold value meaning "never infected through neighbours".
inline constexpr std::size_t never = std::numeric_limits<std::size_t>::max();

/**
 * Distribution of per-vertex thresholds: probs[i] is the probability that a
 * vertex needs i infected neighbours, and `residual` is the mass at
 * infinity. Threshold 0 means infected by nature.
 */
class ThresholdDistribution {
public:
    /// Throws std::invalid_argument unless every entry is >= 0 and the total is 1 within 1e-12.
    ThresholdDistribution(std::vector<double> probs, double residual);

    const std::vector<double>& probs() const noexcept { return probs_; }
    double residual() const noexcept { return residual_; }
    double prob(std::size_t i) const noexcept { return i < probs_.size() ? probs_[i] : 0.0; }

    /// Keeps thresholds 0..cutoff and moves the remaining mass to infinity.
    ThresholdDistribution truncated(std::size_t cutoff) const;

    /// Inverse-CDF draw from a uniform u in [0, 1); returns `never` for the residual.
    std::size_t draw(double u) const noexcept;

    /// Parses "0:.6,1:.001,3:.399"; an optional "inf:x" entry sets the residual, otherwise it is 1 - sum.
    static ThresholdDistribution parse(std::string_view literal);

private:
    std::vector<double> probs_;
    std::vector<double> cumulative_;
    double residual_;
};

/// The (mu, p) cascade as a threshold distribution: mu_0 = mu, mu_i = (1-mu) p (1-p)^{i-1}.
ThresholdDistribution cascade_as_threshold(InfectionParams ip, std::size_t cutoff);

/// Synchronous threshold dynamics to the fixed point for given per-vertex thresholds.
std::vector<bool> run_threshold_cascade(const BipartiteGraph& g, const std::vector<std::size_t>& thresholds);

/// Draws one threshold per vertex (unified numbering) from the substream of `seed`.
std::vector<std::size_t> draw_thresholds(const BipartiteGraph& g, const ThresholdDistribution& dist, std::uint64_t seed);

std::vector<bool> threshold_cascade_sample(const BipartiteGraph& g, const ThresholdDistribution& dist, std::uint64_t seed);

Estimate threshold_fraction_mc(const BipartiteGraph& g, const ThresholdDistribution& dist, std::size_t samples,
                               std::uint64_t seed, const MonteCarloOptions& opts = {});

/// Expected infected fraction of a j-star with j-1 isolated left vertices under the threshold model.
double star_threshold_exact(std::size_t j, const ThresholdDistribution& dist);

} // namespace bicascade
