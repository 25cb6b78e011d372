#include "bicascade/threshold.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "adjacency.hpp"
#include "bicascade/error.hpp"
#include "bicascade/rng.hpp"
#include "parallel.hpp"

namespace bicascade {

namespace {

constexpr double mass_tolerance = 1e-12;

// Thresholds drawn per vertex, dynamics run in rounds; scratch is reused across samples.
class ThresholdRunner {
public:
    explicit ThresholdRunner(const BipartiteGraph& g) : adj_(g), threshold_(adj_.vertices()), count_(adj_.vertices()), infected_(adj_.vertices()) {}

    std::size_t run(const std::vector<std::size_t>& thresholds) { return run_with(thresholds); }

    std::size_t sample(const ThresholdDistribution& dist, Rng& rng)
    {
        for (std::size_t v = 0; v < threshold_.size(); ++v)
            threshold_[v] = dist.draw(rng.uniform());
        return run_with(threshold_);
    }

    const std::vector<char>& infected() const { return infected_; }

private:
    std::size_t run_with(const std::vector<std::size_t>& thresholds)
    {
        const std::size_t n = adj_.vertices();
        std::fill(count_.begin(), count_.end(), 0);
        frontier_.clear();
        for (std::size_t v = 0; v < n; ++v) {
            infected_[v] = thresholds[v] == 0;
            if (infected_[v])
                frontier_.push_back(v);
        }
        std::size_t total = frontier_.size();
        while (!frontier_.empty()) {
            touched_.clear();
            for (std::size_t v : frontier_) {
                for (const auto* arc = adj_.begin(v); arc != adj_.end(v); ++arc) {
                    if (!infected_[arc->to]) {
                        ++count_[arc->to];
                        touched_.push_back(arc->to);
                    }
                }
            }
            // Decide the whole round before applying it.
            next_.clear();
            for (std::size_t w : touched_) {
                if (!infected_[w] && thresholds[w] != never && count_[w] >= thresholds[w]) {
                    infected_[w] = 1;
                    next_.push_back(w);
                }
            }
            total += next_.size();
            frontier_.swap(next_);
        }
        return total;
    }

    detail::Adjacency adj_;
    std::vector<std::size_t> threshold_;
    std::vector<std::size_t> count_;
    std::vector<char> infected_;
    std::vector<std::size_t> frontier_;
    std::vector<std::size_t> touched_;
    std::vector<std::size_t> next_;
};

double binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0.0;
    k = std::min(k, n - k);
    double out = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
    return out;
}

} // namespace

ThresholdDistribution::ThresholdDistribution(std::vector<double> probs, double residual)
    : probs_(std::move(probs)), residual_(residual)
{
    double total = residual_;
    if (!(residual_ >= 0.0))
        throw std::invalid_argument("threshold residual mass must be non-negative");
    cumulative_.reserve(probs_.size());
    double running = 0.0;
    for (double q : probs_) {
        if (!(q >= 0.0))
            throw std::invalid_argument("threshold probabilities must be non-negative");
        running += q;
        cumulative_.push_back(running);
        total += q;
    }
    if (std::abs(total - 1.0) > mass_tolerance)
        throw std::invalid_argument("threshold probabilities and residual must sum to 1, got " + std::to_string(total));
}

ThresholdDistribution ThresholdDistribution::truncated(std::size_t cutoff) const
{
    if (cutoff + 1 >= probs_.size())
        return *this;
    std::vector<double> head(probs_.begin(), probs_.begin() + static_cast<std::ptrdiff_t>(cutoff + 1));
    double tail = residual_;
    for (std::size_t i = cutoff + 1; i < probs_.size(); ++i)
        tail += probs_[i];
    return ThresholdDistribution(std::move(head), tail);
}

std::size_t ThresholdDistribution::draw(double u) const noexcept
{
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end())
        return never;
    return static_cast<std::size_t>(it - cumulative_.begin());
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

ThresholdDistribution ThresholdDistribution::parse(std::string_view literal)
{
    std::vector<double> probs;
    double residual = 0.0;
    bool explicit_residual = false;
    double sum = 0.0;

    auto fail = [&](const std::string& why) {
        return parse_error("bad threshold distribution '" + std::string(literal) + "': " + why);
    };

    std::size_t pos = 0;
    while (pos < literal.size()) {
        std::size_t comma = literal.find(',', pos);
        if (comma == std::string_view::npos)
            comma = literal.size();
        const std::string_view item = literal.substr(pos, comma - pos);
        pos = comma + 1;
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos)
            throw fail("expected index:probability");
        const std::string key(trim(item.substr(0, colon)));
        const std::string value(trim(item.substr(colon + 1)));

        double q = 0.0;
        try {
            std::size_t used = 0;
            q = std::stod(value, &used);
            if (used != value.size())
                throw fail("trailing text in probability '" + value + "'");
        } catch (const std::logic_error&) {
            throw fail("probability '" + value + "' is not a number");
        }
        if (key == "inf") {
            residual = q;
            explicit_residual = true;
            continue;
        }
        std::size_t index = 0;
        const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
        if (ec != std::errc{} || ptr != key.data() + key.size())
            throw fail("threshold '" + key + "' is not a non-negative integer");
        if (index > 1'000'000)
            throw fail("threshold '" + key + "' is too large");
        if (probs.size() <= index)
            probs.resize(index + 1, 0.0);
        probs[index] += q;
        sum += q;
    }
    if (!explicit_residual) {
        residual = 1.0 - sum;
        if (std::abs(residual) <= mass_tolerance)
            residual = 0.0;
    }
    try {
        return ThresholdDistribution(std::move(probs), residual);
    } catch (const std::invalid_argument& e) {
        throw fail(e.what());
    }
}

ThresholdDistribution cascade_as_threshold(InfectionParams ip, std::size_t cutoff)
{
    check_params(ip);
    std::vector<double> probs(cutoff + 1);
    probs[0] = ip.mu;
    double tail = 1.0 - ip.mu; // mass of thresholds >= i
    for (std::size_t i = 1; i <= cutoff; ++i) {
        probs[i] = (1.0 - ip.mu) * ip.p * power(1.0 - ip.p, i - 1);
        tail -= probs[i];
    }
    // Closed form of the remaining tail avoids accumulated subtraction error.
    double residual = (1.0 - ip.mu) * power(1.0 - ip.p, cutoff);
    if (std::abs(residual - tail) > 1e-9)
        residual = std::max(0.0, tail);
    return ThresholdDistribution(std::move(probs), residual);
}

std::vector<bool> run_threshold_cascade(const BipartiteGraph& g, const std::vector<std::size_t>& thresholds)
{
    if (thresholds.size() != g.vertex_count())
        throw std::invalid_argument("need one threshold per vertex");
    ThresholdRunner runner(g);
    runner.run(thresholds);
    const auto& flags = runner.infected();
    return {flags.begin(), flags.end()};
}

std::vector<std::size_t> draw_thresholds(const BipartiteGraph& g, const ThresholdDistribution& dist, std::uint64_t seed)
{
    Rng rng = Rng::substream(seed, 0);
    std::vector<std::size_t> out(g.vertex_count());
    for (auto& t : out)
        t = dist.draw(rng.uniform());
    return out;
}

std::vector<bool> threshold_cascade_sample(const BipartiteGraph& g, const ThresholdDistribution& dist, std::uint64_t seed)
{
    return run_threshold_cascade(g, draw_thresholds(g, dist, seed));
}

Estimate threshold_fraction_mc(const BipartiteGraph& g, const ThresholdDistribution& dist, std::size_t samples,
                               std::uint64_t seed, const MonteCarloOptions& opts)
{
    if (samples < 2)
        throw std::invalid_argument("Monte Carlo estimation needs at least 2 samples");
    if (g.vertex_count() == 0)
        throw std::invalid_argument("infected fraction is undefined on a graph with no vertices");
    const double scale = 1.0 / static_cast<double>(g.vertex_count());
    auto make_sampler = [&] {
        return [&, runner = ThresholdRunner(g)](std::size_t index) mutable {
            Rng rng = Rng::substream(seed, index);
            return static_cast<double>(runner.sample(dist, rng)) * scale;
        };
    };
    const auto stats = detail::chunked_samples(samples, opts.threads, make_sampler);
    return {stats.mean(), stats.std_error(), samples, false};
}

double star_threshold_exact(std::size_t j, const ThresholdDistribution& dist)
{
    if (j == 0)
        throw std::invalid_argument("star needs j >= 1");

    // Leaves fall into three classes: threshold 0 (by nature), threshold 1
    // (infected iff the centre is), and anything else (never infected, since
    // a leaf's only neighbour is the centre). The centre only sees the
    // nature-infected leaves before its own infection.
    const double q0 = dist.prob(0);
    const double q1 = dist.prob(1);
    const double rest = std::max(0.0, 1.0 - q0 - q1);

    std::vector<double> centre_cdf(j + 1);
    double running = 0.0;
    for (std::size_t a = 0; a <= j; ++a) {
        running += dist.prob(a);
        centre_cdf[a] = running;
    }

    double expected = 0.0;
    for (std::size_t a = 0; a <= j; ++a) {
        for (std::size_t b = 0; a + b <= j; ++b) {
            const double weight = binomial(j, a) * binomial(j - a, b) * std::pow(q0, static_cast<double>(a)) *
                                  std::pow(q1, static_cast<double>(b)) * std::pow(rest, static_cast<double>(j - a - b));
            if (weight == 0.0)
                continue;
            const double centre = centre_cdf[a];
            expected += weight * (centre * (1.0 + static_cast<double>(b)) + static_cast<double>(a));
        }
    }
    expected += static_cast<double>(j - 1) * q0;
    return expected / (2.0 * static_cast<double>(j));
}

} // namespace bicascade
