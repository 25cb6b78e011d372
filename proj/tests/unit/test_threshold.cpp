#include <doctest.h>

#include <cmath>

#include "bicascade/error.hpp"
#include "bicascade/infection.hpp"
#include "bicascade/threshold.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace bicascade;

namespace {

ThresholdDistribution random_dist(Rng& rng, std::size_t support)
{
    std::vector<double> w(support);
    double total = 0;
    for (auto& x : w) {
        x = rng.uniform();
        total += x;
    }
    const double residual = rng.uniform();
    total += residual;
    for (auto& x : w)
        x /= total;
    double sum = 0;
    for (double x : w)
        sum += x;
    return ThresholdDistribution(w, 1.0 - sum);
}

} // namespace

TEST_SUITE("threshold")
{
    TEST_CASE("distribution basics")
    {
        const ThresholdDistribution d({0.5, 0.25}, 0.25);
        CHECK(d.prob(0) == 0.5);
        CHECK(d.prob(7) == 0.0);
        CHECK(d.residual() == 0.25);
        CHECK(d.draw(0.0) == 0);
        CHECK(d.draw(0.49) == 0);
        CHECK(d.draw(0.5) == 1);
        CHECK(d.draw(0.8) == never);
        CHECK_THROWS_AS(ThresholdDistribution({0.5, 0.6}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(ThresholdDistribution({-0.1, 1.1}, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(ThresholdDistribution({0.5}, -0.5), std::invalid_argument);

        const auto t = ThresholdDistribution({0.1, 0.2, 0.3, 0.4}, 0.0).truncated(1);
        CHECK(t.probs().size() == 2);
        CHECK(t.residual() == doctest::Approx(0.7));
    }

    TEST_CASE("parse")
    {
        const auto d = ThresholdDistribution::parse("0:.6,1:.001,3:.399");
        CHECK(d.prob(0) == 0.6);
        CHECK(d.prob(1) == 0.001);
        CHECK(d.prob(2) == 0.0);
        CHECK(d.prob(3) == 0.399);
        CHECK(std::abs(d.residual()) < 1e-12);
        const auto r = ThresholdDistribution::parse("0:.5, inf:.5");
        CHECK(r.residual() == 0.5);
        CHECK(ThresholdDistribution::parse("0:.2").residual() == doctest::Approx(0.8));
        CHECK_THROWS_AS(ThresholdDistribution::parse("0:.6,1"), parse_error);
        CHECK_THROWS_AS(ThresholdDistribution::parse("x:.6"), parse_error);
        CHECK_THROWS_AS(ThresholdDistribution::parse("0:abc"), parse_error);
        CHECK_THROWS_AS(ThresholdDistribution::parse("0:.7,1:.7"), parse_error);
    }

    TEST_CASE("cascade as threshold")
    {
        const auto d = cascade_as_threshold({0.5, 0.5}, 2);
        REQUIRE(d.probs().size() == 3);
        CHECK(d.prob(0) == doctest::Approx(0.5));
        CHECK(d.prob(1) == doctest::Approx(0.25));
        CHECK(d.prob(2) == doctest::Approx(0.125));
        CHECK(d.residual() == doctest::Approx(0.125));
        const auto full = cascade_as_threshold({0.3, 1.0}, 4);
        CHECK(full.prob(0) == doctest::Approx(0.3));
        CHECK(full.prob(1) == doctest::Approx(0.7));
        CHECK(full.prob(2) == 0.0);
        CHECK(full.residual() == doctest::Approx(0.0));
        Rng rng(1);
        for (int t = 0; t < 20; ++t) {
            const auto c = cascade_as_threshold({rng.uniform(), rng.uniform()}, rng.below(10));
            double s = c.residual();
            for (double x : c.probs())
                s += x;
            CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("samples")
    {
        const auto g = gen_kdd(4, 2);
        const ThresholdDistribution zero({1.0}, 0.0), inf({}, 1.0);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto a = threshold_cascade_sample(g, zero, seed);
            CHECK(std::count(a.begin(), a.end(), true) == 8);
            const auto b = threshold_cascade_sample(g, inf, seed);
            CHECK(std::count(b.begin(), b.end(), true) == 0);
        }
        // Thresholds: L0 by nature, others need 1 or 2 infected neighbours.
        const auto path = make_graph(2, 2, {{0, 0}, {1, 0}, {1, 1}});
        CHECK(run_threshold_cascade(path, {0, 1, 1, 1}) == std::vector<bool>{true, true, true, true});
        CHECK(run_threshold_cascade(path, {0, 2, 1, 1}) == std::vector<bool>{true, false, true, false});
        CHECK(run_threshold_cascade(path, {0, never, 1, 1}) == std::vector<bool>{true, false, true, false});
    }

    TEST_CASE("truncation above the maximum degree changes nothing")
    {
        Rng rng(2);
        for (int trial = 0; trial < 30; ++trial) {
            const auto g = gen::small_graph(rng, 5, 12);
            const auto dist = random_dist(rng, 9);
            const auto cut = dist.truncated(g.max_degree());
            for (std::uint64_t seed = 0; seed < 20; ++seed)
                CHECK(threshold_cascade_sample(g, dist, seed) == threshold_cascade_sample(g, cut, seed));
        }
    }

    TEST_CASE("threshold model reproduces the cascade")
    {
        Rng rng(3);
        for (int trial = 0; trial < 8; ++trial) {
            const auto g = gen::small_graph(rng, 4, 8);
            const InfectionParams ip{0.2 + 0.6 * rng.uniform(), rng.uniform()};
            const auto dist = cascade_as_threshold(ip, g.max_degree());
            const auto est = threshold_fraction_mc(g, dist, 100000, 50 + trial);
            CHECK(std::abs(est.mean - infected_fraction_exact(g, ip)) <= 4 * est.std_error + 1e-12);
        }
    }

    TEST_CASE("star exact value")
    {
        CHECK(star_threshold_exact(3, ThresholdDistribution({1.0}, 0.0)) == doctest::Approx(1.0));
        CHECK(star_threshold_exact(3, ThresholdDistribution({}, 1.0)) == 0.0);
        Rng rng(4);
        for (int trial = 0; trial < 30; ++trial) {
            const auto dist = random_dist(rng, 1 + rng.below(6));
            for (std::size_t j = 1; j <= 6; ++j) {
                const double want = oracle::star_threshold_bruteforce(j, dist.probs(), dist.residual());
                CHECK(std::abs(star_threshold_exact(j, dist) - want) < 1e-12);
            }
        }
        for (std::size_t j = 1; j <= 6; ++j) {
            const InfectionParams ip{0.55, 0.4};
            CHECK(star_threshold_exact(j, cascade_as_threshold(ip, j)) ==
                  doctest::Approx(star_expected_fraction(j, ip)).epsilon(1e-12));
        }
        CHECK_THROWS_AS(star_threshold_exact(0, ThresholdDistribution({1.0}, 0.0)), std::invalid_argument);
    }

    TEST_CASE("star exact value matches simulation")
    {
        const auto dist = ThresholdDistribution::parse("0:.3,1:.4,2:.1");
        for (std::size_t j = 1; j <= 4; ++j) {
            const auto est = threshold_fraction_mc(gen_star(j), dist, 100000, 9);
            CHECK(std::abs(est.mean - star_threshold_exact(j, dist)) <= 4 * est.std_error);
        }
    }
}
