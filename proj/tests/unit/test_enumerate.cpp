#include <doctest.h>

#include "bicascade/enumerate.hpp"
#include "bicascade/error.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace bicascade;

namespace {

std::size_t partitions(std::size_t n)
{
    // p(n) by the standard coin-change recurrence.
    std::vector<std::size_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::size_t part = 1; part <= n; ++part)
        for (std::size_t s = part; s <= n; ++s)
            ways[s] += ways[s - part];
    return ways[n];
}

std::size_t classes_by_bruteforce(std::size_t n, std::size_t d)
{
    std::vector<BipartiteGraph> reps;
    for (const auto& g : oracle::all_labelled_half_regular(n, d)) {
        bool known = false;
        for (const auto& r : reps)
            if (oracle::isomorphic_bruteforce(g, r)) {
                known = true;
                break;
            }
        if (!known)
            reps.push_back(g);
    }
    return reps.size();
}

} // namespace

TEST_SUITE("enumerate")
{
    TEST_CASE("small counts")
    {
        CHECK(enumerate_half_regular(4, 1).size() == 5);
        CHECK(enumerate_half_regular(2, 2).size() == 1);
        CHECK(enumerate_half_regular(2, 2).front() == canonical_form(gen_kdd(2, 2)));
        CHECK(enumerate_half_regular(1, 1).size() == 1);
        CHECK(enumerate_half_regular(3, 4).empty());
        CHECK(enumerate_half_regular(3, 0).size() == 1);
        CHECK_THROWS_AS(enumerate_half_regular(0, 1), std::invalid_argument);
    }

    TEST_CASE("d = 1 counts are partition numbers")
    {
        for (std::size_t n = 1; n <= 10; ++n)
            CHECK(enumerate_half_regular(n, 1).size() == partitions(n));
    }

    TEST_CASE("counts agree with brute-force isomorphism classes")
    {
        for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}, {4, 3}, {4, 1}}) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(enumerate_half_regular(n, d).size() == classes_by_bruteforce(n, d));
        }
    }

    TEST_CASE("enumerated graphs validate and are canonical")
    {
        Rng rng(3);
        for (auto [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 2}, {6, 2}, {5, 3}, {6, 1}}) {
            const auto all = enumerate_half_regular(n, d);
            for (const auto& g : all) {
                CHECK(validate(g, {d}));
                CHECK(canonical_form(g) == g);
                for (int t = 0; t < 3; ++t)
                    CHECK(canonical_form(gen::shuffled(g, rng)) == g);
            }
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = i + 1; j < all.size() && j < i + 4; ++j)
                    CHECK_FALSE(isomorphic(all[i], all[j]));
        }
    }

    TEST_CASE("canonical form on random graphs")
    {
        Rng rng(19);
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = gen::random_bipartite(1 + rng.below(5), 1 + rng.below(5), 0.45, rng);
            const auto h = gen::shuffled(g, rng);
            CHECK(canonical_form(g) == canonical_form(h));
            CHECK(canonicalize(g).key == canonicalize(h).key);
            CHECK(isomorphic(g, h));
            const auto k = gen::random_bipartite(g.n_left(), g.n_right(), 0.45, rng);
            CHECK(isomorphic(g, k) == oracle::isomorphic_bruteforce(g, k));
        }
    }

    TEST_CASE("lazy enumerator")
    {
        HalfRegularEnumerator it(5, 1);
        std::size_t count = 0;
        while (auto g = it.next())
            ++count;
        CHECK(count == 7);
        CHECK(it.candidates_examined() >= count);
        CHECK_FALSE(it.next());
        CHECK_THROWS_AS(HalfRegularEnumerator(65, 1), capacity_error);
    }
}
