#include <doctest.h>

#include <numeric>
#include <sstream>

#include "bicascade/error.hpp"
#include "bicascade/graph.hpp"
#include "bicascade/io.hpp"
#include "generators.hpp"

using namespace bicascade;

TEST_SUITE("graph")
{
    TEST_CASE("construction")
    {
        const auto single = make_graph(1, 1, {{0, 0}});
        CHECK(single.vertex_count() == 2);
        CHECK(single.edge_count() == 1);

        const auto k22 = make_graph(2, 2, {{1, 1}, {0, 0}, {1, 0}, {0, 1}});
        CHECK(k22.edge_count() == 4);
        CHECK(k22.edges()[0] == Edge{0, 0});
        CHECK(k22.edges()[3] == Edge{1, 1});

        CHECK_THROWS_AS(make_graph(1, 1, {{0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(make_graph(1, 1, {{1, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(make_graph(2, 2, {{0, 1}, {0, 1}}), std::invalid_argument);
    }

    TEST_CASE("validate")
    {
        CHECK(validate(make_graph(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), {2}));
        CHECK_FALSE(validate(make_graph(1, 1, {{0, 0}}), {2}));
        CHECK(validate(make_graph(2, 2, {{0, 0}, {0, 1}}), {1}));
        CHECK_FALSE(validate(make_graph(2, 3, {{0, 0}, {0, 1}, {0, 2}}), {1}));
        CHECK_FALSE(validate(make_graph(2, 2, {{0, 0}}), {1}));
        CHECK(validate(make_graph(2, 2, {}), {0}));
    }

    TEST_CASE("generators")
    {
        CHECK(gen_matching(1) == make_graph(1, 1, {{0, 0}}));
        CHECK(components(gen_matching(3)).component_sizes == std::vector<std::size_t>{2, 2, 2});
        CHECK(validate(gen_matching(4), {1}));

        CHECK(gen_star(1) == gen_matching(1));
        const auto s3 = gen_star(3);
        CHECK(s3.left_degrees() == std::vector<std::size_t>{3, 0, 0});
        CHECK(s3.right_degrees() == std::vector<std::size_t>{1, 1, 1});
        const auto s5 = components(gen_star(5));
        CHECK(gen_star(5).vertex_count() == 10);
        CHECK(gen_star(5).edge_count() == 5);
        CHECK(s5.component_sizes.size() == 5);
        CHECK(std::count(s5.component_sizes.begin(), s5.component_sizes.end(), 6u) == 1);
        CHECK(s5.isolated_count == 4);

        const auto k42 = components(gen_kdd(4, 2));
        CHECK(k42.component_sizes == std::vector<std::size_t>{4, 4});
        CHECK(k42.component_edge_counts == std::vector<std::size_t>{4, 4});
        CHECK(gen_kdd(3, 1) == gen_matching(3));
        CHECK_THROWS_AS(gen_kdd(3, 2), std::invalid_argument);

        CHECK(gen_kdn(5, 1) == gen_star(5));
        const auto kdn = gen_kdn(4, 2);
        CHECK(kdn.right_degrees() == std::vector<std::size_t>{2, 2, 2, 2});
        CHECK(kdn.left_degrees() == std::vector<std::size_t>{4, 4, 0, 0});
        for (std::size_t d = 1; d <= 4; ++d) {
            CHECK(gen_kdn(d, d) == gen_kdd(d, d));
            CHECK(isolated_left_count(gen_kdn(d, d)) == 0);
        }
        CHECK_THROWS_AS(gen_kdn(2, 3), std::invalid_argument);
        CHECK_THROWS_AS(gen_matching(0), std::invalid_argument);
    }

    TEST_CASE("components")
    {
        const auto star = components(gen_star(3));
        CHECK(star.component_sizes == std::vector<std::size_t>{4, 1, 1});
        CHECK(star.isolated_count == 2);

        Rng rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = gen::random_bipartite(1 + rng.below(7), 1 + rng.below(7), 0.3, rng);
            const auto c = components(g);
            CHECK(std::accumulate(c.component_sizes.begin(), c.component_sizes.end(), std::size_t{0}) == g.vertex_count());
            CHECK(std::accumulate(c.component_edge_counts.begin(), c.component_edge_counts.end(), std::size_t{0}) ==
                  g.edge_count());
            std::size_t singles = 0;
            for (std::size_t i = 0; i < c.component_sizes.size(); ++i)
                if (c.component_sizes[i] == 1) {
                    ++singles;
                    CHECK(c.component_edge_counts[i] == 0);
                }
            CHECK(c.isolated_count == singles);
            const auto labels = component_labels(g);
            for (const Edge& e : g.edges())
                CHECK(labels[e.l] == labels[g.n_left() + e.r]);
        }
    }

    TEST_CASE("edits return new graphs")
    {
        const auto g = gen_matching(2);
        const auto h = g.with_edge({0, 1});
        CHECK(g.edge_count() == 2);
        CHECK(h.edge_count() == 3);
        CHECK(h.has_edge({0, 1}));
        CHECK_THROWS_AS(h.with_edge({0, 1}), std::invalid_argument);
        CHECK(h.subgraph({true, false, true}) == make_graph(2, 2, {{0, 0}, {1, 1}}));
        const std::vector<std::size_t> lp{1, 0}, rp{0, 1};
        CHECK(gen_star(2).relabeled(lp, rp) == make_graph(2, 2, {{1, 0}, {1, 1}}));
    }
}

TEST_SUITE("io")
{
    TEST_CASE("graph text round trip")
    {
        Rng rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const auto g = gen::random_bipartite(1 + rng.below(6), 1 + rng.below(6), 0.4, rng);
            const std::string text = format_graph(g);
            CHECK(parse_graph(text) == g);
            CHECK(format_graph(parse_graph(text)) == text);
        }
    }

    TEST_CASE("comments and blank lines")
    {
        const auto g = parse_graph("# a star\n\n2 2\n# edge list\n0 1\n0 0\n");
        CHECK(g == gen_star(2));
        CHECK(format_graph(g) == "2 2\n0 0\n0 1\n");
    }

    TEST_CASE("malformed graph text")
    {
        CHECK_THROWS_AS(parse_graph(""), parse_error);
        CHECK_THROWS_AS(parse_graph("2\n"), parse_error);
        CHECK_THROWS_AS(parse_graph("2 2\n0\n"), parse_error);
        CHECK_THROWS_AS(parse_graph("2 2\n0 2\n"), parse_error);
        CHECK_THROWS_AS(parse_graph("2 2\n0 x\n"), parse_error);
        CHECK_THROWS_AS(parse_graph("2 2\n0 1\n0 1\n"), parse_error);
        CHECK_THROWS_AS(parse_graph("2 2\n-1 1\n"), parse_error);
        try {
            parse_graph("2 2\n0 0\n5 0\n");
            FAIL("expected a parse error");
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
    }

    TEST_CASE("instance comments")
    {
        std::istringstream in("# d=2\n# certificate=3\n2 2\n0 0\n1 1\n");
        const auto inst = read_instance(in);
        CHECK(inst.d.d == 2);
        REQUIRE(inst.certificate);
        CHECK(*inst.certificate == 3);
        std::ostringstream out;
        write_instance(out, inst);
        std::istringstream again(out.str());
        const auto back = read_instance(again, 7);
        CHECK(back.graph == inst.graph);
        CHECK(back.d.d == 2);
        CHECK(back.certificate == inst.certificate);

        std::istringstream plain("1 1\n0 0\n");
        CHECK(read_instance(plain, 4).d.d == 4);
        std::istringstream bad("# d=two\n1 1\n");
        CHECK_THROWS_AS(read_instance(bad), parse_error);
    }

    TEST_CASE("exact cover and simple graph text")
    {
        std::istringstream in("4 2\n0 1\n2 3\n1 2\n");
        const auto ec = read_exact_cover(in);
        CHECK(ec.universe_size == 4);
        CHECK(ec.k == 2);
        CHECK(ec.sets == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}, {1, 2}});
        std::ostringstream out;
        write_exact_cover(out, ec);
        CHECK(out.str() == "4 2\n0 1\n2 3\n1 2\n");
        std::istringstream bad("3 2\n0 3\n");
        CHECK_THROWS_AS(read_exact_cover(bad), parse_error);

        std::istringstream tri("3\n0 1\n1 2\n0 2\n");
        const auto sg = read_simple_graph(tri);
        CHECK(sg.n_vertices == 3);
        CHECK(sg.edges.size() == 3);
        std::istringstream oob("3\n0 3\n");
        CHECK_THROWS_AS(read_simple_graph(oob), parse_error);
    }

    TEST_CASE("generator specs")
    {
        CHECK(graph_from_spec("star:5") == gen_star(5));
        CHECK(graph_from_spec("matching:4") == gen_matching(4));
        CHECK(graph_from_spec("kdd:6:2") == gen_kdd(6, 2));
        CHECK(graph_from_spec("kdn:8:3") == gen_kdn(8, 3));
        CHECK_THROWS_AS(graph_from_spec("star"), parse_error);
        CHECK_THROWS_AS(graph_from_spec("star:x"), parse_error);
        CHECK_THROWS_AS(graph_from_spec("kdd:4"), parse_error);
        CHECK_THROWS_AS(graph_from_spec("wheel:4"), parse_error);
        CHECK_THROWS_AS(graph_from_spec("kdd:3:2"), std::invalid_argument);
    }
}
