#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "laygap/graph.hpp"
#include "laygap/sampler.hpp"

using namespace laygap;

TEST_CASE("graph construction normalizes edges") {
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);

    Graph single(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    Graph dedup(4, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dedup.edge_count() == 1);

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
}

TEST_CASE("dag construction verifies acyclicity") {
    Dag chain(3, {{0, 1}, {1, 2}});
    CHECK(chain.edge_count() == 2);

    CHECK_THROWS_WITH_AS(Dag(3, {{0, 1}, {1, 2}, {2, 0}}),
                         doctest::Contains("cycle"), std::invalid_argument);

    Dag two_sources(3, {{0, 2}, {1, 2}});
    CHECK(two_sources.in_neighbors(2).size() == 2);

    CHECK_THROWS_AS(Dag(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Dag(2, {{0, 2}}), std::out_of_range);
}

TEST_CASE("layout validity") {
    Dag chain(3, {{0, 1}, {1, 2}});
    CHECK(is_valid_layout(chain, {0, 1, 2}));
    CHECK_FALSE(is_valid_layout(chain, {2, 1, 0}));
    CHECK_FALSE(is_valid_layout(chain, {0, 0, 2}));

    Graph g(3, {{0, 1}, {1, 2}});
    Layout perm{2, 0, 1};
    CHECK(is_valid_layout(g, perm));

    CHECK_THROWS_AS(is_valid_layout(g, Layout{0, 1}), std::invalid_argument);
}

TEST_CASE("downset membership") {
    Dag chain(3, {{0, 1}, {1, 2}});
    VertexSet s0;
    s0.insert(0);
    CHECK(is_downset(chain, s0));
    VertexSet s1;
    s1.insert(1);
    CHECK_FALSE(is_downset(chain, s1));
    CHECK(is_downset(chain, VertexSet{}));
    CHECK(is_downset(chain, full_set(3)));
}

TEST_CASE("downset enumeration on fixed shapes") {
    Dag chain(3, {{0, 1}, {1, 2}});
    auto ds = enumerate_downsets(chain);
    REQUIRE(ds.size() == 4);  // chain has n+1 downsets

    Dag edgeless(3, {});
    CHECK(enumerate_downsets(edgeless).size() == 8);

    // size filter oracle: check against all 2^3 subsets directly
    Dag vee(3, {{0, 2}, {1, 2}});
    std::set<std::uint64_t> expected;
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        VertexSet s{bits};
        if (s.size() == 1 && is_downset(vee, s)) expected.insert(bits);
    }
    CHECK(expected == std::set<std::uint64_t>{1, 2});
    auto filtered = enumerate_downsets(vee, 1);
    std::set<std::uint64_t> got;
    for (const auto& s : filtered) got.insert(s.bits);
    CHECK(got == expected);
}

TEST_CASE("every downset is a prefix of a valid layout and vice versa") {
    Rng rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng.next_below(6));
        Dag d = sample_dnp(n, 0.4, rng.next());
        auto ds = enumerate_downsets(d);

        // brute-force reference enumeration
        std::set<std::uint64_t> ref;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
            if (is_downset(d, VertexSet{bits})) ref.insert(bits);
        std::set<std::uint64_t> got;
        for (const auto& s : ds) got.insert(s.bits);
        CHECK(got == ref);

        for (const auto& s : ds) {
            Layout layout = layout_with_prefix(d, s);
            CHECK(is_valid_layout(d, layout));
            VertexSet prefix;
            for (int i = 0; i < s.size(); ++i) prefix.insert(layout[i]);
            CHECK(prefix == s);
        }

        // every prefix of a valid layout is a downset
        Layout topo = canonical_topological_order(d);
        VertexSet prefix;
        for (int k = 0; k < n; ++k) {
            CHECK(is_downset(d, prefix));
            prefix.insert(topo[k]);
        }
    }
}

TEST_CASE("graph file parse and write") {
    auto parsed = parse_graph_file("ugraph 3 2\n0 1\n1 2\n");
    REQUIRE(std::holds_alternative<Graph>(parsed));
    CHECK(std::get<Graph>(parsed) == Graph(3, {{0, 1}, {1, 2}}));

    auto dag_parsed = parse_graph_file("dag 2 1\n0 1\n");
    REQUIRE(std::holds_alternative<Dag>(dag_parsed));

    CHECK_THROWS_WITH_AS(parse_graph_file("dag 2 2\n0 1\n1 0\n"),
                         doctest::Contains("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_file("graph 3 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_file("ugraph 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_file("ugraph 3 1\n0 5\n"), std::out_of_range);

    // comments are skipped
    auto commented = parse_graph_file("# a comment\nugraph 2 1\n0 1\n");
    CHECK(std::get<Graph>(commented).edge_count() == 1);
}

TEST_CASE("round trip on random graphs") {
    Rng rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng.next_below(10));
        Graph g = sample_gnp(n, 0.5, rng.next());
        auto back = parse_graph_file(write_graph_file(g));
        CHECK(std::get<Graph>(back) == g);

        Dag d = sample_dnp(n, 0.5, rng.next());
        auto dback = parse_graph_file(write_graph_file(d));
        CHECK(std::get<Dag>(dback) == d);
    }
}

TEST_CASE("writer output is normalized") {
    Graph g(3, {{2, 1}, {1, 0}});
    CHECK(write_graph_file(g) == "ugraph 3 2\n0 1\n1 2\n");
}
