#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "laygap/sampler.hpp"
#include "laygap/solvers.hpp"

using namespace laygap;

namespace {

const Problem kAllProblems[] = {Problem::Cutwidth, Problem::VertSep, Problem::EdgeBis,
                                Problem::VertBis};

Graph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Dag chain_dag(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Dag(n, edges);
}

}  // namespace

TEST_CASE("complete graph closed forms") {
    for (int n = 2; n <= 10; ++n) {
        Graph kn = complete_graph(n);
        int cw = (n / 2) * ((n + 1) / 2);
        CHECK(solve_min(kn, Problem::Cutwidth).cost == cw);
        CHECK(solve_max(kn, Problem::Cutwidth).cost == cw);
        CHECK(solve_min(kn, Problem::VertSep).cost == n - 1);
        CHECK(solve_min(kn, Problem::EdgeBis).cost == cw);
        CHECK(solve_min(kn, Problem::VertBis).cost == n / 2);
    }
}

TEST_CASE("small instance optima against hand-checked values") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(brute_force(c4, Problem::Cutwidth, Objective::Min) == 2);
    CHECK(solve_min(c4, Problem::Cutwidth).cost == 2);

    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(brute_force(star, Problem::Cutwidth, Objective::Min) == 2);
    CHECK(solve_min(star, Problem::Cutwidth).cost == 2);

    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(brute_force(p3, Problem::Cutwidth, Objective::Max) == 2);
    CHECK(solve_max(p3, Problem::Cutwidth).cost == 2);

    Graph k3 = complete_graph(3);
    for (Problem kind : kAllProblems)
        CHECK(brute_force(k3, kind, Objective::Min) == brute_force(k3, kind, Objective::Max));

    Graph edgeless(5, {});
    for (Problem kind : kAllProblems) {
        CHECK(brute_force(edgeless, kind, Objective::Max) == 0);
        CHECK(solve_max(edgeless, kind).cost == 0);
    }
}

TEST_CASE("chain dag has a unique layout") {
    for (int n = 2; n <= 6; ++n) {
        Dag chain = chain_dag(n);
        for (Problem kind : kAllProblems) {
            GapReport r = gap(chain, kind);
            CHECK(r.min_cost == r.max_cost);
            CHECK(r.gap == doctest::Approx(1.0));
        }
        CHECK(solve_min(chain, Problem::Cutwidth).cost == 1);
        CHECK(solve_max(chain, Problem::Cutwidth).cost == 1);
    }
}

TEST_CASE("gap conventions") {
    GapReport k4 = gap(complete_graph(4), Problem::Cutwidth);
    CHECK(k4.min_cost == 4);
    CHECK(k4.max_cost == 4);
    CHECK(k4.gap == doctest::Approx(1.0));

    // two disjoint edges: a bisection into the two edges has empty boundary
    Graph matching(4, {{0, 1}, {2, 3}});
    CHECK(brute_force(matching, Problem::VertBis, Objective::Min) == 0);
    CHECK(brute_force(matching, Problem::VertBis, Objective::Max) > 0);
    GapReport r = gap(matching, Problem::VertBis);
    CHECK(r.min_cost == 0);
    CHECK(r.max_cost > 0);
    CHECK(std::isinf(r.gap));

    GapReport zero = gap(Graph(4, {}), Problem::Cutwidth);
    CHECK(zero.gap == doctest::Approx(1.0));
}

TEST_CASE("solvers match the brute-force oracle on random instances") {
    Rng rng(101);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        double p = 0.2 + 0.3 * (iter % 3);
        std::uint64_t seed = rng.next();
        Graph g = sample_gnp(n, p, seed);
        Dag d = sample_dnp(n, p, seed);
        for (Problem kind : kAllProblems) {
            CHECK(solve_min(g, kind).cost == brute_force(g, kind, Objective::Min));
            CHECK(solve_max(g, kind).cost == brute_force(g, kind, Objective::Max));
            CHECK(solve_min(d, kind).cost == brute_force(d, kind, Objective::Min));
            CHECK(solve_max(d, kind).cost == brute_force(d, kind, Objective::Max));
        }
    }
}

TEST_CASE("witnesses are valid and attain the reported cost") {
    Rng rng(103);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + static_cast<int>(rng.next_below(9));
        Graph g = sample_gnp(n, 0.5, rng.next());
        Dag d = sample_dnp(n, 0.5, rng.next());
        for (Problem kind : kAllProblems) {
            for (auto r : {solve_min(g, kind), solve_max(g, kind)}) {
                CHECK(is_valid_layout(g, r.witness));
                CHECK(cost(g, r.witness, kind) == r.cost);
            }
            for (auto r : {solve_min(d, kind), solve_max(d, kind)}) {
                CHECK(is_valid_layout(d, r.witness));
                CHECK(cost(d, r.witness, kind) == r.cost);
            }
            GapReport gr = gap(g, kind);
            CHECK(gr.min_cost <= gr.max_cost);
            CHECK((std::isinf(gr.gap) || gr.gap >= 1.0));
        }
    }
}

TEST_CASE("optima are monotone under edge addition") {
    Rng rng(107);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 3 + static_cast<int>(rng.next_below(6));
        Graph g = sample_gnp(n, 0.4, rng.next());
        // pick a missing pair, if any
        std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
        std::pair<Vertex, Vertex> missing{-1, -1};
        for (int u = 0; u < n && missing.first < 0; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!(g.adj_mask(u) >> v & 1)) {
                    missing = {u, v};
                    break;
                }
        if (missing.first < 0) continue;
        edges.push_back(missing);
        Graph bigger(n, edges);
        for (Problem kind : kAllProblems) {
            CHECK(solve_min(bigger, kind).cost >= solve_min(g, kind).cost);
            CHECK(solve_max(bigger, kind).cost >= solve_max(g, kind).cost);
        }
    }
}

TEST_CASE("directed layouts are a subset of undirected layouts") {
    Rng rng(109);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        std::uint64_t seed = rng.next();
        Graph g = sample_gnp(n, 0.5, seed);
        Dag d = sample_dnp(n, 0.5, seed);
        for (Problem kind : kAllProblems) {
            CHECK(solve_min(d, kind).cost >= solve_min(g, kind).cost);
            CHECK(solve_max(d, kind).cost <= solve_max(g, kind).cost);
        }
    }
}

TEST_CASE("estimator basics") {
    Graph k6 = complete_graph(6);
    for (Problem kind : kAllProblems) {
        GapReport r = estimate_extremes(k6, kind, 20, 5);
        CHECK_FALSE(r.exact);
        CHECK(r.min_cost == r.max_cost);
        CHECK(r.min_cost == solve_min(k6, kind).cost);
    }

    Graph g = sample_gnp(10, 0.5, 77);
    GapReport one = estimate_extremes(g, Problem::Cutwidth, 1, 9);
    CHECK(one.min_cost == one.max_cost);
    CHECK(cost(g, one.min_witness, Problem::Cutwidth) == one.min_cost);

    CHECK_THROWS_AS(estimate_extremes(g, Problem::Cutwidth, 0, 1), std::invalid_argument);
}

TEST_CASE("estimator brackets sit inside the exact extremes") {
    Graph g = sample_gnp(18, 0.5, 4242);
    Dag d = sample_dnp(18, 0.5, 4242);
    for (Problem kind : kAllProblems) {
        GapReport exact_g = gap(g, kind);
        GapReport est_g = estimate_extremes(g, kind, 1000, 7);
        CHECK(est_g.min_cost >= exact_g.min_cost);
        CHECK(est_g.max_cost <= exact_g.max_cost);

        GapReport exact_d = gap(d, kind);
        GapReport est_d = estimate_extremes(d, kind, 1000, 7);
        CHECK(est_d.min_cost >= exact_d.min_cost);
        CHECK(est_d.max_cost <= exact_d.max_cost);
    }
}

TEST_CASE("size limits") {
    Graph big = sample_gnp(30, 0.2, 1);
    CHECK_THROWS_AS(solve_min(big, Problem::Cutwidth), SolverLimitError);
    CHECK_THROWS_AS(gap(big, Problem::Cutwidth), SolverLimitError);
    CHECK_THROWS_AS(brute_force(sample_gnp(10, 0.2, 1), Problem::Cutwidth, Objective::Min),
                    SolverLimitError);

    // configurable limit
    SolverLimits tight;
    tight.cw_vs = 8;
    CHECK_THROWS_AS(solve_min(sample_gnp(9, 0.5, 1), Problem::Cutwidth, tight),
                    SolverLimitError);
}

TEST_CASE("single vertex instances") {
    Graph g(1, {});
    Dag d(1, {});
    for (Problem kind : kAllProblems) {
        CHECK(gap(g, kind).gap == doctest::Approx(1.0));
        CHECK(gap(d, kind).gap == doctest::Approx(1.0));
    }
}
