#include <doctest.h>

#include <random>

#include "boxclique/constructions.hpp"
#include "boxclique/errors.hpp"
#include "boxclique/graph.hpp"
#include "oracles.hpp"

using namespace boxclique;

namespace {

// edges 01 blue, 12 red, 23 blue, 30 red
MultiColoredGraph alternating_four_cycle() {
    return MultiColoredGraph(4, 2, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {0, 3, 1}});
}

MultiColoredGraph random_graph(std::mt19937_64& rng, int n, int t, double density) {
    std::vector<ColoredEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rng() % 1000) / 1000.0 < density)
                edges.push_back({u, v, static_cast<int>(rng() % t)});
    return MultiColoredGraph(n, t, std::move(edges));
}

} // namespace

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(MultiColoredGraph(4, 2, {{2, 2, 0}}), UsageError);            // loop
    CHECK_THROWS_AS(MultiColoredGraph(4, 2, {{3, 1, 0}}), UsageError);            // u >= v
    CHECK_THROWS_AS(MultiColoredGraph(4, 2, {{0, 4, 0}}), UsageError);            // range
    CHECK_THROWS_AS(MultiColoredGraph(4, 2, {{0, 1, 2}}), UsageError);            // color
    CHECK_THROWS_AS(MultiColoredGraph(4, 2, {{0, 1, 0}, {0, 1, 1}}), UsageError); // two colors
    CHECK_THROWS_AS(MultiColoredGraph(4, 1, {}), UsageError);                     // t < 2
}

TEST_CASE("find_clique on the alternating 4-cycle") {
    MultiColoredGraph g = alternating_four_cycle();
    CHECK(find_clique(g, 0, 0, 2) == std::vector<int>{0, 1}); // unique blue edge at 0
    CHECK_FALSE(find_clique(g, 0, 0, 3).has_value());         // no blue triangle
    CHECK(find_clique(g, 1, 0, 2) == std::vector<int>{0, 3});
    CHECK_THROWS_AS(find_clique(g, 2, 0, 2), UsageError);
    CHECK_THROWS_AS(find_clique(g, 0, 4, 2), UsageError);
    CHECK_THROWS_AS(find_clique(g, 0, 0, 0), UsageError);
}

TEST_CASE("find_clique on the blown-up 4-cycle has a 3-clique everywhere") {
    MultiColoredGraph g = blowup_four_cycle(3);
    for (int v = 0; v < g.n(); ++v) {
        auto c = find_clique(g, 0, v, 3);
        REQUIRE(c.has_value());
        CHECK(c->size() == 3);
        CHECK(std::find(c->begin(), c->end(), v) != c->end());
    }
}

TEST_CASE("find_clique matches the combination oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        MultiColoredGraph g = random_graph(rng, 8, 2, 0.55);
        for (int v = 0; v < g.n(); ++v)
            for (int c = 0; c < 2; ++c)
                for (int k = 2; k <= 4; ++k)
                    CHECK(find_clique(g, c, v, k) == oracle::smallest_clique(g, c, v, k));
    }
}

TEST_CASE("check_property on the paper-scale examples") {
    MultiColoredGraph four = alternating_four_cycle();
    CHECK(check_property(four, 2).holds);

    PropertyReport fail = check_property(four, 3);
    CHECK_FALSE(fail.holds);
    CHECK(fail.fail_vertex == 0);
    CHECK(fail.fail_color == 0);
    CHECK(fail.witnesses.empty());

    PropertyReport rep = check_property(build_tcolor(3, 3), 3);
    CHECK(rep.holds);
    CHECK(rep.witnesses.size() == 12 * 3);

    CHECK_THROWS_AS(check_property(four, 1), UsageError);
}

TEST_CASE("check_property agrees with per-pair find_clique") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        MultiColoredGraph g = random_graph(rng, 9, 2, 0.6);
        for (int k = 2; k <= 3; ++k) {
            bool all = true;
            for (int v = 0; v < g.n() && all; ++v)
                for (int c = 0; c < g.t() && all; ++c) all = find_clique(g, c, v, k).has_value();
            CHECK(check_property(g, k).holds == all);
        }
    }
}

TEST_CASE("property is monotone in k and under added edges") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        MultiColoredGraph g = random_graph(rng, 10, 2, 0.7);
        for (int k = 3; k <= 4; ++k)
            if (check_property(g, k).holds)
                for (int kp = 2; kp < k; ++kp) CHECK(check_property(g, kp).holds);
        if (check_property(g, 3).holds) {
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v)
                    if (!g.edge_color(u, v)) {
                        MultiColoredGraph bigger = g.with_edge({u, v, static_cast<int>(rng() % 2)});
                        CHECK(check_property(bigger, 3).holds);
                        u = v = g.n();
                    }
        }
    }
}

TEST_CASE("every certified 2-colored graph respects the 4(k-1) floor") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        MultiColoredGraph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 2, 0.8);
        for (int k = 2; k <= 3; ++k)
            if (check_property(g, k).holds) CHECK(g.n() >= 4 * (k - 1));
    }
    for (int k = 2; k <= 8; ++k) {
        CHECK(check_property(blowup_four_cycle(k), k).holds);
        CHECK(blowup_four_cycle(k).n() == 4 * (k - 1));
    }
}

TEST_CASE("edge criticality of the paper graphs") {
    CHECK(is_edge_critical(alternating_four_cycle(), 2).critical);

    MultiColoredGraph blow3 = blowup_four_cycle(3);
    CHECK(is_edge_critical(blow3, 3).critical);

    // an extra blue edge inside Y joins two red cliques; it serves no witness
    MultiColoredGraph padded = blow3.with_edge({4, 6, 0});
    CriticalityReport rep = is_edge_critical(padded, 3);
    CHECK_FALSE(rep.critical);
    REQUIRE(rep.removable.size() == 1);
    CHECK(rep.removable[0] == ColoredEdge{4, 6, 0});

    CHECK_THROWS_AS(is_edge_critical(alternating_four_cycle(), 3), PreconditionError);
}
