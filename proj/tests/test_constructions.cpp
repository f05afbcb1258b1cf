#include <doctest.h>

#include <set>

#include "boxclique/canonical.hpp"
#include "boxclique/constructions.hpp"
#include "boxclique/errors.hpp"
#include "boxclique/graph.hpp"
#include "oracles.hpp"

using namespace boxclique;

TEST_CASE("block pair shapes") {
    BipartitePair two = block_pair(2);
    CHECK(two.blue == std::vector<std::vector<int>>{{1, 0}, {0, 1}});

    BipartitePair three = block_pair(3);
    CHECK(three.blue == std::vector<std::vector<int>>{
                            {1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});

    BipartitePair four = block_pair(4);
    for (int i = 0; i < four.side(); ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < four.side(); ++j) {
            row += four.blue[i][j];
            col += four.blue[j][i];
        }
        CHECK(row == 3);
        CHECK(col == 3);
    }
    CHECK_THROWS_AS(block_pair(1), UsageError);
}

TEST_CASE("pair validation names the offending line") {
    // the 8-cycle biadjacency for k=3
    CHECK_NOTHROW(pair_from_biadjacency(
        3, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}}));
    CHECK(cycle_pair(3).blue ==
          std::vector<std::vector<int>>{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 1}});

    CHECK_THROWS_WITH_AS(
        pair_from_biadjacency(3, {{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}),
        "row 0 has sum 4, expected 2", UsageError);
    CHECK_THROWS_AS(pair_from_biadjacency(3, {{1, 1}, {1, 1}}), UsageError);
    CHECK_NOTHROW(pair_from_biadjacency(3, block_pair(3).blue));
}

TEST_CASE("random pairs validate for a spread of seeds") {
    for (int k : {2, 3, 5, 8})
        for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
            BipartitePair p = random_pair(k, seed);
            CHECK(p.side() == 2 * (k - 1));
            CHECK_NOTHROW(pair_from_biadjacency(k, p.blue));
            // deterministic given the seed
            CHECK(random_pair(k, seed).blue == p.blue);
        }
    bool seeds_differ = random_pair(2, 5).blue != random_pair(2, 6).blue ||
                        random_pair(3, 5).blue != random_pair(3, 6).blue;
    CHECK(seeds_differ);
}

TEST_CASE("labeled pair enumeration counts match brute force") {
    CHECK(enumerate_pairs(2, false).size() == 2);
    CHECK(enumerate_pairs(3, false).size() == 90);
    CHECK(oracle::count_regular_matrices(2, 1) == 2);
    CHECK(oracle::count_regular_matrices(4, 2) == 90);
    CHECK_THROWS_AS(enumerate_pairs(5, false), CapabilityError);
}

TEST_CASE("pair classes for k=3: two 4-cycles or one 8-cycle") {
    std::vector<BipartitePair> classes = enumerate_pairs(3, true);
    CHECK(classes.size() == 2);
    std::set<std::string> keys;
    for (const auto& p : classes) keys.insert(pair_canonical_key(p));
    CHECK(keys.count(pair_canonical_key(block_pair(3))) == 1);
    CHECK(keys.count(pair_canonical_key(cycle_pair(3))) == 1);
}

TEST_CASE("build_extremal on the k=3 pairs") {
    MultiColoredGraph blocks = build_extremal(block_pair(3));
    CHECK(blocks.n() == 8);
    CHECK(blocks.edges().size() == 20); // 2(k-1)(3k-4)

    MultiColoredGraph cycles = build_extremal(cycle_pair(3));
    CHECK(cycles.n() == 8);
    CHECK(check_property(cycles, 3).holds);
    CHECK(cycles.edges().size() > 20);
    CHECK_FALSE(are_isomorphic(blocks, cycles));

    CHECK(build_extremal(block_pair(2)) ==
          MultiColoredGraph(4, 2, {{0, 2, 0}, {1, 3, 0}, {0, 3, 1}, {1, 2, 1}}));
}

TEST_CASE("every pair yields an edge-critical property graph") {
    for (int k = 2; k <= 8; ++k) {
        for (const BipartitePair& p :
             {block_pair(k), cycle_pair(k), random_pair(k, 1000 + k)}) {
            MultiColoredGraph g = build_extremal(p);
            CHECK(g.n() == 4 * (k - 1));
            CHECK(check_property(g, k).holds);
            CHECK(is_edge_critical(g, k).critical);
            // the complete bipartite graph on (X, Y) is always present
            for (int x = 0; x < 2 * (k - 1); ++x)
                for (int y = 2 * (k - 1); y < 4 * (k - 1); ++y)
                    CHECK(g.edge_color(x, y).has_value());
            // closed blue neighborhoods of Y vertices are blue k-cliques
            const int side = 2 * (k - 1);
            for (int y = 0; y < side; ++y) {
                std::vector<int> clique{side + y};
                for (int x = 0; x < side; ++x)
                    if (p.blue[x][y]) clique.push_back(x);
                CHECK(clique.size() == static_cast<std::size_t>(k));
                for (std::size_t a = 0; a < clique.size(); ++a)
                    for (std::size_t b = a + 1; b < clique.size(); ++b)
                        CHECK(g.edge_color(std::min(clique[a], clique[b]),
                                           std::max(clique[a], clique[b])) == 0);
            }
            // intra-part degree floor k-2
            for (int x = 0; x < side; ++x) {
                int deg = 0;
                for (int x2 = 0; x2 < side; ++x2)
                    if (x2 != x && g.edge_color(std::min(x, x2), std::max(x, x2))) ++deg;
                CHECK(deg >= k - 2);
            }
        }
    }
}

TEST_CASE("blowup equals the block-pair extremal graph") {
    for (int k = 2; k <= 8; ++k) CHECK(blowup_four_cycle(k) == build_extremal(block_pair(k)));
    CHECK(blowup_four_cycle(2) ==
          MultiColoredGraph(4, 2, {{0, 2, 0}, {1, 3, 0}, {0, 3, 1}, {1, 2, 1}}));
    CHECK(blowup_four_cycle(5).n() == 16);
}

TEST_CASE("t-color construction") {
    MultiColoredGraph g33 = build_tcolor(3, 3);
    CHECK(g33.n() == 12);
    CHECK(g33.t() == 3);
    CHECK(check_property(g33, 3).holds);
    CHECK(is_edge_critical(g33, 3).critical); // default block choice

    CHECK(build_tcolor(2, 2) == build_extremal(block_pair(2)));
    CHECK(build_tcolor(3, 2) == build_extremal(block_pair(3)));

    MultiColoredGraph g23 = build_tcolor(2, 3);
    CHECK(g23.n() == 6);
    CHECK(check_property(g23, 2).holds);

    CHECK(check_property(build_tcolor(3, 4), 3).holds);
    CHECK(check_property(build_tcolor(4, 3), 4).holds);
    CHECK_THROWS_AS(build_tcolor(1, 3), UsageError);

    // source hook: 8-cycle pairs everywhere still satisfies the property
    MultiColoredGraph hooked = build_tcolor(3, 3, [](int, int, int k) { return cycle_pair(k); });
    CHECK(check_property(hooked, 3).holds);
}

TEST_CASE("K4 with three perfect matchings covers k=2 in all three colors") {
    MultiColoredGraph g = k4_three_matchings();
    CHECK(g.n() == 4);
    CHECK(g.t() == 3);
    CHECK(g.edges().size() == 6);
    CHECK(check_property(g, 2).holds);
}

TEST_CASE("edge survey at k=3") {
    EdgeSurvey s = min_edges_survey(3);
    CHECK(s.pairs_searched == 90);
    CHECK(s.min_edges == 20);
    CHECK(s.formula_edges == 20);
    CHECK(s.unique_minimizer_class);
    CHECK(s.minimizer_is_block_pair);
    CHECK_THROWS_AS(min_edges_survey(2), CapabilityError);
    CHECK_THROWS_AS(min_edges_survey(5), CapabilityError);
}
