#include <doctest.h>

#include <algorithm>
#include <random>

#include "boxclique/canonical.hpp"
#include "boxclique/constructions.hpp"
#include "boxclique/errors.hpp"
#include "oracles.hpp"

using namespace boxclique;

namespace {

MultiColoredGraph permuted(const MultiColoredGraph& g, const std::vector<int>& perm) {
    std::vector<ColoredEdge> edges;
    for (const ColoredEdge& e : g.edges()) {
        int u = perm[e.u], v = perm[e.v];
        edges.push_back({std::min(u, v), std::max(u, v), e.color});
    }
    return MultiColoredGraph(g.n(), g.t(), std::move(edges));
}

MultiColoredGraph alternating_four_cycle() {
    return MultiColoredGraph(4, 2, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {0, 3, 1}});
}

} // namespace

TEST_CASE("canonical form is invariant under vertex relabeling") {
    MultiColoredGraph cycle = alternating_four_cycle();
    MultiColoredGraph swapped = permuted(cycle, {2, 1, 0, 3}); // relabel 0 <-> 2
    CHECK(canonical_form(cycle) == canonical_form(swapped));

    std::mt19937_64 rng(23);
    MultiColoredGraph g = blowup_four_cycle(3);
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    for (int trial = 0; trial < 15; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        MultiColoredGraph h = permuted(g, perm);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(canonical_form(g, SwapPolicy::kColorPermuting) ==
              canonical_form(h, SwapPolicy::kColorPermuting));
        CHECK(are_isomorphic(g, h));
    }
}

TEST_CASE("canonical form separates the two k=3 extremal shapes") {
    MultiColoredGraph blocks = blowup_four_cycle(3);
    MultiColoredGraph cycles = build_extremal(cycle_pair(3));
    CHECK(canonical_form(blocks) != canonical_form(cycles));
    CHECK_FALSE(are_isomorphic(blocks, cycles));
    CHECK_FALSE(are_isomorphic(blocks, cycles, SwapPolicy::kColorPermuting));
}

TEST_CASE("color-permuting policy identifies color swaps") {
    MultiColoredGraph cycle = alternating_four_cycle();
    std::vector<ColoredEdge> swapped_edges;
    for (const ColoredEdge& e : cycle.edges())
        swapped_edges.push_back({e.u, e.v, 1 - e.color});
    MultiColoredGraph swapped(4, 2, std::move(swapped_edges));

    CHECK(canonical_form(cycle, SwapPolicy::kColorPermuting) ==
          canonical_form(swapped, SwapPolicy::kColorPermuting));
    // the alternating 4-cycle is also color-symmetric under relabeling alone
    CHECK(are_isomorphic(cycle, swapped, SwapPolicy::kColorFixed));
}

TEST_CASE("blowup coincides with the four-block description") {
    for (int k = 2; k <= 4; ++k)
        CHECK(are_isomorphic(blowup_four_cycle(k), oracle::four_block_cycle(k)));
}

TEST_CASE("isomorphism basics and budget") {
    MultiColoredGraph g = blowup_four_cycle(3);
    CHECK(are_isomorphic(g, g));
    CHECK(are_isomorphic(blowup_four_cycle(3), build_extremal(block_pair(3))));
    CHECK_THROWS_AS(canonical_form(blowup_four_cycle(6)), CapabilityError); // n = 20
}
