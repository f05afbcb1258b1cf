#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "boxclique/graph.hpp"

namespace boxclique {

// Complementary (k-1)-regular bipartite graphs on parts of size 2(k-1):
// blue holds the biadjacency, red is its 0/1 complement.
struct BipartitePair {
    int k = 2;
    std::vector<std::vector<int>> blue;

    int side() const { return 2 * (k - 1); }
};

// Two all-ones (k-1) x (k-1) blocks on the diagonal.
BipartitePair block_pair(int k);

// Circulant biadjacency with offsets 0..k-2; at k=3 both color graphs are
// 8-cycles.
BipartitePair cycle_pair(int k);

// Validates squareness and (k-1)-regularity of rows and columns.
BipartitePair pair_from_biadjacency(int k, std::vector<std::vector<int>> matrix);

// Union of k-1 random permutation matrices, rejection-sampled; deterministic
// for a given seed.
BipartitePair random_pair(int k, std::uint64_t seed);

// All labeled (k-1)-regular 0/1 matrices of side 2(k-1); budget k <= 4.
// With up_to_iso, one representative per class under row/column permutations
// and transposition.
std::vector<BipartitePair> enumerate_pairs(int k, bool up_to_iso);

// Streaming form of the labeled enumeration (the k=4 survey is too large to
// hold comfortably in memory).
void for_each_labeled_pair(int k, const std::function<void(const BipartitePair&)>& fn);

// Canonical key of a pair under row/column permutations and transposition.
std::string pair_canonical_key(const BipartitePair& pair);

// The extremal graph G on 4(k-1) vertices: X = 0..2k-3, Y = 2k-2..4k-5,
// complete bipartite (X,Y) colored by the pair, blue edges inside X between
// vertices with a common blue neighbor, red mirror inside Y.
MultiColoredGraph build_extremal(const BipartitePair& pair);

// Blown-up alternating 4-cycle; coincides with build_extremal(block_pair(k)).
MultiColoredGraph blowup_four_cycle(int k);

// Optional per-color-pair source of complementary regular pairs; colors i < j.
using PairSource = std::function<BipartitePair(int i, int j, int k)>;

// t parts of 2(k-1) vertices; every cross pair (X_i, X_j) colored i/j by a
// complementary (k-1)-regular pair, intra-part edges by the common-neighbor
// rule. Default source: block_pair(k) everywhere.
MultiColoredGraph build_tcolor(int k, int t, const PairSource& source = nullptr);

// K4 with its proper 3-edge-coloring: 4 vertices suffice for k=2, t=3.
MultiColoredGraph k4_three_matchings();

struct EdgeSurvey {
    int k = 0;
    long long pairs_searched = 0;
    int min_edges = 0;
    int formula_edges = 0; // 2(k-1)(3k-4)
    long long minimizer_count = 0;       // labeled pairs attaining the minimum
    int minimizer_class_count = 0;       // iso classes among them
    bool minimizer_is_block_pair = false;
    bool unique_minimizer_class = false;
};

// Builds G(X,Y,B,R) for every labeled pair and surveys edge counts; k in {3,4}.
EdgeSurvey min_edges_survey(int k);

std::string render_edge_survey(const EdgeSurvey& s);

} // namespace boxclique
