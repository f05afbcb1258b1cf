#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxclique/boxes.hpp"
#include "boxclique/families.hpp"
#include "boxclique/graph.hpp"

namespace boxclique {

// Budgets for a certified run. The node budget applies to each root branch
// independently, so results do not depend on the worker count; a budget or
// timeout hit yields an explicit inconclusive record, never a silent pass.
struct SearchLimits {
    std::uint64_t node_budget = 200'000'000;
    double timeout_secs = 0; // 0 = no wall-clock limit
    int threads = 1;
};

// Machine-checkable outcome of an exhaustive search, with the ranges searched
// and their justification spelled out.
struct ProofRecord {
    std::string statement;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> range_lines;
    std::vector<std::string> result_lines;
    std::uint64_t nodes = 0;
    long long elapsed_ms = 0;
    bool conclusive = true;
    std::string conclusion;
    std::vector<std::string> witness_lines;
};

std::string render_proof_record(const ProofRecord& rec);

// Text form with timing stripped; equal across runs and worker counts.
std::string proof_record_fingerprint(const ProofRecord& rec);

struct GridSearchResult {
    bool conclusive = true;
    std::optional<int> minimum;   // empty: no family with <= max_m boxes
    std::vector<GridBox> witness; // attains the minimum; vertex = box index
    std::uint64_t nodes = 0;
};

// Minimum number of pairwise-disjoint nonempty product boxes I x J tiling
// [b] x [r] such that every row and column index lies in >= k boxes, plus
// per-line singleton boxes when required. Budget: b, r <= 8, max_m <= 16.
GridSearchResult min_grid_boxes(int b, int r, int k, bool require_singletons, int max_m,
                                const SearchLimits& limits = {});

struct Theorem1Result {
    int k = 0;
    int target = 0; // 4(k-1)
    bool conclusive = true;
    int concluded_minimum = 0;
    ProofRecord record;
};

// Exhausts every admissible (b, r) shape below the target and rechecks the
// witness attaining it through the families checkers. k in {2, 3}; k = 4 only
// with the extended budget flag.
Theorem1Result verify_theorem1(int k, bool extended = false, const SearchLimits& limits = {});

struct ExtremalEnumeration {
    int k = 0;
    int tilings = 0;
    int classes_color_fixed = 0;
    int classes_color_permuting = 0;
    bool all_match_construction = false; // every class is some G(X,Y,B,R)
    ProofRecord record;
};

// Enumerates every tiling of [2(k-1)]^2 into exactly 4(k-1) boxes with each
// line covered exactly k times and per-line singletons, converts tilings to
// graphs, and dedups by canonical form under both swap policies. k in {2, 3}.
ExtremalEnumeration enumerate_extremal(int k, const SearchLimits& limits = {});

struct BruteForceReport {
    int n = 0, t = 0, k = 0;
    bool exists = false;
    std::optional<MultiColoredGraph> witness;
    std::uint64_t scanned = 0;
    ProofRecord record;
};

// Scans all edge colorings (including non-edges) of n labeled vertices for the
// property in all t colors. Budget: (t+1)^(n(n-1)/2) <= 4 * 10^8.
BruteForceReport brute_force_graphs(int n, int t, int k, const SearchLimits& limits = {});

struct BoxSearchResult {
    bool conclusive = true;
    std::optional<int> minimum;
    std::vector<SubBox> witness;
    std::uint64_t nodes = 0;
    ProofRecord record;
};

// Exact-cover search for the smallest partition of the box into nontrivial
// sub-boxes with at most max_m parts. Budget: <= 64 cells, max_m <= 12.
BoxSearchResult min_nontrivial_boxes(const DiscreteBox& box, int max_m,
                                     const SearchLimits& limits = {});

} // namespace boxclique
