#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxclique/graph.hpp"

namespace boxclique {

// Two families of witness vertex sets over a common ground set 0..n_vertices-1.
// Sets are kept as sorted vertex lists; family order is significant only for
// reproducibility.
struct CoverFamilies {
    int n_vertices = 0;
    std::vector<std::vector<int>> blue; // B_1..B_b
    std::vector<std::vector<int>> red;  // R_1..R_r

    int b() const { return static_cast<int>(blue.size()); }
    int r() const { return static_cast<int>(red.size()); }

    friend bool operator==(const CoverFamilies&, const CoverFamilies&) = default;
};

// Per-vertex incidence: I[v] = blue sets containing v, J[v] = red sets.
struct IncidencePattern {
    std::vector<std::vector<int>> I;
    std::vector<std::vector<int>> J;
};

struct ConditionWitness {
    char family = 'B'; // which side offends, when that matters
    int index = -1;    // set index
    int other = -1;    // red index for pair conditions
    int vertex = -1;   // offending vertex for coverage
};

// The five structural conditions. (5) implies (2); both reported independently.
struct ConditionReport {
    int k = 0;
    bool sizes_at_least_k = false;        // (1)
    bool intersections_at_most_one = false; // (2)
    bool both_cover_ground = false;       // (3)
    bool private_vertices = false;        // (4)
    bool intersections_exactly_one = false; // (5)
    std::optional<ConditionWitness> w1, w2, w3, w4, w5;

    bool all() const {
        return sizes_at_least_k && intersections_at_most_one && both_cover_ground &&
               private_vertices && intersections_exactly_one;
    }
};

// Incidence box of one vertex: rows x cols inside [b] x [r].
struct GridBox {
    int vertex = -1;
    std::vector<int> rows; // I_v
    std::vector<int> cols; // J_v
};

// Witness cliques of check_property(g, k), deduplicated in vertex order.
// Requires t = 2 and the property to hold. Output satisfies (1)-(3).
CoverFamilies extract_witnesses(const MultiColoredGraph& g, int k);

ConditionReport check_conditions(const CoverFamilies& f, int k);

// Deterministic repair procedure: delete redundant sets until every set has a
// private vertex, then grow sets to kill empty blue/red intersections.
// Requires (1)-(3); output satisfies (1)-(5) on the same ground set.
CoverFamilies normalize(const CoverFamilies& f, int k);

IncidencePattern incidence(const CoverFamilies& f);

// The boxes I_v x J_v; under (5) they tile [b] x [r]. Requires (5) and (3).
std::vector<GridBox> grid_boxes(const CoverFamilies& f);

// 2-colored graph whose blue edges are pairs co-resident in some B_i and red
// edges pairs co-resident in some R_j. A pair demanded by both sides is a
// conflict (violates (2)).
MultiColoredGraph graph_from_families(const CoverFamilies& f);

// Inverse of the grid-box view: ground element per box, B_i / R_j collect the
// boxes whose rows / cols contain the line index.
CoverFamilies families_from_grid_boxes(int b, int r, const std::vector<GridBox>& boxes);

// .fam text format; strict canonical form, byte-exact round-trip.
CoverFamilies parse_fam(const std::string& text);
std::string serialize_fam(const CoverFamilies& f);

std::string render_condition_report(const ConditionReport& r);

} // namespace boxclique
