#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxclique/certificates.hpp"
#include "boxclique/graph.hpp"

namespace boxclique {

// Product of d finite axes, axis i identified with 0..sizes[i]-1.
struct DiscreteBox {
    std::vector<int> sizes; // each >= 2

    int d() const { return static_cast<int>(sizes.size()); }
    long long cells() const;
};

// Product of per-axis subsets; sets may be empty at the type level.
struct SubBox {
    std::vector<std::vector<int>> sets; // sorted ascending per axis

    friend bool operator==(const SubBox&, const SubBox&) = default;
};

struct BoxFamily {
    DiscreteBox box;
    std::vector<SubBox> subs;
};

struct BoxValidity {
    bool disjoint = false;
    bool covering = false;
    bool partition = false;
    bool all_nontrivial = false;
};

// Exact disjointness / coverage / nontriviality decisions. Coverage is decided
// cell-by-cell for boxes up to 10^6 cells; for larger boxes it follows from
// disjointness plus volume counting.
BoxValidity validate_family(const BoxFamily& fam);

// Minimum over all axis-parallel lines of the number of sub-boxes met.
int piercing_number(const BoxFamily& fam);

// The four-quarter construction: (left,top) and (right,bottom) quarters are
// sliced into k-1 strips across axis 0, the other two quarters across axis 1.
// 4(k-1) parts, piercing exactly k. Requires n1, n2 >= 2(k-1).
BoxFamily figure1_partition(int k, int n1, int n2);

// Product partition into prod(cuts) near-equal interval blocks.
BoxFamily grid_partition(const DiscreteBox& box, const std::vector<int>& cuts);

// d=2 only, sub-boxes pairwise disjoint. Vertex per sub-box; blue edge where
// axis-1 projections intersect (a shared horizontal line), red where axis-0
// projections intersect.
MultiColoredGraph reduce_to_graph(const BoxFamily& fam);

struct Corollary5Report {
    int m = 0;
    int n1 = 0;
    int n2 = 0;
    bool partition = false;
    bool singleton_rows = false; // every x in A_1 owns a sub-box with sets[0] == {x}
    bool singleton_cols = false;
    int piercing = 0;
    int bound = 0; // n1 + n2 - 1
    bool bound_holds = false;
    bool tight = false;
    std::optional<RankCertificate> certificate;
};

// Checks the per-line singleton condition; on a partition satisfying it, maps
// the family onto cover families and runs the rank certificate, giving
// m >= n1 + n2 - 1. Also reports the piercing count for the 4(k-1) statement.
Corollary5Report corollary5_check(const BoxFamily& fam, bool require_cover);

// Deterministic SVG: one rect per unit cell filled by owning sub-box, borders
// stroked between distinct owners. d=2 only.
std::string render_svg(const BoxFamily& fam);

// .boxf text format; strict canonical form, byte-exact round-trip.
BoxFamily parse_boxf(const std::string& text);
std::string serialize_boxf(const BoxFamily& fam);

std::string render_box_validity(const BoxValidity& v, int piercing);
std::string render_corollary5_report(const Corollary5Report& r);

} // namespace boxclique
