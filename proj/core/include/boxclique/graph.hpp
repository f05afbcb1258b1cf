#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "boxclique/bits.hpp"

namespace boxclique {

struct ColoredEdge {
    int u = 0; // u < v
    int v = 0;
    int color = 0;

    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
    friend std::strong_ordering operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Simple graph on vertices 0..n-1 with every edge carrying one of t colors.
// Immutable after construction; all operations on it are pure functions.
class MultiColoredGraph {
public:
    // Validates ranges, u < v, no loops, at most one color per pair.
    // The edge list is stored sorted by (u, v).
    MultiColoredGraph(int n, int t, std::vector<ColoredEdge> edges);

    int n() const { return n_; }
    int t() const { return t_; }
    const std::vector<ColoredEdge>& edges() const { return edges_; }

    // Neighbors of v through edges of the given color.
    const Bits128& neighbors(int color, int v) const { return adj_[color][v]; }

    std::optional<int> edge_color(int u, int v) const; // unordered pair

    // Same vertices, same colors, one edge dropped (index into edges()).
    MultiColoredGraph without_edge(std::size_t edge_index) const;

    // Same vertices, one edge added (pair must be absent).
    MultiColoredGraph with_edge(const ColoredEdge& e) const;

    friend bool operator==(const MultiColoredGraph& a, const MultiColoredGraph& b) {
        return a.n_ == b.n_ && a.t_ == b.t_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    int t_ = 0;
    std::vector<ColoredEdge> edges_;
    std::vector<std::vector<Bits128>> adj_; // [color][vertex]
};

struct CliqueWitness {
    int vertex = 0;
    int color = 0;
    std::vector<int> clique; // ascending, contains vertex, size k
};

struct PropertyReport {
    int k = 0;
    bool holds = false;
    // One witness per (vertex, color), vertex-major order; empty when !holds.
    std::vector<CliqueWitness> witnesses;
    int fail_vertex = -1;
    int fail_color = -1;
};

struct CriticalityReport {
    int k = 0;
    bool critical = false;
    std::vector<ColoredEdge> removable; // removal keeps the property; input order
};

// Lexicographically smallest k-clique of the given color containing v,
// or nullopt. Deterministic: ascending-vertex branching.
std::optional<std::vector<int>> find_clique(const MultiColoredGraph& g, int color, int v, int k);

// Does every vertex lie in a monochromatic k-clique of each color?
PropertyReport check_property(const MultiColoredGraph& g, int k);

// Requires check_property(g, k) to hold. Tests every edge by removal + re-check.
CriticalityReport is_edge_critical(const MultiColoredGraph& g, int k);

// .ecg text format. Parsing is strict: a valid file is exactly the canonical
// serialization, so parse -> serialize is byte-identical.
MultiColoredGraph parse_ecg(const std::string& text);
std::string serialize_ecg(const MultiColoredGraph& g);

std::string render_property_report(const PropertyReport& r);
std::string render_criticality_report(const CriticalityReport& r);

} // namespace boxclique
