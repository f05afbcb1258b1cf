#include "boxclique/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "boxclique/errors.hpp"

namespace boxclique {

MultiColoredGraph::MultiColoredGraph(int n, int t, std::vector<ColoredEdge> edges)
    : n_(n), t_(t), edges_(std::move(edges)) {
    if (n < 0 || n > kMaxVertices)
        throw UsageError("vertex count must be in 0.." + std::to_string(kMaxVertices));
    if (t < 2) throw UsageError("color count must be at least 2");
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(t_, std::vector<Bits128>(n_));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const ColoredEdge& e = edges_[i];
        if (e.u >= e.v) throw UsageError("edge endpoints must satisfy u < v");
        if (e.u < 0 || e.v >= n_) throw UsageError("edge endpoint out of range");
        if (e.color < 0 || e.color >= t_) throw UsageError("edge color out of range");
        if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v)
            throw UsageError("pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} carries more than one color");
        adj_[e.color][e.u].set(e.v);
        adj_[e.color][e.v].set(e.u);
    }
}

std::optional<int> MultiColoredGraph::edge_color(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int c = 0; c < t_; ++c)
        if (adj_[c][u].test(v)) return c;
    return std::nullopt;
}

MultiColoredGraph MultiColoredGraph::without_edge(std::size_t edge_index) const {
    std::vector<ColoredEdge> es = edges_;
    es.erase(es.begin() + static_cast<std::ptrdiff_t>(edge_index));
    return MultiColoredGraph(n_, t_, std::move(es));
}

MultiColoredGraph MultiColoredGraph::with_edge(const ColoredEdge& e) const {
    std::vector<ColoredEdge> es = edges_;
    es.push_back(e);
    return MultiColoredGraph(n_, t_, std::move(es));
}

namespace {

// Greedy coloring of the candidate set in the color-c graph; the number of
// classes bounds the largest clique inside cand from above.
int greedy_clique_bound(const MultiColoredGraph& g, int color, const Bits128& cand) {
    int classes = 0;
    Bits128 rest = cand;
    while (rest.any()) {
        ++classes;
        Bits128 cls_candidates = rest;
        while (cls_candidates.any()) {
            int u = cls_candidates.first();
            rest.reset(u);
            cls_candidates.reset(u);
            // everything adjacent to u stays out of this class
            cls_candidates = cls_candidates.without(g.neighbors(color, u));
        }
    }
    return classes;
}

struct CliqueSearch {
    const MultiColoredGraph& g;
    int color;
    int pivot;
    int k;
    std::vector<int> chosen;

    bool dfs(const Bits128& allowed, bool pivot_in) {
        if (static_cast<int>(chosen.size()) == k) return pivot_in;
        int need = k - static_cast<int>(chosen.size());
        if (allowed.count() < need) return false;
        if (greedy_clique_bound(g, color, allowed) < need) return false;
        for (int u = allowed.first(); u != -1; u = allowed.next_above(u)) {
            if (!pivot_in && u > pivot) return false; // pivot can no longer join
            Bits128 next = allowed & g.neighbors(color, u) & Bits128::above(u);
            chosen.push_back(u);
            if (dfs(next, pivot_in || u == pivot)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_clique(const MultiColoredGraph& g, int color, int v, int k) {
    if (v < 0 || v >= g.n()) throw UsageError("vertex out of range");
    if (color < 0 || color >= g.t()) throw UsageError("color out of range");
    if (k < 1) throw UsageError("clique size must be at least 1");

    Bits128 cand = g.neighbors(color, v);
    cand.set(v);
    CliqueSearch s{g, color, v, k, {}};
    if (!s.dfs(cand, false)) return std::nullopt;
    return s.chosen;
}

PropertyReport check_property(const MultiColoredGraph& g, int k) {
    if (k < 2) throw UsageError("property check requires k >= 2");
    PropertyReport r;
    r.k = k;
    r.holds = true;
    for (int v = 0; v < g.n() && r.holds; ++v) {
        for (int c = 0; c < g.t(); ++c) {
            auto clique = find_clique(g, c, v, k);
            if (!clique) {
                r.holds = false;
                r.fail_vertex = v;
                r.fail_color = c;
                r.witnesses.clear();
                break;
            }
            r.witnesses.push_back(CliqueWitness{v, c, std::move(*clique)});
        }
    }
    return r;
}

CriticalityReport is_edge_critical(const MultiColoredGraph& g, int k) {
    if (!check_property(g, k).holds)
        throw PreconditionError("edge-criticality requires the property to hold");
    CriticalityReport r;
    r.k = k;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (check_property(g.without_edge(i), k).holds) r.removable.push_back(g.edges()[i]);
    }
    r.critical = r.removable.empty();
    return r;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    // Every line, including the last, must end in LF.
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos)
            throw FormatError("line " + std::to_string(lines.size() + 1) +
                              ": missing trailing newline");
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

int parse_int_field(const std::string& s, int line_no, const char* what) {
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || s.empty() || (s.size() > 1 && s[0] == '0') ||
        (s[0] == '-'))
        throw FormatError("line " + std::to_string(line_no) + ": bad " + what + " '" + s + "'");
    return value;
}

std::vector<std::string> split_ws(const std::string& line, int line_no) {
    // Tokens separated by exactly one space; no leading or trailing blanks.
    std::vector<std::string> out;
    if (line.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t sp = line.find(' ', start);
        std::string tok =
            sp == std::string::npos ? line.substr(start) : line.substr(start, sp - start);
        if (tok.empty())
            throw FormatError("line " + std::to_string(line_no) + ": stray space");
        out.push_back(tok);
        if (sp == std::string::npos) break;
        start = sp + 1;
    }
    return out;
}

} // namespace

MultiColoredGraph parse_ecg(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.size() < 3) throw FormatError("line 1: truncated .ecg header");
    if (lines[0] != "ecg 1") throw FormatError("line 1: expected 'ecg 1'");
    auto nf = split_ws(lines[1], 2);
    if (nf.size() != 2 || nf[0] != "n") throw FormatError("line 2: expected 'n <N>'");
    int n = parse_int_field(nf[1], 2, "vertex count");
    auto tf = split_ws(lines[2], 3);
    if (tf.size() != 2 || tf[0] != "t") throw FormatError("line 3: expected 't <T>'");
    int t = parse_int_field(tf[1], 3, "color count");

    std::vector<ColoredEdge> edges;
    for (std::size_t i = 3; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        auto f = split_ws(lines[i], line_no);
        if (f.size() != 4 || f[0] != "e")
            throw FormatError("line " + std::to_string(line_no) + ": expected 'e <u> <v> <c>'");
        ColoredEdge e{parse_int_field(f[1], line_no, "endpoint"),
                      parse_int_field(f[2], line_no, "endpoint"),
                      parse_int_field(f[3], line_no, "color")};
        if (!edges.empty() && !(std::pair(edges.back().u, edges.back().v) < std::pair(e.u, e.v)))
            throw FormatError("line " + std::to_string(line_no) +
                              ": edges out of (u,v) order");
        edges.push_back(e);
    }
    try {
        return MultiColoredGraph(n, t, std::move(edges));
    } catch (const UsageError& e) {
        throw FormatError(std::string("invalid graph: ") + e.what());
    }
}

std::string serialize_ecg(const MultiColoredGraph& g) {
    std::ostringstream out;
    out << "ecg 1\n" << "n " << g.n() << "\n" << "t " << g.t() << "\n";
    for (const ColoredEdge& e : g.edges())
        out << "e " << e.u << " " << e.v << " " << e.color << "\n";
    return out.str();
}

std::string render_property_report(const PropertyReport& r) {
    std::ostringstream out;
    if (r.holds) {
        out << "property k=" << r.k << ": holds\n";
        for (const CliqueWitness& w : r.witnesses) {
            out << "witness v=" << w.vertex << " color=" << w.color << ":";
            for (int u : w.clique) out << " " << u;
            out << "\n";
        }
    } else {
        out << "property k=" << r.k << ": fails at v=" << r.fail_vertex
            << " color=" << r.fail_color << "\n";
    }
    return out.str();
}

std::string render_criticality_report(const CriticalityReport& r) {
    std::ostringstream out;
    out << "edge-critical k=" << r.k << ": " << (r.critical ? "yes" : "no") << "\n";
    for (const ColoredEdge& e : r.removable)
        out << "removable e " << e.u << " " << e.v << " " << e.color << "\n";
    return out.str();
}

} // namespace boxclique
