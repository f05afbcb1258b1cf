#include "boxclique/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "boxclique/errors.hpp"

namespace boxclique {

namespace {

constexpr int kCanonicalMaxN = 16;
constexpr int kCanonicalMaxT = 8;

// Dense pair code: 0 = non-edge, c+1 = edge of color c.
struct CodeMatrix {
    int n = 0;
    std::array<std::array<unsigned char, kCanonicalMaxN>, kCanonicalMaxN> code{};

    static CodeMatrix from(const MultiColoredGraph& g) {
        CodeMatrix m;
        m.n = g.n();
        for (const ColoredEdge& e : g.edges()) {
            m.code[e.u][e.v] = static_cast<unsigned char>(e.color + 1);
            m.code[e.v][e.u] = static_cast<unsigned char>(e.color + 1);
        }
        return m;
    }
};

struct MinLabelSearch {
    const CodeMatrix& m;
    int n;
    const std::vector<int>& class_of_position; // block layout, nondecreasing
    const std::vector<int>& class_of_vertex;

    std::string best;     // empty until the first leaf
    std::string cur;      // lower-triangle bytes of the partial labeling
    std::vector<int> perm;
    std::vector<bool> used;

    void run() {
        perm.assign(n, -1);
        used.assign(n, false);
        cur.clear();
        dfs(0, /*strictly_less=*/false);
    }

    void dfs(int pos, bool strictly_less) {
        if (pos == n) {
            if (best.empty() || strictly_less) best = cur;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || class_of_vertex[w] != class_of_position[pos]) continue;
            std::size_t mark = cur.size();
            bool less = strictly_less;
            bool pruned = false;
            for (int q = 0; q < pos; ++q) {
                unsigned char b = m.code[w][perm[q]];
                if (!less && !best.empty()) {
                    unsigned char bb = static_cast<unsigned char>(best[cur.size()]);
                    if (b > bb) { pruned = true; break; }
                    if (b < bb) less = true;
                }
                cur.push_back(static_cast<char>(b));
            }
            if (!pruned) {
                used[w] = true;
                perm[pos] = w;
                dfs(pos + 1, less);
                perm[pos] = -1;
                used[w] = false;
            }
            cur.resize(mark);
        }
    }
};

std::string canonical_fixed(const MultiColoredGraph& g) {
    const int n = g.n();
    const int t = g.t();

    // Color-degree vector per vertex; vertices in a canonical labeling may
    // only occupy positions of their own invariant class.
    std::vector<std::vector<int>> invariant(n, std::vector<int>(t, 0));
    for (const ColoredEdge& e : g.edges()) {
        ++invariant[e.u][e.color];
        ++invariant[e.v][e.color];
    }
    std::vector<std::vector<int>> classes = invariant;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    std::vector<int> class_of_vertex(n);
    for (int v = 0; v < n; ++v)
        class_of_vertex[v] = static_cast<int>(
            std::lower_bound(classes.begin(), classes.end(), invariant[v]) - classes.begin());

    std::vector<int> class_of_position;
    class_of_position.reserve(n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        long count = std::count(class_of_vertex.begin(), class_of_vertex.end(), int(c));
        class_of_position.insert(class_of_position.end(), count, static_cast<int>(c));
    }

    CodeMatrix m = CodeMatrix::from(g);
    MinLabelSearch search{m, n, class_of_position, class_of_vertex, {}, {}, {}, {}};
    search.run();

    std::string out;
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(t));
    // class block sizes are part of the certificate (they are iso-invariant)
    for (const auto& cls : classes)
        for (int d : cls) out.push_back(static_cast<char>(d));
    out += search.best;
    return out;
}

MultiColoredGraph recolor(const MultiColoredGraph& g, const std::vector<int>& color_map) {
    std::vector<ColoredEdge> edges = g.edges();
    for (ColoredEdge& e : edges) e.color = color_map[e.color];
    return MultiColoredGraph(g.n(), g.t(), std::move(edges));
}

} // namespace

std::string canonical_form(const MultiColoredGraph& g, SwapPolicy policy) {
    if (g.n() > kCanonicalMaxN)
        throw CapabilityError("canonical form limited to n <= " + std::to_string(kCanonicalMaxN));
    if (policy == SwapPolicy::kColorFixed) return canonical_fixed(g);

    if (g.t() > kCanonicalMaxT)
        throw CapabilityError("color-permuting canonical form limited to t <= " +
                              std::to_string(kCanonicalMaxT));
    std::vector<int> color_map(g.t());
    std::iota(color_map.begin(), color_map.end(), 0);
    std::string best;
    do {
        std::string s = canonical_fixed(recolor(g, color_map));
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(color_map.begin(), color_map.end()));
    return best;
}

bool are_isomorphic(const MultiColoredGraph& a, const MultiColoredGraph& b, SwapPolicy policy) {
    if (a.n() != b.n() || a.t() != b.t()) return false;
    if (a.edges().size() != b.edges().size()) return false;
    return canonical_form(a, policy) == canonical_form(b, policy);
}

} // namespace boxclique
