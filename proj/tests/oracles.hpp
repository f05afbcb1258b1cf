#pragma once

// Independent oracles for the test suites. These deliberately avoid the
// library code paths they are used to check.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boxclique/families.hpp"
#include "boxclique/graph.hpp"

namespace oracle {

// Lexicographically smallest k-subset containing v that is complete in the
// given color, by plain combination enumeration.
inline std::optional<std::vector<int>> smallest_clique(const boxclique::MultiColoredGraph& g,
                                                       int color, int v, int k) {
    std::vector<int> combo;
    std::optional<std::vector<int>> found;
    auto complete = [&](const std::vector<int>& s) {
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (g.edge_color(s[a], s[b]) != std::optional<int>(color)) return false;
        return true;
    };
    // combinations in lexicographic order; first complete one containing v wins
    std::function<bool(int)> rec = [&](int next) -> bool {
        if (static_cast<int>(combo.size()) == k) {
            if (std::find(combo.begin(), combo.end(), v) == combo.end()) return false;
            if (!complete(combo)) return false;
            found = combo;
            return true;
        }
        for (int u = next; u < g.n(); ++u) {
            combo.push_back(u);
            if (rec(u + 1)) return true;
            combo.pop_back();
        }
        return false;
    };
    rec(0);
    return found;
}

inline bool property_holds(const boxclique::MultiColoredGraph& g, int k) {
    for (int v = 0; v < g.n(); ++v)
        for (int c = 0; c < g.t(); ++c)
            if (!smallest_clique(g, c, v, k)) return false;
    return true;
}

// Rank over exact rationals by plain Gaussian elimination.
inline int rational_rank(std::vector<std::vector<long long>> input) {
    using rational = boost::multiprecision::cpp_rational;
    if (input.empty()) return 0;
    const int rows = static_cast<int>(input.size());
    const int cols = static_cast<int>(input[0].size());
    std::vector<std::vector<rational>> m(rows, std::vector<rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = input[i][j];
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            rational f = m[i][col] / m[rank][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Four (k-1)-cliques in cycle order with alternating colors; cross edges
// between consecutive cliques carry the cycle edge color.
inline boxclique::MultiColoredGraph four_block_cycle(int k) {
    const int s = k - 1;
    auto block = [&](int p) {
        std::vector<int> vs(s);
        for (int i = 0; i < s; ++i) vs[i] = p * s + i;
        return vs;
    };
    std::vector<boxclique::ColoredEdge> edges;
    int clique_color[4] = {0, 1, 0, 1};
    int cross_color[4] = {0, 1, 0, 1}; // color of edges C_p -- C_{p+1}
    for (int p = 0; p < 4; ++p) {
        auto vs = block(p);
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                edges.push_back({vs[a], vs[b], clique_color[p]});
        auto ws = block((p + 1) % 4);
        for (int u : vs)
            for (int w : ws) {
                int x = std::min(u, w), y = std::max(u, w);
                edges.push_back({x, y, cross_color[p]});
            }
    }
    return boxclique::MultiColoredGraph(4 * s, 2, std::move(edges));
}

// Count 0/1 matrices of the given side with all row and column sums = s.
inline long long count_regular_matrices(int side, int s) {
    long long count = 0;
    const int bits = side * side;
    for (std::uint32_t m = 0; m < (1u << bits); ++m) {
        bool ok = true;
        for (int i = 0; i < side && ok; ++i) {
            int row = 0, col = 0;
            for (int j = 0; j < side; ++j) {
                row += (m >> (i * side + j)) & 1;
                col += (m >> (j * side + i)) & 1;
            }
            ok = row == s && col == s;
        }
        if (ok) ++count;
    }
    return count;
}

struct RandomTiling {
    int b = 0, r = 0;
    std::vector<boxclique::GridBox> boxes;
};

namespace detail {

inline std::vector<int> random_subset_containing(std::mt19937_64& rng, int first,
                                                 const std::vector<int>& others, int cap) {
    std::vector<int> out{first};
    for (int v : others) {
        if (static_cast<int>(out.size()) >= cap) break;
        if (rng() % 2 == 0) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Tiles whatever is uncovered, each box capped to max_rows x max_cols.
inline void fill_random(std::mt19937_64& rng, int b, int r, std::vector<std::vector<bool>>& covered,
                        std::vector<boxclique::GridBox>& boxes, int max_rows, int max_cols) {
    while (true) {
        int i0 = -1, j0 = -1;
        for (int i = 0; i < b && i0 < 0; ++i)
            for (int j = 0; j < r; ++j)
                if (!covered[i][j]) { i0 = i; j0 = j; break; }
        if (i0 < 0) break;
        std::vector<int> row_cands, col_cands;
        for (int i = i0 + 1; i < b; ++i)
            if (!covered[i][j0]) row_cands.push_back(i);
        for (int j = j0 + 1; j < r; ++j)
            if (!covered[i0][j]) col_cands.push_back(j);
        std::vector<int> rows = random_subset_containing(rng, i0, row_cands, max_rows);
        std::vector<int> cols = random_subset_containing(rng, j0, col_cands, max_cols);
        bool clear = true;
        for (int i : rows)
            for (int j : cols) clear = clear && !covered[i][j];
        if (!clear) {
            rows = {i0};
            cols = {j0};
        }
        for (int i : rows)
            for (int j : cols) covered[i][j] = true;
        boxes.push_back(
            boxclique::GridBox{static_cast<int>(boxes.size()), std::move(rows), std::move(cols)});
    }
}

} // namespace detail

// Square tiling with a permutation of 1x1 boxes first, so every line owns a
// singleton box; satisfies the (4) and (5) analogues.
inline RandomTiling random_tiling_with_singles(std::mt19937_64& rng, int b) {
    RandomTiling t;
    t.b = t.r = b;
    std::vector<int> sigma(b);
    for (int i = 0; i < b; ++i) sigma[i] = i;
    for (int i = b - 1; i > 0; --i)
        std::swap(sigma[i], sigma[rng() % static_cast<std::uint64_t>(i + 1)]);
    std::vector<std::vector<bool>> covered(b, std::vector<bool>(b, false));
    for (int i = 0; i < b; ++i) {
        covered[i][sigma[i]] = true;
        t.boxes.push_back(boxclique::GridBox{i, {i}, {sigma[i]}});
    }
    detail::fill_random(rng, b, b, covered, t.boxes, b, b);
    for (std::size_t v = 0; v < t.boxes.size(); ++v) t.boxes[v].vertex = static_cast<int>(v);
    return t;
}

// Tiling whose boxes span at most floor(b/k) rows and floor(r/k) columns, so
// every line meets at least k boxes; satisfies the (1), (3), (5) analogues.
inline RandomTiling random_tiling_capped(std::mt19937_64& rng, int b, int r, int k) {
    RandomTiling t;
    t.b = b;
    t.r = r;
    std::vector<std::vector<bool>> covered(b, std::vector<bool>(r, false));
    detail::fill_random(rng, b, r, covered, t.boxes, std::max(1, b / k), std::max(1, r / k));
    return t;
}

} // namespace oracle
