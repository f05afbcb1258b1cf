#include "boxclique/constructions.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "boxclique/errors.hpp"

namespace boxclique {

namespace {

void validate_pair(const BipartitePair& p) {
    const int side = p.side();
    if (p.k < 2) throw UsageError("pair requires k >= 2");
    if (static_cast<int>(p.blue.size()) != side)
        throw UsageError("biadjacency must have side 2(k-1) = " + std::to_string(side));
    std::vector<int> col_sum(side, 0);
    for (int i = 0; i < side; ++i) {
        if (static_cast<int>(p.blue[i].size()) != side)
            throw UsageError("biadjacency row " + std::to_string(i) + " has wrong length");
        int row_sum = 0;
        for (int j = 0; j < side; ++j) {
            if (p.blue[i][j] != 0 && p.blue[i][j] != 1)
                throw UsageError("biadjacency entries must be 0 or 1");
            row_sum += p.blue[i][j];
            col_sum[j] += p.blue[i][j];
        }
        if (row_sum != p.k - 1)
            throw UsageError("row " + std::to_string(i) + " has sum " + std::to_string(row_sum) +
                             ", expected " + std::to_string(p.k - 1));
    }
    for (int j = 0; j < side; ++j)
        if (col_sum[j] != p.k - 1)
            throw UsageError("column " + std::to_string(j) + " has sum " +
                             std::to_string(col_sum[j]) + ", expected " + std::to_string(p.k - 1));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

BipartitePair block_pair(int k) {
    if (k < 2) throw UsageError("block pair requires k >= 2");
    const int side = 2 * (k - 1);
    BipartitePair p{k, std::vector<std::vector<int>>(side, std::vector<int>(side, 0))};
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            if ((i < k - 1) == (j < k - 1)) p.blue[i][j] = 1;
    validate_pair(p);
    return p;
}

BipartitePair cycle_pair(int k) {
    if (k < 2) throw UsageError("cycle pair requires k >= 2");
    const int side = 2 * (k - 1);
    BipartitePair p{k, std::vector<std::vector<int>>(side, std::vector<int>(side, 0))};
    for (int i = 0; i < side; ++i)
        for (int s = 0; s < k - 1; ++s) p.blue[i][(i + s) % side] = 1;
    validate_pair(p);
    return p;
}

BipartitePair pair_from_biadjacency(int k, std::vector<std::vector<int>> matrix) {
    BipartitePair p{k, std::move(matrix)};
    validate_pair(p);
    return p;
}

BipartitePair random_pair(int k, std::uint64_t seed) {
    if (k < 2) throw UsageError("random pair requires k >= 2");
    const int side = 2 * (k - 1);
    // layers are rejected one at a time; a colliding permutation is redrawn
    for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::mt19937_64 rng(splitmix64(seed) ^ splitmix64(attempt + 1));
        std::vector<std::vector<int>> m(side, std::vector<int>(side, 0));
        bool failed = false;
        std::vector<int> perm(side);
        for (int layer = 0; layer < k - 1 && !failed; ++layer) {
            int redraws = 0;
            while (true) {
                for (int i = 0; i < side; ++i) perm[i] = i;
                for (int i = side - 1; i > 0; --i)
                    std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
                bool collides = false;
                for (int i = 0; i < side && !collides; ++i) collides = m[i][perm[i]] != 0;
                if (!collides) break;
                if (++redraws > 20000) { failed = true; break; }
            }
            if (failed) break;
            for (int i = 0; i < side; ++i) m[i][perm[i]] = 1;
        }
        if (!failed) {
            BipartitePair p{k, std::move(m)};
            validate_pair(p);
            return p;
        }
    }
    throw std::logic_error("random pair rejection loop exhausted");
}

namespace {

void enumerate_rows(int k, int side, std::vector<std::uint32_t>& rows,
                    std::vector<int>& col_sum,
                    const std::function<void(const BipartitePair&)>& fn) {
    const int filled = static_cast<int>(rows.size());
    if (filled == side) {
        BipartitePair p{k, std::vector<std::vector<int>>(side, std::vector<int>(side, 0))};
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) p.blue[i][j] = (rows[i] >> j) & 1;
        fn(p);
        return;
    }
    const int remaining = side - filled;
    // lexicographically ascending bitmasks with popcount k-1
    for (std::uint32_t mask = 0; mask < (1u << side); ++mask) {
        if (std::popcount(mask) != k - 1) continue;
        bool ok = true;
        for (int j = 0; j < side && ok; ++j) {
            int s = col_sum[j] + (((mask >> j) & 1) ? 1 : 0);
            if (s > k - 1 || s + (remaining - 1) < k - 1) ok = false;
        }
        if (!ok) continue;
        rows.push_back(mask);
        for (int j = 0; j < side; ++j) col_sum[j] += (mask >> j) & 1;
        enumerate_rows(k, side, rows, col_sum, fn);
        for (int j = 0; j < side; ++j) col_sum[j] -= (mask >> j) & 1;
        rows.pop_back();
    }
}

} // namespace

void for_each_labeled_pair(int k, const std::function<void(const BipartitePair&)>& fn) {
    if (k < 2) throw UsageError("pair enumeration requires k >= 2");
    if (k > 4) throw CapabilityError("pair enumeration budget is k <= 4");
    std::vector<std::uint32_t> rows;
    std::vector<int> col_sum(2 * (k - 1), 0);
    enumerate_rows(k, 2 * (k - 1), rows, col_sum, fn);
}

std::string pair_canonical_key(const BipartitePair& pair) {
    const int side = pair.side();
    std::vector<int> perm(side);
    std::string best;
    for (int transpose = 0; transpose < 2; ++transpose) {
        auto entry = [&](int i, int j) {
            return transpose ? pair.blue[j][i] : pair.blue[i][j];
        };
        for (int i = 0; i < side; ++i) perm[i] = i;
        do {
            // columns as bit values under this row order, sorted ascending
            std::vector<std::uint32_t> cols(side, 0);
            for (int j = 0; j < side; ++j)
                for (int i = 0; i < side; ++i)
                    cols[j] |= static_cast<std::uint32_t>(entry(perm[i], j)) << i;
            std::sort(cols.begin(), cols.end());
            std::string key;
            key.reserve(side);
            for (std::uint32_t c : cols) key.push_back(static_cast<char>(c));
            if (best.empty() || key < best) best = std::move(key);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return best;
}

std::vector<BipartitePair> enumerate_pairs(int k, bool up_to_iso) {
    std::vector<BipartitePair> out;
    if (!up_to_iso) {
        for_each_labeled_pair(k, [&](const BipartitePair& p) { out.push_back(p); });
        return out;
    }
    std::set<std::string> seen;
    for_each_labeled_pair(k, [&](const BipartitePair& p) {
        std::string key = pair_canonical_key(p);
        if (seen.insert(std::move(key)).second) out.push_back(p);
    });
    return out;
}

MultiColoredGraph build_extremal(const BipartitePair& pair) {
    validate_pair(pair);
    const int side = pair.side();
    const int n = 2 * side;
    std::vector<ColoredEdge> edges;
    // cross edges: complete bipartite, blue where the biadjacency says so
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y)
            edges.push_back(ColoredEdge{x, side + y, pair.blue[x][y] ? 0 : 1});
    // intra-X blue edges: common blue neighbor in Y
    for (int x1 = 0; x1 < side; ++x1)
        for (int x2 = x1 + 1; x2 < side; ++x2) {
            bool common = false;
            for (int y = 0; y < side && !common; ++y)
                common = pair.blue[x1][y] && pair.blue[x2][y];
            if (common) edges.push_back(ColoredEdge{x1, x2, 0});
        }
    // intra-Y red edges: common red neighbor in X
    for (int y1 = 0; y1 < side; ++y1)
        for (int y2 = y1 + 1; y2 < side; ++y2) {
            bool common = false;
            for (int x = 0; x < side && !common; ++x)
                common = !pair.blue[x][y1] && !pair.blue[x][y2];
            if (common) edges.push_back(ColoredEdge{side + y1, side + y2, 1});
        }
    return MultiColoredGraph(n, 2, std::move(edges));
}

MultiColoredGraph blowup_four_cycle(int k) {
    return build_extremal(block_pair(k));
}

MultiColoredGraph build_tcolor(int k, int t, const PairSource& source) {
    if (k < 2 || t < 2) throw UsageError("t-color construction requires k, t >= 2");
    const int side = 2 * (k - 1);
    const int n = t * side;
    if (n > kMaxVertices) throw CapabilityError("t-color construction exceeds vertex capacity");

    // pair_of[p][q] for p < q; color p edges are the blue side
    std::vector<std::vector<BipartitePair>> pair_of(t);
    for (int p = 0; p < t; ++p) {
        pair_of[p].resize(t, BipartitePair{k, {}});
        for (int q = p + 1; q < t; ++q) {
            BipartitePair pr = source ? source(p, q, k) : block_pair(k);
            validate_pair(pr);
            if (pr.k != k) throw UsageError("pair source returned wrong k");
            pair_of[p][q] = std::move(pr);
        }
    }
    auto cross_color = [&](int p, int u, int q, int v) {
        // u local to part p, v local to part q, p < q
        return pair_of[p][q].blue[u][v] ? p : q;
    };

    std::vector<ColoredEdge> edges;
    for (int p = 0; p < t; ++p)
        for (int q = p + 1; q < t; ++q)
            for (int u = 0; u < side; ++u)
                for (int v = 0; v < side; ++v)
                    edges.push_back(
                        ColoredEdge{p * side + u, q * side + v, cross_color(p, u, q, v)});

    // intra-part edges: common color-p neighbor in any other part
    for (int p = 0; p < t; ++p) {
        for (int u = 0; u < side; ++u)
            for (int w = u + 1; w < side; ++w) {
                bool common = false;
                for (int q = 0; q < t && !common; ++q) {
                    if (q == p) continue;
                    for (int v = 0; v < side && !common; ++v) {
                        int c = p < q ? cross_color(p, u, q, v) : cross_color(q, v, p, u);
                        int c2 = p < q ? cross_color(p, w, q, v) : cross_color(q, v, p, w);
                        common = (c == p && c2 == p);
                    }
                }
                if (common) edges.push_back(ColoredEdge{p * side + u, p * side + w, p});
            }
    }
    return MultiColoredGraph(n, std::max(t, 2), std::move(edges));
}

MultiColoredGraph k4_three_matchings() {
    std::vector<ColoredEdge> edges{{0, 1, 0}, {2, 3, 0}, {0, 2, 1},
                                   {1, 3, 1}, {0, 3, 2}, {1, 2, 2}};
    return MultiColoredGraph(4, 3, std::move(edges));
}

EdgeSurvey min_edges_survey(int k) {
    if (k != 3 && k != 4) throw CapabilityError("edge survey budget is k in {3,4}");
    EdgeSurvey s;
    s.k = k;
    s.formula_edges = 2 * (k - 1) * (3 * k - 4);
    s.min_edges = -1;
    std::set<std::string> minimizer_keys;
    for_each_labeled_pair(k, [&](const BipartitePair& p) {
        ++s.pairs_searched;
        MultiColoredGraph g = build_extremal(p);
        int e = static_cast<int>(g.edges().size());
        if (s.min_edges < 0 || e < s.min_edges) {
            s.min_edges = e;
            s.minimizer_count = 0;
            minimizer_keys.clear();
        }
        if (e == s.min_edges) {
            ++s.minimizer_count;
            minimizer_keys.insert(pair_canonical_key(p));
        }
    });
    s.minimizer_class_count = static_cast<int>(minimizer_keys.size());
    s.unique_minimizer_class = (s.minimizer_class_count == 1);
    s.minimizer_is_block_pair =
        minimizer_keys.count(pair_canonical_key(block_pair(k))) == 1;
    return s;
}

std::string render_edge_survey(const EdgeSurvey& s) {
    std::ostringstream out;
    out << "edge survey k=" << s.k << "\n";
    out << "pairs_searched " << s.pairs_searched << "\n";
    out << "min_edges " << s.min_edges << "\n";
    out << "formula_edges " << s.formula_edges << "\n";
    out << "minimizer_count " << s.minimizer_count << "\n";
    out << "minimizer_class_count " << s.minimizer_class_count << "\n";
    out << "minimizer_is_block_pair " << (s.minimizer_is_block_pair ? "true" : "false") << "\n";
    out << "unique_minimizer_class " << (s.unique_minimizer_class ? "true" : "false") << "\n";
    return out.str();
}

} // namespace boxclique
