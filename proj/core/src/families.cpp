#include "boxclique/families.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "boxclique/bits.hpp"
#include "boxclique/errors.hpp"

namespace boxclique {

namespace {

void validate_families(const CoverFamilies& f) {
    if (f.n_vertices < 0 || f.n_vertices > kMaxVertices)
        throw UsageError("ground set size out of range");
    if (f.blue.empty() || f.red.empty())
        throw UsageError("families require at least one blue and one red set");
    for (const auto* fam : {&f.blue, &f.red}) {
        for (const auto& s : *fam) {
            if (s.empty()) throw UsageError("families must not contain empty sets");
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] < 0 || s[i] >= f.n_vertices)
                    throw UsageError("set member out of ground-set range");
                if (i > 0 && s[i - 1] >= s[i])
                    throw UsageError("sets must be strictly ascending vertex lists");
            }
        }
    }
}

std::vector<Bits128> to_bits(const std::vector<std::vector<int>>& fam) {
    std::vector<Bits128> out(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (int v : fam[i]) out[i].set(v);
    return out;
}

// Vertices of fam[idx] belonging to no other set of the same family.
std::vector<int> private_vertices(const std::vector<std::vector<int>>& fam, std::size_t idx) {
    Bits128 others;
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (i != idx)
            for (int v : fam[i]) others.set(v);
    std::vector<int> out;
    for (int v : fam[idx])
        if (!others.test(v)) out.push_back(v);
    return out;
}

} // namespace

CoverFamilies extract_witnesses(const MultiColoredGraph& g, int k) {
    if (g.t() != 2) throw UsageError("witness extraction is defined for 2-colored graphs");
    PropertyReport rep = check_property(g, k);
    if (!rep.holds)
        throw PreconditionError("graph fails the k-clique property at v=" +
                                std::to_string(rep.fail_vertex) +
                                " color=" + std::to_string(rep.fail_color));
    CoverFamilies f;
    f.n_vertices = g.n();
    for (const CliqueWitness& w : rep.witnesses) {
        auto& fam = (w.color == 0) ? f.blue : f.red;
        if (std::find(fam.begin(), fam.end(), w.clique) == fam.end()) fam.push_back(w.clique);
    }
    return f;
}

ConditionReport check_conditions(const CoverFamilies& f, int k) {
    validate_families(f);
    if (k < 1) throw UsageError("k must be positive");
    ConditionReport r;
    r.k = k;

    r.sizes_at_least_k = true;
    for (int side = 0; side < 2 && r.sizes_at_least_k; ++side) {
        const auto& fam = side == 0 ? f.blue : f.red;
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (static_cast<int>(fam[i].size()) < k) {
                r.sizes_at_least_k = false;
                r.w1 = ConditionWitness{side == 0 ? 'B' : 'R', static_cast<int>(i), -1, -1};
                break;
            }
    }

    auto bb = to_bits(f.blue);
    auto rb = to_bits(f.red);

    r.intersections_at_most_one = true;
    r.intersections_exactly_one = true;
    for (int i = 0; i < f.b(); ++i) {
        for (int j = 0; j < f.r(); ++j) {
            int size = (bb[i] & rb[j]).count();
            if (size > 1 && r.intersections_at_most_one) {
                r.intersections_at_most_one = false;
                r.w2 = ConditionWitness{'B', i, j, -1};
            }
            if (size != 1 && r.intersections_exactly_one) {
                r.intersections_exactly_one = false;
                r.w5 = ConditionWitness{'B', i, j, -1};
            }
        }
    }

    Bits128 blue_union, red_union;
    for (const auto& s : bb) blue_union |= s;
    for (const auto& s : rb) red_union |= s;
    r.both_cover_ground = true;
    for (int v = 0; v < f.n_vertices && r.both_cover_ground; ++v) {
        if (!blue_union.test(v)) {
            r.both_cover_ground = false;
            r.w3 = ConditionWitness{'B', -1, -1, v};
        } else if (!red_union.test(v)) {
            r.both_cover_ground = false;
            r.w3 = ConditionWitness{'R', -1, -1, v};
        }
    }

    r.private_vertices = true;
    for (int side = 0; side < 2 && r.private_vertices; ++side) {
        const auto& fam = side == 0 ? f.blue : f.red;
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (private_vertices(fam, i).empty()) {
                r.private_vertices = false;
                r.w4 = ConditionWitness{side == 0 ? 'B' : 'R', static_cast<int>(i), -1, -1};
                break;
            }
    }
    return r;
}

CoverFamilies normalize(const CoverFamilies& input, int k) {
    ConditionReport pre = check_conditions(input, k);
    if (!pre.sizes_at_least_k || !pre.intersections_at_most_one || !pre.both_cover_ground)
        throw PreconditionError("normalize requires conditions (1)-(3) on input");

    CoverFamilies f = input;

    // Phase A: drop the lowest-index set (blue scanned first) contained in the
    // union of its same-family peers, until every set has a private vertex.
    auto phase_a = [&]() {
        bool deleted = true;
        while (deleted) {
            deleted = false;
            for (auto* fam : {&f.blue, &f.red}) {
                for (std::size_t i = 0; i < fam->size(); ++i) {
                    if (private_vertices(*fam, i).empty()) {
                        fam->erase(fam->begin() + static_cast<std::ptrdiff_t>(i));
                        deleted = true;
                        break;
                    }
                }
                if (deleted) break;
            }
        }
    };

    auto incidence_size = [&](const std::vector<std::vector<int>>& fam, int v) {
        int cnt = 0;
        for (const auto& s : fam)
            if (std::binary_search(s.begin(), s.end(), v)) ++cnt;
        return cnt;
    };

    // Smallest-index private vertex of fam[idx], preferring one whose
    // opposite-family incidence has size >= 2.
    auto pick_private = [&](const std::vector<std::vector<int>>& fam, std::size_t idx,
                            const std::vector<std::vector<int>>& opposite) {
        std::vector<int> privates = private_vertices(fam, idx);
        for (int v : privates)
            if (incidence_size(opposite, v) >= 2) return v;
        return privates.front();
    };

    int metric = f.b() + f.r() + f.b() * f.r() + 1;
    while (true) {
        phase_a();
        int empty_i = -1, empty_j = -1;
        {
            auto bb = to_bits(f.blue);
            auto rb = to_bits(f.red);
            for (int i = 0; i < f.b() && empty_i < 0; ++i)
                for (int j = 0; j < f.r(); ++j)
                    if ((bb[i] & rb[j]).none()) {
                        empty_i = i;
                        empty_j = j;
                        break;
                    }
        }
        if (empty_i < 0) break;

        int from_blue = pick_private(f.blue, empty_i, f.red);
        int from_red = pick_private(f.red, empty_j, f.blue);
        // Repair from the side whose candidate has the larger opposite
        // incidence; ties go to the blue side.
        if (incidence_size(f.red, from_blue) >= incidence_size(f.blue, from_red)) {
            auto& target = f.red[empty_j];
            target.insert(std::upper_bound(target.begin(), target.end(), from_blue), from_blue);
        } else {
            auto& target = f.blue[empty_i];
            target.insert(std::upper_bound(target.begin(), target.end(), from_red), from_red);
        }

        int empties = 0;
        {
            auto bb = to_bits(f.blue);
            auto rb = to_bits(f.red);
            for (int i = 0; i < f.b(); ++i)
                for (int j = 0; j < f.r(); ++j)
                    if ((bb[i] & rb[j]).none()) ++empties;
        }
        int new_metric = f.b() + f.r() + empties;
        if (new_metric >= metric)
            throw std::logic_error("normalize made no progress");
        metric = new_metric;
    }

    ConditionReport post = check_conditions(f, k);
    if (!post.all()) throw std::logic_error("normalize output violates (1)-(5)");
    return f;
}

IncidencePattern incidence(const CoverFamilies& f) {
    validate_families(f);
    IncidencePattern p;
    p.I.assign(f.n_vertices, {});
    p.J.assign(f.n_vertices, {});
    for (int i = 0; i < f.b(); ++i)
        for (int v : f.blue[i]) p.I[v].push_back(i);
    for (int j = 0; j < f.r(); ++j)
        for (int v : f.red[j]) p.J[v].push_back(j);
    return p;
}

std::vector<GridBox> grid_boxes(const CoverFamilies& f) {
    ConditionReport rep = check_conditions(f, 1);
    if (!rep.intersections_exactly_one)
        throw PreconditionError("grid boxes require condition (5); fails at (" +
                                std::to_string(rep.w5->index) + "," +
                                std::to_string(rep.w5->other) + ")");
    IncidencePattern p = incidence(f);
    std::vector<GridBox> boxes;
    for (int v = 0; v < f.n_vertices; ++v) {
        if (p.I[v].empty() || p.J[v].empty()) continue;
        boxes.push_back(GridBox{v, p.I[v], p.J[v]});
    }
    // Under (5) the boxes tile [b] x [r].
    std::vector<int> owner(static_cast<std::size_t>(f.b()) * f.r(), -1);
    for (const GridBox& box : boxes)
        for (int i : box.rows)
            for (int j : box.cols) {
                int cell = i * f.r() + j;
                if (owner[cell] != -1) throw std::logic_error("grid boxes overlap under (5)");
                owner[cell] = box.vertex;
            }
    for (int cell : owner)
        if (cell == -1) throw std::logic_error("grid boxes fail to cover under (5)");
    return boxes;
}

MultiColoredGraph graph_from_families(const CoverFamilies& f) {
    validate_families(f);
    std::vector<std::vector<int>> color(f.n_vertices, std::vector<int>(f.n_vertices, -1));
    auto paint = [&](const std::vector<std::vector<int>>& fam, int c) {
        for (const auto& s : fam)
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b2 = a + 1; b2 < s.size(); ++b2) {
                    int u = s[a], v = s[b2];
                    if (color[u][v] != -1 && color[u][v] != c)
                        throw PreconditionError(
                            "pair {" + std::to_string(u) + "," + std::to_string(v) +
                            "} lies in both a blue and a red set (violates (2))");
                    color[u][v] = c;
                }
    };
    paint(f.blue, 0);
    paint(f.red, 1);
    std::vector<ColoredEdge> edges;
    for (int u = 0; u < f.n_vertices; ++u)
        for (int v = u + 1; v < f.n_vertices; ++v)
            if (color[u][v] != -1) edges.push_back(ColoredEdge{u, v, color[u][v]});
    return MultiColoredGraph(f.n_vertices, 2, std::move(edges));
}

CoverFamilies families_from_grid_boxes(int b, int r, const std::vector<GridBox>& boxes) {
    CoverFamilies f;
    f.n_vertices = static_cast<int>(boxes.size());
    f.blue.assign(b, {});
    f.red.assign(r, {});
    for (std::size_t t = 0; t < boxes.size(); ++t) {
        for (int i : boxes[t].rows) {
            if (i < 0 || i >= b) throw UsageError("grid box row index out of range");
            f.blue[i].push_back(static_cast<int>(t));
        }
        for (int j : boxes[t].cols) {
            if (j < 0 || j >= r) throw UsageError("grid box column index out of range");
            f.red[j].push_back(static_cast<int>(t));
        }
    }
    validate_families(f);
    return f;
}

namespace {

std::vector<std::string> split_lines_strict(const std::string& text) {
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

int parse_plain_int(const std::string& s, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() ||
        (s.size() > 1 && s[0] == '0') || s[0] == '-')
        throw FormatError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
    return value;
}

std::vector<int> parse_index_list(const std::string& s, int line_no) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string tok =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        out.push_back(parse_plain_int(tok, line_no));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

CoverFamilies parse_fam(const std::string& text) {
    auto lines = split_lines_strict(text);
    if (lines.size() < 2) throw FormatError("line 1: truncated .fam header");
    if (lines[0] != "fam 1") throw FormatError("line 1: expected 'fam 1'");
    if (lines[1].rfind("v ", 0) != 0) throw FormatError("line 2: expected 'v <N>'");
    CoverFamilies f;
    f.n_vertices = parse_plain_int(lines[1].substr(2), 2);
    bool seen_red = false;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (line.rfind("B ", 0) == 0) {
            if (seen_red)
                throw FormatError("line " + std::to_string(line_no) +
                                  ": blue sets must precede red sets");
            f.blue.push_back(parse_index_list(line.substr(2), line_no));
        } else if (line.rfind("R ", 0) == 0) {
            seen_red = true;
            f.red.push_back(parse_index_list(line.substr(2), line_no));
        } else {
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected 'B <list>' or 'R <list>'");
        }
    }
    try {
        validate_families(f);
    } catch (const UsageError& e) {
        throw FormatError(std::string("invalid families: ") + e.what());
    }
    return f;
}

std::string serialize_fam(const CoverFamilies& f) {
    std::ostringstream out;
    out << "fam 1\nv " << f.n_vertices << "\n";
    for (int side = 0; side < 2; ++side) {
        const auto& fam = side == 0 ? f.blue : f.red;
        for (const auto& s : fam) {
            out << (side == 0 ? "B " : "R ");
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) out << ",";
                out << s[i];
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string render_condition_report(const ConditionReport& r) {
    std::ostringstream out;
    out << "conditions k=" << r.k << "\n";
    auto line = [&](const char* label, bool ok, const std::optional<ConditionWitness>& w,
                    int which) {
        out << label << (ok ? " ok" : " FAIL");
        if (!ok && w) {
            if (which == 1 || which == 4)
                out << " at " << w->family << "[" << w->index << "]";
            else if (which == 2 || which == 5)
                out << " at (" << w->index << "," << w->other << ")";
            else
                out << " vertex " << w->vertex << " uncovered on " << w->family << " side";
        }
        out << "\n";
    };
    line("(1) set sizes >= k:", r.sizes_at_least_k, r.w1, 1);
    line("(2) intersections <= 1:", r.intersections_at_most_one, r.w2, 2);
    line("(3) families cover ground set:", r.both_cover_ground, r.w3, 3);
    line("(4) private vertices:", r.private_vertices, r.w4, 4);
    line("(5) intersections == 1:", r.intersections_exactly_one, r.w5, 5);
    return out.str();
}

} // namespace boxclique
