#include "boxclique/boxes.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "boxclique/errors.hpp"

namespace boxclique {

namespace {

constexpr long long kCellMaterializeLimit = 1'000'000;

void validate_box(const DiscreteBox& box) {
    if (box.d() < 1) throw UsageError("box dimension must be at least 1");
    for (int s : box.sizes)
        if (s < 2) throw UsageError("every axis must have size >= 2");
}

void validate_family_shape(const BoxFamily& fam) {
    validate_box(fam.box);
    for (const SubBox& sub : fam.subs) {
        if (static_cast<int>(sub.sets.size()) != fam.box.d())
            throw UsageError("sub-box dimension mismatch");
        for (int axis = 0; axis < fam.box.d(); ++axis) {
            const auto& s = sub.sets[axis];
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] < 0 || s[i] >= fam.box.sizes[axis])
                    throw UsageError("sub-box index out of axis range");
                if (i > 0 && s[i - 1] >= s[i])
                    throw UsageError("sub-box sets must be strictly ascending");
            }
        }
    }
}

long long sub_volume(const SubBox& sub) {
    long long v = 1;
    for (const auto& s : sub.sets) v *= static_cast<long long>(s.size());
    return v;
}

bool subs_intersect(const SubBox& a, const SubBox& b) {
    for (std::size_t axis = 0; axis < a.sets.size(); ++axis) {
        const auto& x = a.sets[axis];
        const auto& y = b.sets[axis];
        bool meet = false;
        for (int v : x)
            if (std::binary_search(y.begin(), y.end(), v)) { meet = true; break; }
        if (!meet) return false;
    }
    return true;
}

// Runs fn over every cell of the box as a coordinate vector.
template <class F>
void for_each_cell(const DiscreteBox& box, F&& fn) {
    std::vector<int> coord(box.d(), 0);
    while (true) {
        fn(coord);
        int axis = box.d() - 1;
        while (axis >= 0) {
            if (++coord[axis] < box.sizes[axis]) break;
            coord[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
}

bool sub_contains(const SubBox& sub, const std::vector<int>& coord) {
    for (std::size_t axis = 0; axis < sub.sets.size(); ++axis)
        if (!std::binary_search(sub.sets[axis].begin(), sub.sets[axis].end(), coord[axis]))
            return false;
    return true;
}

// Near-equal split of [lo, lo+len) into `parts` contiguous pieces.
std::vector<std::pair<int, int>> split_interval(int lo, int len, int parts) {
    std::vector<std::pair<int, int>> out;
    int base = len / parts, extra = len % parts;
    int at = lo;
    for (int p = 0; p < parts; ++p) {
        int size = base + (p < extra ? 1 : 0);
        out.emplace_back(at, size);
        at += size;
    }
    return out;
}

std::vector<int> interval_set(int lo, int len) {
    std::vector<int> s(len);
    for (int i = 0; i < len; ++i) s[i] = lo + i;
    return s;
}

} // namespace

long long DiscreteBox::cells() const {
    long long total = 1;
    for (int s : sizes) {
        total *= s;
        if (total > kCellMaterializeLimit * 1024) return kCellMaterializeLimit * 1024;
    }
    return total;
}

BoxValidity validate_family(const BoxFamily& fam) {
    validate_family_shape(fam);
    BoxValidity v;

    v.all_nontrivial = true;
    for (const SubBox& sub : fam.subs)
        for (int axis = 0; axis < fam.box.d(); ++axis) {
            int size = static_cast<int>(sub.sets[axis].size());
            if (size == 0 || size == fam.box.sizes[axis]) v.all_nontrivial = false;
        }

    if (fam.box.cells() <= kCellMaterializeLimit) {
        // exact cell-by-cell ownership counts
        bool over = false, under = false;
        for_each_cell(fam.box, [&](const std::vector<int>& coord) {
            int owners = 0;
            for (const SubBox& sub : fam.subs)
                if (sub_contains(sub, coord)) ++owners;
            if (owners == 0) under = true;
            if (owners > 1) over = true;
        });
        v.disjoint = !over;
        v.covering = !under;
    } else {
        v.disjoint = true;
        for (std::size_t i = 0; i < fam.subs.size() && v.disjoint; ++i)
            for (std::size_t j = i + 1; j < fam.subs.size(); ++j)
                if (subs_intersect(fam.subs[i], fam.subs[j])) { v.disjoint = false; break; }
        if (!v.disjoint)
            throw CapabilityError("coverage check on overlapping family needs cell grid <= 10^6");
        long long total = 1;
        for (int s : fam.box.sizes) total *= static_cast<long long>(s);
        long long sum = 0;
        for (const SubBox& sub : fam.subs) sum += sub_volume(sub);
        v.covering = (sum == total);
    }
    v.partition = v.disjoint && v.covering;
    return v;
}

int piercing_number(const BoxFamily& fam) {
    validate_family_shape(fam);
    const int d = fam.box.d();
    int best = -1;
    for (int axis = 0; axis < d; ++axis) {
        // odometer over the coordinates of all other axes
        std::vector<int> other_axes;
        for (int a = 0; a < d; ++a)
            if (a != axis) other_axes.push_back(a);
        std::vector<int> coord(other_axes.size(), 0);
        while (true) {
            int met = 0;
            for (const SubBox& sub : fam.subs) {
                if (sub.sets[axis].empty()) continue;
                bool hits = true;
                for (std::size_t idx = 0; idx < other_axes.size() && hits; ++idx) {
                    const auto& s = sub.sets[other_axes[idx]];
                    hits = std::binary_search(s.begin(), s.end(), coord[idx]);
                }
                if (hits) ++met;
            }
            if (best < 0 || met < best) best = met;
            int pos = static_cast<int>(other_axes.size()) - 1;
            while (pos >= 0) {
                if (++coord[pos] < fam.box.sizes[other_axes[pos]]) break;
                coord[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return best < 0 ? 0 : best;
}

BoxFamily figure1_partition(int k, int n1, int n2) {
    if (k < 2) throw UsageError("figure-1 partition requires k >= 2");
    if (n1 < 2 * (k - 1) || n2 < 2 * (k - 1))
        throw UsageError("figure-1 partition requires n1, n2 >= 2(k-1)");
    int h1 = n1 / 2, h2 = n2 / 2;
    if (h1 < k - 1 || n1 - h1 < k - 1 || h2 < k - 1 || n2 - h2 < k - 1)
        throw UsageError("each half must hold k-1 strips");

    BoxFamily fam;
    fam.box.sizes = {n1, n2};
    auto add_strips_across_axis0 = [&](int lo0, int len0, int lo1, int len1) {
        for (auto [at, size] : split_interval(lo0, len0, k - 1))
            fam.subs.push_back(SubBox{{interval_set(at, size), interval_set(lo1, len1)}});
    };
    auto add_strips_across_axis1 = [&](int lo0, int len0, int lo1, int len1) {
        for (auto [at, size] : split_interval(lo1, len1, k - 1))
            fam.subs.push_back(SubBox{{interval_set(lo0, len0), interval_set(at, size)}});
    };
    add_strips_across_axis0(0, h1, 0, h2);            // left, top
    add_strips_across_axis1(h1, n1 - h1, 0, h2);      // right, top
    add_strips_across_axis1(0, h1, h2, n2 - h2);      // left, bottom
    add_strips_across_axis0(h1, n1 - h1, h2, n2 - h2); // right, bottom
    return fam;
}

BoxFamily grid_partition(const DiscreteBox& box, const std::vector<int>& cuts) {
    validate_box(box);
    if (static_cast<int>(cuts.size()) != box.d())
        throw UsageError("one cut count per axis required");
    for (int axis = 0; axis < box.d(); ++axis)
        if (cuts[axis] < 1 || cuts[axis] > box.sizes[axis])
            throw UsageError("cut count out of range on axis " + std::to_string(axis));

    std::vector<std::vector<std::vector<int>>> blocks(box.d());
    for (int axis = 0; axis < box.d(); ++axis)
        for (auto [at, size] : split_interval(0, box.sizes[axis], cuts[axis]))
            blocks[axis].push_back(interval_set(at, size));

    BoxFamily fam;
    fam.box = box;
    std::vector<int> choice(box.d(), 0);
    while (true) {
        SubBox sub;
        sub.sets.resize(box.d());
        for (int axis = 0; axis < box.d(); ++axis) sub.sets[axis] = blocks[axis][choice[axis]];
        fam.subs.push_back(std::move(sub));
        int axis = box.d() - 1;
        while (axis >= 0) {
            if (++choice[axis] < cuts[axis]) break;
            choice[axis] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return fam;
}

MultiColoredGraph reduce_to_graph(const BoxFamily& fam) {
    validate_family_shape(fam);
    if (fam.box.d() != 2) throw UsageError("graph reduction is defined for d = 2");
    for (std::size_t i = 0; i < fam.subs.size(); ++i)
        for (std::size_t j = i + 1; j < fam.subs.size(); ++j)
            if (subs_intersect(fam.subs[i], fam.subs[j]))
                throw PreconditionError("sub-boxes " + std::to_string(i) + " and " +
                                        std::to_string(j) + " overlap");

    const int n = static_cast<int>(fam.subs.size());
    std::vector<ColoredEdge> edges;
    auto sets_meet = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int v : a)
            if (std::binary_search(b.begin(), b.end(), v)) return true;
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const SubBox& a = fam.subs[i];
            const SubBox& b = fam.subs[j];
            // a shared horizontal line fixes axis 1; both boxes need nonempty
            // axis-0 extent to meet it
            bool blue = !a.sets[0].empty() && !b.sets[0].empty() && sets_meet(a.sets[1], b.sets[1]);
            bool red = !a.sets[1].empty() && !b.sets[1].empty() && sets_meet(a.sets[0], b.sets[0]);
            if (blue && red) throw std::logic_error("disjoint boxes sharing both line kinds");
            if (blue) edges.push_back(ColoredEdge{i, j, 0});
            if (red) edges.push_back(ColoredEdge{i, j, 1});
        }
    return MultiColoredGraph(n, 2, std::move(edges));
}

Corollary5Report corollary5_check(const BoxFamily& fam, bool require_cover) {
    validate_family_shape(fam);
    if (fam.box.d() != 2) throw UsageError("decomposition check is defined for d = 2");
    BoxValidity validity = validate_family(fam);
    if (require_cover && !validity.partition)
        throw PreconditionError("family is not a partition of the box");

    Corollary5Report rep;
    rep.m = static_cast<int>(fam.subs.size());
    rep.n1 = fam.box.sizes[0];
    rep.n2 = fam.box.sizes[1];
    rep.partition = validity.partition;
    rep.piercing = piercing_number(fam);
    rep.bound = rep.n1 + rep.n2 - 1;

    rep.singleton_rows = true;
    for (int x = 0; x < rep.n1 && rep.singleton_rows; ++x) {
        bool found = false;
        for (const SubBox& sub : fam.subs)
            if (sub.sets[0] == std::vector<int>{x}) { found = true; break; }
        rep.singleton_rows = found;
    }
    rep.singleton_cols = true;
    for (int y = 0; y < rep.n2 && rep.singleton_cols; ++y) {
        bool found = false;
        for (const SubBox& sub : fam.subs)
            if (sub.sets[1] == std::vector<int>{y}) { found = true; break; }
        rep.singleton_cols = found;
    }

    if (rep.partition && rep.singleton_rows && rep.singleton_cols) {
        std::vector<GridBox> boxes;
        for (std::size_t t = 0; t < fam.subs.size(); ++t)
            boxes.push_back(
                GridBox{static_cast<int>(t), fam.subs[t].sets[0], fam.subs[t].sets[1]});
        CoverFamilies cf = families_from_grid_boxes(rep.n1, rep.n2, boxes);
        rep.certificate = prop2_certificate(cf);
        rep.bound_holds = rep.m >= rep.bound;
        rep.tight = rep.m == rep.bound;
    }
    return rep;
}

std::string render_svg(const BoxFamily& fam) {
    validate_family_shape(fam);
    if (fam.box.d() != 2) throw UsageError("SVG rendering is defined for d = 2");
    const int n1 = fam.box.sizes[0];
    const int n2 = fam.box.sizes[1];
    const int cell = 24;

    // lowest-index owner per cell, -1 if uncovered
    std::vector<std::vector<int>> owner(n1, std::vector<int>(n2, -1));
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y)
            for (std::size_t s = 0; s < fam.subs.size(); ++s)
                if (sub_contains(fam.subs[s], {x, y})) {
                    owner[x][y] = static_cast<int>(s);
                    break;
                }

    static const char* kPalette[20] = {
        "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1",
        "#ff9da7", "#9c755f", "#bab0ac", "#8cd17d", "#b6992d", "#499894", "#d37295",
        "#fabfd2", "#79706e", "#d4a6c8", "#86bcb6", "#f1ce63", "#a0cbe8"};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n1 * cell << "\" height=\""
        << n2 * cell << "\" viewBox=\"0 0 " << n1 * cell << " " << n2 * cell << "\">\n";
    for (int x = 0; x < n1; ++x)
        for (int y = 0; y < n2; ++y) {
            const char* fill = owner[x][y] < 0 ? "#ffffff" : kPalette[owner[x][y] % 20];
            out << "<rect x=\"" << x * cell << "\" y=\"" << y * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill
                << "\" stroke=\"#666666\" stroke-width=\"1\"/>\n";
        }
    // heavy border wherever adjacent cells belong to different sub-boxes
    auto owner_at = [&](int x, int y) { return (x < 0 || x >= n1 || y < 0 || y >= n2) ? -2 : owner[x][y]; };
    for (int x = 0; x <= n1; ++x)
        for (int y = 0; y < n2; ++y)
            if (owner_at(x - 1, y) != owner_at(x, y))
                out << "<line x1=\"" << x * cell << "\" y1=\"" << y * cell << "\" x2=\""
                    << x * cell << "\" y2=\"" << (y + 1) * cell
                    << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    for (int y = 0; y <= n2; ++y)
        for (int x = 0; x < n1; ++x)
            if (owner_at(x, y - 1) != owner_at(x, y))
                out << "<line x1=\"" << x * cell << "\" y1=\"" << y * cell << "\" x2=\""
                    << (x + 1) * cell << "\" y2=\"" << y * cell
                    << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    out << "</svg>\n";
    return out.str();
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

std::vector<int> parse_comma_list(const std::string& s, int line_no) {
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

BoxFamily parse_boxf(const std::string& text) {
    auto lines = split_lines_strict(text);
    if (lines.size() < 3) throw FormatError("line 1: truncated .boxf header");
    if (lines[0] != "boxf 1") throw FormatError("line 1: expected 'boxf 1'");
    if (lines[1].rfind("d ", 0) != 0) throw FormatError("line 2: expected 'd <D>'");
    int d = parse_plain_int(lines[1].substr(2), 2);
    if (lines[2].rfind("axes ", 0) != 0) throw FormatError("line 3: expected 'axes <n1> ...'");

    BoxFamily fam;
    {
        std::string rest = lines[2].substr(5);
        std::size_t start = 0;
        while (true) {
            std::size_t sp = rest.find(' ', start);
            std::string tok =
                sp == std::string::npos ? rest.substr(start) : rest.substr(start, sp - start);
            fam.box.sizes.push_back(parse_plain_int(tok, 3));
            if (sp == std::string::npos) break;
            start = sp + 1;
        }
    }
    if (fam.box.d() != d) throw FormatError("line 3: axis count does not match d");

    for (std::size_t i = 3; i < lines.size(); ++i) {
        int line_no = static_cast<int>(i) + 1;
        if (lines[i].rfind("sub ", 0) != 0)
            throw FormatError("line " + std::to_string(line_no) + ": expected 'sub <sets>'");
        std::string rest = lines[i].substr(4);
        SubBox sub;
        std::size_t start = 0;
        while (true) {
            std::size_t semi = rest.find(';', start);
            std::string tok =
                semi == std::string::npos ? rest.substr(start) : rest.substr(start, semi - start);
            sub.sets.push_back(parse_comma_list(tok, line_no));
            if (semi == std::string::npos) break;
            start = semi + 1;
        }
        if (static_cast<int>(sub.sets.size()) != d)
            throw FormatError("line " + std::to_string(line_no) +
                              ": expected " + std::to_string(d) + " axis sets");
        fam.subs.push_back(std::move(sub));
    }
    try {
        validate_family_shape(fam);
    } catch (const UsageError& e) {
        throw FormatError(std::string("invalid box family: ") + e.what());
    }
    return fam;
}

std::string serialize_boxf(const BoxFamily& fam) {
    std::ostringstream out;
    out << "boxf 1\nd " << fam.box.d() << "\naxes";
    for (int s : fam.box.sizes) out << " " << s;
    out << "\n";
    for (const SubBox& sub : fam.subs) {
        out << "sub ";
        for (int axis = 0; axis < fam.box.d(); ++axis) {
            if (axis) out << ";";
            for (std::size_t i = 0; i < sub.sets[axis].size(); ++i) {
                if (i) out << ",";
                out << sub.sets[axis][i];
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string render_box_validity(const BoxValidity& v, int piercing) {
    std::ostringstream out;
    out << "box family report\n";
    out << "disjoint " << (v.disjoint ? "true" : "false") << "\n";
    out << "covering " << (v.covering ? "true" : "false") << "\n";
    out << "partition " << (v.partition ? "true" : "false") << "\n";
    out << "all_nontrivial " << (v.all_nontrivial ? "true" : "false") << "\n";
    out << "piercing " << piercing << "\n";
    return out.str();
}

std::string render_corollary5_report(const Corollary5Report& r) {
    std::ostringstream out;
    out << "decomposition check\n";
    out << "m " << r.m << "\n";
    out << "axes " << r.n1 << " " << r.n2 << "\n";
    out << "partition " << (r.partition ? "true" : "false") << "\n";
    out << "singleton_rows " << (r.singleton_rows ? "true" : "false") << "\n";
    out << "singleton_cols " << (r.singleton_cols ? "true" : "false") << "\n";
    out << "piercing " << r.piercing << "\n";
    out << "bound " << r.bound << "\n";
    out << "bound_holds " << (r.bound_holds ? "true" : "false") << "\n";
    out << "tight " << (r.tight ? "true" : "false") << "\n";
    if (r.certificate) out << render_rank_certificate(*r.certificate);
    return out.str();
}

} // namespace boxclique
