// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The default run covers every criterion at the k <= 3 budgets; the
// --extended flag runs the k = 4 searches (criteria 2 and 12 at their long
// budgets).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "boxclique/boxes.hpp"
#include "boxclique/canonical.hpp"
#include "boxclique/certificates.hpp"
#include "boxclique/cli.hpp"
#include "boxclique/constructions.hpp"
#include "boxclique/errors.hpp"
#include "boxclique/families.hpp"
#include "boxclique/graph.hpp"
#include "boxclique/search.hpp"
#include "../oracles.hpp"

using namespace boxclique;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = BOXCLIQUE_TEST_DATA_DIR;

int failures = 0;

void criterion(const std::string& id, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << "\n";
    std::cout.flush();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cli(std::vector<std::string> args, std::string* captured = nullptr) {
    std::ostringstream out, err;
    int code = boxclique::cli::run(args, out, err);
    if (captured) *captured = out.str();
    return code;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// 1. construct blowup + check-graph for k = 2..8, exactly 4(k-1) vertices,
//    all through the command-line surface, under 10 seconds total.
void criterion1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    fs::path tmp = fs::temp_directory_path() / "boxclique_acceptance.ecg";
    for (int k = 2; k <= 8 && ok; ++k) {
        ok = cli({"construct", "blowup", "--k", std::to_string(k), "-o", tmp.string()}) == 0;
        if (!ok) { detail = "construct failed at k=" + std::to_string(k); break; }
        std::string out;
        ok = cli({"check-graph", "--k", std::to_string(k), tmp.string()}, &out) == 0;
        if (!ok) { detail = "check-graph failed at k=" + std::to_string(k); break; }
        MultiColoredGraph g = parse_ecg(slurp(tmp));
        ok = g.n() == 4 * (k - 1);
        if (!ok) detail = "wrong vertex count at k=" + std::to_string(k);
    }
    fs::remove(tmp);
    double t = seconds_since(start);
    if (ok && t >= 10.0) { ok = false; detail = "too slow"; }
    if (ok) detail = "blowup k=2..8 passes check-graph on 4(k-1) vertices, " +
                     std::to_string(t).substr(0, 4) + "s";
    criterion("1", ok, detail);
}

// 2. exhaustive lower bound at k = 2 and 3 (single-threaded, < 60 s each).
void criterion2() {
    bool ok = true;
    std::string detail = "theorem-1 minima:";
    for (int k : {2, 3}) {
        auto start = std::chrono::steady_clock::now();
        Theorem1Result res = verify_theorem1(k);
        double t = seconds_since(start);
        bool this_ok = res.conclusive && res.concluded_minimum == 4 * (k - 1) && t < 60.0;
        detail += " k=" + std::to_string(k) + "->" + std::to_string(res.concluded_minimum);
        ok = ok && this_ok;
    }
    criterion("2", ok, detail + " (k=4 under --extended)");
}

void criterion2_extended() {
    auto start = std::chrono::steady_clock::now();
    SearchLimits limits;
    limits.threads = 8;
    Theorem1Result res = verify_theorem1(4, /*extended=*/true, limits);
    double t = seconds_since(start);
    bool ok = res.conclusive && res.concluded_minimum == 12 && t < 1800.0;
    criterion("2-extended", ok,
              "theorem-1 minimum k=4 -> " + std::to_string(res.concluded_minimum) + ", " +
                  std::to_string(t).substr(0, 5) + "s (parallel)");
}

// 3. exactly one extremal class at k = 2.
void criterion3() {
    ExtremalEnumeration e = enumerate_extremal(2);
    bool ok = e.record.conclusive && e.classes_color_fixed == 1 && e.all_match_construction;
    criterion("3", ok, "k=2 extremal classes = " + std::to_string(e.classes_color_fixed));
}

// 4. k = 3: at least two classes, every class built by some pair, count stable
//    across repeated runs and thread counts.
void criterion4() {
    ExtremalEnumeration base = enumerate_extremal(3);
    bool ok = base.record.conclusive && base.classes_color_fixed >= 2 &&
              base.all_match_construction;
    std::string fp = proof_record_fingerprint(base.record);
    for (int threads : {1, 2, 8}) {
        SearchLimits limits;
        limits.threads = threads;
        ExtremalEnumeration again = enumerate_extremal(3, limits);
        ok = ok && proof_record_fingerprint(again.record) == fp &&
             again.classes_color_fixed == base.classes_color_fixed;
    }
    criterion("4", ok,
              "k=3 classes = " + std::to_string(base.classes_color_fixed) +
                  " (color-permuting " + std::to_string(base.classes_color_permuting) +
                  "), all isomorphic to pair constructions, stable across runs");
}

// 5. 200 randomized (4)&(5) families: trivial kernel and nV >= b+r-1 always.
void criterion5() {
    std::mt19937_64 rng(20240501);
    int checked = 0;
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int b = 2 + static_cast<int>(rng() % 5);
        oracle::RandomTiling t = oracle::random_tiling_with_singles(rng, b);
        CoverFamilies f = families_from_grid_boxes(t.b, t.r, t.boxes);
        ConditionReport rep = check_conditions(f, 1);
        ok = rep.private_vertices && rep.intersections_exactly_one;
        if (!ok) break;
        RankCertificate cert = prop2_certificate(f);
        ok = cert.kernel_trivial && f.n_vertices >= cert.implied_bound;
        ++checked;
    }
    criterion("5", ok && checked == 200,
              std::to_string(checked) + "/200 randomized (4)&(5) families have trivial kernel "
                                        "and nV >= b+r-1");
}

// 6. 200 randomized (1),(3),(5) families with k in {2,3,4}: counting bound and
//    100/100 identity trials.
void criterion6() {
    std::mt19937_64 rng(20240502);
    int checked = 0;
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int k = 2 + trial % 3;
        int b = k * (1 + static_cast<int>(rng() % 2)) + static_cast<int>(rng() % 2);
        int r = k * (1 + static_cast<int>(rng() % 2)) + static_cast<int>(rng() % 2);
        oracle::RandomTiling t = oracle::random_tiling_capped(rng, b, r, k);
        CoverFamilies f = families_from_grid_boxes(t.b, t.r, t.boxes);
        CountingReport rep = counting_bound(f, k);
        ok = rep.holds && identity_check(f, 100, 1000 + trial);
        ++checked;
    }
    criterion("6", ok && checked == 200,
              std::to_string(checked) +
                  "/200 randomized (1),(3),(5) families satisfy nV >= k(b+r)-br and pass "
                  "100/100 identity trials");
}

// 7. edge-minimum surveys: 20 at k=3 (< 5 s), 48 at k=4 (< 10 min), block pair
//    the unique minimizer class in both.
void criterion7() {
    auto s3 = std::chrono::steady_clock::now();
    EdgeSurvey k3 = min_edges_survey(3);
    double t3 = seconds_since(s3);
    bool ok3 = k3.min_edges == 20 && k3.min_edges == k3.formula_edges &&
               k3.unique_minimizer_class && k3.minimizer_is_block_pair && t3 < 5.0;

    auto s4 = std::chrono::steady_clock::now();
    EdgeSurvey k4 = min_edges_survey(4);
    double t4 = seconds_since(s4);
    bool ok4 = k4.min_edges == 48 && k4.min_edges == k4.formula_edges &&
               k4.unique_minimizer_class && k4.minimizer_is_block_pair && t4 < 600.0;

    criterion("7", ok3 && ok4,
              "min edges k=3 -> " + std::to_string(k3.min_edges) + " (" +
                  std::to_string(t3).substr(0, 4) + "s), k=4 -> " + std::to_string(k4.min_edges) +
                  " (" + std::to_string(t4).substr(0, 4) + "s), unique block minimizer");
}

// 8. figure-1 partitions for k = 2..6 and the 2^d minima for the 3x3 and
//    3x3x3 boxes (< 60 s each).
void criterion8() {
    bool ok = true;
    std::string detail = "figure-1 k=2..6 pierce exactly k with 4(k-1) parts and reduce to "
                         "property graphs";
    for (int k = 2; k <= 6 && ok; ++k) {
        BoxFamily fam = figure1_partition(k, 2 * (k - 1), 2 * (k - 1));
        BoxValidity v = validate_family(fam);
        ok = v.partition && v.all_nontrivial &&
             static_cast<int>(fam.subs.size()) == 4 * (k - 1) && piercing_number(fam) == k &&
             check_property(reduce_to_graph(fam), k).holds;
        if (!ok) detail = "figure-1 fails at k=" + std::to_string(k);
    }
    auto s2 = std::chrono::steady_clock::now();
    BoxSearchResult d2 = min_nontrivial_boxes(DiscreteBox{{3, 3}}, 12);
    double t2 = seconds_since(s2);
    auto s3 = std::chrono::steady_clock::now();
    BoxSearchResult d3 = min_nontrivial_boxes(DiscreteBox{{3, 3, 3}}, 12);
    double t3 = seconds_since(s3);
    bool boxes_ok = d2.conclusive && d2.minimum == 4 && t2 < 60.0 && d3.conclusive &&
                    d3.minimum == 8 && t3 < 60.0;
    if (!boxes_ok) detail = "2^d minima search failed";
    criterion("8", ok && boxes_ok, detail + "; min nontrivial 3x3 -> 4, 3x3x3 -> 8");
}

// 9. the 3x3 staircase: tight rank bound, and removing any box breaks the
//    partition.
void criterion9() {
    BoxFamily stair = parse_boxf(slurp(kDataDir / "golden" / "staircase.boxf"));
    Corollary5Report rep = corollary5_check(stair, true);
    bool ok = rep.partition && rep.singleton_rows && rep.singleton_cols && rep.m == 5 &&
              rep.bound == 5 && rep.tight && rep.certificate && rep.certificate->kernel_trivial;
    for (std::size_t drop = 0; drop < stair.subs.size() && ok; ++drop) {
        BoxFamily broken = stair;
        broken.subs.erase(broken.subs.begin() + static_cast<std::ptrdiff_t>(drop));
        ok = !validate_family(broken).partition;
    }
    criterion("9", ok, "staircase decomposition is tight (5 = 3+3-1) and minimally a partition");
}

// 10. t-color constructions and the tiny existence scans.
void criterion10() {
    bool ok = true;
    std::string detail = "t-color property holds on 2t(k-1) vertices for (2,2),(3,3),(3,4),(4,3)";
    for (auto [k, t] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {3, 4}, {4, 3}}) {
        MultiColoredGraph g = build_tcolor(k, t);
        ok = ok && g.n() == 2 * t * (k - 1) && check_property(g, k).holds;
        if (!ok) {
            detail = "t-color fails at k=" + std::to_string(k) + " t=" + std::to_string(t);
            break;
        }
    }
    BruteForceReport yes = brute_force_graphs(4, 3, 2);
    BruteForceReport no = brute_force_graphs(3, 3, 2);
    bool scans_ok = yes.exists && yes.witness && yes.witness->edges().size() == 6 &&
                    check_property(*yes.witness, 2).holds && !no.exists;
    criterion("10", ok && scans_ok, detail + "; K4 exists at (4,3,2), none at (3,3,2)");
}

// 11. byte-identical round-trips over the golden corpus; malformed files exit 2.
void criterion11() {
    int golden = 0, malformed = 0;
    bool ok = true;
    for (const auto& entry : fs::directory_iterator(kDataDir / "golden")) {
        std::string text = slurp(entry.path());
        std::string ext = entry.path().extension().string();
        std::string back;
        try {
            if (ext == ".ecg")
                back = serialize_ecg(parse_ecg(text));
            else if (ext == ".fam")
                back = serialize_fam(parse_fam(text));
            else if (ext == ".boxf")
                back = serialize_boxf(parse_boxf(text));
            else
                continue;
        } catch (const std::exception&) {
            ok = false;
        }
        if (back != text) ok = false;
        ++golden;
    }
    for (const auto& entry : fs::directory_iterator(kDataDir / "malformed")) {
        std::string ext = entry.path().extension().string();
        std::vector<std::string> args;
        if (ext == ".ecg")
            args = {"check-graph", "--k", "2", entry.path().string()};
        else if (ext == ".fam")
            args = {"families", "check", "--k", "2", entry.path().string()};
        else
            args = {"box", "check", entry.path().string()};
        if (cli(args) != boxclique::cli::kExitUsage) ok = false;
        ++malformed;
    }
    criterion("11", ok && golden >= 10 && malformed >= 8,
              std::to_string(golden) + " golden files round-trip byte-identically, " +
                  std::to_string(malformed) + " malformed files rejected with exit 2");
}

// 12. determinism: theorem-1 and extremal records identical for 1, 2 and 8
//     worker threads (timing stripped).
void criterion12() {
    bool ok = true;
    for (int k : {2, 3}) {
        std::string fp;
        for (int threads : {1, 2, 8}) {
            SearchLimits limits;
            limits.threads = threads;
            std::string f = proof_record_fingerprint(verify_theorem1(k, false, limits).record);
            if (fp.empty()) fp = f;
            ok = ok && f == fp;
        }
    }
    std::string fp;
    for (int threads : {1, 2, 8}) {
        SearchLimits limits;
        limits.threads = threads;
        std::string f = proof_record_fingerprint(enumerate_extremal(3, limits).record);
        if (fp.empty()) fp = f;
        ok = ok && f == fp;
    }
    criterion("12", ok,
              "theorem-1 (k=2,3) and extremal (k=3) records identical for 1/2/8 threads");
}

void criterion12_extended() {
    bool ok = true;
    std::string fp;
    int minimum = 0;
    for (int threads : {1, 2, 8}) {
        SearchLimits limits;
        limits.threads = threads;
        Theorem1Result res = verify_theorem1(4, /*extended=*/true, limits);
        std::string f = proof_record_fingerprint(res.record);
        if (fp.empty()) fp = f;
        ok = ok && f == fp && res.conclusive;
        minimum = res.concluded_minimum;
    }
    criterion("12-extended", ok && minimum == 12,
              "theorem-1 k=4 records identical for 1/2/8 threads");
}

} // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--extended") extended = true;

    if (!extended) {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
        criterion10();
        criterion11();
        criterion12();
    } else {
        criterion2_extended();
        criterion12_extended();
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
