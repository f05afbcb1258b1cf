#include "boxclique/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "boxclique/boxes.hpp"
#include "boxclique/canonical.hpp"
#include "boxclique/certificates.hpp"
#include "boxclique/constructions.hpp"
#include "boxclique/errors.hpp"
#include "boxclique/families.hpp"
#include "boxclique/graph.hpp"
#include "boxclique/search.hpp"

namespace boxclique::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    f << content;
}

PairSource make_pair_source(const std::string& pair_kind, std::uint64_t seed) {
    if (pair_kind == "blocks")
        return [](int, int, int k) { return block_pair(k); };
    if (pair_kind == "cycle")
        return [](int, int, int k) { return cycle_pair(k); };
    if (pair_kind == "random")
        return [seed](int i, int j, int k) {
            return random_pair(k, seed + 1000003ULL * static_cast<std::uint64_t>(i) +
                                      static_cast<std::uint64_t>(j));
        };
    throw UsageError("unknown pair kind '" + pair_kind + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"edge-colored clique covers and box partitions toolkit", "boxclique"};
    app.require_subcommand(1);

    // ---- check-graph ----
    auto* check_graph = app.add_subcommand("check-graph", "check the k-clique-per-color property");
    int cg_k = 0;
    int cg_t = -1;
    std::string cg_file;
    check_graph->add_option("--k", cg_k, "clique size")->required();
    check_graph->add_option("--t", cg_t, "expected color count");
    check_graph->add_option("file", cg_file, ".ecg input")->required();

    // ---- check-critical ----
    auto* check_critical = app.add_subcommand("check-critical", "check edge-criticality");
    int cc_k = 0;
    std::string cc_file;
    check_critical->add_option("--k", cc_k, "clique size")->required();
    check_critical->add_option("file", cc_file, ".ecg input")->required();

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "emit a named construction");
    construct->require_subcommand(1);
    int con_k = 0, con_t = 0, con_n1 = 0, con_n2 = 0;
    std::string con_pair = "blocks";
    std::uint64_t con_seed = 1;
    std::string con_out;
    auto* con_extremal = construct->add_subcommand("extremal", "G(X,Y,B,R) from a pair");
    auto* con_blowup = construct->add_subcommand("blowup", "blown-up alternating 4-cycle");
    auto* con_tcolor = construct->add_subcommand("tcolor", "t-color construction");
    auto* con_figure1 = construct->add_subcommand("figure1", "four-quarter box partition");
    for (auto* sc : {con_extremal, con_blowup, con_tcolor, con_figure1}) {
        sc->add_option("--k", con_k, "clique size")->required();
        sc->add_option("-o,--out", con_out, "output path (default stdout)");
    }
    con_tcolor->add_option("--t", con_t, "color count")->required();
    for (auto* sc : {con_extremal, con_tcolor}) {
        sc->add_option("--pair", con_pair, "blocks|cycle|random");
        sc->add_option("--seed", con_seed, "seed for random pairs");
    }
    con_figure1->add_option("--n1", con_n1, "axis 1 size (default 2(k-1))");
    con_figure1->add_option("--n2", con_n2, "axis 2 size (default 2(k-1))");

    // ---- families ----
    auto* families = app.add_subcommand("families", "witness families operations");
    families->require_subcommand(1);
    int fam_k = 0;
    std::string fam_file, fam_out;
    auto* fam_extract = families->add_subcommand("extract", "witness families from a graph");
    auto* fam_normalize = families->add_subcommand("normalize", "repair to conditions (1)-(5)");
    auto* fam_check = families->add_subcommand("check", "report conditions (1)-(5)");
    for (auto* sc : {fam_extract, fam_normalize, fam_check}) {
        sc->add_option("--k", fam_k, "clique size")->required();
        sc->add_option("file", fam_file, "input")->required();
    }
    for (auto* sc : {fam_extract, fam_normalize})
        sc->add_option("-o,--out", fam_out, "output path (default stdout)");

    // ---- cert ----
    auto* cert = app.add_subcommand("cert", "lower-bound certificates");
    cert->require_subcommand(1);
    int cert_k = 0, cert_trials = 100;
    std::uint64_t cert_seed = 1;
    std::string cert_file;
    auto* cert_prop2 = cert->add_subcommand("prop2", "exact-rank certificate");
    auto* cert_count = cert->add_subcommand("count", "incidence counting bound");
    auto* cert_identity = cert->add_subcommand("identity", "randomized product identity check");
    for (auto* sc : {cert_prop2, cert_count, cert_identity})
        sc->add_option("file", cert_file, ".fam input")->required();
    cert_count->add_option("--k", cert_k, "clique size")->required();
    cert_identity->add_option("--trials", cert_trials, "trial count");
    cert_identity->add_option("--seed", cert_seed, "seed");

    // ---- box ----
    auto* box = app.add_subcommand("box", "discrete box family operations");
    box->require_subcommand(1);
    std::string box_file, box_out;
    auto* box_check = box->add_subcommand("check", "validity and piercing report");
    auto* box_reduce = box->add_subcommand("reduce", "d=2 family to 2-colored graph");
    auto* box_render = box->add_subcommand("render", "d=2 family to SVG");
    for (auto* sc : {box_check, box_reduce, box_render})
        sc->add_option("file", box_file, ".boxf input")->required();
    for (auto* sc : {box_reduce, box_render})
        sc->add_option("-o,--out", box_out, "output path (default stdout)");

    // ---- search ----
    auto* search = app.add_subcommand("search", "exhaustive certified searches");
    search->require_subcommand(1);
    int s_k = 0, s_n = 0, s_t = 0, s_max_m = 12, s_threads = 1;
    bool s_extended = false;
    std::uint64_t s_budget = SearchLimits{}.node_budget;
    double s_timeout = 0;
    std::string s_file;
    auto* s_min_graph = search->add_subcommand("min-graph", "minimum vertex count, exhaustive");
    auto* s_extremal = search->add_subcommand("extremal", "extremal classes at 4(k-1)");
    auto* s_min_nontrivial =
        search->add_subcommand("min-nontrivial", "minimum nontrivial box partition");
    auto* s_brute = search->add_subcommand("brute", "tiny t-colored graph scan");
    for (auto* sc : {s_min_graph, s_extremal}) sc->add_option("--k", s_k, "clique size")->required();
    s_min_graph->add_flag("--extended", s_extended, "allow the k=4 budget");
    s_min_nontrivial->add_option("file", s_file, ".boxf input (box sizes taken from it)")
        ->required();
    s_min_nontrivial->add_option("--max-m", s_max_m, "search limit on parts");
    s_brute->add_option("--n", s_n, "vertex count")->required();
    s_brute->add_option("--t", s_t, "color count")->required();
    s_brute->add_option("--k", s_k, "clique size")->required();
    for (auto* sc : {s_min_graph, s_extremal, s_min_nontrivial, s_brute}) {
        sc->add_option("--threads", s_threads, "worker threads");
        sc->add_option("--budget", s_budget, "node budget per root branch");
        sc->add_option("--timeout-secs", s_timeout, "wall-clock limit, 0 = none");
    }

    try {
        std::vector<std::string> rargs(args.rbegin(), args.rend());
        app.parse(rargs);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitConfirmed;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*check_graph) {
            MultiColoredGraph g = parse_ecg(read_file(cg_file));
            if (cg_t >= 0 && g.t() != cg_t)
                throw UsageError("graph has t=" + std::to_string(g.t()) + ", expected t=" +
                                 std::to_string(cg_t));
            PropertyReport rep = check_property(g, cg_k);
            out << "graph n=" << g.n() << " t=" << g.t() << " edges=" << g.edges().size() << "\n";
            out << render_property_report(rep);
            return rep.holds ? kExitConfirmed : kExitRefuted;
        }

        if (*check_critical) {
            MultiColoredGraph g = parse_ecg(read_file(cc_file));
            CriticalityReport rep = is_edge_critical(g, cc_k);
            out << render_criticality_report(rep);
            return rep.critical ? kExitConfirmed : kExitRefuted;
        }

        if (*construct) {
            if (*con_figure1) {
                int n1 = con_n1 > 0 ? con_n1 : 2 * (con_k - 1);
                int n2 = con_n2 > 0 ? con_n2 : 2 * (con_k - 1);
                emit(serialize_boxf(figure1_partition(con_k, n1, n2)), con_out, out);
                return kExitConfirmed;
            }
            MultiColoredGraph g = [&]() {
                if (*con_blowup) return blowup_four_cycle(con_k);
                if (*con_extremal) {
                    PairSource source = make_pair_source(con_pair, con_seed);
                    return build_extremal(source(0, 1, con_k));
                }
                return build_tcolor(con_k, con_t, make_pair_source(con_pair, con_seed));
            }();
            emit(serialize_ecg(g), con_out, out);
            return kExitConfirmed;
        }

        if (*families) {
            if (*fam_extract) {
                MultiColoredGraph g = parse_ecg(read_file(fam_file));
                emit(serialize_fam(extract_witnesses(g, fam_k)), fam_out, out);
                return kExitConfirmed;
            }
            CoverFamilies f = parse_fam(read_file(fam_file));
            if (*fam_normalize) {
                emit(serialize_fam(normalize(f, fam_k)), fam_out, out);
                return kExitConfirmed;
            }
            ConditionReport rep = check_conditions(f, fam_k);
            out << render_condition_report(rep);
            return rep.all() ? kExitConfirmed : kExitRefuted;
        }

        if (*cert) {
            CoverFamilies f = parse_fam(read_file(cert_file));
            if (*cert_prop2) {
                RankCertificate c = prop2_certificate(f);
                out << render_rank_certificate(c);
                return c.holds ? kExitConfirmed : kExitRefuted;
            }
            if (*cert_count) {
                CountingReport c = counting_bound(f, cert_k);
                out << render_counting_report(c);
                return c.holds ? kExitConfirmed : kExitRefuted;
            }
            bool ok = identity_check(f, cert_trials, cert_seed);
            out << "identity trials=" << cert_trials << " seed=" << cert_seed << ": "
                << (ok ? "all equal" : "MISMATCH") << "\n";
            return ok ? kExitConfirmed : kExitRefuted;
        }

        if (*box) {
            BoxFamily fam = parse_boxf(read_file(box_file));
            if (*box_check) {
                BoxValidity v = validate_family(fam);
                out << render_box_validity(v, piercing_number(fam));
                return v.partition ? kExitConfirmed : kExitRefuted;
            }
            if (*box_reduce) {
                emit(serialize_ecg(reduce_to_graph(fam)), box_out, out);
                return kExitConfirmed;
            }
            emit(render_svg(fam), box_out, out);
            return kExitConfirmed;
        }

        if (*search) {
            SearchLimits limits;
            limits.node_budget = s_budget;
            limits.timeout_secs = s_timeout;
            limits.threads = s_threads;
            if (*s_min_graph) {
                Theorem1Result res = verify_theorem1(s_k, s_extended, limits);
                out << render_proof_record(res.record);
                if (!res.conclusive) return kExitInconclusive;
                return res.concluded_minimum == res.target ? kExitConfirmed : kExitRefuted;
            }
            if (*s_extremal) {
                ExtremalEnumeration res = enumerate_extremal(s_k, limits);
                out << render_proof_record(res.record);
                if (!res.record.conclusive) return kExitInconclusive;
                return (res.all_match_construction && res.classes_color_fixed >= 1)
                           ? kExitConfirmed
                           : kExitRefuted;
            }
            if (*s_min_nontrivial) {
                BoxFamily fam = parse_boxf(read_file(s_file));
                BoxSearchResult res = min_nontrivial_boxes(fam.box, s_max_m, limits);
                out << render_proof_record(res.record);
                return res.conclusive ? kExitConfirmed : kExitInconclusive;
            }
            BruteForceReport rep = brute_force_graphs(s_n, s_t, s_k, limits);
            out << render_proof_record(rep.record);
            if (!rep.record.conclusive) return kExitInconclusive;
            return rep.exists ? kExitConfirmed : kExitRefuted;
        }
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapabilityError& e) {
        err << "capability error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kExitRefuted;
    }
    err << "no subcommand selected\n";
    return kExitUsage;
}

} // namespace boxclique::cli
