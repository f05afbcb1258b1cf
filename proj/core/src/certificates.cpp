#include "boxclique/certificates.hpp"

#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "boxclique/errors.hpp"

namespace boxclique {

using bigint = boost::multiprecision::cpp_int;

namespace {

// Bareiss fraction-free elimination; entries stay exact divisors of minors.
int exact_rank(std::vector<std::vector<bigint>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    bigint prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace

RankCertificate prop2_certificate(const CoverFamilies& f) {
    ConditionReport rep = check_conditions(f, 1);
    if (!rep.private_vertices)
        throw PreconditionError("rank certificate requires condition (4)");
    if (!rep.intersections_exactly_one)
        throw PreconditionError("rank certificate requires condition (5)");

    IncidencePattern p = incidence(f);
    const int b = f.b(), r = f.r();
    RankCertificate cert;
    cert.b = b;
    cert.r = r;
    cert.n_vertices = f.n_vertices;
    cert.rows = f.n_vertices + 1;
    cert.cols = b + r;

    std::vector<std::vector<bigint>> m(cert.rows, std::vector<bigint>(cert.cols, 0));
    for (int v = 0; v < f.n_vertices; ++v) {
        for (int i : p.I[v]) m[v][i] = 1;
        for (int j : p.J[v]) m[v][b + j] = -1;
    }
    for (int i = 0; i < b; ++i) m[f.n_vertices][i] = 1;

    cert.rank = exact_rank(std::move(m));
    cert.kernel_trivial = (cert.rank == cert.cols);
    cert.implied_bound = b + r - 1;
    cert.holds = f.n_vertices >= cert.implied_bound;
    if (!cert.kernel_trivial)
        throw std::logic_error("system (7)-(8) has a nontrivial kernel on (4)&(5) input");
    return cert;
}

CountingReport counting_bound(const CoverFamilies& f, int k) {
    ConditionReport rep = check_conditions(f, k);
    if (!rep.sizes_at_least_k)
        throw PreconditionError("counting bound requires condition (1)");
    if (!rep.both_cover_ground)
        throw PreconditionError("counting bound requires condition (3)");
    if (!rep.intersections_exactly_one)
        throw PreconditionError("counting bound requires condition (5)");

    IncidencePattern p = incidence(f);
    CountingReport c;
    c.k = k;
    c.b = f.b();
    c.r = f.r();
    c.n_vertices = f.n_vertices;
    long long pairs_minus_one = 0;
    for (int v = 0; v < f.n_vertices; ++v) {
        long long iv = static_cast<long long>(p.I[v].size());
        long long jv = static_cast<long long>(p.J[v].size());
        c.sum_incidence += iv + jv;
        c.sum_products += iv * jv;
        pairs_minus_one += iv + jv - 1;
    }
    long long sum = c.b + c.r;
    c.bound = static_cast<long long>(k) * sum - static_cast<long long>(c.b) * c.r;
    c.relaxed_bound = static_cast<long long>(k) * sum - (sum * sum) / 4;
    c.slack10 = c.sum_incidence - static_cast<long long>(k) * sum;
    c.slack12_total = c.sum_products - pairs_minus_one;
    c.holds = c.n_vertices >= c.bound;
    if (!c.holds) throw std::logic_error("counting chain violated on (1),(3),(5) input");
    return c;
}

bool identity_trials(const IncidencePattern& p, int b, int r, int trials, std::uint64_t seed) {
    if (trials < 1) throw UsageError("identity check needs at least one trial");
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return static_cast<long long>(rng() % 201) - 100; };
    const int nv = static_cast<int>(p.I.size());
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<long long> x(b), y(r);
        for (auto& xi : x) xi = draw();
        for (auto& yj : y) yj = draw();
        long long lhs = 0;
        for (int v = 0; v < nv; ++v) {
            long long sx = 0, sy = 0;
            for (int i : p.I[v]) sx += x[i];
            for (int j : p.J[v]) sy += y[j];
            lhs += sx * sy;
        }
        long long tx = 0, ty = 0;
        for (long long xi : x) tx += xi;
        for (long long yj : y) ty += yj;
        if (lhs != tx * ty) return false;
    }
    return true;
}

bool identity_check(const CoverFamilies& f, int trials, std::uint64_t seed) {
    ConditionReport rep = check_conditions(f, 1);
    if (!rep.intersections_exactly_one)
        throw PreconditionError("identity check requires condition (5)");
    return identity_trials(incidence(f), f.b(), f.r(), trials, seed);
}

std::string render_rank_certificate(const RankCertificate& c) {
    std::ostringstream out;
    out << "prop2 certificate\n";
    out << "b " << c.b << "\n";
    out << "r " << c.r << "\n";
    out << "rows " << c.rows << "\n";
    out << "cols " << c.cols << "\n";
    out << "rank " << c.rank << "\n";
    out << "kernel_trivial " << (c.kernel_trivial ? "true" : "false") << "\n";
    out << "implied_bound " << c.implied_bound << "\n";
    out << "n_vertices " << c.n_vertices << "\n";
    out << "holds " << (c.holds ? "true" : "false") << "\n";
    return out.str();
}

std::string render_counting_report(const CountingReport& c) {
    std::ostringstream out;
    out << "counting bound\n";
    out << "k " << c.k << "\n";
    out << "b " << c.b << "\n";
    out << "r " << c.r << "\n";
    out << "sum_incidence " << c.sum_incidence << "\n";
    out << "sum_products " << c.sum_products << "\n";
    out << "bound " << c.bound << "\n";
    out << "relaxed_bound " << c.relaxed_bound << "\n";
    out << "slack10 " << c.slack10 << "\n";
    out << "slack12_total " << c.slack12_total << "\n";
    out << "n_vertices " << c.n_vertices << "\n";
    out << "holds " << (c.holds ? "true" : "false") << "\n";
    return out.str();
}

} // namespace boxclique
