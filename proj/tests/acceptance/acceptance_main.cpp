// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tripv/attachment.hpp"
#include "tripv/families.hpp"
#include "tripv/lie.hpp"
#include "tripv/polynomial.hpp"
#include "tripv/prehomog.hpp"
#include "tripv/triangulation.hpp"

using namespace tripv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Everything that must not depend on the seed: verdicts, dimensions and counts.
struct Run {
    std::uint64_t seed = 0;
    std::ostringstream fingerprint;

    PVConfig pv() const {
        PVConfig c;
        c.seed = seed;
        c.samples = 8;
        c.coord_bound = std::uint64_t{1} << 31;
        return c;
    }
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MatrixBasis basis_of(const FamilyKind& k) { return g_basis(cubic_of(make(k))); }

std::vector<FamilyKind> family_range() {
    std::vector<FamilyKind> out;
    for (std::size_t n = 2; n <= 6; ++n) out.push_back({Family::Daisy, n});
    for (std::size_t n = 3; n <= 8; ++n) out.push_back({Family::Chain, n});
    for (std::size_t n = 5; n <= 9; ++n) out.push_back({Family::Circular, n});
    for (std::size_t n = 2; n <= 5; ++n) out.push_back({Family::EdgeGluing, n});
    return out;
}

std::size_t closed_form_dim(const FamilyKind& k) {
    const std::size_t n = k.n;
    switch (k.family) {
        case Family::Daisy: return 2 * n * n - n + 2;
        case Family::Chain: return 2 * n + 3;
        case Family::Circular: return 2 * n + 1;
        case Family::EdgeGluing: return 5 * n + 1;
    }
    return 0;
}

Outcome table_rows(Run& run) {
    Outcome o;
    const std::vector<TableRow> want{{6, 3, 3, 2},  {7, 4, 2, 2},    {8, 12, 7, 4},  {9, 27, 7, 3},
                                     {10, 82, 26, 9}, {11, 228, 37, 7}, {12, 733, 137, 23}};
    ClassifyConfig cfg;
    cfg.pv = run.pv();
    const auto t0 = std::chrono::steady_clock::now();
    double small = 0;
    std::ostringstream rows;
    for (const auto& w : want) {
        const auto res = classify(w.n, cfg);
        run.fingerprint << to_csv(res.row) << ';';
        rows << to_csv(res.row) << ' ';
        if (res.row.n <= 10 && res.row != w) fail(o, "row mismatch " + to_csv(res.row));
        if (res.row.n > 10 && res.row.count_a != w.count_a) fail(o, "column A mismatch " + to_csv(res.row));
        if (res.row.n > 10 && res.row != w) std::cout << "  discrepancy n=" << w.n << '\n' << discrepancy_report(res);
        if (res.soundness_failures) fail(o, "reduction soundness failure at n=" + std::to_string(w.n));
        if (w.n == 10) small = seconds_since(t0);
    }
    const double total = seconds_since(t0);
    if (small >= 60) fail(o, "n<=10 took " + std::to_string(small) + " s");
    if (total >= 600) fail(o, "n<=12 took " + std::to_string(total) + " s");
    if (o.pass) o.detail = rows.str() + "(" + std::to_string(total) + " s)";
    return o;
}

Outcome family_dims(Run& run) {
    Outcome o;
    for (const auto& k : family_range()) {
        const std::size_t d = basis_of(k).dim();
        run.fingerprint << to_string(k) << '=' << d << ';';
        if (d != closed_form_dim(k)) fail(o, to_string(k) + " dim " + std::to_string(d));
    }
    if (o.pass) o.detail = std::to_string(family_range().size()) + " instances";
    return o;
}

Outcome verdicts(Run& run) {
    Outcome o;
    const auto cfg = run.pv();
    for (const auto& k : family_range()) {
        const bool pv = is_prehomogeneous(basis_of(k), cfg).pv;
        run.fingerprint << to_string(k) << ":pv=" << pv << ';';
        if (!pv) fail(o, to_string(k) + " not PV");
    }
    const std::vector<std::pair<std::size_t, bool>> dual{{4, true}, {5, true}, {6, false}, {7, true}, {8, false}, {9, true}};
    for (const auto& [n, expected] : dual) {
        const bool got = is_dual_prehomogeneous(basis_of({Family::Circular, n}), cfg).pv;
        run.fingerprint << "circular" << n << ":dual=" << got << ';';
        if (got != expected) fail(o, "circular(" + std::to_string(n) + ") dual verdict");
    }
    const auto q0 = parse_polynomial("x1*x3 - x2*x4", 8);
    const bool ok = relative_invariant_character(q0, transpose_basis(basis_of({Family::Circular, 4}))).is_relative_invariant;
    run.fingerprint << "c4q0=" << ok << ';';
    if (!ok) fail(o, "circular(4) dual invariant");
    if (o.pass) o.detail = std::to_string(family_range().size()) + " PV instances, circular dual parity, x1x3-x2x4";
    return o;
}

Outcome determinants(Run& run) {
    Outcome o;
    std::vector<FamilyKind> ks;
    for (std::size_t n = 3; n <= 6; ++n) ks.push_back({Family::Chain, n});
    for (std::size_t n = 5; n <= 7; ++n) ks.push_back({Family::Circular, n});
    for (std::size_t n = 2; n <= 4; ++n) ks.push_back({Family::EdgeGluing, n});
    for (const auto& k : ks) {
        const auto id = determinant_identity(k);
        if (!id) {
            fail(o, to_string(k) + " has no identity");
            continue;
        }
        const auto c = check_determinant_identity(*id, 10, run.seed + 17);
        // only edge gluing is stated up to a global sign
        const bool ok = c.holds && c.points >= 10 && (!c.sign_flipped || k.family == Family::EdgeGluing);
        run.fingerprint << to_string(k) << ":det=" << ok << ';';
        if (!ok) fail(o, to_string(k) + " determinant identity");
    }
    if (o.pass) o.detail = std::to_string(ks.size()) + " identities x 10 points";
    return o;
}

Outcome invariants(Run& run) {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& k : family_range()) {
        const auto g = basis_of(k);
        const auto gt = transpose_basis(g);
        for (const auto& inv : expected_invariants(k)) {
            const bool ok = relative_invariant_character(inv.polynomial, inv.dual ? gt : g).is_relative_invariant;
            ++checked;
            run.fingerprint << to_string(k) << ':' << inv.name << '=' << ok << ';';
            if (!ok) fail(o, to_string(k) + " invariant " + inv.name);
            if (k.family == Family::Circular && inv.name == "q0" && k.n % 2 == 1 &&
                static_cast<std::size_t>(inv.polynomial.degree()) != (k.n + 3) / 2)
                fail(o, to_string(k) + " q0 degree " + std::to_string(inv.polynomial.degree()));
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " invariants";
    return o;
}

Outcome attachments(Run& run) {
    Outcome o;
    const auto cfg = run.pv();
    const TriangleArrangement ta(7, std::vector<std::array<long, 3>>{{1, 4, 5}, {2, 5, 6}, {3, 6, 7}});
    const TriangleArrangement petal(5, std::vector<std::array<long, 3>>{{1, 2, 3}, {1, 4, 5}});
    const auto ex = attach_and_verify(ta, 5, {}, petal, 2, parse_zero_list("2,4;2,5"), cfg);
    run.fingerprint << "ex:" << ex.hypotheses.theorem_applies() << ex.record.pv << ex.record.dim_g << ';';
    if (!ex.hypotheses.theorem_applies()) fail(o, "worked attachment hypotheses");
    if (!ex.record.pv || ex.record.n() != 11) fail(o, "worked attachment verdict");

    // every pair of sides at vertices whose coordinate is a relative invariant
    const std::vector<FamilyKind> sides{{Family::Chain, 3}, {Family::Chain, 4}, {Family::Chain, 5},
                                        {Family::Circular, 5}, {Family::Circular, 6}};
    std::size_t applied = 0, pv = 0, tried = 0;
    for (std::size_t x = 0; x < sides.size(); ++x)
        for (std::size_t y = x; y < sides.size(); ++y) {
            const auto a = make(sides[x]), b = make(sides[y]);
            const auto ga = basis_of(sides[x]), gb = basis_of(sides[y]);
            // a fixed residue filter thins the vertex pairs while keeping every pairing of families
            for (Vertex i = 1; i <= a.n(); ++i) {
                if (!row_support_invariant(ga, i)) continue;
                for (Vertex j = 1; j <= b.n(); ++j) {
                    if (!row_support_invariant(gb, j)) continue;
                    if ((i + j) % 3 != 0) continue;
                    ++tried;
                    const auto r = attach_and_verify(a, i, {}, b, j, {}, cfg);
                    if (!r.hypotheses.theorem_applies()) continue;
                    ++applied;
                    pv += r.record.pv;
                    run.fingerprint << to_string(sides[x]) << '@' << i << '+' << to_string(sides[y]) << '@' << j
                                    << '=' << r.record.pv << r.record.dim_g << ';';
                    if (!r.record.pv || !r.consistent())
                        fail(o, to_string(sides[x]) + "@" + std::to_string(i) + " + " + to_string(sides[y]) + "@" +
                                    std::to_string(j) + " not PV");
                }
            }
        }
    if (applied < 20) fail(o, "only " + std::to_string(applied) + " hypothesis-passing attachments");
    if (o.pass)
        o.detail = "worked case dim " + std::to_string(ex.record.dim_g) + ", " + std::to_string(pv) + "/" +
                   std::to_string(applied) + " PV (" + std::to_string(tried) + " tried)";
    return o;
}

Outcome disjoint_unions(Run& run) {
    Outcome o;
    const auto cfg = run.pv();
    const std::vector<FamilyKind> parts{{Family::Daisy, 2},    {Family::Daisy, 3},    {Family::Chain, 3},
                                        {Family::Chain, 4},    {Family::Circular, 5}, {Family::Circular, 6},
                                        {Family::EdgeGluing, 2}};
    const Rational bound = Rational(1) / Rational(mpz_class("1000000000000000000000000000000"));
    std::size_t count = 0;
    for (std::size_t x = 0; x < parts.size(); ++x)
        for (std::size_t y = x; y < parts.size(); ++y) {
            const auto u = disjoint_union(make(parts[x]), make(parts[y]));
            const auto v = is_prehomogeneous(g_basis(cubic_of(u)), cfg);
            ++count;
            run.fingerprint << to_string(parts[x]) << '|' << to_string(parts[y]) << '=' << v.pv << ';';
            if (v.pv) fail(o, to_string(parts[x]) + " + " + to_string(parts[y]) + " reported PV");
            if (v.samples_used != 8 || v.error_bound > bound)
                fail(o, to_string(parts[x]) + " + " + to_string(parts[y]) + " error bound " + to_string(v.error_bound));
        }
    if (count < 20) fail(o, "only " + std::to_string(count) + " unions");
    if (o.pass) o.detail = std::to_string(count) + " unions NotPV";
    return o;
}

TriangleArrangement with_black_circles(const TriangleArrangement& a, std::size_t k) {
    return TriangleArrangement(a.n() + k, a.triangles());
}

Outcome structure(Run& run) {
    Outcome o;
    std::vector<TriangleArrangement> corpus;
    for (const auto& k : family_range()) corpus.push_back(make(k));
    for (std::size_t n = 4; n <= 10; ++n)
        for (const auto& t : dihedral_classes(n)) {
            corpus.push_back(t.arrangement());
            corpus.push_back(reduce(t).result);
        }

    std::size_t euler = 0, closed = 0, support = 0;
    for (const auto& a : corpus) {
        const auto p = cubic_of(a);
        if (lie_derivative(RationalMatrix::identity(a.n()), p) != Rational(3) * p) fail(o, "Euler identity");
        ++euler;
        const auto g0 = g0_basis(p);
        if (!bracket_closure_check(g0)) fail(o, "g0 not closed");
        ++closed;
        if (!a.has_edge_sharing()) {
            ++support;
            const auto v = support_violations(a, g0);
            if (!v.empty()) fail(o, "support: " + v.front());
        }
    }

    std::size_t replays = 0;
    for (std::size_t n = 3; n <= 9; ++n)
        for (const auto& t : all_triangulations(n)) {
            ++replays;
            if (!reduction_soundness_check(t.arrangement())) fail(o, "reduction soundness");
        }

    const TriangleArrangement ta(7, std::vector<std::array<long, 3>>{{1, 4, 5}, {2, 5, 6}, {3, 6, 7}});
    const TriangleArrangement hex(6, std::vector<std::array<long, 3>>{{1, 2, 3}, {1, 5, 6}});
    const std::vector<TriangleArrangement> black{
        with_black_circles(ta, 1),
        with_black_circles(ta, 2),
        with_black_circles(make({Family::Chain, 3}), 1),
        with_black_circles(make({Family::Chain, 4}), 1),
        with_black_circles(make({Family::Circular, 5}), 1),
        with_black_circles(make({Family::Daisy, 2}), 1),
        with_black_circles(make({Family::Daisy, 3}), 2),
        with_black_circles(make({Family::EdgeGluing, 2}), 1),
        hex,
        with_black_circles(hex, 1),
    };
    for (const auto& a : black) {
        const bool ok = black_circle_extension_check(a);
        run.fingerprint << "bc" << a.n() << '=' << ok << dim_g(a) << ';';
        if (!ok) fail(o, "black-circle law");
    }
    run.fingerprint << euler << ',' << closed << ',' << support << ',' << replays << ';';
    if (o.pass)
        o.detail = std::to_string(euler) + " cubics, " + std::to_string(support) + " without edge sharing, " +
                   std::to_string(replays) + " reductions replayed, " + std::to_string(black.size()) +
                   " black-circle cases";
    return o;
}

using Check = std::function<Outcome(Run&)>;

const std::vector<std::pair<std::string, Check>>& checks() {
    static const std::vector<std::pair<std::string, Check>> all{
        {"table rows n=6..12", table_rows},
        {"family dimensions", family_dims},
        {"prehomogeneity and dual verdicts", verdicts},
        {"determinant factorizations", determinants},
        {"relative invariants", invariants},
        {"attachment theorem", attachments},
        {"disjoint unions are not PV", disjoint_unions},
        {"structural invariants", structure},
    };
    return all;
}

}  // namespace

int main() {
    bool all = true;
    Run first;
    first.seed = 0;
    for (std::size_t i = 0; i < checks().size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = checks()[i].second(first);
        all &= o.pass;
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << checks()[i].first << ": "
                  << o.detail << " [" << seconds_since(t0) << " s]" << std::endl;
    }

    Run second;
    second.seed = 0x5eed5eed;
    bool second_pass = true;
    for (const auto& c : checks()) second_pass &= c.second(second).pass;
    const bool same = second_pass && first.fingerprint.str() == second.fingerprint.str();
    all &= same;
    std::cout << "criterion 9 " << (same ? "PASS" : "FAIL") << "  determinism across seeds 0 and 0x5eed5eed: "
              << (same ? "identical verdicts, dimensions and counts" : "fingerprints differ") << " ("
              << first.fingerprint.str().size() << " bytes)" << std::endl;
    return all ? 0 : 1;
}
