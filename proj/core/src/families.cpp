#include "tripv/families.hpp"

#include <algorithm>
#include <sstream>

#include "tripv/errors.hpp"
#include "tripv/parallel.hpp"
#include "tripv/rng.hpp"

namespace tripv {

namespace {

// Cyclic index in 1..n.
std::size_t phi(long k, std::size_t n) {
    const long m = static_cast<long>(n);
    long r = k % m;
    if (r <= 0) r += m;
    return static_cast<std::size_t>(r);
}

SparsePolynomial x(std::size_t nvars, std::size_t i) { return SparsePolynomial::variable(nvars, static_cast<std::uint32_t>(i - 1)); }

SparsePolynomial product_of(std::size_t nvars, const std::vector<std::size_t>& idx) {
    SparsePolynomial out = SparsePolynomial::constant(nvars, 1);
    for (std::size_t i : idx) out = out * x(nvars, i);
    return out;
}

// Builder for sparse generators with 1-based coordinates.
struct Gen {
    RationalMatrix m;
    explicit Gen(std::size_t n) : m(n, n) {}
    Gen& add(std::size_t i, std::size_t j, long v) {
        m(i - 1, j - 1) += v;
        return *this;
    }
};

void check_size(const FamilyKind& k) {
    if (k.n < min_size(k.family) || k.n > 64)
        throw SizeOutOfRange(to_string(k) + " is outside the admissible range");
}

std::size_t dim_v(const FamilyKind& k) {
    switch (k.family) {
        case Family::Daisy:
        case Family::Chain: return 2 * k.n + 1;
        case Family::Circular: return 2 * k.n;
        case Family::EdgeGluing: return 4 * k.n + 2;
    }
    return 0;
}

// Edge-gluing coordinates: x0..xn, w1..wn, y0..yn, z1..zn.
struct EdgeIndex {
    std::size_t n;
    std::size_t x(std::size_t i) const { return i + 1; }
    std::size_t w(std::size_t i) const { return n + 1 + i; }
    std::size_t y(std::size_t i) const { return 2 * n + 2 + i; }
    std::size_t z(std::size_t i) const { return 3 * n + 2 + i; }
};

BasisPattern daisy_pattern(std::size_t n) {
    const std::size_t N = 2 * n + 1;
    BasisPattern pat;
    pat.n = N;
    Gen t(N);
    for (std::size_t i = 1; i <= 2 * n; ++i) t.add(i, i, 1);
    pat.parameters.push_back("t");
    pat.generators.push_back(t.m);
    pat.parameters.push_back("s");
    pat.generators.push_back(Gen(N).add(N, N, 1).m);
    // so(J) with J = diag(J', ..., J'), J' = antidiag(1, 1): M = J K, K antisymmetric.
    auto partner = [](std::size_t i) { return i % 2 == 1 ? i + 1 : i - 1; };
    for (std::size_t a = 1; a <= 2 * n; ++a) {
        for (std::size_t b = a + 1; b <= 2 * n; ++b) {
            Gen g(N);
            g.add(partner(a), b, 1).add(partner(b), a, -1);
            pat.parameters.push_back("K" + std::to_string(a) + "_" + std::to_string(b));
            pat.generators.push_back(g.m);
        }
    }
    return pat;
}

// Column order t, a_1..a_{n-1}, t_1..t_{n+1}, then b, c.
BasisPattern chain_pattern(std::size_t n) {
    const std::size_t N = 2 * n + 1;
    BasisPattern pat;
    pat.n = N;
    Gen t(N);
    for (std::size_t i = 1; i <= n; ++i) t.add(i, i, 1);
    pat.parameters.push_back("t");
    pat.generators.push_back(t.m);
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        pat.parameters.push_back("a" + std::to_string(i));
        pat.generators.push_back(Gen(N).add(i + 1, n + i, 1).add(i, n + i + 2, -1).m);
    }
    for (std::size_t j = 1; j <= n + 1; ++j) {
        Gen g(N);
        if (j <= n) g.add(j, j, -1);
        if (j >= 2) g.add(j - 1, j - 1, -1);
        g.add(n + j, n + j, 1);
        pat.parameters.push_back("t" + std::to_string(j));
        pat.generators.push_back(g.m);
    }
    pat.parameters.push_back("b");
    pat.generators.push_back(Gen(N).add(2, 1, 1).add(n + 1, n + 3, -1).m);
    pat.parameters.push_back("c");
    pat.generators.push_back(Gen(N).add(n - 1, n, 1).add(2 * n + 1, 2 * n - 1, -1).m);
    return pat;
}

// Column order t0, X_n, X_1..X_{n-1}, t_1..t_n.
BasisPattern circular_pattern(std::size_t n) {
    const std::size_t N = 2 * n;
    BasisPattern pat;
    pat.n = N;
    Gen t0(N);
    for (std::size_t i = 1; i <= n; ++i) t0.add(i, i, 1);
    pat.parameters.push_back("t0");
    pat.generators.push_back(t0.m);
    auto X = [&](std::size_t i) {
        return Gen(N).add(phi(static_cast<long>(i) + 1, n), n + i, 1).add(i, n + phi(static_cast<long>(i) + 2, n), -1).m;
    };
    pat.parameters.push_back("X" + std::to_string(n));
    pat.generators.push_back(X(n));
    for (std::size_t i = 1; i < n; ++i) {
        pat.parameters.push_back("X" + std::to_string(i));
        pat.generators.push_back(X(i));
    }
    for (std::size_t j = 1; j <= n; ++j) {
        Gen g(N);
        g.add(j, j, -1).add(phi(static_cast<long>(j) - 1, n), phi(static_cast<long>(j) - 1, n), -1).add(n + j, n + j, 1);
        pat.parameters.push_back("t" + std::to_string(j));
        pat.generators.push_back(g.m);
    }
    return pat;
}

// Parameters in the order t, u, M^x_0..M^x_n, a_i, d_i, b_j, c_j; the
// determinant identity drops c_0..c_{n-2}, the last n-1 generators but one.
BasisPattern edge_pattern(std::size_t n) {
    const EdgeIndex e{n};
    const std::size_t N = 4 * n + 2;
    BasisPattern pat;
    pat.n = N;
    auto push = [&](std::string name, const Gen& g) {
        pat.parameters.push_back(std::move(name));
        pat.generators.push_back(g.m);
    };
    {
        Gen g(N);
        for (std::size_t i = 1; i <= n; ++i) g.add(e.w(i), e.w(i), 1).add(e.z(i), e.z(i), 1);
        push("t", g);
    }
    {
        Gen g(N);
        for (std::size_t i = 1; i <= n; ++i) g.add(e.w(i), e.w(i), -1);
        for (std::size_t i = 0; i <= n; ++i) g.add(e.y(i), e.y(i), 1);
        push("u", g);
    }
    for (std::size_t j = 0; j <= n; ++j) {
        Gen g(N);
        g.add(e.x(j), e.x(j), 1).add(e.y(j), e.y(j), -1);
        if (j >= 1) g.add(e.z(j), e.z(j), -1);
        if (j + 1 <= n) g.add(e.z(j + 1), e.z(j + 1), -1);
        if (j == 0) {
            for (std::size_t i = 1; i <= n; ++i) g.add(e.w(i), e.w(i), -1);
            for (std::size_t i = 0; i <= n; ++i) g.add(e.y(i), e.y(i), 1);
        }
        push("Mx" + std::to_string(j), g);
    }
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        push("a" + std::to_string(i), Gen(N).add(e.z(i), e.x(i + 1), 1).add(e.z(i + 1), e.x(i - 1), -1));
    }
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        Gen g(N);
        g.add(e.w(i), e.x(i), 1).add(e.w(i + 1), e.x(i), -1).add(e.z(i), e.y(i - 1), -1).add(e.z(i + 1), e.y(i + 1), 1);
        push("d" + std::to_string(i), g);
    }
    for (std::size_t j = 0; j + 1 <= n; ++j) {
        Gen g(N);
        g.add(e.y(j), e.x(j + 1), 1).add(e.z(j + 1), e.w(j + 1), -1);
        if (j >= 1) g.add(e.z(j + 1), e.w(j), -1);
        push("b" + std::to_string(j), g);
    }
    for (std::size_t j = 0; j + 1 <= n; ++j) {
        Gen g(N);
        g.add(e.y(j + 1), e.x(j), 1).add(e.z(j + 1), e.w(j + 1), -1);
        if (j + 2 <= n) g.add(e.z(j + 1), e.w(j + 2), -1);
        push("c" + std::to_string(j), g);
    }
    return pat;
}

// Bidiagonal display for the chain dual invariants. First column x_{first},
// x_{first+2}, ...; row r carries -x_{sub(r)} on the diagonal (r >= 2) and
// x_{super(r)} just right of it.
SparsePolynomial chain_dual_display(std::size_t n, std::size_t size, std::size_t first, long sub0, long super0) {
    const std::size_t N = 2 * n + 1;
    std::vector<PolyVector> m(size, PolyVector(size, SparsePolynomial(N)));
    for (std::size_t r = 1; r <= size; ++r) {
        m[r - 1][0] = x(N, first + 2 * (r - 1));
        if (r >= 2) m[r - 1][r - 1] = -x(N, static_cast<std::size_t>(sub0 + 2 * static_cast<long>(r)));
        if (r < size) m[r - 1][r] = x(N, static_cast<std::size_t>(super0 + 2 * static_cast<long>(r)));
    }
    return determinant_poly(m);
}

Rational random_rational(SplitMix64& rng) {
    const long num = static_cast<long>(rng.uniform(0, 2'000'000)) - 1'000'000;
    const long den = static_cast<long>(rng.uniform(1, 1000));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::Daisy: return "daisy";
        case Family::Chain: return "chain";
        case Family::Circular: return "circular";
        case Family::EdgeGluing: return "edge_gluing";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "daisy") return Family::Daisy;
    if (name == "chain") return Family::Chain;
    if (name == "circular") return Family::Circular;
    if (name == "edge_gluing" || name == "edge-gluing") return Family::EdgeGluing;
    throw ParseError("unknown family '" + name + "'");
}

std::string to_string(const FamilyKind& k) { return to_string(k.family) + "(" + std::to_string(k.n) + ")"; }

std::size_t min_size(Family f) { return f == Family::Circular ? 3 : 2; }

TriangleArrangement make(const FamilyKind& kind) {
    check_size(kind);
    const std::size_t n = kind.n;
    std::vector<Triangle> tris;
    auto tri = [&](std::size_t a, std::size_t b, std::size_t c) {
        tris.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
    };
    switch (kind.family) {
        case Family::Daisy:
            for (std::size_t i = 1; i <= n; ++i) tri(2 * i - 1, 2 * i, 2 * n + 1);
            break;
        case Family::Chain:
            for (std::size_t i = 1; i <= n; ++i) tri(i, n + i, n + i + 1);
            break;
        case Family::Circular:
            for (std::size_t i = 1; i <= n; ++i) tri(i, n + i, n + phi(static_cast<long>(i) + 1, n));
            break;
        case Family::EdgeGluing: {
            const EdgeIndex e{n};
            for (std::size_t i = 1; i <= n; ++i) {
                tri(e.x(i - 1), e.x(i), e.z(i));
                tri(e.x(i - 1), e.y(i - 1), e.w(i));
                tri(e.x(i), e.y(i), e.w(i));
            }
            break;
        }
    }
    return TriangleArrangement(dim_v(kind), std::move(tris));
}

std::size_t expected_dimension(const FamilyKind& kind) {
    check_size(kind);
    const std::size_t n = kind.n;
    switch (kind.family) {
        case Family::Daisy: return 2 * n * n - n + 2;
        case Family::Chain: return n == 2 ? 8 : 2 * n + 3;  // chain(2) is daisy(2)
        case Family::Circular:
            if (n == 3) return 6;
            if (n == 4) return 13;
            return 2 * n + 1;
        case Family::EdgeGluing: return 5 * n + 1;
    }
    return 0;
}

std::optional<bool> expected_dual_pv(const FamilyKind& kind) {
    check_size(kind);
    switch (kind.family) {
        case Family::Circular:
            if (kind.n == 4) return true;
            if (kind.n >= 5) return kind.n % 2 == 1;
            return std::nullopt;
        case Family::Chain: return kind.n >= 3 ? std::optional<bool>(true) : std::nullopt;
        default: return std::nullopt;
    }
}

std::vector<ExpectedInvariant> expected_invariants(const FamilyKind& kind) {
    check_size(kind);
    const std::size_t n = kind.n;
    const std::size_t N = dim_v(kind);
    const SparsePolynomial p = cubic_of(make(kind));
    std::vector<ExpectedInvariant> out;
    out.push_back({"p", p, false});
    auto coord = [&](std::size_t i, bool dual) { out.push_back({"x" + std::to_string(i), x(N, i), dual}); };
    switch (kind.family) {
        case Family::Daisy: coord(2 * n + 1, false); break;
        case Family::Chain:
            if (n < 3) break;
            for (std::size_t i = 2; i <= n; ++i) coord(n + i, false);
            if (n % 2 == 0) {
                const std::size_t k = n / 2;
                out.push_back({"q0", chain_dual_display(n, k + 1, n + 1, -3, 0), true});
                out.push_back({"q1", chain_dual_display(n, k, n + 2, -2, 1), true});
            } else {
                const std::size_t k = (n - 1) / 2;
                out.push_back({"q0", chain_dual_display(n, k + 1, n + 1, -3, 0), true});
                out.push_back({"q1", chain_dual_display(n, k + 1, n + 2, -2, 1), true});
            }
            for (std::size_t i = 2; i + 1 <= n; ++i) coord(i, true);
            break;
        case Family::Circular:
            if (n == 4) {
                out.push_back({"q0", x(N, 1) * x(N, 3) - x(N, 2) * x(N, 4), true});
                break;
            }
            if (n < 5) break;
            for (std::size_t i = 1; i <= n; ++i) coord(n + i, false);
            if (n % 2 == 1) {
                const std::size_t k = (n - 1) / 2;
                SparsePolynomial q0(N);
                for (std::size_t i = 1; i <= n; ++i) {
                    std::vector<std::size_t> idx{n + i};
                    for (std::size_t j = 0; j <= k; ++j) idx.push_back(phi(static_cast<long>(i + 2 * j), n));
                    q0 += product_of(N, idx);
                }
                out.push_back({"q0", q0, true});
                for (std::size_t i = 1; i <= n; ++i) coord(i, true);
            }
            break;
        case Family::EdgeGluing: {
            const EdgeIndex e{n};
            for (std::size_t i = 0; i <= n; ++i) out.push_back({"x" + std::to_string(i), x(N, e.x(i)), false});
            SparsePolynomial wsum(N);
            for (std::size_t i = 1; i <= n; ++i) wsum += x(N, e.w(i));
            out.push_back({"w", wsum, false});
            break;
        }
    }
    return out;
}

std::vector<std::vector<bool>> BasisPattern::support() const {
    std::vector<std::vector<bool>> mask(n, std::vector<bool>(n, false));
    for (const auto& g : generators)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!is_zero(g(i, j))) mask[i][j] = true;
    return mask;
}

bool BasisPattern::allows(const RationalMatrix& m) const {
    const auto mask = support();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!mask[i][j] && !is_zero(m(i, j))) return false;
    return in_span(span_of(generators, n), m);
}

std::optional<BasisPattern> expected_basis_pattern(const FamilyKind& kind) {
    check_size(kind);
    const std::size_t n = kind.n;
    switch (kind.family) {
        case Family::Daisy: return daisy_pattern(n);
        case Family::Chain:
            if (n < 3) return std::nullopt;
            return chain_pattern(n);
        case Family::Circular:
            if (n < 5) return std::nullopt;
            return circular_pattern(n);
        case Family::EdgeGluing: return edge_pattern(n);
    }
    return std::nullopt;
}

std::optional<DeterminantIdentity> determinant_identity(const FamilyKind& kind) {
    check_size(kind);
    const std::size_t n = kind.n;
    const std::size_t N = dim_v(kind);
    const SparsePolynomial p = cubic_of(make(kind));
    DeterminantIdentity id;
    switch (kind.family) {
        case Family::Daisy: return std::nullopt;
        case Family::Chain: {
            if (n < 3) return std::nullopt;
            auto pat = chain_pattern(n);
            // b and c are dropped: the pattern of h.
            id.columns.assign(pat.generators.begin(), pat.generators.end() - 2);
            std::vector<std::size_t> idx;
            for (std::size_t i = n + 1; i <= 2 * n + 1; ++i) idx.push_back(i);
            for (std::size_t i = n + 3; i + 1 <= 2 * n; ++i) idx.push_back(i);
            id.expected = product_of(N, idx) * p;
            id.description = "det A(x) on h (b = c = 0), columns t, a_1..a_{n-1}, t_1..t_{n+1}";
            break;
        }
        case Family::Circular: {
            if (n < 5) return std::nullopt;
            auto pat = circular_pattern(n);
            id.columns = pat.generators;
            id.columns.erase(id.columns.begin() + 1);  // drop X_n
            std::vector<std::size_t> idx{n + 1, n + 2, 2 * n};
            for (std::size_t i = 3; i + 1 <= n; ++i) {
                idx.push_back(n + i);
                idx.push_back(n + i);
            }
            id.expected = product_of(N, idx) * p;
            id.description = "det A'(x), the second column (X_n) removed";
            break;
        }
        case Family::EdgeGluing: {
            const EdgeIndex e{n};
            auto pat = edge_pattern(n);
            // c_0..c_{n-2} are the trailing n generators except the last.
            const std::size_t keep = pat.generators.size() - n;
            id.columns.assign(pat.generators.begin(), pat.generators.begin() + static_cast<long>(keep));
            id.columns.push_back(pat.generators.back());
            std::vector<std::size_t> idx{e.x(0), e.x(1), e.x(1), e.x(1), e.x(n), e.x(n)};
            for (std::size_t i = 2; i + 1 <= n; ++i)
                for (int r = 0; r < 4; ++r) idx.push_back(e.x(i));
            SparsePolynomial wsum(N);
            for (std::size_t i = 1; i <= n; ++i) wsum += x(N, e.w(i));
            id.expected = product_of(N, idx) * wsum * p;
            id.up_to_sign = true;
            id.description = "det with c_0..c_{n-2} removed, up to global sign";
            break;
        }
    }
    return id;
}

DeterminantCheck check_determinant_identity(const DeterminantIdentity& id, std::size_t points, std::uint64_t seed) {
    DeterminantCheck out;
    const std::size_t N = id.expected.nvars();
    if (id.columns.size() != N) throw DimensionMismatch("determinant identity needs a square selection");
    SplitMix64 rng = SplitMix64::stream(seed, stable_hash(id.description) ^ N);
    bool all_equal = true;
    bool all_negated = true;
    for (std::size_t s = 0; s < points; ++s) {
        RationalVector pt(N);
        for (std::size_t i = 0; i < N; ++i) pt[i] = random_rational(rng);
        RationalMatrix a(N, N);
        for (std::size_t k = 0; k < N; ++k) {
            const RationalVector col = id.columns[k] * pt;
            for (std::size_t i = 0; i < N; ++i) a(i, k) = col[i];
        }
        const Rational lhs = det_fraction_free(a);
        const Rational rhs = eval(id.expected, pt);
        if (lhs != rhs) all_equal = false;
        if (lhs != -rhs) all_negated = false;
        ++out.points;
    }
    out.sign_flipped = !all_equal && all_negated;
    out.holds = all_equal || (id.up_to_sign && all_negated);
    return out;
}

bool FamilyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const FamilyCheck& c) { return c.passed || c.skipped; });
}

FamilyReport verify_family(const FamilyKind& kind, const PVConfig& cfg) {
    FamilyReport rep;
    rep.kind = kind;
    const TriangleArrangement a = make(kind);
    const SparsePolynomial p = cubic_of(a);
    const MatrixBasis g = g_basis(p);
    rep.dim_g = g.dim();
    rep.expected_dim = expected_dimension(kind);
    rep.checks.push_back({"dimension", rep.dim_g == rep.expected_dim, false,
                          std::to_string(rep.dim_g) + " vs " + std::to_string(rep.expected_dim)});

    PVConfig local = cfg;
    local.task_id = stable_hash(to_string(kind)) ^ cfg.task_id;
    rep.pv = is_prehomogeneous(g, local).pv;
    rep.checks.push_back({"prehomogeneous", rep.pv, false, rep.pv ? "PV" : "NotPV"});

    rep.dual_pv = is_dual_prehomogeneous(g, local).pv;
    rep.expected_dual_pv = expected_dual_pv(kind);
    {
        FamilyCheck c{"dual_prehomogeneous", false, !rep.expected_dual_pv.has_value(), *rep.dual_pv ? "PV" : "NotPV"};
        if (rep.expected_dual_pv) c.passed = *rep.dual_pv == *rep.expected_dual_pv;
        rep.checks.push_back(c);
    }

    const MatrixBasis gt = transpose_basis(g);
    for (const auto& inv : expected_invariants(kind)) {
        const auto r = relative_invariant_character(inv.polynomial, inv.dual ? gt : g);
        rep.checks.push_back({std::string(inv.dual ? "dual_invariant " : "invariant ") + inv.name, r.is_relative_invariant,
                              false, to_string(inv.polynomial)});
    }

    if (auto pat = expected_basis_pattern(kind)) {
        bool support_ok = true;
        for (const auto& m : g.elements) support_ok = support_ok && pat->allows(m);
        const bool span_ok = same_span(g.elements, pat->generators, g.n);
        rep.checks.push_back({"basis_pattern", support_ok && span_ok, false,
                              std::string("support ") + (support_ok ? "ok" : "violated") + ", span " +
                                  (span_ok ? "equal" : "differs")});
    } else {
        rep.checks.push_back({"basis_pattern", false, true, "no closed pattern at this size"});
    }

    // The small circular cases carry extra diagonal-block parameters and are not solvable.
    if (expected_basis_pattern(kind) && kind.family != Family::Daisy) {
        const bool solv = is_solvable(g);
        rep.checks.push_back({"solvable", solv, false, ""});
    }

    if (auto id = determinant_identity(kind)) {
        const auto r = check_determinant_identity(*id, std::max<std::size_t>(cfg.samples, 1), cfg.seed);
        std::ostringstream d;
        d << r.points << " points" << (r.sign_flipped ? ", opposite sign" : "");
        rep.checks.push_back({"determinant_identity", r.holds, false, d.str()});
    } else {
        rep.checks.push_back({"determinant_identity", false, true, "no identity for this family or size"});
    }
    return rep;
}

}  // namespace tripv
