#include "tripv/lie.hpp"

#include <limits>
#include <map>

#include "tripv/errors.hpp"

namespace tripv {

namespace {

SparseMatrix::Row flatten(const RationalMatrix& m) { return to_sparse_row(m.data()); }

RationalMatrix unflatten(const RationalVector& v, std::size_t n) { return RationalMatrix::from_flat(n, n, v.entries()); }

RationalMatrix unflatten(const SparseMatrix::Row& row, std::size_t n) {
    return RationalMatrix::from_flat(n, n, to_dense_row(row, n * n));
}

}  // namespace

ConstraintSystem constraint_system(const SparsePolynomial& p) {
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != 3)) {
        throw NotCubic("constraint system needs a homogeneous cubic, got degree " + std::to_string(p.degree()));
    }
    const std::size_t n = p.nvars();
    ConstraintSystem cs;
    cs.n = n;
    // Coefficient of each monomial of sum_{i,a} M_ia x_a d_i p.
    std::map<Monomial, SparseMatrix::Row, GrlexGreater> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const SparsePolynomial di = p.derivative(static_cast<std::uint32_t>(i));
        for (const auto& [m, c] : di.terms()) {
            for (std::size_t a = 0; a < n; ++a) {
                rows[m * Monomial::variable(static_cast<std::uint32_t>(a))].emplace_back(i * n + a, c);
            }
        }
    }
    cs.rows = SparseMatrix(n * n);
    for (auto& [m, row] : rows) {
        cs.monomials.push_back(m);
        cs.rows.add_row(std::move(row));
    }
    return cs;
}

MatrixBasis g0_basis(const SparsePolynomial& p) {
    const std::size_t n = p.nvars();
    MatrixBasis b;
    b.n = n;
    b.label = "g0";
    for (const auto& v : nullspace(constraint_system(p).rows)) {
        RationalMatrix m = unflatten(v, n);
        if (!lie_derivative(m, p).is_zero()) throw Error("internal: g0 basis element does not annihilate p");
        b.elements.push_back(std::move(m));
    }
    return b;
}

MatrixBasis g_basis(const SparsePolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("g[p] needs a nonzero cubic");
    MatrixBasis g0 = g0_basis(p);
    MatrixBasis b;
    b.n = g0.n;
    b.label = "g";
    // L_I p = 3p != 0 keeps I out of g0.
    b.elements.push_back(RationalMatrix::identity(b.n));
    for (auto& m : g0.elements) b.elements.push_back(std::move(m));
    return b;
}

std::size_t dim_g(const TriangleArrangement& a) {
    const SparsePolynomial p = cubic_of(a);
    if (p.is_zero()) return a.n() * a.n();
    return a.n() * a.n() - rank(constraint_system(p).rows) + 1;
}

Membership verify_membership(const RationalMatrix& m, const SparsePolynomial& p) {
    const SparsePolynomial lp = lie_derivative(m, p);
    if (lp.is_zero()) return {true, 0};
    if (p.is_zero()) return {false, 0};
    const auto& [lead, c] = *p.terms().begin();
    Rational lambda = lp.coefficient(lead) / c;
    if (lp == lambda * p) return {true, lambda};
    return {false, 0};
}

SparseEchelon span_of(const std::vector<RationalMatrix>& mats, std::size_t n) {
    SparseEchelon ech(n * n);
    for (const auto& m : mats) {
        if (m.rows() != n || m.cols() != n) throw DimensionMismatch("basis element has wrong size");
        ech.insert(flatten(m));
    }
    return ech;
}

bool in_span(const SparseEchelon& span, const RationalMatrix& m) { return span.contains(flatten(m)); }

bool same_span(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b, std::size_t n) {
    const auto sa = span_of(a, n);
    const auto sb = span_of(b, n);
    if (sa.rank() != sb.rank()) return false;
    for (const auto& m : b) {
        if (!in_span(sa, m)) return false;
    }
    return true;
}

std::vector<RationalMatrix> span_basis(const std::vector<RationalMatrix>& mats, std::size_t n) {
    SparseEchelon ech(n * n);
    std::vector<RationalMatrix> out;
    for (const auto& m : mats) {
        if (ech.insert(flatten(m))) out.push_back(m);
    }
    return out;
}

bool bracket_closure_check(const MatrixBasis& b) {
    const auto span = span_of(b.elements, b.n);
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = i + 1; j < b.dim(); ++j) {
            if (!in_span(span, commutator(b.elements[i], b.elements[j]))) return false;
        }
    }
    return true;
}

MatrixBasis derived_algebra(const MatrixBasis& b) {
    SparseEchelon ech(b.n * b.n);
    MatrixBasis d;
    d.n = b.n;
    d.label = "[" + b.label + "," + b.label + "]";
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = i + 1; j < b.dim(); ++j) ech.insert(flatten(commutator(b.elements[i], b.elements[j])));
    }
    for (const auto& [col, row] : ech.reduced_rows()) d.elements.push_back(unflatten(row, b.n));
    return d;
}

std::vector<std::size_t> derived_series_dims(const MatrixBasis& b) {
    std::vector<std::size_t> dims{b.dim()};
    MatrixBasis cur = b;
    while (cur.dim() > 0) {
        MatrixBasis next = derived_algebra(cur);
        if (next.dim() == cur.dim()) break;
        dims.push_back(next.dim());
        cur = std::move(next);
    }
    return dims;
}

bool is_solvable(const MatrixBasis& b) { return derived_series_dims(b).back() == 0; }

bool black_circle_extension_check(const TriangleArrangement& t) {
    if (t.black_circles().empty()) throw NoBlackCircle("arrangement has no black circle");
    TriangleArrangement cur = t;
    // the new row is free (n' + 1 entries) and so is the new column on the
    // other black rows (b - 1 entries); a lone vertex cannot be peeled further
    while (cur.n() > 1) {
        const auto black = cur.black_circles();
        if (black.empty()) break;
        TriangleArrangement smaller = cur.remove_black_circle(black.back());
        if (dim_g(cur) != dim_g(smaller) + smaller.n() + black.size()) return false;
        cur = std::move(smaller);
    }
    return true;
}

std::vector<std::string> support_violations(const TriangleArrangement& t, const MatrixBasis& g0) {
    std::vector<std::string> out;
    const std::size_t n = t.n();
    if (g0.n != n) throw DimensionMismatch("basis size does not match arrangement");
    const auto dist = t.distance_matrix();
    const auto black = t.black_circles();
    std::vector<bool> is_black(n + 1, false);
    for (Vertex v : black) is_black[v] = true;
    constexpr auto kInf = std::numeric_limits<std::size_t>::max();

    for (std::size_t k = 0; k < g0.dim(); ++k) {
        const auto& m = g0.elements[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (is_black[i + 1]) continue;
            for (std::size_t a = 0; a < n; ++a) {
                if (sgn(m(i, a)) == 0) continue;
                const std::size_t d = dist[i][a];
                if (d == 1 || d == kInf || d >= 3) {
                    out.push_back("element " + std::to_string(k) + ": M_" + std::to_string(i + 1) + "," +
                                  std::to_string(a + 1) + " nonzero at distance " +
                                  (d == kInf ? std::string("inf") : std::to_string(d)));
                }
            }
        }
        for (const auto& tri : t.triangles()) {
            if (sgn(m(tri[0] - 1, tri[0] - 1) + m(tri[1] - 1, tri[1] - 1) + m(tri[2] - 1, tri[2] - 1)) != 0) {
                out.push_back("element " + std::to_string(k) + ": diagonal trace nonzero on {" + std::to_string(tri[0]) + "," +
                               std::to_string(tri[1]) + "," + std::to_string(tri[2]) + "}");
            }
        }
    }
    return out;
}

}  // namespace tripv
