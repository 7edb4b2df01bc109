#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "tripv/attachment.hpp"
#include "tripv/errors.hpp"
#include "tripv/families.hpp"
#include "tripv/lie.hpp"
#include "tripv/polynomial.hpp"
#include "tripv/rng.hpp"

using namespace tripv;

namespace {

SparsePolynomial P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }

RationalMatrix random_matrix(std::size_t n, SplitMix64& rng) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng.uniform(0, 10)) - 5;
    return m;
}

RationalVector random_point(std::size_t n, SplitMix64& rng) {
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = fx::q(static_cast<long>(rng.uniform(0, 40)) - 20, 1 + static_cast<long>(rng.uniform(0, 6)));
    return x;
}

std::vector<oracle::Q> to_q(const RationalVector& x) { return x.entries(); }

}  // namespace

TEST_CASE("cubic of an arrangement") {
    CHECK(cubic_of(fx::TA()) == P("x1*x4*x5 + x2*x5*x6 + x3*x6*x7", 7));
    CHECK(cubic_of(fx::TB()) == P("x1*x2*x3 + x2*x4*x5 + x3*x5*x6", 6));
    CHECK(cubic_of(fx::arr(4, {})).is_zero());
}

TEST_CASE("cubic agrees with the dense oracle at random points") {
    SplitMix64 rng(1);
    for (const auto& a : {fx::TA(), fx::TB(), fx::TC(), make({Family::EdgeGluing, 2})}) {
        const auto p = cubic_of(a);
        const auto q = oracle::cubic(static_cast<int>(a.n()), fx::tris_of(a));
        for (int k = 0; k < 5; ++k) {
            const auto x = random_point(a.n(), rng);
            CHECK(eval(p, x) == oracle::eval(q, to_q(x)));
        }
    }
}

TEST_CASE("gradient") {
    const auto g = gradient(P("x1*x2*x3", 3));
    REQUIRE(g.size() == 3);
    CHECK(g[0] == P("x2*x3", 3));
    CHECK(g[1] == P("x1*x3", 3));
    CHECK(g[2] == P("x1*x2", 3));

    for (const auto& d : gradient(SparsePolynomial::constant(4, 7))) CHECK(d.is_zero());

    // edge gluing(2) labels: x0 = 1, w1 = 4, y0 = 6
    const auto eg = gradient(cubic_of(make({Family::EdgeGluing, 2})));
    CHECK(eg[5] == P("x1*x4", 10));
}

TEST_CASE("Lie derivatives") {
    const auto p = cubic_of(fx::petal());
    CHECK(lie_derivative(RationalMatrix::identity(5), p) == Rational(3) * p);
    CHECK(lie_derivative(RationalMatrix::unit(5, 0, 0), p) == p);
    CHECK(lie_derivative(RationalMatrix::unit(5, 1, 3), p) == P("x1*x3*x4", 5));

    SplitMix64 rng(8);
    const auto q = cubic_of(fx::TA());
    for (int k = 0; k < 5; ++k) {
        const auto a = random_matrix(7, rng), b = random_matrix(7, rng);
        const Rational s(3, 2), t(-2);
        CHECK(lie_derivative(s * a + t * b, q) == s * lie_derivative(a, q) + t * lie_derivative(b, q));
        // L_M = sum M_ia x_a d/dx_i is a right action: brackets come back reversed
        CHECK(lie_derivative(commutator(a, b), q) ==
              lie_derivative(b, lie_derivative(a, q)) - lie_derivative(a, lie_derivative(b, q)));
    }
    const auto quad = P("x1^2 + 3*x2*x3", 3);
    CHECK(lie_derivative(RationalMatrix::identity(3), quad) == Rational(2) * quad);
}

TEST_CASE("linear substitution") {
    // x2 -> x2 - x4 absorbs x1x3x4; x6 -> x6 - x4 absorbs x1x4x5
    RationalMatrix s = RationalMatrix::identity(6);
    s(1, 3) = -1;
    s(5, 3) = -1;
    const auto p = cubic_of(fx::hexagon_fan());
    CHECK(substitute_linear(p, s) == P("x1*x2*x3 + x1*x5*x6", 6));
    CHECK(substitute_linear(p, RationalMatrix::identity(6)) == p);

    RationalMatrix inv = RationalMatrix::identity(6);
    inv(1, 3) = 1;
    inv(5, 3) = 1;
    CHECK(substitute_linear(substitute_linear(p, s), inv) == p);

    // permutation substitution equals the relabelled cubic
    const std::vector<Vertex> perm{3, 1, 7, 2, 6, 4, 5};
    RationalMatrix pm(7, 7);
    for (std::size_t i = 0; i < 7; ++i) pm(i, perm[i] - 1) = 1;
    CHECK(substitute_linear(cubic_of(fx::TA()), pm) == cubic_of(fx::TA().relabel(perm)));
}

TEST_CASE("evaluation") {
    CHECK(eval(cubic_of(fx::TA()), fx::vec({1, 1, 1, 1, 1, 1, 1})) == 3);
    CHECK(eval(cubic_of(fx::TB()), fx::vec({1, 1, 1, 0, 0, 0})) == 1);
    for (const auto& inv : expected_invariants({Family::Circular, 5}))
        if (inv.name == "q0") {
            CHECK(eval(inv.polynomial, fx::vec({1, 1, 1, 1, 1, 1, 1, 1, 1, 1})) == 5);
            CHECK(inv.polynomial.size() == 5);
            CHECK(inv.polynomial.degree() == 4);
        }
}

TEST_CASE("symbolic determinants") {
    CHECK(determinant_poly({{P("x1", 4)}}) == P("x1", 4));
    CHECK(determinant_poly({{P("x1", 4), P("x2", 4)}, {P("x4", 4), P("x3", 4)}}) == P("x1*x3 - x2*x4", 4));

    // chain(4) dual q0 is a bidiagonal 3x3 determinant with linear entries
    bool seen = false;
    for (const auto& inv : expected_invariants({Family::Chain, 4}))
        if (inv.dual && inv.name == "q0") {
            seen = true;
            CHECK(inv.polynomial.is_homogeneous());
            CHECK(inv.polynomial.degree() == 3);
        }
    CHECK(seen);

    // a random 4x4 integer matrix as constant polynomials
    SplitMix64 rng(4);
    const auto m = random_matrix(4, rng);
    std::vector<PolyVector> entries(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) entries[i].push_back(SparsePolynomial::constant(1, m(i, j)));
    CHECK(determinant_poly(entries) == SparsePolynomial::constant(1, oracle::det(fx::to_oracle(m))));
    CHECK_THROWS_AS(determinant_poly(std::vector<PolyVector>(13, PolyVector(13, P("x1", 1)))), TooLarge);
}

TEST_CASE("attach cubic identifies the shared variable") {
    CHECK(cubic_of(attach(fx::TA(), 5, fx::TD(), 2)) ==
          P("x1*x4*x5 + x2*x5*x6 + x3*x6*x7 + x8*x5*x9 + x5*x10*x11", 11));

    const auto a1 = make({Family::Chain, 4}), a2 = make({Family::Daisy, 2});
    const auto t = attach(a1, 6, a2, 5);
    SparsePolynomial expected(t.n());
    for (const auto& tri : a1.triangles()) expected.add_term(Monomial::product({tri[0] - 1, tri[1] - 1, tri[2] - 1}), 1);
    for (const auto& tri : a2.triangles()) {
        std::uint32_t v[3];
        for (int k = 0; k < 3; ++k) v[k] = attached_label(a1.n(), a2, 6, 5, tri[k]) - 1;
        expected.add_term(Monomial::product({v[0], v[1], v[2]}), 1);
    }
    CHECK(cubic_of(t) == expected);
}

TEST_CASE("parsing and printing round trip") {
    const auto p = P("2*x1^2*x3 - 1/3*x2 + 5", 3);
    CHECK(parse_polynomial(to_string(p), 3) == p);
    CHECK(p.degree() == 3);
    CHECK_FALSE(p.is_homogeneous());
    CHECK_THROWS_AS(P("x4", 3), ParseError);
    CHECK_THROWS_AS(P("x1 +", 3), ParseError);
}

TEST_CASE("exact division") {
    const auto a = P("x1*x2 + x1*x3", 3);
    CHECK(exact_divide(a, P("x2 + x3", 3)) == std::optional<SparsePolynomial>(P("x1", 3)));
    CHECK_FALSE(exact_divide(a, P("x2", 3)).has_value());
}
