#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "tripv/errors.hpp"
#include "tripv/families.hpp"
#include "tripv/linalg.hpp"
#include "tripv/polynomial.hpp"
#include "tripv/rng.hpp"

using namespace tripv;

namespace {

RationalMatrix from_oracle(const oracle::Mat& m) {
    RationalMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) out(r, c) = m[r][c];
    return out;
}

RationalMatrix random_int_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng, long lo, long hi) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = static_cast<long>(rng.uniform(0, static_cast<std::uint64_t>(hi - lo))) + lo;
    return m;
}

}  // namespace

TEST_CASE("rref of trivial matrices") {
    auto r = rref(RationalMatrix::identity(2));
    CHECK(r.reduced == RationalMatrix::identity(2));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});

    auto s = rref(RationalMatrix{{1, 2}, {2, 4}});
    CHECK(s.reduced == RationalMatrix{{1, 2}, {0, 0}});
    CHECK(s.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("constraint matrix of x1x2x3 has rank 7 and a 2-dimensional kernel") {
    const auto dense = oracle::constraint_matrix(oracle::cubic(3, {{1, 2, 3}}));
    CHECK(oracle::rank(dense) == 7);
    const RationalMatrix m = from_oracle(dense);
    CHECK(rank(m) == 7);
    const auto ker = nullspace(m);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK((m * v).is_zero());
}

TEST_CASE("nullspace edge cases") {
    CHECK(nullspace(RationalMatrix::identity(3)).empty());
    CHECK(nullspace(RationalMatrix(2, 3)).size() == 3);
}

TEST_CASE("rank basics") {
    CHECK(rank(RationalMatrix::identity(5)) == 5);
    RationalMatrix outer(3, 4);
    const long u[] = {1, -2, 3}, v[] = {2, 0, 5, 7};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) outer(i, j) = u[i] * v[j];
    CHECK(rank(outer) == 1);
}

TEST_CASE("chain(3) display has full rank at the all-ones point") {
    const std::vector<oracle::Q> ones(7, oracle::Q(1));
    const auto display = oracle::chain_display(3, ones);
    CHECK(oracle::rank(display) == 7);
    CHECK(rank(from_oracle(display)) == 7);
}

TEST_CASE("rank_mod_p") {
    CHECK(rank_mod_p(RationalMatrix::identity(4), 101) == 4);
    // the second row reduces to (1, 0), so the rank mod 2 is 1
    CHECK(rank_mod_p(RationalMatrix{{2, 4}, {1, 2}}, 2) == 1);
    CHECK(rank_mod_p(RationalMatrix{{2, 4}, {4, 6}}, 2) == 0);
    RationalMatrix half(1, 1);
    half(0, 0) = Rational(1, 2);
    CHECK_THROWS_AS(rank_mod_p(half, 2), BadPrime);

    SplitMix64 rng(7);
    int full = 0;
    for (int trial = 0; trial < 5; ++trial) {
        const RationalMatrix m = random_int_matrix(10, 10, rng, -1000, 1000);
        const std::size_t exact = rank(m);
        CHECK(exact == static_cast<std::size_t>(oracle::rank(fx::to_oracle(m))));
        CHECK(rank_mod_p(m, modular::kMersenne61) == exact);
        full += exact == 10;
    }
    CHECK(full == 5);
}

TEST_CASE("modular rank never exceeds exact rank") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        // rank-deficient by construction: product of 6x3 and 3x6
        const RationalMatrix a = random_int_matrix(6, 3, rng, -5, 5), b = random_int_matrix(3, 6, rng, -5, 5);
        const RationalMatrix m = a * b;
        const std::size_t exact = rank(m);
        bool equal_somewhere = false;
        for (int k = 0; k < 5; ++k) {
            const std::uint64_t q = modular::random_prime(60, rng);
            CHECK(modular::is_prime(q));
            const std::size_t r = rank_mod_p(m, q);
            CHECK(r <= exact);
            equal_somewhere |= r == exact;
        }
        CHECK(equal_somewhere);
    }
}

TEST_CASE("rank, rref and nullspace agree with the oracle on random matrices") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng.uniform(0, 7), cols = 1 + rng.uniform(0, 7);
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                if (rng.uniform(0, 2) == 0) continue;
                m(r, c) = fx::q(static_cast<long>(rng.uniform(0, 20)) - 10, 1 + static_cast<long>(rng.uniform(0, 4)));
            }
        const std::size_t k = rank(m);
        CHECK(k == static_cast<std::size_t>(oracle::rank(fx::to_oracle(m))));
        CHECK(rref(m).pivots.size() == k);
        CHECK(rank(rref(m).reduced) == k);
        const auto ker = nullspace(m);
        CHECK(ker.size() == cols - k);
        for (const auto& v : ker) CHECK((m * v).is_zero());
        CHECK(rank(SparseMatrix::from_dense(m)) == k);
    }
}

TEST_CASE("determinants") {
    CHECK(det_fraction_free(RationalMatrix::identity(4)) == 1);
    CHECK(det_fraction_free(RationalMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK_THROWS_AS(det_fraction_free(RationalMatrix(2, 3)), NotSquare);

    // permutation matrices carry their sign
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    do {
        RationalMatrix p(5, 5);
        for (std::size_t i = 0; i < 5; ++i) p(i, perm[i]) = 1;
        int inversions = 0;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) inversions += perm[i] > perm[j];
        CHECK(det_fraction_free(p) == (inversions % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix m(6, 6);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 6; ++c)
                m(r, c) = fx::q(static_cast<long>(rng.uniform(0, 18)) - 9, 1 + static_cast<long>(rng.uniform(0, 5)));
        CHECK(det_fraction_free(m) == oracle::det(fx::to_oracle(m)));
    }
}

TEST_CASE("chain(3) reduced action matrix determinant at a prime point") {
    const std::vector<oracle::Q> x{1, 2, 3, 5, 7, 11, 13};
    const auto display = oracle::chain_display(3, x);
    const auto p = oracle::cubic(7, fx::tris_of(fx::TA()));
    // x4 x5 x6 x7 p(x); the middle squared product is empty at n = 3
    const oracle::Q expected = x[3] * x[4] * x[5] * x[6] * oracle::eval(p, x);
    CHECK(oracle::det(display) == expected);
    CHECK(det_fraction_free(from_oracle(display)) == expected);
}

TEST_CASE("modular helpers") {
    using namespace modular;
    CHECK(is_prime(kMersenne61));
    CHECK_FALSE(is_prime(kMersenne61 - 2));
    CHECK(mul(inverse(12345, kMersenne61), 12345, kMersenne61) == 1);
    CHECK(pow(3, kMersenne61 - 1, kMersenne61) == 1);
    CHECK(reduce(Rational(1, 2), 7) == std::optional<std::uint64_t>(4));
    CHECK_FALSE(reduce(Rational(1, 7), 7).has_value());
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
