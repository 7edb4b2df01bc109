#include "tripv/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "tripv/errors.hpp"
#include "tripv/rng.hpp"

namespace tripv {

namespace {

using Row = SparseMatrix::Row;

// row + factor * other, both sorted by column.
Row axpy(const Row& row, const Rational& factor, const Row& other) {
    Row out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, factor * other[j].second);
            ++j;
        } else {
            Rational v = row[i].second + factor * other[j].second;
            if (sgn(v) != 0) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Integer copy of m with each row multiplied by the lcm of its denominators.
// Returns the product of the multipliers.
Integer clear_row_denominators(const RationalMatrix& m, std::vector<std::vector<Integer>>& out) {
    Integer scale = 1;
    out.assign(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
        scale *= l;
    }
    return scale;
}

}  // namespace

SparseMatrix::Row to_sparse_row(const std::vector<Rational>& dense) {
    Row row;
    for (std::size_t c = 0; c < dense.size(); ++c) {
        if (sgn(dense[c]) != 0) row.emplace_back(c, dense[c]);
    }
    return row;
}

std::vector<Rational> to_dense_row(const SparseMatrix::Row& row, std::size_t cols) {
    std::vector<Rational> dense(cols);
    for (const auto& [c, v] : row) dense[c] = v;
    return dense;
}

Row SparseEchelon::reduce(Row row) const {
    std::size_t pos = 0;
    while (pos < row.size()) {
        auto it = pivots_.find(row[pos].first);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        Rational factor = -row[pos].second;
        row = axpy(row, factor, it->second);
    }
    return row;
}

bool SparseEchelon::insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rational lead = row.front().second;
    for (auto& e : row) e.second /= lead;
    std::size_t col = row.front().first;
    pivots_.emplace(col, std::move(row));
    return true;
}

std::vector<std::pair<std::size_t, Row>> SparseEchelon::reduced_rows() const {
    // Back substitution from the right-most pivot leftwards; every row already
    // processed has zeros in all pivot columns but its own.
    std::vector<std::pair<std::size_t, Row>> out(pivots_.begin(), pivots_.end());
    std::map<std::size_t, const Row*> done;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
        Row& row = it->second;
        std::size_t pos = 1;
        while (pos < row.size()) {
            auto p = done.find(row[pos].first);
            if (p == done.end()) {
                ++pos;
                continue;
            }
            Rational factor = -row[pos].second;
            row = axpy(row, factor, *p->second);
        }
        done.emplace(it->first, &row);
    }
    return out;
}

RrefResult rref(const RationalMatrix& m) {
    SparseEchelon ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(to_sparse_row(m.row(r).entries()));
    RrefResult res{RationalMatrix(m.rows(), m.cols()), {}};
    std::size_t r = 0;
    for (const auto& [col, row] : ech.reduced_rows()) {
        res.pivots.push_back(col);
        for (const auto& [c, v] : row) res.reduced(r, c) = v;
        ++r;
    }
    return res;
}

std::vector<RationalVector> nullspace(const SparseMatrix& m) {
    SparseEchelon ech(m.cols());
    for (const auto& row : m.all_rows()) ech.insert(row);
    auto rows = ech.reduced_rows();
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& [col, row] : rows) is_pivot[col] = true;

    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols());
        v[f] = 1;
        for (const auto& [col, row] : rows) {
            auto hit = std::lower_bound(row.begin(), row.end(), f,
                                        [](const SparseMatrix::Entry& e, std::size_t c) { return e.first < c; });
            if (hit != row.end() && hit->first == f) v[col] = -hit->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) { return nullspace(SparseMatrix::from_dense(m)); }

std::size_t rank(const SparseMatrix& m) {
    SparseEchelon ech(m.cols());
    for (const auto& row : m.all_rows()) ech.insert(row);
    return ech.rank();
}

std::size_t rank(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> a;
    clear_row_denominators(m, a);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t prime) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            auto v = modular::reduce(m(r, c), prime);
            if (!v) throw BadPrime("denominator vanishes modulo " + std::to_string(prime));
            a[r][c] = *v;
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const std::uint64_t inv = modular::inverse(a[r][c], prime);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = modular::mul(a[i][c], inv, prime);
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = modular::mul(f, a[r][j], prime);
                a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + prime - sub;
            }
        }
        ++r;
    }
    return r;
}

Rational det_fraction_free(const RationalMatrix& m) {
    if (!m.is_square()) throw NotSquare("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a;
    Integer scale = clear_row_denominators(m, a);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

namespace modular {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) result = mul(result, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime(unsigned bits, SplitMix64& rng) {
    if (bits < 3 || bits > 63) throw Error("random_prime: bits out of range");
    const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
    const std::uint64_t hi = (std::uint64_t{1} << bits) - 1;
    for (;;) {
        std::uint64_t cand = rng.uniform(lo, hi) | 1;
        if (is_prime(cand)) return cand;
    }
}

std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p) {
    Integer pz(std::to_string(p));
    Integer num = q.get_num() % pz;
    if (num < 0) num += pz;
    Integer den = q.get_den() % pz;
    if (den == 0) return std::nullopt;
    const std::uint64_t n = std::stoull(num.get_str());
    const std::uint64_t d = std::stoull(den.get_str());
    return mul(n, inverse(d, p), p);
}

}  // namespace modular

}  // namespace tripv
