#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tripv/matrix.hpp"

namespace tripv {

class SplitMix64;

struct RrefResult {
    RationalMatrix reduced;            ///< same shape as the input; zero rows last
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row, increasing
};

/// Incrementally built row echelon form over Q with sparse rows.
///
/// Pivot rows are kept normalised (leading entry 1). reduce() eliminates every
/// pivot column from a vector, so a vector lies in the row span iff it reduces
/// to zero. finish() back-substitutes into reduced row echelon form.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Returns true if the row was independent of the rows inserted so far.
    bool insert(SparseMatrix::Row row);
    SparseMatrix::Row reduce(SparseMatrix::Row row) const;
    bool contains(const SparseMatrix::Row& row) const { return reduce(row).empty(); }

    /// Fully reduced rows, ordered by pivot column.
    std::vector<std::pair<std::size_t, SparseMatrix::Row>> reduced_rows() const;

private:
    std::size_t cols_;
    std::map<std::size_t, SparseMatrix::Row> pivots_;
};

SparseMatrix::Row to_sparse_row(const std::vector<Rational>& dense);
std::vector<Rational> to_dense_row(const SparseMatrix::Row& row, std::size_t cols);

RrefResult rref(const RationalMatrix& m);

std::vector<RationalVector> nullspace(const RationalMatrix& m);
/// Kernel basis in pivot form: one vector per free column f with entry 1 at f
/// and zeros at the other free columns.
std::vector<RationalVector> nullspace(const SparseMatrix& m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const SparseMatrix& m);

/// Rank of the reduction of m modulo prime. A lower bound for rank over Q.
/// Throws BadPrime if some denominator vanishes modulo prime.
std::size_t rank_mod_p(const RationalMatrix& m, std::uint64_t prime);

/// Exact determinant via Bareiss elimination after clearing row denominators.
Rational det_fraction_free(const RationalMatrix& m);

namespace modular {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Uniformly drawn prime with exactly `bits` bits (bits in [3, 63]).
std::uint64_t random_prime(unsigned bits, SplitMix64& rng);
/// q mod p, or nullopt if the denominator is divisible by p.
std::optional<std::uint64_t> reduce(const Rational& q, std::uint64_t p);

}  // namespace modular

}  // namespace tripv
