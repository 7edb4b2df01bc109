#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripv/arrangement.hpp"
#include "tripv/linalg.hpp"
#include "tripv/matrix.hpp"
#include "tripv/polynomial.hpp"

namespace tripv {

/// Linear conditions on the n^2 entries of M (row-major, unknown i*n+a is
/// M_{i+1,a+1}) for L_M p = 0: one row per monomial of the expansion.
struct ConstraintSystem {
    std::size_t n = 0;
    std::vector<Monomial> monomials;  ///< row keys, distinct
    SparseMatrix rows;                 ///< monomials.size() x n^2
};

/// A list of n x n matrices spanning a Lie algebra.
struct MatrixBasis {
    std::size_t n = 0;
    std::vector<RationalMatrix> elements;
    std::string label;

    std::size_t dim() const { return elements.size(); }
};

/// Unknown index of M_{ij} for 1-based i, j.
inline std::size_t unknown(std::size_t n, std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); }

ConstraintSystem constraint_system(const SparsePolynomial& p);

/// Basis of {M : L_M p = 0} in RREF-pivot form. The zero polynomial gives gl(n).
MatrixBasis g0_basis(const SparsePolynomial& p);
/// Identity followed by g0_basis(p). Throws ZeroPolynomial for p = 0.
MatrixBasis g_basis(const SparsePolynomial& p);

/// dim g[p] of an arrangement; for an arrangement without triangles (p = 0)
/// this is n^2, every matrix fixing the zero polynomial.
std::size_t dim_g(const TriangleArrangement& a);

struct Membership {
    bool relative = false;  ///< L_M p = lambda p
    Rational lambda;
};
Membership verify_membership(const RationalMatrix& m, const SparsePolynomial& p);

/// Flattened elements as rows of an echelon form.
SparseEchelon span_of(const std::vector<RationalMatrix>& mats, std::size_t n);
bool in_span(const SparseEchelon& span, const RationalMatrix& m);
/// span(a) == span(b), by rank.
bool same_span(const std::vector<RationalMatrix>& a, const std::vector<RationalMatrix>& b, std::size_t n);
/// Independent subset spanning the same space.
std::vector<RationalMatrix> span_basis(const std::vector<RationalMatrix>& mats, std::size_t n);

bool bracket_closure_check(const MatrixBasis& b);
/// Basis of [g, g].
MatrixBasis derived_algebra(const MatrixBasis& b);
/// Dimensions along g, [g,g], [[g,g],[g,g]], ... until they stop dropping.
std::vector<std::size_t> derived_series_dims(const MatrixBasis& b);
bool is_solvable(const MatrixBasis& b);

/// dim g[t] = dim g[t'] + n' + b for each black circle peeled off (largest
/// label first), b being the black circles of t before the peel. With b = 1
/// this is the bordered form g[t] = {(M' 0; x^t m)}. Throws NoBlackCircle
/// when there is none.
bool black_circle_extension_check(const TriangleArrangement& t);

/// Violations of the support rules for arrangements without edge sharing:
/// B_{ia} = 0 for i not black and d(i,a) in {1} or >= 3 or unreachable, and
/// B_ii + B_jj + B_kk = 0 on every triangle for g0 elements. Empty when clean.
std::vector<std::string> support_violations(const TriangleArrangement& t, const MatrixBasis& g0);

}  // namespace tripv
