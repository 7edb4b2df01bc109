#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripv/lie.hpp"
#include "tripv/matrix.hpp"
#include "tripv/polynomial.hpp"

namespace tripv {

enum class RankMode { Randomized, Symbolic };

struct PVConfig {
    RankMode mode = RankMode::Randomized;
    std::size_t samples = 8;
    std::uint64_t coord_bound = std::uint64_t{1} << 31;
    std::uint64_t seed = 0;
    std::uint64_t task_id = 0;  ///< selects an independent RNG stream
};

struct RankVerdict {
    bool pv = false;
    std::size_t generic_rank_lower_bound = 0;
    std::optional<RationalVector> witness;  ///< present iff pv
    std::size_t samples_used = 0;
    Rational error_bound = 0;  ///< misclassification bound for randomized NotPV
    RankMode mode = RankMode::Randomized;
};

struct InvariantReport {
    SparsePolynomial polynomial;
    bool is_relative_invariant = false;
    std::vector<Rational> character;  ///< lambda_k per basis element when true
};

/// n x dim(b) matrix with columns B_k x.
RationalMatrix action_matrix(const MatrixBasis& b, const RationalVector& x);
/// Columns tB_k x.
RationalMatrix dual_action_matrix(const MatrixBasis& b, const RationalVector& x);

/// Basis of transposed elements; the dual action tests run against it.
MatrixBasis transpose_basis(const MatrixBasis& b);

RankVerdict is_prehomogeneous(const MatrixBasis& b, const PVConfig& cfg = {});
RankVerdict is_dual_prehomogeneous(const MatrixBasis& b, const PVConfig& cfg = {});

/// Symbolic modes are limited to dim V <= this; larger inputs fall back to sampling.
inline constexpr std::size_t kSymbolicMaxDim = 10;

/// Generic rank of A(x) over Q(x) by fraction-free elimination over Q[x].
std::size_t symbolic_generic_rank(const MatrixBasis& b);

InvariantReport relative_invariant_character(const SparsePolynomial& q, const MatrixBasis& b);

/// Vertices i (1-based) whose row is supported only on the diagonal in every element.
std::vector<std::size_t> coordinate_invariants(const MatrixBasis& b);

/// Linear forms l with tB_k l = lambda_k l for all k, grouped by character:
/// one basis per joint eigenspace with rational eigenvalues.
std::vector<std::vector<RationalVector>> linear_invariant_spaces(const MatrixBasis& b);
/// Flattened linear_invariant_spaces as polynomials.
std::vector<SparsePolynomial> linear_invariants(const MatrixBasis& b);

/// Integer roots of a monic integer polynomial sum coeffs[i] t^i (coeffs[deg] = 1).
std::vector<Integer> integer_roots(const std::vector<Integer>& coeffs);
/// Characteristic polynomial det(tI - A) by Faddeev-LeVerrier, lowest degree first.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& a);

struct HessianProbe {
    bool nondegenerate = false;
    std::optional<RationalVector> witness;
    std::size_t samples_used = 0;
    Rational error_bound = 0;
};
/// Sign of det(f Hess f - grad f tgrad f) at random points.
HessianProbe log_hessian_nondegenerate(const SparsePolynomial& f, const PVConfig& cfg = {});

std::string to_string(RankMode mode);

}  // namespace tripv
