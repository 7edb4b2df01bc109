#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripv/matrix.hpp"
#include "tripv/rational.hpp"

namespace tripv {

class TriangleArrangement;

/// Sparse exponent vector: (variable, exponent) pairs, variables 0-based and
/// strictly increasing, exponents positive.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);
    static Monomial variable(std::uint32_t var) { return Monomial({{var, 1}}); }
    /// Product of the given variables, repeats allowed.
    static Monomial product(std::initializer_list<std::uint32_t> vars);

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const;
    std::uint32_t exponent(std::uint32_t var) const;
    /// One past the largest variable index present, 0 for the constant.
    std::uint32_t span() const { return factors_.empty() ? 0 : factors_.back().first + 1; }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    /// Lowers the exponent of var by one; nullopt if var is absent.
    std::optional<Monomial> without(std::uint32_t var) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order with x1 > x2 > ... ; true when a > b.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePolynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::size_t nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(std::size_t nvars, const Rational& c);
    /// The coordinate x_{var+1} (var is 0-based).
    static SparsePolynomial variable(std::size_t nvars, std::uint32_t var);
    /// Linear form sum coeffs[i] x_{i+1}.
    static SparsePolynomial linear(const std::vector<Rational>& coeffs);

    std::size_t nvars() const { return nvars_; }
    /// Terms in decreasing grlex order; begin() is the leading term.
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    SparsePolynomial derivative(std::uint32_t var) const;

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial& operator*=(const Rational& s);

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    void check_compatible(const SparsePolynomial& other) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

using PolyVector = std::vector<SparsePolynomial>;

SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b);
SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b);
SparsePolynomial operator-(SparsePolynomial a);
SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
SparsePolynomial operator*(const Rational& s, SparsePolynomial a);

SparsePolynomial pow(const SparsePolynomial& p, unsigned e);

/// Sum of x_i x_j x_k over the triangles; the zero polynomial if there are none.
SparsePolynomial cubic_of(const TriangleArrangement& a);

PolyVector gradient(const SparsePolynomial& p);

/// sum_i (M x)_i d_i p, the infinitesimal action of M on p.
SparsePolynomial lie_derivative(const RationalMatrix& m, const SparsePolynomial& p);

/// p(S z) as a polynomial in z. Throws Singular if S is not invertible.
SparsePolynomial substitute_linear(const SparsePolynomial& p, const RationalMatrix& s);

Rational eval(const SparsePolynomial& p, const RationalVector& x);

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<SparsePolynomial> exact_divide(const SparsePolynomial& a, const SparsePolynomial& b);

/// Cofactor expansion memoised on column subsets. Throws TooLarge above cap.
SparsePolynomial determinant_poly(const std::vector<PolyVector>& entries, std::size_t cap = 12);

/// Canonical text: terms in decreasing grlex order, e.g. "x1*x3 - 2/3*x2^2 + 1".
std::string to_string(const SparsePolynomial& p);
/// Inverse of to_string; variables are x1..x<nvars>. Whitespace is ignored.
SparsePolynomial parse_polynomial(std::string_view text, std::size_t nvars);

}  // namespace tripv
