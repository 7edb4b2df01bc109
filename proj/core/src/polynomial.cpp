#include "tripv/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "tripv/arrangement.hpp"
#include "tripv/errors.hpp"
#include "tripv/linalg.hpp"

namespace tripv {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    std::vector<Factor> merged;
    for (const auto& f : factors_) {
        if (f.second == 0) continue;
        if (!merged.empty() && merged.back().first == f.first) {
            merged.back().second += f.second;
        } else {
            merged.push_back(f);
        }
    }
    factors_ = std::move(merged);
}

Monomial Monomial::product(std::initializer_list<std::uint32_t> vars) {
    std::vector<Factor> f;
    for (auto v : vars) f.emplace_back(v, 1);
    return Monomial(std::move(f));
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
    for (const auto& f : factors_) {
        if (f.first == var) return f.second;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    auto& r = out.factors_;
    r.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < factors_.size() || j < other.factors_.size()) {
        if (j == other.factors_.size() || (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
            r.push_back(factors_[i++]);
        } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
            r.push_back(other.factors_[j++]);
        } else {
            r.emplace_back(factors_[i].first, factors_[i].second + other.factors_[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& f : factors_) {
        if (other.exponent(f.first) < f.second) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    std::vector<Factor> r;
    for (const auto& f : other.factors_) {
        std::uint32_t e = f.second - exponent(f.first);
        if (e > 0) r.emplace_back(f.first, e);
    }
    Monomial out;
    out.factors_ = std::move(r);
    return out;
}

std::optional<Monomial> Monomial::without(std::uint32_t var) const {
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (factors_[k].first != var) continue;
        Monomial out = *this;
        if (--out.factors_[k].second == 0) out.factors_.erase(out.factors_.begin() + static_cast<long>(k));
        return out;
    }
    return std::nullopt;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t k = 0;
    for (; k < fa.size() && k < fb.size(); ++k) {
        if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
        if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    return k < fa.size() && k == fb.size();
}

SparsePolynomial SparsePolynomial::constant(std::size_t nvars, const Rational& c) {
    SparsePolynomial p(nvars);
    p.add_term(Monomial(), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t nvars, std::uint32_t var) {
    if (var >= nvars) throw DimensionMismatch("variable index out of range");
    SparsePolynomial p(nvars);
    p.add_term(Monomial::variable(var), 1);
    return p;
}

SparsePolynomial SparsePolynomial::linear(const std::vector<Rational>& coeffs) {
    SparsePolynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(static_cast<std::uint32_t>(i)), coeffs[i]);
    return p;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    if (m.span() > nvars_) throw DimensionMismatch("monomial uses a variable beyond nvars");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePolynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

SparsePolynomial SparsePolynomial::derivative(std::uint32_t var) const {
    SparsePolynomial d(nvars_);
    for (const auto& [m, c] : terms_) {
        const auto e = m.exponent(var);
        if (e == 0) continue;
        d.add_term(*m.without(var), c * e);
    }
    return d;
}

void SparsePolynomial::check_compatible(const SparsePolynomial& other) const {
    if (nvars_ != other.nvars_) throw DimensionMismatch("polynomials live in different rings");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
SparsePolynomial operator-(SparsePolynomial a) { return a *= Rational(-1); }
SparsePolynomial operator*(const Rational& s, SparsePolynomial a) { return a *= s; }

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch("polynomials live in different rings");
    SparsePolynomial out(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

SparsePolynomial pow(const SparsePolynomial& p, unsigned e) {
    SparsePolynomial result = SparsePolynomial::constant(p.nvars(), 1);
    SparsePolynomial base = p;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

SparsePolynomial cubic_of(const TriangleArrangement& a) {
    SparsePolynomial p(a.n());
    for (const auto& t : a.triangles()) p.add_term(Monomial::product({t[0] - 1, t[1] - 1, t[2] - 1}), 1);
    return p;
}

PolyVector gradient(const SparsePolynomial& p) {
    PolyVector g;
    g.reserve(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) g.push_back(p.derivative(static_cast<std::uint32_t>(i)));
    return g;
}

SparsePolynomial lie_derivative(const RationalMatrix& m, const SparsePolynomial& p) {
    const std::size_t n = p.nvars();
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrix size does not match polynomial ring");
    SparsePolynomial out(n);
    // (Mx)_i d_i p term by term: each monomial c*x^e contributes
    // c*e_i*M_ia * x^e / x_i * x_a.
    for (const auto& [mono, c] : p.terms()) {
        for (const auto& [i, e] : mono.factors()) {
            const Monomial rest = *mono.without(i);
            for (std::size_t a = 0; a < n; ++a) {
                const Rational& mia = m(i, a);
                if (sgn(mia) == 0) continue;
                out.add_term(rest * Monomial::variable(static_cast<std::uint32_t>(a)), c * e * mia);
            }
        }
    }
    return out;
}

SparsePolynomial substitute_linear(const SparsePolynomial& p, const RationalMatrix& s) {
    const std::size_t n = p.nvars();
    if (s.rows() != n || s.cols() != n) throw DimensionMismatch("substitution matrix does not match polynomial ring");
    if (sgn(det_fraction_free(s)) == 0) throw Singular("substitution matrix is singular");
    std::vector<SparsePolynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(SparsePolynomial::linear(s.row(i).entries()));
    SparsePolynomial out(n);
    for (const auto& [mono, c] : p.terms()) {
        SparsePolynomial term = SparsePolynomial::constant(n, c);
        for (const auto& [var, e] : mono.factors()) term = term * pow(images[var], e);
        out += term;
    }
    return out;
}

Rational eval(const SparsePolynomial& p, const RationalVector& x) {
    if (x.size() != p.nvars()) throw DimensionMismatch("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [mono, c] : p.terms()) {
        Rational term = c;
        for (const auto& [var, e] : mono.factors()) {
            for (std::uint32_t k = 0; k < e; ++k) term *= x[var];
        }
        total += term;
    }
    return total;
}

std::optional<SparsePolynomial> exact_divide(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (a.nvars() != b.nvars()) throw DimensionMismatch("polynomials live in different rings");
    const auto& [lead_m, lead_c] = *b.terms().begin();
    SparsePolynomial rem = a;
    SparsePolynomial q(a.nvars());
    // If b divides a then LT(b) divides LT(rem) at every step.
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().begin();
        if (!lead_m.divides(rm)) return std::nullopt;
        SparsePolynomial t(a.nvars());
        t.add_term(lead_m.quotient_of(rm), rc / lead_c);
        q += t;
        rem -= t * b;
    }
    return q;
}

SparsePolynomial determinant_poly(const std::vector<PolyVector>& entries, std::size_t cap) {
    const std::size_t n = entries.size();
    if (n > cap) throw TooLarge("symbolic determinant of size " + std::to_string(n) + " exceeds cap");
    for (const auto& row : entries) {
        if (row.size() != n) throw NotSquare("symbolic determinant of a non-square matrix");
    }
    std::size_t nvars = 0;
    for (const auto& row : entries)
        for (const auto& e : row) nvars = std::max(nvars, e.nvars());
    if (n == 0) return SparsePolynomial::constant(nvars, 1);

    // det of rows [n - popcount(mask), n) restricted to the columns in mask.
    std::unordered_map<std::uint32_t, SparsePolynomial> memo;
    auto solve = [&](auto&& self, std::uint32_t mask) -> SparsePolynomial {
        const std::size_t k = n - static_cast<std::size_t>(std::popcount(mask));
        if (k == n) return SparsePolynomial::constant(nvars, 1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        SparsePolynomial acc(nvars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1U << c))) continue;
            const SparsePolynomial& e = entries[k][c];
            if (!e.is_zero()) {
                SparsePolynomial minor = self(self, mask & ~(1U << c));
                if (!minor.is_zero()) {
                    SparsePolynomial prod = e * minor;
                    if (sign < 0) acc -= prod;
                    else acc += prod;
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1U);
    return solve(solve, full);
}

std::string to_string(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        std::string vars;
        for (const auto& [var, e] : mono.factors()) {
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(var + 1);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += vars;
        } else {
            out += mag.get_str() + "*" + vars;
        }
    }
    return out;
}

SparsePolynomial parse_polynomial(std::string_view text, std::size_t nvars) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s.push_back(ch);
    }
    if (s.empty()) throw ParseError("empty polynomial");
    SparsePolynomial p(nvars);
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_digits = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        return s.substr(start, pos - start);
    };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
        } else if (pos != 0) {
            fail("expected '+' or '-'");
        }
        Rational coeff = 1;
        std::vector<Monomial::Factor> factors;
        bool any = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (any) {
                if (s[pos] != '*') fail("expected '*'");
                ++pos;
            }
            if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                std::string idx = read_digits();
                if (idx.empty()) fail("missing variable index");
                unsigned long v = std::stoul(idx);
                if (v == 0 || v > nvars) fail("variable x" + idx + " out of range");
                std::uint32_t e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::string es = read_digits();
                    if (es.empty()) fail("missing exponent");
                    e = static_cast<std::uint32_t>(std::stoul(es));
                }
                factors.emplace_back(static_cast<std::uint32_t>(v - 1), e);
            } else {
                std::string num = read_digits();
                if (num.empty()) fail("expected a number or a variable");
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    std::string den = read_digits();
                    if (den.empty()) fail("missing denominator");
                    num += "/" + den;
                }
                coeff *= parse_rational(num);
            }
            any = true;
        }
        if (!any) fail("empty term");
        p.add_term(Monomial(std::move(factors)), coeff * sign);
    }
    return p;
}

}  // namespace tripv
