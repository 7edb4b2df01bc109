#include "tripv/matrix.hpp"

#include <algorithm>

#include "tripv/errors.hpp"

namespace tripv {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    std::string s(text);
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed rational '" + s + "'");
    }
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

RationalVector::RationalVector(std::initializer_list<long> values) {
    entries_.reserve(values.size());
    for (long v : values) entries_.emplace_back(v);
}

bool RationalVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    RationalMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& diag) {
    RationalMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(std::vector<Rational>(data_.begin() + static_cast<long>(r * cols_),
                                                data_.begin() + static_cast<long>((r + 1) * cols_)));
}

RationalVector RationalMatrix::col(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix RationalMatrix::from_flat(std::size_t rows, std::size_t cols, std::vector<Rational> flat) {
    if (flat.size() != rows * cols) throw DimensionMismatch("flat data does not match shape");
    RationalMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(flat);
    return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = a(r, k) + b(r, k);
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = a(r, k) - b(r, k);
    return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(r, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (sgn(b(k, j)) != 0) c(r, j) += x * b(k, j);
            }
        }
    }
    return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix c = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) *= s;
    return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    RationalVector y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Rational acc = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(r, k)) != 0) acc += a(r, k) * x[k];
        }
        y[r] = acc;
    }
    return y;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
    SparseMatrix s(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Row row;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (sgn(m(r, c)) != 0) row.emplace_back(c, m(r, c));
        }
        s.rows_.push_back(std::move(row));
    }
    return s;
}

RationalMatrix SparseMatrix::to_dense() const {
    RationalMatrix m(rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) m(r, c) = v;
    return m;
}

void SparseMatrix::add_row(Row row) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Row merged;
    for (auto& e : row) {
        if (e.first >= cols_) throw DimensionMismatch("sparse row entry out of range");
        if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
        } else {
            merged.push_back(std::move(e));
        }
    }
    std::erase_if(merged, [](const Entry& e) { return sgn(e.second) == 0; });
    rows_.push_back(std::move(merged));
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

}  // namespace tripv
