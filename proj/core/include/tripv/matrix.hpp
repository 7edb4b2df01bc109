#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tripv/rational.hpp"

namespace tripv {

class RationalVector {
public:
    RationalVector() = default;
    explicit RationalVector(std::size_t len) : entries_(len) {}
    explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    RationalVector(std::initializer_list<long> values);

    std::size_t size() const { return entries_.size(); }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    const std::vector<Rational>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const;

    friend bool operator==(const RationalVector&, const RationalVector&) = default;

private:
    std::vector<Rational> entries_;
};

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    /// Matrix unit E_{ij} (0-based indices).
    static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static RationalMatrix diagonal(const std::vector<Rational>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector col(std::size_t c) const;
    void swap_rows(std::size_t a, std::size_t b);

    RationalMatrix transpose() const;
    bool is_zero() const;

    /// Row-major flattening; used to treat n x n matrices as vectors of length n^2.
    const std::vector<Rational>& data() const { return data_; }
    static RationalMatrix from_flat(std::size_t rows, std::size_t cols, std::vector<Rational> flat);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
RationalVector operator*(const RationalMatrix& a, const RationalVector& x);

/// Lie bracket AB - BA.
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Sparse rows: each row is a list of (column, value) sorted by column with
/// no zero values stored.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t cols) : cols_(cols) {}

    static SparseMatrix from_dense(const RationalMatrix& m);
    RationalMatrix to_dense() const;

    /// Takes ownership of a row; entries are sorted and zeros dropped.
    void add_row(Row row);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Row& row(std::size_t r) const { return rows_[r]; }
    const std::vector<Row>& all_rows() const { return rows_; }

    std::size_t nonzeros() const;

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

}  // namespace tripv
