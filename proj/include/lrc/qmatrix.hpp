#pragma once

#include "lrc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lrc {

// Dense matrix over the rationals with exact elimination. Small sizes only:
// graded slices of the rings handled here have dimension in the tens.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const QMatrix& other) const;

    QMatrix multiply(const QMatrix& rhs) const;

    // In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Basis of the right kernel {v : A v = 0}, one vector per free column,
    // in ascending free-column order (deterministic).
    std::vector<std::vector<Rational>> kernel_basis() const;

    // One solution of A x = b with all free coordinates zero, if consistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Row space in reduced echelon form, kept for reducing vectors against a
// subspace. Rows are pivot-normalized and mutually reduced.
class RowSpace {
public:
    RowSpace() : cols_(0) {}
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    // Insert a vector; returns true if it enlarged the space.
    bool insert(std::vector<Rational> v);

    // Reduce v modulo the space (eliminate every pivot coordinate).
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    bool contains(const std::vector<Rational>& v) const;

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;   // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

}  // namespace lrc
