#include "lrc/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

bool QMatrix::is_zero() const {
    for (const auto& q : data_)
        if (sgn(q) != 0) return false;
    return true;
}

bool QMatrix::operator==(const QMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

QMatrix QMatrix::multiply(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("QMatrix::multiply: shape mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && sgn(at(sel, col)) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        Rational inv = 1 / at(row, col);
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || sgn(at(i, col)) == 0) continue;
            Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix tmp = *this;
    return tmp.rref().size();
}

std::vector<std::vector<Rational>> QMatrix::kernel_basis() const {
    QMatrix tmp = *this;
    std::vector<std::size_t> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -tmp.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("QMatrix::solve: size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged input");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(at(i, j)) != 0) out[i] += at(i, j) * v[j];
    return out;
}

bool RowSpace::insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) return false;
    Rational inv = 1 / v[p];
    for (auto& q : v) q *= inv;
    // keep existing rows reduced against the new one
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational f = rows_[r][p];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] -= f * v[j];
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("RowSpace::reduce: size mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational f = v[pivots_[r]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
    std::vector<Rational> r = reduce(v);
    for (const auto& q : r)
        if (sgn(q) != 0) return false;
    return true;
}

}  // namespace lrc
