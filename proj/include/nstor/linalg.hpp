#pragma once

// Dense exact linear algebra over a Field.

#include "nstor/field.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nstor {

template <Field F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    void append_row(const std::vector<F>& values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    /// Submatrix on the given row and column index lists.
    Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix out(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& v = a(i, k);
                if (v.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += v * b(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <Field F>
std::vector<std::size_t> rref(Matrix<F>& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        const F inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const F factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) = a(i, j) - factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <Field F>
std::size_t rank(Matrix<F> a) {
    // forward elimination only
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        const F inv = a(row, col).inverse();
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            if (a(i, col).is_zero()) continue;
            const F factor = a(i, col) * inv;
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!a(row, j).is_zero()) a(i, j) = a(i, j) - factor * a(row, j);
        }
        ++row;
    }
    return row;
}

template <Field F>
F determinant(Matrix<F> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    F det(1L);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col).is_zero()) ++p;
        if (p == n) return F();
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
            det = -det;
        }
        det = det * a(col, col);
        const F inv = a(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const F factor = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) = a(i, j) - factor * a(col, j);
        }
    }
    return det;
}

/// Basis of the right kernel {v : a v = 0}.
template <Field F>
std::vector<std::vector<F>> nullspace(Matrix<F> a) {
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> out;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(a.cols());
        v[free] = F(1L);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace nstor
