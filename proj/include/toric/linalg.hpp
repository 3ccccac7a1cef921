// SPDX-License-Identifier: MIT
/**
    \file
    \brief Small dense matrices over an arbitrary scalar ring (doubles, jets,
           exact rationals) with Gauss-Jordan inverse and determinant.

    Dimensions in this project never exceed 6, so no pivot-growth heuristics
    beyond partial pivoting by |value| are needed.
*/

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace toric {

/// Row-major dense matrix with ring-valued entries.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill)
    {
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

namespace detail {
/// Pivot magnitude: |scalar value| for jets and doubles alike.
inline double pivot_size(double x) { return std::abs(x); }
template <typename T>
double pivot_size(const T& x)
{
    return std::abs(static_cast<double>(x.value()));
}
}  // namespace detail

/// Gauss-Jordan inverse with partial pivoting.  Throws on singular input.
template <typename T>
Matrix<T> inverse(Matrix<T> m)
{
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    // Zero/one of the same "shape" as the entries (jets carry a basis).
    const T zero = m(0, 0) * 0.0;
    Matrix<T> inv(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) inv(i, i) = zero + 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (detail::pivot_size(m(r, col)) > detail::pivot_size(m(pivot, col))) pivot = r;
        if (detail::pivot_size(m(pivot, col)) == 0.0)
            throw std::domain_error("inverse: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(col, j), m(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        const T scale = 1.0 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) = m(col, j) * scale;
            inv(col, j) = inv(col, j) * scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const T factor = m(r, col);
            if (detail::pivot_size(factor) == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) = m(r, j) - factor * m(col, j);
                inv(r, j) = inv(r, j) - factor * inv(col, j);
            }
        }
    }
    return inv;
}

/// Determinant by LU elimination with partial pivoting.
template <typename T>
T determinant(Matrix<T> m)
{
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const T zero = m(0, 0) * 0.0;
    T det = zero + 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (detail::pivot_size(m(r, col)) > detail::pivot_size(m(pivot, col))) pivot = r;
        if (detail::pivot_size(m(pivot, col)) == 0.0) return zero;
        if (pivot != col) {
            det = -det;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
        }
        det = det * m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const T factor = m(r, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) = m(r, j) - factor * m(col, j);
        }
    }
    return det;
}

}  // namespace toric
