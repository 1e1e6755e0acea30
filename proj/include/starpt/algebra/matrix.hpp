/**
 * @file matrix.hpp
 * @brief Dense exact matrices, Bareiss determinant, and field elimination.
 *
 * determinant() and rank_bareiss() only need an integral domain with exact
 * division (Q, Q(zeta_n), Q[t]). rref(), rank(), nullspace() and inverse()
 * divide by pivots and therefore need a field.
 */
#ifndef STARPT_ALGEBRA_MATRIX_HPP
#define STARPT_ALGEBRA_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "starpt/algebra/rational.hpp"
#include "starpt/error.hpp"

namespace starpt::algebra {

template <class T>
class ExactMatrix {
   public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols, const T& fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static ExactMatrix identity(std::size_t n, const T& zero, const T& one) {
        ExactMatrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    /// Build from rows; all rows must have the same length.
    static ExactMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        ExactMatrix m;
        m.r_ = rows.size();
        m.c_ = rows.empty() ? 0 : rows[0].size();
        m.a_.reserve(m.r_ * m.c_);
        for (const auto& row : rows) {
            if (row.size() != m.c_) fail(Errc::DimensionMismatch, "ragged matrix rows");
            m.a_.insert(m.a_.end(), row.begin(), row.end());
        }
        return m;
    }

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_));
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v;
        v.reserve(r_);
        for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    ExactMatrix transpose() const {
        ExactMatrix t;
        t.r_ = c_;
        t.c_ = r_;
        t.a_.reserve(a_.size());
        for (std::size_t j = 0; j < c_; ++j)
            for (std::size_t i = 0; i < r_; ++i) t.a_.push_back((*this)(i, j));
        return t;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.c_ != b.r_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
        if (a.a_.empty() || b.a_.empty()) fail(Errc::DimensionMismatch, "empty matrix product");
        ExactMatrix p(a.r_, b.c_, zero_like(a.a_[0]));
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) = p(i, j) + a(i, k) * b(k, j);
            }
        return p;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

   private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

/// Bareiss fraction-free determinant; `one` supplies the ring's unit.
template <class T>
T determinant(ExactMatrix<T> m, const T& one) {
    if (m.rows() != m.cols()) fail(Errc::NonSquare, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return zero_like(one);
            m.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = zero_like(one);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? T(-d) : d;
}

/// Rank by fraction-free elimination (integral domains).
template <class T>
std::size_t rank_bareiss(ExactMatrix<T> m, const T& one) {
    const std::size_t rows = m.rows(), cols = m.cols();
    T prev = one;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m(i, j) = exact_div(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
            m(i, c) = zero_like(one);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

/// Reduced row echelon form over a field; pivots are the first nonzero
/// entries in column order.
template <class T>
struct Echelon {
    ExactMatrix<T> reduced;
    std::vector<std::size_t> pivots;
};

template <class T>
Echelon<T> rref(ExactMatrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        m.swap_rows(r, p);
        const T inv = exact_div(one_like(m(r, c)), m(r, c));
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const ExactMatrix<T>& m) {
    return rref(m).pivots.size();
}

/// Right nullspace basis: one vector per free column, with that column set to 1.
template <class T>
std::vector<std::vector<T>> nullspace(const ExactMatrix<T>& m, const T& one) {
    const std::size_t cols = m.cols();
    const T zero = zero_like(one);
    if (m.rows() == 0) {
        std::vector<std::vector<T>> basis;
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<T> v(cols, zero);
            v[j] = one;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, zero);
        v[f] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!is_zero(red(i, f))) v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
ExactMatrix<T> inverse(const ExactMatrix<T>& m, const T& one) {
    if (m.rows() != m.cols()) fail(Errc::NonSquare, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const T zero = zero_like(one);
    ExactMatrix<T> aug(n, 2 * n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one;
    }
    auto [red, pivots] = rref(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1) fail(Errc::SingularMatrix, "matrix is not invertible");
    ExactMatrix<T> inv(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

}  // namespace starpt::algebra

#endif
