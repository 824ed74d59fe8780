#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zident/errors.hpp"

namespace zident {

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/// Basis of the right kernel {v : m v = 0}, computed by fraction-free
/// (Bareiss style) row reduction with first-nonzero pivoting.  Works for any
/// exact field scalar with +, -, *, / and comparison against 0.
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::vector<bool> is_pivot_col(cols, false);

    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m(r, j), m(p, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
            m(i, c) = T(0);
        }
        prev = m(r, c);
        pivots.emplace_back(r, c);
        is_pivot_col[c] = true;
        ++r;
    }

    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot_col[f])
            continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto [pr, pc] = *it;
            T s(0);
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (!(v[j] == 0) && !(m(pr, j) == 0))
                    s = s + m(pr, j) * v[j];
            }
            v[pc] = -s / m(pr, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// m v with v a column vector.
template <class T>
std::vector<T> mat_apply(const Mat<T>& m, const std::vector<T>& v) {
    if (v.size() != m.cols())
        throw DomainError("matrix-vector size mismatch");
    std::vector<T> out(m.rows(), T(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] = out[i] + m(i, j) * v[j];
    return out;
}

} // namespace zident
