#pragma once

// Exact elimination: Bareiss determinants, reduced row echelon form,
// nullspaces, inverses and linear solves.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "syslat/matrix.hpp"

namespace syslat {

/// Exact quotient; fields and Z use ordinary division, other integral
/// domains overload this.
template <class T>
T exact_div(const T& a, const T& b) {
    return a / b;
}

/// Fraction-free (Bareiss) determinant. Every division is exact, so this
/// works over integral domains as well as fields.
template <class T>
T det(const Matrix<T>& m) {
    if (!m.is_square()) fail(ErrorCode::NonSquare, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    Matrix<T> a = m;
    T prev = m.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero(a(swap_row, k))) ++swap_row;
            if (swap_row == n) return m.zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = exact_div(v, prev);
            }
            a(i, k) = m.zero();
        }
        prev = a(k, k);
    }
    T r = a(n - 1, n - 1);
    return negate ? -r : r;
}

template <class T>
struct EchelonForm {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_columns;

    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Reduced row echelon form over a field. The result is unique, so the
/// choice of pivot row (cheapest entry first) never shows in the output.
template <class T>
EchelonForm<T> rref(Matrix<T> a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::optional<std::size_t> best;
        std::size_t best_cost = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (is_zero(a(i, c))) continue;
            const std::size_t cost = complexity(a(i, c));
            if (!best || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (!best) continue;
        if (*best != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(*best, j));
        const T inv = a.one() / a(r, c);
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(a(r, j))) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            const T factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!is_zero(a(r, j))) a(i, j) = a(i, j) - factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).rank();
}

/// Basis of the right nullspace. Vectors are indexed by free column in
/// increasing order; each has a 1 at its own free column and 0 at the others.
template <class T>
std::vector<std::vector<T>> solve_nullspace(const Matrix<T>& m) {
    const EchelonForm<T> e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, m.zero());
        v[f] = m.one();
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Column indices of the free variables, matching solve_nullspace order.
template <class T>
std::vector<std::size_t> free_columns(const EchelonForm<T>& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

/// Solves A X = B when A is square and invertible.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.is_square()) fail(ErrorCode::NonSquare, "solve needs a square system");
    if (b.rows() != a.rows()) fail(ErrorCode::InvalidArgument, "right-hand side has the wrong height");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, n + b.cols(), a.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    const EchelonForm<T> e = rref(std::move(aug));
    if (e.rank() < n || e.pivot_columns[n - 1] != n - 1)
        fail(ErrorCode::DivisionByZero, "singular coefficient matrix");
    Matrix<T> x(n, b.cols(), a.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = e.reduced(i, n + j);
    return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    return solve(a, Matrix<T>::identity(a.rows(), a.one()));
}

} // namespace syslat
