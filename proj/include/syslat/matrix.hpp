#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "syslat/rational.hpp"

namespace syslat {

/// Dense row-major matrix over an exact coefficient domain.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) fail(ErrorCode::InvalidArgument, "entry count does not match shape");
    }

    static Matrix identity(std::size_t n, const T& one = T(1)) {
        Matrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix diagonal(const std::vector<T>& diag) {
        if (diag.empty()) return {};
        Matrix m(diag.size(), diag.size(), zero_like(diag.front()));
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<T>& entries() const noexcept { return data_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Zero of the coefficient domain this matrix lives in.
    T zero() const { return data_.empty() ? T{} : zero_like(data_.front()); }
    T one() const {
        if (!data_.empty()) return one_like(data_.front());
        if constexpr (std::is_constructible_v<T, long>) return T(1L);
        fail(ErrorCode::InvalidArgument, "empty matrix has no coefficient domain");
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<std::decay_t<decltype(f(std::declval<const T&>()))>> {
        using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorCode::InvalidArgument, "matrix shapes do not compose");
        Matrix r(a.rows_, b.cols_, a.zero());
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(k, j);
                    if (is_zero(y)) continue;
                    r(i, j) += x * y;
                }
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const T& c, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = c * x;
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        const T one_v = one();
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& x = (*this)(i, j);
                if (i == j ? !(x == one_v) : !is_zero(x)) return false;
            }
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !is_zero((*this)(i, j))) return false;
        return true;
    }

    T trace() const {
        T acc = zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
        return acc;
    }

    /// Row-major flattening.
    std::vector<T> vectorize() const { return data_; }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << "[";
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::InvalidArgument, "matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

/// Matrix with the given vectors as columns.
template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& columns) {
    if (columns.empty()) return {};
    Matrix<T> r(columns.front().size(), columns.size(), zero_like(columns.front().front()));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (std::size_t i = 0; i < columns[j].size(); ++i) r(i, j) = columns[j][i];
    return r;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != v.size()) fail(ErrorCode::InvalidArgument, "matrix-vector shapes do not compose");
    std::vector<T> r(m.rows(), m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j)) && !is_zero(v[j])) r[i] += m(i, j) * v[j];
    return r;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

} // namespace syslat
