/**
 * @file matrix.hpp
 * @brief Small dense matrices over exact scalars (Rational, CyclotomicNumber).
 *
 * Representation matrices in this domain are monomial (one nonzero per row),
 * so multiplication skips zero entries; storage stays dense.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "metaq/arith.hpp"

namespace metaq {

namespace detail {
inline bool entry_is_zero(const Rational& x) { return x == 0; }
template <typename T>
bool entry_is_zero(const T& x) {
    return x.is_zero();
}
}  // namespace detail

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (detail::entry_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (detail::entry_is_zero(bkj)) continue;
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!(a.data_[i] == b.data_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix pow(const Integer& e) const {
        if (rows_ != cols_) throw std::invalid_argument("matrix power needs a square matrix");
        if (e < 0) throw std::invalid_argument("matrix power needs e >= 0");
        Matrix acc = identity(rows_);
        Matrix base = *this;
        Integer k = e;
        while (k > 0) {
            if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return acc;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const T& x : data_)
            if (!detail::entry_is_zero(x)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/// trace(a * b) without forming the product.
template <typename T>
T trace_of_product(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw std::invalid_argument("trace_of_product shape mismatch");
    T t(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (detail::entry_is_zero(aik)) continue;
            t += aik * b(k, i);
        }
    return t;
}

}  // namespace metaq
