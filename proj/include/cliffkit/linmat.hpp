#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cliffkit/scalar.hpp"

namespace cliffkit {

/// Dense matrix over an arbitrary coefficient field, sized for the n x n
/// orthogonal images (n <= 12). Exact over Rational, which is what lets the
/// membership checks assert L^T eta L = eta with no tolerance.
template <CoefficientField T>
class LinMat {
public:
    LinMat() = default;
    LinMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<T>::zero()) {}

    static LinMat identity(std::size_t n) {
        LinMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::one();
        return m;
    }

    static LinMat diagonal(const std::vector<T>& d) {
        LinMat m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    LinMat transposed() const {
        LinMat m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    friend LinMat operator*(const LinMat& a, const LinMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("LinMat: size mismatch");
        LinMat m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& v = a(r, k);
                if (ScalarTraits<T>::is_zero(v)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) = m(r, c) + v * b(k, c);
            }
        return m;
    }

    friend LinMat operator-(const LinMat& a, const LinMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("LinMat: size mismatch");
        LinMat m(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
        return m;
    }

    friend bool operator==(const LinMat& a, const LinMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    double max_abs() const {
        double s = 0;
        for (const auto& v : data_) s = std::max(s, ScalarTraits<T>::abs_value(v));
        return s;
    }

    /// Fraction-free (Bareiss) determinant; exact over exact fields.
    T determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("LinMat: determinant of non-square");
        const std::size_t n = rows_;
        if (n == 0) return ScalarTraits<T>::one();
        LinMat a = *this;
        T sign = ScalarTraits<T>::one();
        T prev = ScalarTraits<T>::one();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (ScalarTraits<T>::is_zero(a(k, k))) {
                std::size_t piv = k + 1;
                while (piv < n && ScalarTraits<T>::is_zero(a(piv, k))) ++piv;
                if (piv == n) return ScalarTraits<T>::zero();
                for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(piv, c));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using LinMatR = LinMat<Rational>;
using LinMatD = LinMat<double>;

}  // namespace cliffkit
