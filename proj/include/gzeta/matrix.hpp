#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over Rational, Polynomial or RationalFunction.
 *
 * Determinants:
 *   - Rational: Gaussian elimination over Q.
 *   - Polynomial: fraction-free Bareiss elimination with exact division in Q[t].
 *   - RationalFunction: every row is scaled by the lcm of its denominators,
 *     the resulting polynomial matrix goes through Bareiss, and the scale
 *     factors are divided back out.
 */

#include "gzeta/rational_function.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gzeta {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("shape");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("shape");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!(b(k, j) == T(0))) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.data_) x = s * x;
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

    /// Applies f entrywise, producing a matrix of whatever f returns.
    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;
using RatFunMatrix = Matrix<RationalFunction>;

inline RatFunMatrix lift(const ScalarMatrix& m) {
    return m.map([](const Rational& x) { return RationalFunction(x); });
}

template <class T>
T trace(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("shape");
    T acc(0);
    for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
    return acc;
}

/// tr(m^k) by repeated multiplication.
template <class T>
T trace_power(const Matrix<T>& m, std::size_t k) {
    if (!m.is_square()) throw std::invalid_argument("shape");
    if (k == 0) throw std::invalid_argument("period must be positive");
    Matrix<T> p = m;
    for (std::size_t i = 1; i < k; ++i) p = p * m;
    return trace(p);
}

inline Rational determinant(ScalarMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("shape");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

inline Polynomial determinant(PolyMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("shape");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial(1);
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // lowest-degree nonzero pivot in column k
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m(i, k).is_zero() && (piv == n || m(i, k).degree() < m(piv, k).degree())) piv = i;
        if (piv == n) return {};
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = Polynomial{};
        }
        prev = m(k, k);
    }
    Polynomial det = m(n - 1, n - 1);
    return negate ? -det : det;
}

inline RationalFunction determinant(const RatFunMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("shape");
    const std::size_t n = m.rows();
    PolyMatrix cleared(n, n);
    Polynomial scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial row_lcm(1);
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& d = m(i, j).den();
            if (d.degree() > 0) row_lcm = exact_div(row_lcm * d, gcd(row_lcm, d));
        }
        for (std::size_t j = 0; j < n; ++j)
            cleared(i, j) = exact_div(m(i, j).num() * row_lcm, m(i, j).den());
        scale *= row_lcm;
    }
    return RationalFunction(determinant(std::move(cleared)), scale);
}

/**
 * Inverse over the power-series ring Q[[t]]: Gauss-Jordan that only pivots
 * on units (entries with nonzero constant term). Throws std::domain_error
 * when the matrix is not invertible there, i.e. its value at t = 0 is singular.
 */
inline RatFunMatrix inverse(RatFunMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("shape");
    const std::size_t n = m.rows();
    RatFunMatrix inv = RatFunMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && !m(piv, k).is_unit()) ++piv;
        if (piv == n) throw std::domain_error("matrix not invertible over power series");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        const RationalFunction p = m(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) *= p;
            inv(k, j) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            const RationalFunction f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
                if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

} // namespace gzeta
