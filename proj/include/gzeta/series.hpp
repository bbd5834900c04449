#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series over Q, with exp and log.
 *
 * A TruncatedSeries of order N stores exactly the coefficients of
 * t^0..t^N; products silently drop everything above t^N.
 */

#include "gzeta/rational_function.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzeta {

constexpr std::size_t kDefaultSeriesOrder = 12;

class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = kDefaultSeriesOrder) : coeffs_(order + 1) {}
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational& operator[](std::size_t k) { return coeffs_[k]; }
    const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a.require_same_order(b);
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a.require_same_order(b);
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] -= b.coeffs_[k];
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        const std::size_t n = a.order();
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void require_same_order(const TruncatedSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("series order mismatch");
    }

    std::vector<Rational> coeffs_;
};

/// Maclaurin coefficients of f through t^order.
inline TruncatedSeries series_from_ratfun(const RationalFunction& f, std::size_t order) {
    const Polynomial& den = f.den();
    const Rational d0 = den.constant_term();
    if (d0 == 0) throw std::domain_error("not a power series");
    TruncatedSeries s(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = f.num().coeff(k);
        const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(den.degree()));
        for (std::size_t j = 1; j <= top; ++j) acc -= den.coeff(j) * s[k - j];
        s[k] = acc / d0;
    }
    return s;
}

/// exp(s) for s with zero constant term, via f' = s' f.
inline TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (s[0] != 0) throw std::domain_error("series domain");
    const std::size_t n = s.order();
    TruncatedSeries f(n);
    f[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k)
            if (s[k] != 0) acc += Rational(static_cast<long>(k)) * s[k] * f[m - k];
        f[m] = acc / static_cast<long>(m);
    }
    return f;
}

/// log(s) for s with constant term 1, via g' = s'/s.
inline TruncatedSeries series_log(const TruncatedSeries& s) {
    if (s[0] != 1) throw std::domain_error("series domain");
    const std::size_t n = s.order();
    TruncatedSeries g(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = Rational(static_cast<long>(m)) * s[m];
        for (std::size_t k = 1; k < m; ++k)
            if (g[k] != 0) acc -= Rational(static_cast<long>(k)) * g[k] * s[m - k];
        g[m] = acc / static_cast<long>(m);
    }
    return g;
}

/// "[c0, c1, ..., cN]"
inline std::string to_string(const TruncatedSeries& s) {
    std::string out = "[";
    for (std::size_t k = 0; k <= s.order(); ++k) {
        if (k) out += ", ";
        out += to_string(s[k]);
    }
    return out + "]";
}

} // namespace gzeta
