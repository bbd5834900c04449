#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials in t over the rationals.
 *
 * Coefficients are stored in ascending degree. The zero polynomial has an
 * empty coefficient vector and there is never a trailing zero, so two
 * polynomials are equal iff their coefficient vectors are.
 */

#include "gzeta/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzeta {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { // NOLINT: constants convert implicitly
        if (c != 0) coeffs_.push_back(c);
    }
    Polynomial(long c) : Polynomial(Rational(c)) {} // NOLINT
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c * t^k
    static Polynomial monomial(const Rational& c, std::size_t k) {
        if (c == 0) return {};
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return Polynomial(std::move(v));
    }
    static Polynomial t() { return monomial(1, 1); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    Rational constant_term() const { return coeff(0); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
        } else {
            for (auto& x : coeffs_) x *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("zero divisor");
        std::vector<Rational> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        if (rem.size() <= db) return {Polynomial{}, a};
        std::vector<Rational> quot(rem.size() - db);
        const Rational inv_lead = 1 / b.coeffs_.back();
        for (std::size_t k = rem.size(); k-- > db;) {
            if (rem[k] == 0) continue;
            Rational q = rem[k] * inv_lead;
            quot[k - db] = q;
            for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
        }
        rem.resize(db);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this * (1 / leading());
    }

    Polynomial pow(unsigned k) const {
        Polynomial result(1), base = *this;
        while (k) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k) base *= base;
        }
        return result;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Quotient of a division known to be exact; throws if a remainder appears.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

/// Monic gcd (zero iff both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Canonical text: ascending degree, e.g. "1 - 3/2*t + t^2".
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const bool neg = c[k] < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rational mag = abs(c[k]);
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += "t";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

} // namespace gzeta
