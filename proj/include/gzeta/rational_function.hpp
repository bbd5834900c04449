#pragma once

/**
 * @file rational_function.hpp
 * @brief Reduced quotients of polynomials that are regular at t = 0.
 *
 * Every quantity in this library is a formal power series in t that happens
 * to be rational, so RationalFunction lives in the local ring Q[t]_(t):
 * the denominator never vanishes at the origin. Canonical form is
 *   gcd(num, den) = 1 and den(0) = 1,
 * which makes equality a structural comparison. Any operation that would
 * produce a pole at t = 0 throws std::domain_error("not a power series").
 */

#include "gzeta/polynomial.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gzeta {

class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {} // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}            // NOLINT
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {} // NOLINT
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("zero divisor");
        normalize();
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Invertible in Q[[t]]: nonzero value at the origin.
    bool is_unit() const { return num_.constant_term() != 0; }
    Rational at_zero() const { return num_.constant_term(); }

    RationalFunction operator-() const { return from_reduced(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_polynomial() && b.is_polynomial()) return from_reduced(a.num_ * b.num_, Polynomial(1));
        // cross-cancel first to keep intermediate degrees small
        Polynomial g1 = gcd(a.num_, b.den_);
        Polynomial g2 = gcd(b.num_, a.den_);
        return {exact_div(a.num_, g1) * exact_div(b.num_, g2), exact_div(a.den_, g2) * exact_div(b.den_, g1)};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("zero divisor");
        if (a.is_zero()) return {};
        // the reciprocal of b alone may have a pole at 0 (e.g. t/t), so divide in one step
        Polynomial g1 = gcd(a.num_, b.num_);
        Polynomial g2 = gcd(a.den_, b.den_);
        return {exact_div(a.num_, g1) * exact_div(b.den_, g2), exact_div(a.den_, g2) * exact_div(b.num_, g1)};
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const { return RationalFunction(1) / *this; }

    /// True iff the stored pair already satisfies every canonical-form invariant.
    bool is_canonical() const {
        if (den_.is_zero() || den_.constant_term() != 1) return false;
        if (num_.is_zero()) return den_ == Polynomial(1);
        return gcd(num_, den_) == Polynomial(1);
    }

private:
    static RationalFunction from_reduced(Polynomial num, Polynomial den) {
        RationalFunction r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        const Rational d0 = den_.constant_term();
        if (d0 == 0) throw std::domain_error("not a power series");
        if (d0 != 1) {
            const Rational s = 1 / d0;
            num_ *= s;
            den_ *= s;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// "num" when the denominator is 1, else "num/(den)" with a multi-term numerator parenthesized.
inline std::string to_string(const RationalFunction& f) {
    if (f.is_polynomial()) return to_string(f.num());
    std::size_t terms = 0;
    for (const auto& c : f.num().coefficients())
        if (c != 0) ++terms;
    std::string n = to_string(f.num());
    if (terms > 1) n = "(" + n + ")";
    return n + "/(" + to_string(f.den()) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << to_string(f); }

} // namespace gzeta
