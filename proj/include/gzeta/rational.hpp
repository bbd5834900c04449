#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals.
 *
 * Backed by GMP's mpq_class. Every value handed out by this header is in
 * canonical form: positive denominator, coprime parts, zero as 0/1.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int(num, true) || !is_int(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    Integer p(n, 10), q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// "p" when integral, else "p/q".
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_canonical(const Rational& r) {
    Rational copy = r;
    copy.canonicalize();
    return copy.get_num() == r.get_num() && copy.get_den() == r.get_den() && r.get_den() > 0;
}

} // namespace gzeta
