#pragma once

/**
 * @file paths.hpp
 * @brief Brute-force enumeration of closed paths and prime cycles, and the
 *        Euler product built from them.
 *
 * A closed path of length m is identified with its fundamental section
 * (a_0, ..., a_{m-1}), h(a_i) = t(a_{i+1 mod m}). Enumeration is guarded:
 * before walking, the exact number of composable length-m arc sequences is
 * counted and compared against the limit.
 */

#include "gzeta/zeta.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gzeta {

constexpr std::size_t kDefaultEnumerationLimit = 10'000'000;

class EnumerationLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of arc sequences (a_0..a_{m-1}) with h(a_i) = t(a_{i+1}).
inline Integer count_walks(const Digraph& d, std::size_t m) {
    if (m == 0 || d.arc_count() == 0) return 0;
    const std::size_t n = d.vertex_count();
    // ending[v] = number of walks of the current length ending at vertex v
    std::vector<Integer> ending(n + 1, 0);
    for (const Arc& a : d.arcs()) ending[a.head] += 1;
    for (std::size_t len = 2; len <= m; ++len) {
        std::vector<Integer> next(n + 1, 0);
        for (const Arc& a : d.arcs()) next[a.head] += ending[a.tail];
        ending = std::move(next);
    }
    Integer total = 0;
    for (const auto& c : ending) total += c;
    return total;
}

inline void require_enumerable(const Digraph& d, std::size_t m, std::size_t limit) {
    if (count_walks(d, m) > Integer(std::to_string(limit)))
        throw EnumerationLimitExceeded("enumeration limit exceeded: more than " + std::to_string(limit) +
                                       " candidate sections of length " + std::to_string(m));
}

/**
 * Depth-first walk over closed sections of length m drawn from `alphabet`.
 *
 * step(a, b) weighs the transition a -> b; a section's weight is the product
 * over its m cyclic transitions. With prune_zero, prefixes whose partial
 * product vanishes are abandoned. With least_first, letters after the first
 * must not precede it in the alphabet (the first letter is the minimum).
 * visit(section, positions, weight) receives arc indices, alphabet positions
 * and the full cyclic product.
 */
template <class T, class Step, class Visit>
void walk_closed_sections(const Digraph& d, std::span<const ArcIndex> alphabet, std::size_t m, bool least_first,
                          bool prune_zero, Step&& step, Visit&& visit) {
    if (m == 0 || alphabet.empty()) return;
    std::vector<std::vector<std::size_t>> successors(alphabet.size());
    for (std::size_t p = 0; p < alphabet.size(); ++p)
        for (std::size_t q = 0; q < alphabet.size(); ++q)
            if (d.arc(alphabet[p]).head == d.arc(alphabet[q]).tail) successors[p].push_back(q);

    std::vector<ArcIndex> section(m);
    std::vector<std::size_t> positions(m);
    std::vector<T> prefix(m);
    auto extend = [&](auto& self, std::size_t depth, std::size_t min_pos) -> void {
        if (depth == m) {
            if (d.arc(section[m - 1]).head != d.arc(section[0]).tail) return;
            T total = prefix[m - 1] * step(section[m - 1], section[0]);
            if (prune_zero && total == 0) return;
            visit(std::span<const ArcIndex>(section), std::span<const std::size_t>(positions), total);
            return;
        }
        for (std::size_t q : successors[positions[depth - 1]]) {
            if (q < min_pos) continue;
            T next = prefix[depth - 1] * step(section[depth - 1], alphabet[q]);
            if (prune_zero && next == 0) continue;
            positions[depth] = q;
            section[depth] = alphabet[q];
            prefix[depth] = std::move(next);
            self(self, depth + 1, min_pos);
        }
    };
    for (std::size_t p = 0; p < alphabet.size(); ++p) {
        positions[0] = p;
        section[0] = alphabet[p];
        prefix[0] = T(1);
        extend(extend, 1, least_first ? p : 0);
    }
}

inline std::vector<ArcIndex> input_order(const Digraph& d) {
    std::vector<ArcIndex> all(d.arc_count());
    for (ArcIndex i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

/// θ(a, b) for all arc pairs, indexed by arc index.
inline ScalarMatrix theta_table(const WeightedDigraph& wd) {
    const std::size_t n = wd.arc_count();
    ScalarMatrix t(n, n);
    for (ArcIndex a = 0; a < n; ++a)
        for (ArcIndex b = 0; b < n; ++b) t(a, b) = theta(wd, a, b);
    return t;
}

/// Cyclic product θ(a_0,a_1)θ(a_1,a_2)...θ(a_{m-1},a_0).
inline Rational circular_product(const WeightedDigraph& wd, std::span<const ArcIndex> section) {
    Rational prod = 1;
    for (std::size_t i = 0; i < section.size() && prod != 0; ++i)
        prod *= theta(wd, section[i], section[(i + 1) % section.size()]);
    return prod;
}

/// N_m as the sum of circular products over all closed paths of length m.
inline Rational n_m_bruteforce(const WeightedDigraph& wd, std::size_t m,
                               std::size_t limit = kDefaultEnumerationLimit) {
    if (m == 0) throw std::invalid_argument("period must be positive");
    require_enumerable(wd.graph(), m, limit);
    const auto alphabet = input_order(wd.graph());
    const ScalarMatrix th = theta_table(wd);
    Rational total = 0;
    walk_closed_sections<Rational>(
        wd.graph(), alphabet, m, false, true, [&](ArcIndex a, ArcIndex b) -> const Rational& { return th(a, b); },
        [&](auto, auto, const Rational& circ) { total += circ; });
    return total;
}

/// Closed paths of length m with no step a -> a⁻¹ (cyclically); weights are not consulted.
inline Integer count_reduced_closed_paths(const Digraph& d, const InversePairing& p, std::size_t m,
                                          std::size_t limit = kDefaultEnumerationLimit) {
    if (m == 0) throw std::invalid_argument("period must be positive");
    require_enumerable(d, m, limit);
    const auto alphabet = input_order(d);
    Integer count = 0;
    walk_closed_sections<int>(
        d, alphabet, m, false, true, [&](ArcIndex a, ArcIndex b) { return p.inverse_of(a) == b ? 0 : 1; },
        [&](auto, auto, int) { count += 1; });
    return count;
}

struct ClosedPath {
    std::vector<ArcIndex> section;
    std::size_t period() const { return section.size(); }
};

struct PrimeCycle {
    ClosedPath representative; // lexicographically least rotation, in block order
    std::size_t period = 0;    // minimum period
    Rational circ;
};

/// True iff `word` is strictly smaller than each of its proper rotations (a Lyndon word).
inline bool is_lyndon(std::span<const std::size_t> word) {
    const std::size_t m = word.size();
    for (std::size_t r = 1; r < m; ++r) {
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t a = word[i], b = word[(i + r) % m];
            if (a < b) break;
            if (a > b) return false;
            if (i + 1 == m) return false; // equal rotation: not primitive
        }
    }
    return true;
}

namespace detail {

inline std::vector<PrimeCycle> prime_cycles(const WeightedDigraph& wd, std::size_t max_len, std::size_t limit,
                                            bool skip_zero) {
    if (max_len == 0) throw std::invalid_argument("max_len must be positive");
    const auto& order = wd.block_order();
    const ScalarMatrix th = theta_table(wd);
    std::vector<PrimeCycle> out;
    for (std::size_t m = 1; m <= max_len; ++m) {
        require_enumerable(wd.graph(), m, limit);
        walk_closed_sections<Rational>(
            wd.graph(), order, m, /*least_first=*/true, skip_zero,
            [&](ArcIndex a, ArcIndex b) -> const Rational& { return th(a, b); },
            [&](std::span<const ArcIndex> s, std::span<const std::size_t> word, const Rational& circ) {
                if (is_lyndon(word)) out.push_back({ClosedPath{{s.begin(), s.end()}}, m, circ});
            });
    }
    return out;
}

} // namespace detail

/**
 * One canonical representative per prime cycle of period ≤ max_len: the
 * rotation that is lexicographically least under the block arc order.
 * Listed by period, then lexicographically.
 */
inline std::vector<PrimeCycle> enumerate_prime_cycles(const WeightedDigraph& wd, std::size_t max_len,
                                                      std::size_t limit = kDefaultEnumerationLimit) {
    return detail::prime_cycles(wd, max_len, limit, false);
}

/// Π over prime cycles with period ≤ order of 1/(1 − circ·t^period), truncated at t^order.
inline TruncatedSeries euler_product_series(const WeightedDigraph& wd, std::size_t order,
                                            std::size_t limit = kDefaultEnumerationLimit) {
    if (order == 0) throw std::invalid_argument("order must be positive");
    TruncatedSeries prod(order);
    prod[0] = 1;
    // primes with circ = 0 contribute the factor 1
    for (const PrimeCycle& c : detail::prime_cycles(wd, order, limit, true)) {
        // multiply by Σ_k circ^k t^{k·period} in place, ascending degree
        for (std::size_t k = c.period; k <= order; ++k) prod[k] += c.circ * prod[k - c.period];
    }
    return prod;
}

inline std::string section_string(const Digraph& d, std::span<const ArcIndex> section) {
    std::string out;
    for (std::size_t i = 0; i < section.size(); ++i) {
        if (i) out += " ";
        out += d.arc(section[i]).id;
    }
    return out;
}

} // namespace gzeta
