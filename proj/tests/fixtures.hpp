#pragma once

#include "gzeta/verify.hpp"

#include <random>
#include <string>
#include <vector>

namespace gzeta::fixtures {

inline const Polynomial T = Polynomial::t();

inline RationalFunction rf(const Polynomial& num, const Polynomial& den = Polynomial(1)) { return {num, den}; }

/// Three vertices: a1: 1->2, a2 a3: 2->1, a4: 2->3, a5: 3->2, a6: 3->1, a7 a8 loops at 1.
inline Digraph example_digraph() {
    return Digraph(3, {{"a1", 1, 2},
                       {"a2", 2, 1},
                       {"a3", 2, 1},
                       {"a4", 2, 3},
                       {"a5", 3, 2},
                       {"a6", 3, 1},
                       {"a7", 1, 1},
                       {"a8", 1, 1}});
}

inline const std::vector<std::pair<std::string, std::string>> kExamplePairs{{"a1", "a2"}, {"a4", "a5"}};

/// τ(a_i) = i, υ(a_i) = 1/i.
inline WeightScheme example_weights() {
    WeightScheme w;
    for (long i = 1; i <= 8; ++i) {
        w.tau.emplace_back(i);
        w.upsilon.push_back(Rational(1, i));
    }
    return w;
}

inline WeightedDigraph example(const WeightScheme& w = example_weights()) {
    return make_weighted(example_digraph(), w, kExamplePairs);
}

inline WeightedDigraph from_instance(const RandomInstance& inst) {
    return {inst.graph, canonical_inverse_pairing(inst.graph), inst.weights};
}

/// Small random rationals and polynomials for algebra property tests.
class AlgebraGen {
public:
    explicit AlgebraGen(std::uint64_t seed) : rng_(seed) {}

    Rational rational(long bound = 5) {
        std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
        Rational r(num(rng_), den(rng_));
        r.canonicalize(); // GMP arithmetic assumes canonical operands
        return r;
    }
    Polynomial polynomial(int max_degree = 3) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng_)) + 1);
        for (auto& x : c) x = rational();
        return Polynomial(std::move(c));
    }
    /// A nonzero polynomial with nonzero constant term (a unit of Q[[t]]).
    Polynomial unit_polynomial(int max_degree = 3) {
        Polynomial p = polynomial(max_degree);
        while (p.constant_term() == 0) p += Polynomial(rational());
        return p;
    }
    RationalFunction ratfun() { return {polynomial(), unit_polynomial(2)}; }
    std::size_t size(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
    bool coin(double p) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }

    ScalarMatrix scalar_matrix(std::size_t r, std::size_t c) {
        ScalarMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(0.3) ? Rational(0) : rational();
        return m;
    }
    PolyMatrix poly_matrix(std::size_t r, std::size_t c) {
        PolyMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(0.3) ? Polynomial() : polynomial(2);
        return m;
    }
    RatFunMatrix ratfun_matrix(std::size_t r, std::size_t c) {
        RatFunMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(0.3) ? RationalFunction() : ratfun();
        return m;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace gzeta::fixtures
