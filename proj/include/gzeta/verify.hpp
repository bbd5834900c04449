#pragma once

/**
 * @file verify.hpp
 * @brief Executable checks of Z = E = H = I and of each intermediate
 *        identity behind the Ihara expression, plus seeded random instances.
 */

#include "gzeta/paths.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gzeta {

enum class CheckStatus { pass, fail, skip };

inline const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail; // first failing entry, or why a check was skipped
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

template <class T>
CheckResult compare_matrices(std::string name, const Matrix<T>& got, const Matrix<T>& want, const std::string& row_tag,
                             const std::string& col_tag) {
    CheckResult r{std::move(name), CheckStatus::pass, {}};
    if (got.rows() != want.rows() || got.cols() != want.cols()) {
        r.status = CheckStatus::fail;
        r.detail = "shape mismatch";
        return r;
    }
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            if (!(got(i, j) == want(i, j))) {
                r.status = CheckStatus::fail;
                r.detail = "entry (" + row_tag + std::to_string(i + 1) + ", " + col_tag + std::to_string(j + 1) +
                           "): " + to_string(got(i, j)) + " != " + to_string(want(i, j));
                return r;
            }
    return r;
}

inline CheckResult compare_values(std::string name, const RationalFunction& got, const RationalFunction& want) {
    CheckResult r{std::move(name), CheckStatus::pass, {}};
    if (!(got == want)) {
        r.status = CheckStatus::fail;
        r.detail = to_string(got) + " != " + to_string(want);
    }
    return r;
}

inline RatFunMatrix select(const ScalarMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    RatFunMatrix r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = m(rows[i], cols[j]);
    return r;
}

inline std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

} // namespace detail

/**
 * Proof-step identities, each reported separately:
 *   M = H − J and H = K·L;
 *   (I(a) + tJ(a))⁻¹ = c_a⁻¹(I(a) − tJ(a)) for each a ∈ A(1);
 *   Σ_{a∉A(-1)} c_a⁻¹ L(a)K(a) = A_Δ            (r_uv = a_uv);
 *   Σ_{a∈A(1)} c_a⁻¹ L(a)J(a)K(a) = B_Δ          (s_uv = b_uv);
 *   L(I + tJ)⁻¹K = A_Δ − tB_Δ by direct inversion;
 *   det(I − tM) = det(I + tJ)·det(I − tL(I + tJ)⁻¹K).
 */
inline CheckReport proof_identity_check(const WeightedDigraph& wd) {
    CheckReport report;
    const HjklMatrices m = hjkl_matrices(wd);
    const ScalarMatrix edge = edge_matrix(wd);
    const auto& order = wd.block_order();
    const std::size_t na = order.size(), nv = wd.vertex_count();
    const RationalFunction t(Polynomial::t());

    report.checks.push_back(detail::compare_matrices("M = H - J", edge, m.h - m.j, "arc#", "arc#"));
    report.checks.push_back(detail::compare_matrices("H = K L", m.h, m.k * m.l, "arc#", "arc#"));

    const RatFunMatrix adjacency = weighted_adjacency(wd);
    const RatFunMatrix backtrack = weighted_backtrack(wd);
    const auto vertices = detail::all_indices(nv);

    RatFunMatrix r_sum(nv, nv), s_sum(nv, nv);
    CheckResult block_inverse{"block inverse (I+tJ(a))^-1 = c_a^-1 (I-tJ(a))", CheckStatus::pass, {}};
    std::size_t i = 0;
    while (i < na) {
        const ArcIndex a = order[i];
        const bool pair = wd.classes().class_of[a] == ArcClass::forward;
        std::vector<std::size_t> block{i};
        if (pair) block.push_back(i + 1);
        const RationalFunction c_inv = RationalFunction(c_factor(wd, a)).inverse();
        const RatFunMatrix la = detail::select(m.l, vertices, block);
        const RatFunMatrix ka = detail::select(m.k, block, vertices);
        r_sum = r_sum + c_inv * (la * ka);
        if (pair) {
            const RatFunMatrix ja = detail::select(m.j, block, block);
            s_sum = s_sum + c_inv * (la * ja * ka);
            const RatFunMatrix id = RatFunMatrix::identity(2);
            const RatFunMatrix prod = (id + t * ja) * (c_inv * (id - t * ja));
            if (!(prod == id) && block_inverse.status == CheckStatus::pass) {
                block_inverse.status = CheckStatus::fail;
                block_inverse.detail = "block of arc '" + wd.graph().arc(a).id + "'";
            }
        }
        i += block.size();
    }
    report.checks.push_back(std::move(block_inverse));
    report.checks.push_back(detail::compare_matrices("r_uv = a_uv", r_sum, adjacency, "u=", "v="));
    report.checks.push_back(detail::compare_matrices("s_uv = b_uv", s_sum, backtrack, "u=", "v="));

    const RatFunMatrix j = lift(m.j);
    const RatFunMatrix i_plus_tj = RatFunMatrix::identity(na) + t * j;
    const RatFunMatrix direct = lift(m.l) * inverse(i_plus_tj) * lift(m.k);
    report.checks.push_back(
        detail::compare_matrices("L(I+tJ)^-1 K = A - tB", direct, adjacency - t * backtrack, "u=", "v="));

    const RationalFunction lhs(determinant(one_minus_t(edge)));
    const RationalFunction rhs = determinant(i_plus_tj) * determinant(RatFunMatrix::identity(nv) - t * direct);
    report.checks.push_back(detail::compare_values("det(I-tM) = det(I+tJ) det(I-tL(I+tJ)^-1 K)", lhs, rhs));
    return report;
}

struct RandomDigraphParams {
    std::size_t min_vertices = 1, max_vertices = 5;
    std::size_t min_arcs = 1, max_arcs = 10;
    long weight_bound = 3;                 // numerators and denominators drawn from [-b, b] \ {0}
    double upsilon_zero_probability = 0.2; // per arc
    double all_upsilon_zero_probability = 0.1;
};

struct RandomInstance {
    Digraph graph;
    WeightScheme weights;
};

/// Reproducible stream of random weighted digraphs (multi-arcs and loops allowed).
class RandomDigraphGenerator {
public:
    explicit RandomDigraphGenerator(std::uint64_t seed, RandomDigraphParams params = {})
        : rng_(seed), params_(params) {}

    RandomInstance next() {
        const std::size_t n = uniform(params_.min_vertices, params_.max_vertices);
        const std::size_t count = uniform(params_.min_arcs, params_.max_arcs);
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < count; ++i)
            arcs.push_back({"a" + std::to_string(i + 1), uniform(1, n), uniform(1, n)});
        Digraph d(n, std::move(arcs));
        const bool no_upsilon = coin(params_.all_upsilon_zero_probability);
        WeightScheme w;
        for (std::size_t i = 0; i < count; ++i) {
            w.tau.push_back(weight());
            w.upsilon.push_back(no_upsilon || coin(params_.upsilon_zero_probability) ? Rational(0) : weight());
        }
        return {std::move(d), std::move(w)};
    }

    /// Random simple graph on 2..max_vertices vertices, each pair an edge with probability 1/2.
    UndirectedGraph next_simple_graph(std::size_t max_vertices = 6) {
        UndirectedGraph g;
        g.vertex_count = uniform(2, max_vertices);
        for (Vertex u = 1; u <= g.vertex_count; ++u)
            for (Vertex v = u + 1; v <= g.vertex_count; ++v)
                if (coin(0.5)) g.edges.emplace_back(u, v);
        return g;
    }

    Rational weight() {
        auto draw = [&] {
            long x = static_cast<long>(uniform(1, static_cast<std::size_t>(2 * params_.weight_bound)));
            return x <= params_.weight_bound ? x - params_.weight_bound - 1 : x - params_.weight_bound;
        };
        Rational r(draw());
        long den = draw();
        if (den < 0) {
            r = -r;
            den = -den;
        }
        r /= den;
        return r;
    }

private:
    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    bool coin(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }

    std::mt19937_64 rng_;
    RandomDigraphParams params_;
};

struct VerifyOptions {
    std::size_t order = kDefaultSeriesOrder;
    std::size_t max_enum = kDefaultEnumerationLimit;
    std::size_t max_bruteforce_length = 6;
    /// Negative control: builds the Hashimoto side from H + J instead of H − J.
    bool corrupt_j_sign = false;
};

inline bool is_ihara_weights(const WeightScheme& w) {
    for (std::size_t i = 0; i < w.tau.size(); ++i)
        if (w.tau[i] != 1 || w.upsilon[i] != 1) return false;
    return true;
}

/// The full battery; failures are reported, never thrown.
inline CheckReport verify_all(const WeightedDigraph& wd, const VerifyOptions& opt = {}) {
    CheckReport report;
    const std::size_t order = opt.order;

    RationalFunction hashimoto;
    if (opt.corrupt_j_sign) {
        const HjklMatrices m = hjkl_matrices(wd);
        hashimoto = RationalFunction(Polynomial(1), determinant(one_minus_t(m.h + m.j)));
    } else {
        hashimoto = hashimoto_zeta(wd);
    }
    const IharaResult ihara = ihara_zeta(wd);
    report.checks.push_back(detail::compare_values("MAIN THEOREM", hashimoto, ihara.zeta));

    Polynomial c_product(1);
    for (ArcIndex a = 0; a < wd.arc_count(); ++a)
        if (wd.classes().class_of[a] != ArcClass::inverse) c_product *= c_factor(wd, a);
    report.checks.push_back(detail::compare_values("det(I+tJ) = prod c_a", ihara.j_determinant, c_product));

    {
        CheckResult r{"N_m trace = brute force", CheckStatus::pass, {}};
        const std::size_t top = std::min(order, opt.max_bruteforce_length);
        const auto traces = n_m_traces(wd, top);
        std::size_t checked = 0;
        try {
            for (std::size_t m = 1; m <= top; ++m) {
                const Rational brute = n_m_bruteforce(wd, m, opt.max_enum);
                ++checked;
                if (brute != traces[m - 1]) {
                    r.status = CheckStatus::fail;
                    r.detail = "m=" + std::to_string(m) + ": " + to_string(traces[m - 1]) + " != " + to_string(brute);
                    break;
                }
            }
        } catch (const EnumerationLimitExceeded&) {
            if (checked == 0) r.status = CheckStatus::skip;
        }
        if (r.status != CheckStatus::fail) r.detail = "m=1.." + std::to_string(checked);
        report.checks.push_back(std::move(r));

        CheckResult reduced{"N_m = reduced closed paths (Ihara weights)", CheckStatus::skip, "weights are not Ihara"};
        if (is_ihara_weights(wd.weights()) && checked > 0) {
            reduced.status = CheckStatus::pass;
            reduced.detail = "m=1.." + std::to_string(checked);
            for (std::size_t m = 1; m <= checked; ++m) {
                Integer count = count_reduced_closed_paths(wd.graph(), wd.pairing(), m, opt.max_enum);
                if (Rational(count) != traces[m - 1]) {
                    reduced.status = CheckStatus::fail;
                    reduced.detail = "m=" + std::to_string(m) + ": " + count.get_str() + " != " + to_string(traces[m - 1]);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(reduced));
    }

    const TruncatedSeries h_series = series_from_ratfun(hashimoto, order);
    {
        CheckResult r{"EXP == HASHIMOTO up to t^" + std::to_string(order), CheckStatus::pass, {}};
        const TruncatedSeries e = exp_expression_series(wd, order);
        if (!(e == h_series)) {
            r.status = CheckStatus::fail;
            r.detail = to_string(e) + " != " + to_string(h_series);
        }
        report.checks.push_back(std::move(r));
    }
    {
        CheckResult r{"EULER == HASHIMOTO up to t^" + std::to_string(order), CheckStatus::pass, {}};
        try {
            const TruncatedSeries e = euler_product_series(wd, order, opt.max_enum);
            if (!(e == h_series)) {
                r.status = CheckStatus::fail;
                r.detail = to_string(e) + " != " + to_string(h_series);
            }
        } catch (const EnumerationLimitExceeded& ex) {
            r.status = CheckStatus::skip;
            r.detail = ex.what();
        }
        report.checks.push_back(std::move(r));
    }

    for (auto& c : proof_identity_check(wd).checks) report.checks.push_back(std::move(c));
    return report;
}

} // namespace gzeta
