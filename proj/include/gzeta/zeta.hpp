#pragma once

/**
 * @file zeta.hpp
 * @brief The generalized weighted zeta function of a digraph: the two-arc
 *        weight θ, the edge matrix and its H/J/K/L factorization, the
 *        Hashimoto and Ihara determinant expressions, and weight presets.
 *
 * θ(a, a') = τ(a')·[h(a) = t(a')] − υ(a')·[a⁻¹ = a'], the second term
 * dropped when a has no inverse.
 */

#include "gzeta/digraph.hpp"
#include "gzeta/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gzeta {

/// τ and υ, indexed by arc index.
struct WeightScheme {
    std::vector<Rational> tau;
    std::vector<Rational> upsilon;

    static WeightScheme uniform(std::size_t arc_count, const Rational& tau, const Rational& upsilon) {
        return {std::vector<Rational>(arc_count, tau), std::vector<Rational>(arc_count, upsilon)};
    }
};

/// Builds a scheme from id-keyed maps; arcs absent from a map get `fallback`.
inline WeightScheme weights_from_maps(const Digraph& d, const std::map<std::string, Rational>& tau,
                                      const std::map<std::string, Rational>& upsilon, const Rational& fallback = 1) {
    for (const auto* m : {&tau, &upsilon})
        for (const auto& [id, _] : *m) d.index_of(id);
    WeightScheme w = WeightScheme::uniform(d.arc_count(), fallback, fallback);
    for (ArcIndex i = 0; i < d.arc_count(); ++i) {
        if (auto it = tau.find(d.arc(i).id); it != tau.end()) w.tau[i] = it->second;
        if (auto it = upsilon.find(d.arc(i).id); it != upsilon.end()) w.upsilon[i] = it->second;
    }
    return w;
}

/**
 * A digraph together with everything θ depends on. Construction classifies
 * the arcs and fixes the block arc order used by every |A|-indexed matrix:
 * each a ∈ A(1) followed by a⁻¹, then A(2), then A^x, each in input order.
 */
class WeightedDigraph {
public:
    WeightedDigraph(Digraph graph, InversePairing pairing, WeightScheme weights)
        : graph_(std::move(graph)), pairing_(std::move(pairing)), weights_(std::move(weights)) {
        if (weights_.tau.size() != graph_.arc_count() || weights_.upsilon.size() != graph_.arc_count())
            throw std::invalid_argument("weight scheme does not cover every arc");
        classes_ = classify_arcs(graph_, pairing_);
        for (ArcIndex a : classes_.a1) {
            order_.push_back(a);
            order_.push_back(*pairing_.inverse_of(a));
        }
        for (ArcIndex a : classes_.a2) order_.push_back(a);
        for (ArcIndex a : classes_.a_cross()) order_.push_back(a);
        position_.assign(graph_.arc_count(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
    }

    const Digraph& graph() const { return graph_; }
    const InversePairing& pairing() const { return pairing_; }
    const WeightScheme& weights() const { return weights_; }
    const ArcClassification& classes() const { return classes_; }
    std::size_t arc_count() const { return graph_.arc_count(); }
    std::size_t vertex_count() const { return graph_.vertex_count(); }

    const Rational& tau(ArcIndex a) const { return weights_.tau[a]; }
    const Rational& upsilon(ArcIndex a) const { return weights_.upsilon[a]; }

    /// Arc indices in block order; row/column i of M, H, J, K, L is arc block_order()[i].
    const std::vector<ArcIndex>& block_order() const { return order_; }
    std::size_t position(ArcIndex a) const { return position_.at(a); }

private:
    Digraph graph_;
    InversePairing pairing_;
    WeightScheme weights_;
    ArcClassification classes_;
    std::vector<ArcIndex> order_;
    std::vector<std::size_t> position_;
};

inline WeightedDigraph make_weighted(const Digraph& d, const WeightScheme& w,
                                     const std::vector<std::pair<std::string, std::string>>& user_pairs = {}) {
    return {d, canonical_inverse_pairing(d, user_pairs), w};
}

inline Rational theta(const WeightedDigraph& wd, ArcIndex a, ArcIndex b) {
    const Digraph& d = wd.graph();
    Rational value = 0;
    if (d.arc(a).head == d.arc(b).tail) value += wd.tau(b);
    if (wd.pairing().inverse_of(a) == b) value -= wd.upsilon(b);
    return value;
}

inline Rational theta(const WeightedDigraph& wd, const std::string& a, const std::string& b) {
    return theta(wd, wd.graph().index_of(a), wd.graph().index_of(b));
}

/// M = (θ(a, a')) in block order.
inline ScalarMatrix edge_matrix(const WeightedDigraph& wd) {
    const auto& order = wd.block_order();
    const std::size_t n = order.size();
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = theta(wd, order[i], order[j]);
    return m;
}

struct HjklMatrices {
    ScalarMatrix h; // |A|x|A|, τ(a')[h(a) = t(a')]
    ScalarMatrix j; // |A|x|A|, υ(a')[a⁻¹ = a']
    ScalarMatrix k; // |A|x|V|, [h(a) = v]
    ScalarMatrix l; // |V|x|A|, τ(a')[u = t(a')]
};

inline HjklMatrices hjkl_matrices(const WeightedDigraph& wd) {
    const Digraph& d = wd.graph();
    const auto& order = wd.block_order();
    const std::size_t na = order.size(), nv = d.vertex_count();
    HjklMatrices r{ScalarMatrix(na, na), ScalarMatrix(na, na), ScalarMatrix(na, nv), ScalarMatrix(nv, na)};
    for (std::size_t i = 0; i < na; ++i) {
        const Arc& a = d.arc(order[i]);
        for (std::size_t j = 0; j < na; ++j) {
            const ArcIndex b = order[j];
            if (a.head == d.arc(b).tail) r.h(i, j) = wd.tau(b);
            if (wd.pairing().inverse_of(order[i]) == b) r.j(i, j) = wd.upsilon(b);
        }
        r.k(i, a.head - 1) = 1;
        r.l(a.tail - 1, i) = wd.tau(order[i]);
    }
    return r;
}

/// c_a(t): 1 − υ(a)υ(a⁻¹)t² on A(1) ∪ A(-1), 1 + υ(a)t on loops, 1 otherwise.
inline Polynomial c_factor(const WeightedDigraph& wd, ArcIndex a) {
    switch (wd.classes().class_of.at(a)) {
    case ArcClass::forward:
    case ArcClass::inverse:
        return Polynomial{1, 0, -(wd.upsilon(a) * wd.upsilon(*wd.pairing().inverse_of(a)))};
    case ArcClass::loop:
        return Polynomial{1, wd.upsilon(a)};
    default:
        return Polynomial(1);
    }
}

inline Polynomial c_factor(const WeightedDigraph& wd, const std::string& a) {
    return c_factor(wd, wd.graph().index_of(a));
}

/// A_Δ: a_uv = Σ_{a ∈ A_uv} τ(a)/c_a(t).
inline RatFunMatrix weighted_adjacency(const WeightedDigraph& wd) {
    const std::size_t n = wd.vertex_count();
    RatFunMatrix m(n, n);
    for (ArcIndex a = 0; a < wd.arc_count(); ++a) {
        const Arc& arc = wd.graph().arc(a);
        m(arc.tail - 1, arc.head - 1) += RationalFunction(Polynomial(wd.tau(a)), c_factor(wd, a));
    }
    return m;
}

/**
 * B_Δ: diagonal, b_uu = Σ τ(a)υ(a⁻¹)/c_a(t) over the non-loop arcs with
 * inverse that leave u, i.e. (A(1) ∪ A(-1)) ∩ A_u*.
 */
inline RatFunMatrix weighted_backtrack(const WeightedDigraph& wd) {
    const std::size_t n = wd.vertex_count();
    RatFunMatrix m(n, n);
    for (ArcIndex a = 0; a < wd.arc_count(); ++a) {
        const ArcClass c = wd.classes().class_of[a];
        if (c != ArcClass::forward && c != ArcClass::inverse) continue;
        const Vertex u = wd.graph().arc(a).tail;
        const Rational w = wd.tau(a) * wd.upsilon(*wd.pairing().inverse_of(a));
        m(u - 1, u - 1) += RationalFunction(Polynomial(w), c_factor(wd, a));
    }
    return m;
}

/// det(I + tJ), evaluated block by block over the direct sum of J(a), a ∉ A(-1).
inline Polynomial j_block_determinant(const WeightedDigraph& wd) {
    const HjklMatrices mats = hjkl_matrices(wd);
    const auto& order = wd.block_order();
    Polynomial det(1);
    std::size_t i = 0;
    while (i < order.size()) {
        const std::size_t width = wd.classes().class_of[order[i]] == ArcClass::forward ? 2 : 1;
        PolyMatrix block(width, width);
        for (std::size_t r = 0; r < width; ++r)
            for (std::size_t c = 0; c < width; ++c)
                block(r, c) = Polynomial{r == c ? Rational(1) : Rational(0), mats.j(i + r, i + c)};
        det *= determinant(std::move(block));
        i += width;
    }
    return det;
}

/// I − tM as a polynomial matrix.
inline PolyMatrix one_minus_t(const ScalarMatrix& m) {
    PolyMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Polynomial{i == j ? Rational(1) : Rational(0), -m(i, j)};
    return r;
}

/// Z = 1/det(I − tM).
inline RationalFunction hashimoto_zeta(const WeightedDigraph& wd) {
    return RationalFunction(Polynomial(1), determinant(one_minus_t(edge_matrix(wd))));
}

struct IharaResult {
    RationalFunction zeta;
    Polynomial j_determinant;        // det(I + tJ)
    RationalFunction vertex_determinant; // det(I − tA_Δ + t²B_Δ)
};

/// I − tA + t²B over the vertices.
inline RatFunMatrix vertex_matrix(const RatFunMatrix& adjacency, const RatFunMatrix& backtrack) {
    const std::size_t n = adjacency.rows();
    const RationalFunction t(Polynomial::t()), t2(Polynomial::monomial(1, 2));
    RatFunMatrix r = RatFunMatrix::identity(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) r(u, v) += t2 * backtrack(u, v) - t * adjacency(u, v);
    return r;
}

/// Z = 1/(det(I + tJ) · det(I − tA_Δ + t²B_Δ)).
inline IharaResult ihara_zeta(const WeightedDigraph& wd) {
    Polynomial jdet = j_block_determinant(wd);
    RationalFunction vdet = determinant(vertex_matrix(weighted_adjacency(wd), weighted_backtrack(wd)));
    RationalFunction zeta = (RationalFunction(jdet) * vdet).inverse();
    return {std::move(zeta), std::move(jdet), std::move(vdet)};
}

/// N_1..N_count as traces of successive powers of M.
inline std::vector<Rational> n_m_traces(const WeightedDigraph& wd, std::size_t count) {
    const ScalarMatrix m = edge_matrix(wd);
    std::vector<Rational> out;
    ScalarMatrix p = m;
    for (std::size_t k = 1; k <= count; ++k) {
        if (k > 1) p = p * m;
        out.push_back(m.rows() ? trace(p) : Rational(0));
    }
    return out;
}

/// N_m(θ) = tr(M^m).
inline Rational n_m_trace(const WeightedDigraph& wd, std::size_t m) {
    if (m == 0) throw std::invalid_argument("period must be positive");
    if (wd.arc_count() == 0) return 0;
    return trace_power(edge_matrix(wd), m);
}

/// exp(Σ_{m ≤ order} N_m t^m / m), truncated at t^order.
inline TruncatedSeries exp_expression_series(const WeightedDigraph& wd, std::size_t order) {
    if (order == 0) throw std::invalid_argument("order must be positive");
    const auto n = n_m_traces(wd, order);
    TruncatedSeries s(order);
    for (std::size_t m = 1; m <= order; ++m) s[m] = n[m - 1] / static_cast<long>(m);
    return series_exp(s);
}

struct ZetaReport {
    RationalFunction hashimoto;
    RationalFunction ihara;
    Polynomial j_determinant;
    RationalFunction vertex_determinant;
    TruncatedSeries exp_series;
    TruncatedSeries euler_series; // filled by the caller when prime enumeration is feasible
    std::size_t order = kDefaultSeriesOrder;
};

enum class Preset { ihara, bowen_lanford, sato, mizuno_sato, bartholdi };

inline std::optional<Preset> parse_preset(const std::string& name) {
    static const std::map<std::string, Preset> names{{"ihara", Preset::ihara},
                                                     {"bowen-lanford", Preset::bowen_lanford},
                                                     {"sato", Preset::sato},
                                                     {"mizuno-sato", Preset::mizuno_sato},
                                                     {"bartholdi", Preset::bartholdi}};
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

/**
 * Weight scheme of a named specialization.
 *   ihara          τ = υ = 1
 *   bowen-lanford  τ = 1, υ = 0
 *   sato           τ = tau (default 1), υ = 0
 *   mizuno-sato    τ = υ = tau (default 1)
 *   bartholdi      τ = 1, υ = 1 − q (q required)
 */
inline WeightScheme preset_weights(const Digraph& d, Preset preset, const std::optional<Rational>& q = std::nullopt,
                                   const std::optional<std::vector<Rational>>& tau = std::nullopt) {
    const std::size_t n = d.arc_count();
    if (tau && tau->size() != n) throw std::invalid_argument("tau map does not cover every arc");
    const std::vector<Rational> user_tau = tau ? *tau : std::vector<Rational>(n, Rational(1));
    switch (preset) {
    case Preset::ihara: return WeightScheme::uniform(n, 1, 1);
    case Preset::bowen_lanford: return WeightScheme::uniform(n, 1, 0);
    case Preset::sato: return {user_tau, std::vector<Rational>(n, Rational(0))};
    case Preset::mizuno_sato: return {user_tau, user_tau};
    case Preset::bartholdi:
        if (!q) throw std::invalid_argument("bartholdi preset requires q");
        return WeightScheme::uniform(n, 1, 1 - *q);
    }
    throw std::invalid_argument("unknown preset");
}

} // namespace gzeta
