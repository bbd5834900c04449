#pragma once

/**
 * @file digraph.hpp
 * @brief Finite digraphs with multi-arcs and multi-loops, inverse-arc
 *        pairings, and the five-way arc classification.
 *
 * Vertices are 1..n. Arcs carry a user token as id and are otherwise
 * addressed by their position in input order (the "arc index"); input order
 * matters because it seeds the canonical pairing.
 *
 * Inverse arcs: for every pair of distinct vertices u, v with arcs in both
 * directions, the smaller of A_uv, A_vu (ties go to the side whose tail is
 * the smaller vertex) is injected into the other one. The relation is an
 * involution, every loop is its own inverse, and arcs on the larger side
 * left outside the image have no inverse.
 */

#include "gzeta/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gzeta {

using Vertex = std::size_t;
using ArcIndex = std::size_t;
using VertexPair = std::pair<Vertex, Vertex>;

struct Arc {
    std::string id;
    Vertex tail = 0;
    Vertex head = 0;

    bool is_loop() const { return tail == head; }
    friend bool operator==(const Arc&, const Arc&) = default;
};

class Digraph {
public:
    Digraph() = default;

    /// Validates ids (unique, nonempty) and endpoints (in 1..vertex_count).
    Digraph(std::size_t vertex_count, std::vector<Arc> arcs) : n_(vertex_count), arcs_(std::move(arcs)) {
        for (ArcIndex i = 0; i < arcs_.size(); ++i) {
            const Arc& a = arcs_[i];
            if (a.id.empty()) throw std::invalid_argument("empty arc id");
            if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_)
                throw std::out_of_range("arc '" + a.id + "' has an endpoint outside 1.." + std::to_string(n_));
            if (!index_.emplace(a.id, i).second) throw std::invalid_argument("duplicate arc id '" + a.id + "'");
        }
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(ArcIndex i) const { return arcs_.at(i); }

    std::optional<ArcIndex> find(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    ArcIndex index_of(const std::string& id) const {
        auto i = find(id);
        if (!i) throw std::invalid_argument("unknown arc '" + id + "'");
        return *i;
    }

    /// A_uv in input order.
    std::vector<ArcIndex> arcs_between(Vertex u, Vertex v) const {
        std::vector<ArcIndex> out;
        for (ArcIndex i = 0; i < arcs_.size(); ++i)
            if (arcs_[i].tail == u && arcs_[i].head == v) out.push_back(i);
        return out;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::unordered_map<std::string, ArcIndex> index_;
};

/// Involutive partial map on arc indices.
class InversePairing {
public:
    InversePairing() = default;
    explicit InversePairing(std::size_t arc_count) : partner_(arc_count) {}

    std::size_t size() const { return partner_.size(); }
    std::optional<ArcIndex> inverse_of(ArcIndex a) const { return partner_.at(a); }
    bool has_inverse(ArcIndex a) const { return partner_.at(a).has_value(); }

    /// Links a and b both ways (a == b for a self-inverse loop).
    void link(ArcIndex a, ArcIndex b) {
        partner_.at(a) = b;
        partner_.at(b) = a;
    }

    /// Pairs as (a, a^-1) with a <= a^-1, each once, sorted.
    std::vector<std::pair<ArcIndex, ArcIndex>> pairs() const {
        std::vector<std::pair<ArcIndex, ArcIndex>> out;
        for (ArcIndex a = 0; a < partner_.size(); ++a)
            if (partner_[a] && a <= *partner_[a]) out.emplace_back(a, *partner_[a]);
        return out;
    }

    friend bool operator==(const InversePairing&, const InversePairing&) = default;

private:
    std::vector<std::optional<ArcIndex>> partner_;
};

/// Is (u, v) the designated direction of the unordered pair {u, v}, i.e. u ⪯ v with the tie-break?
inline bool is_designated(std::size_t count_uv, std::size_t count_vu, Vertex u, Vertex v) {
    if (count_uv != count_vu) return count_uv < count_vu;
    return u < v;
}

/**
 * Completes user-specified inverse pairs (by arc id) into a full pairing:
 * loops self-paired, and for each {u, v} the designated side injected into
 * the other by matching still-unpaired arcs in input order.
 */
inline InversePairing canonical_inverse_pairing(const Digraph& d,
                                                const std::vector<std::pair<std::string, std::string>>& user_pairs = {}) {
    InversePairing p(d.arc_count());
    for (const auto& [x_id, y_id] : user_pairs) {
        const ArcIndex x = d.index_of(x_id), y = d.index_of(y_id);
        const Arc &ax = d.arc(x), &ay = d.arc(y);
        if (ax.tail != ay.head || ax.head != ay.tail)
            throw std::invalid_argument("inverse must join opposite arcs ('" + x_id + "', '" + y_id + "')");
        if (ax.is_loop() && x != y)
            throw std::invalid_argument("pairing not extendable: loops are self-inverse ('" + x_id + "', '" + y_id + "')");
        for (ArcIndex z : {x, y}) {
            auto cur = p.inverse_of(z);
            if (cur && *cur != (z == x ? y : x))
                throw std::invalid_argument("pairing not extendable: arc '" + d.arc(z).id + "' paired twice");
        }
        p.link(x, y);
    }
    for (ArcIndex i = 0; i < d.arc_count(); ++i)
        if (d.arc(i).is_loop()) p.link(i, i);

    const std::size_t n = d.vertex_count();
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            auto uv = d.arcs_between(u, v), vu = d.arcs_between(v, u);
            if (uv.empty() || vu.empty()) continue;
            if (!is_designated(uv.size(), vu.size(), u, v)) std::swap(uv, vu);
            std::vector<ArcIndex> free_big;
            for (ArcIndex b : vu)
                if (!p.has_inverse(b)) free_big.push_back(b);
            std::size_t next = 0;
            for (ArcIndex a : uv) {
                if (p.has_inverse(a)) continue;
                if (next == free_big.size())
                    throw std::invalid_argument("pairing not extendable to a total injection from the smaller side");
                p.link(a, free_big[next++]);
            }
        }
    return p;
}

enum class ArcClass { forward, inverse, forward_bar, loop, unmatched };

inline const char* class_name(ArcClass c) {
    switch (c) {
    case ArcClass::forward: return "A(1)";
    case ArcClass::inverse: return "A(-1)";
    case ArcClass::forward_bar: return "A(1)bar";
    case ArcClass::loop: return "A(2)";
    case ArcClass::unmatched: return "A(3)";
    }
    return "?";
}

/**
 * The partition A = A(1) ⊔ A(-1) ⊔ A(1)bar ⊔ A(2) ⊔ A(3) together with the
 * vertex-pair sets it is built from. Arc lists are in input order, pair
 * lists sorted.
 */
struct ArcClassification {
    std::vector<VertexPair> phi1, phi2, phi3;
    std::vector<ArcIndex> a1, a_inv, a1_bar, a2, a3;
    std::vector<ArcClass> class_of; // indexed by arc

    /// A^x: arcs without inverse.
    std::vector<ArcIndex> a_cross() const {
        std::vector<ArcIndex> out;
        for (ArcIndex i = 0; i < class_of.size(); ++i)
            if (class_of[i] == ArcClass::forward_bar || class_of[i] == ArcClass::unmatched) out.push_back(i);
        return out;
    }
};

inline ArcClassification classify_arcs(const Digraph& d, const InversePairing& p) {
    if (p.size() != d.arc_count()) throw std::invalid_argument("pairing does not match digraph");
    ArcClassification c;
    c.class_of.assign(d.arc_count(), ArcClass::unmatched);
    const std::size_t n = d.vertex_count();
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v) {
            auto uv = d.arcs_between(u, v);
            if (u == v) {
                if (uv.empty()) continue;
                c.phi2.emplace_back(u, u);
                for (ArcIndex a : uv) {
                    if (p.inverse_of(a) != a) throw std::invalid_argument("loop '" + d.arc(a).id + "' must be self-inverse");
                    c.class_of[a] = ArcClass::loop;
                }
                continue;
            }
            auto vu = d.arcs_between(v, u);
            if (uv.empty() && !vu.empty()) {
                c.phi3.emplace_back(u, v);
                continue;
            }
            if (uv.empty() || !is_designated(uv.size(), vu.size(), u, v)) continue;
            c.phi1.emplace_back(u, v);
            for (ArcIndex a : uv) {
                auto inv = p.inverse_of(a);
                if (!inv || d.arc(*inv).tail != v || d.arc(*inv).head != u)
                    throw std::invalid_argument("pairing leaves arc '" + d.arc(a).id + "' of the smaller side without inverse");
                c.class_of[a] = ArcClass::forward;
                c.class_of[*inv] = ArcClass::inverse;
            }
            for (ArcIndex b : vu)
                if (c.class_of[b] != ArcClass::inverse) {
                    if (p.has_inverse(b)) throw std::invalid_argument("arc '" + d.arc(b).id + "' paired outside the injection");
                    c.class_of[b] = ArcClass::forward_bar;
                }
        }
    for (ArcIndex i = 0; i < d.arc_count(); ++i) {
        switch (c.class_of[i]) {
        case ArcClass::forward: c.a1.push_back(i); break;
        case ArcClass::inverse: c.a_inv.push_back(i); break;
        case ArcClass::forward_bar: c.a1_bar.push_back(i); break;
        case ArcClass::loop: c.a2.push_back(i); break;
        case ArcClass::unmatched:
            if (p.has_inverse(i)) throw std::invalid_argument("arc '" + d.arc(i).id + "' has an inverse but no reverse side");
            c.a3.push_back(i);
            break;
        }
    }
    return c;
}

/// Every pair of distinct vertices joined by at least one arc in some direction.
inline bool is_connected(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::vector<bool>> joined(n + 1, std::vector<bool>(n + 1, false));
    for (const Arc& a : d.arcs()) joined[a.tail][a.head] = joined[a.head][a.tail] = true;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (!joined[u][v]) return false;
    return true;
}

struct UndirectedGraph {
    std::size_t vertex_count = 0;
    std::vector<VertexPair> edges; // multiset; {u, u} is a loop

    void validate() const {
        for (auto [u, v] : edges)
            if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
                throw std::out_of_range("edge endpoint outside 1.." + std::to_string(vertex_count));
    }
    bool is_simple() const {
        std::map<VertexPair, int> seen;
        for (auto [u, v] : edges) {
            if (u == v) return false;
            if (++seen[std::minmax(u, v)] > 1) return false;
        }
        return true;
    }
};

/**
 * Symmetric digraph: each edge {u, v} (u != v) becomes the mutually inverse
 * arcs u->v and v->u, each loop a single self-inverse loop. Arc ids are
 * a1, a2, ... in edge order.
 */
inline std::pair<Digraph, InversePairing> symmetrize(const UndirectedGraph& g) {
    g.validate();
    std::vector<Arc> arcs;
    std::vector<std::pair<ArcIndex, ArcIndex>> links;
    auto next_id = [&] { return "a" + std::to_string(arcs.size() + 1); };
    for (auto [u, v] : g.edges) {
        if (u == v) {
            links.emplace_back(arcs.size(), arcs.size());
            arcs.push_back({next_id(), u, u});
            continue;
        }
        const ArcIndex fwd = arcs.size();
        arcs.push_back({next_id(), u, v});
        arcs.push_back({next_id(), v, u});
        links.emplace_back(fwd, fwd + 1);
    }
    Digraph d(g.vertex_count, std::move(arcs));
    InversePairing p(d.arc_count());
    for (auto [a, b] : links) p.link(a, b);
    return {std::move(d), std::move(p)};
}

/// (A_Γ, D_Γ): edge multiplicities and the diagonal degree matrix.
inline std::pair<ScalarMatrix, ScalarMatrix> adjacency_and_degree(const UndirectedGraph& g) {
    g.validate();
    const std::size_t n = g.vertex_count;
    ScalarMatrix adj(n, n), deg(n, n);
    for (auto [u, v] : g.edges) {
        adj(u - 1, v - 1) += 1;
        if (u != v) adj(v - 1, u - 1) += 1;
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) deg(u, u) += adj(u, v);
    return {adj, deg};
}

/// Δ1 ⊔ Δ2 with arc ids prefixed "1." and "2." and vertices of Δ2 shifted.
inline std::pair<Digraph, InversePairing> disjoint_union(const Digraph& d1, const InversePairing& p1,
                                                         const Digraph& d2, const InversePairing& p2) {
    std::vector<Arc> arcs;
    for (const Arc& a : d1.arcs()) arcs.push_back({"1." + a.id, a.tail, a.head});
    const std::size_t shift = d1.vertex_count();
    for (const Arc& a : d2.arcs()) arcs.push_back({"2." + a.id, a.tail + shift, a.head + shift});
    Digraph d(d1.vertex_count() + d2.vertex_count(), std::move(arcs));
    InversePairing p(d.arc_count());
    for (auto [a, b] : p1.pairs()) p.link(a, b);
    for (auto [a, b] : p2.pairs()) p.link(a + d1.arc_count(), b + d1.arc_count());
    return {std::move(d), std::move(p)};
}

} // namespace gzeta
