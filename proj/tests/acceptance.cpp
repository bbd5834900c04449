// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact equalities of rationals, polynomials or rational functions.

#include "fixtures.hpp"
#include "gzeta/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

using namespace gzeta;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }
};

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(GZETA_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing data file " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polynomial quad(const Rational& x) { return Polynomial{1, 0, -x}; }

WeightedDigraph symmetric_ihara(const UndirectedGraph& g) {
    auto [d, p] = symmetrize(g);
    WeightScheme w = WeightScheme::uniform(d.arc_count(), 1, 1);
    return {std::move(d), std::move(p), std::move(w)};
}

/// The fixed digraphs plus a seeded random batch used by criteria 5 and 6.
std::vector<WeightedDigraph> suite_digraphs() {
    std::vector<WeightedDigraph> out;
    out.push_back(fixtures::example());
    WeightScheme unit = fixtures::example_weights();
    unit.upsilon.assign(8, Rational(1));
    out.push_back(fixtures::example(unit));
    for (const char* f : {"example.dg", "cycle3.dg", "loop.dg", "two_components.dg", "k4.graph", "path3.graph"})
        out.push_back(cli::load(cli::parse_digraph_file(read_data(f))));
    RandomDigraphGenerator gen(5005);
    for (int k = 0; k < 100; ++k) out.push_back(fixtures::from_instance(gen.next()));
    return out;
}

Outcome criterion1() {
    Outcome o;
    const WeightedDigraph wd = cli::load(cli::parse_digraph_file(read_data("example_weighted.dg")));
    const Digraph& d = wd.graph();
    const ArcClassification& c = wd.classes();
    auto ids = [&](const std::vector<ArcIndex>& arcs) {
        std::vector<std::string> s;
        for (ArcIndex a : arcs) s.push_back(d.arc(a).id);
        return s;
    };
    using Pairs = std::vector<VertexPair>;
    using Ids = std::vector<std::string>;
    o.expect(c.phi1 == Pairs{{1, 2}, {2, 3}}, "Phi(1)");
    o.expect(c.phi2 == Pairs{{1, 1}}, "Phi(2)");
    o.expect(c.phi3 == Pairs{{1, 3}}, "Phi(3)");
    o.expect(ids(c.a1) == Ids{"a1", "a4"}, "A(1)");
    o.expect(ids(c.a_inv) == Ids{"a2", "a5"}, "A(-1)");
    o.expect(ids(c.a1_bar) == Ids{"a3"}, "A(1)bar");
    o.expect(ids(c.a2) == Ids{"a7", "a8"}, "A(2)");
    o.expect(ids(c.a3) == Ids{"a6"}, "A(3)");
    for (long i = 1; i <= 8; ++i) {
        const ArcIndex a = d.index_of("a" + std::to_string(i));
        o.expect(wd.tau(a) == i && wd.upsilon(a) == Rational(1, i), "weights of a" + std::to_string(i));
    }

    // displayed matrices with τ(a_i) = i, υ(a_i) = 1/i
    using RF = RationalFunction;
    const RF c12(1, quad(Rational(1, 2))), c45(1, quad(Rational(1, 20)));
    RatFunMatrix a_want(3, 3), b_want(3, 3);
    a_want(0, 0) = RF(7, Polynomial{1, Rational(1, 7)}) + RF(8, Polynomial{1, Rational(1, 8)});
    a_want(0, 1) = c12;
    a_want(1, 0) = RF(2) * c12 + RF(3);
    a_want(1, 2) = RF(4) * c45;
    a_want(2, 0) = RF(6);
    a_want(2, 1) = RF(5) * c45;
    b_want(0, 0) = RF(Rational(1, 2)) * c12;
    b_want(1, 1) = RF(2) * c12 + RF(Rational(4, 5)) * c45;
    b_want(2, 2) = RF(Rational(5, 4)) * c45;
    o.expect(weighted_adjacency(wd) == a_want, "A_Delta entries");
    o.expect(weighted_backtrack(wd) == b_want, "B_Delta entries");
    if (o.ok) o.detail = "classification and A/B entries match";
    return o;
}

Outcome criterion2() {
    Outcome o;
    RandomDigraphGenerator gen(2002);
    std::size_t zero_upsilon = 0, loops = 0, multi = 0;
    for (int k = 1; k <= 200; ++k) {
        const RandomInstance inst = gen.next();
        const WeightedDigraph wd = fixtures::from_instance(inst);
        for (const auto& u : inst.weights.upsilon) zero_upsilon += u == 0;
        for (const Arc& a : inst.graph.arcs()) {
            loops += a.is_loop();
            multi += inst.graph.arcs_between(a.tail, a.head).size() > 1;
        }
        if (!(hashimoto_zeta(wd) == ihara_zeta(wd).zeta)) o.fail("trial " + std::to_string(k));
    }
    if (o.ok)
        o.detail = "200/200 equal (" + std::to_string(loops) + " loops, " + std::to_string(multi) +
                   " parallel arcs, " + std::to_string(zero_upsilon) + " arcs with upsilon=0)";
    return o;
}

Outcome criterion3() {
    Outcome o;
    RandomDigraphParams params;
    params.max_arcs = 8;
    RandomDigraphGenerator gen(3003, params);
    for (int k = 1; k <= 50; ++k) {
        const RandomInstance inst = gen.next();
        const WeightedDigraph wd = fixtures::from_instance(inst);
        const WeightedDigraph ih(inst.graph, wd.pairing(), WeightScheme::uniform(inst.graph.arc_count(), 1, 1));
        const auto traces = n_m_traces(wd, 6), ih_traces = n_m_traces(ih, 6);
        for (std::size_t m = 1; m <= 6; ++m) {
            const std::string where = "trial " + std::to_string(k) + " m=" + std::to_string(m);
            o.expect(traces[m - 1] == n_m_bruteforce(wd, m), where);
            o.expect(ih_traces[m - 1] == n_m_bruteforce(ih, m), where + " (Ihara)");
            o.expect(ih_traces[m - 1] == Rational(count_reduced_closed_paths(inst.graph, wd.pairing(), m)),
                     where + " (reduced count)");
        }
    }
    if (o.ok) o.detail = "50 digraphs, m = 1..6";
    return o;
}

Outcome criterion4() {
    Outcome o;
    // Prime enumeration through length 10 must stay feasible, so instances
    // with too many length-10 walks are skipped and drawn again.
    const Integer walk_budget = 2'000'000;
    RandomDigraphGenerator gen(4004);
    int accepted = 0, skipped = 0;
    while (accepted < 20) {
        const RandomInstance inst = gen.next();
        if (count_walks(inst.graph, 10) > walk_budget) {
            ++skipped;
            continue;
        }
        ++accepted;
        const WeightedDigraph wd = fixtures::from_instance(inst);
        const TruncatedSeries h = series_from_ratfun(hashimoto_zeta(wd), 10);
        o.expect(exp_expression_series(wd, 10) == h, "EXP, trial " + std::to_string(accepted));
        o.expect(euler_product_series(wd, 10) == h, "EULER, trial " + std::to_string(accepted));
    }
    if (o.ok) o.detail = "20 digraphs through t^10 (" + std::to_string(skipped) + " too large to enumerate skipped)";
    return o;
}

Outcome criterion5(const std::vector<WeightedDigraph>& suite) {
    Outcome o;
    for (std::size_t k = 0; k < suite.size(); ++k) {
        const WeightedDigraph& wd = suite[k];
        Polynomial prod(1);
        for (ArcIndex a = 0; a < wd.arc_count(); ++a)
            if (wd.classes().class_of[a] != ArcClass::inverse) prod *= c_factor(wd, a);
        const Polynomial det = j_block_determinant(wd);
        o.expect(det == prod, "suite digraph " + std::to_string(k));
        // and the full |A| x |A| determinant of I + tJ
        o.expect(det == determinant(one_minus_t(-hjkl_matrices(wd).j)), "full det, suite digraph " + std::to_string(k));
    }
    o.expect(j_block_determinant(suite[1]) == quad(1).pow(2) * Polynomial{1, 1}.pow(2), "Example with upsilon = 1");
    if (o.ok) o.detail = std::to_string(suite.size()) + " digraphs; Example upsilon=1 gives (1-t^2)^2(1+t)^2";
    return o;
}

Outcome criterion6(const std::vector<WeightedDigraph>& suite) {
    Outcome o;
    for (std::size_t k = 0; k < suite.size(); ++k) {
        const CheckReport r = proof_identity_check(suite[k]);
        for (const auto& c : r.checks)
            if (c.status != CheckStatus::pass) o.fail("suite digraph " + std::to_string(k) + ": " + c.name);
    }
    if (o.ok) o.detail = std::to_string(suite.size()) + " digraphs, all proof-step identities";
    return o;
}

Outcome criterion7() {
    Outcome o;
    const WeightedDigraph k4 = symmetric_ihara({4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}});
    const Polynomial want = quad(1).pow(2) * Polynomial{1, -1} * Polynomial{1, -2} * Polynomial{1, 1, 2}.pow(3);
    const RationalFunction h = hashimoto_zeta(k4);
    o.expect(h.num() == Polynomial(1) && h.den() == want, "K4 Hashimoto determinant");
    o.expect(ihara_zeta(k4).zeta == h, "K4 Ihara expression");

    RandomDigraphGenerator gen(7007);
    for (int k = 1; k <= 10; ++k) {
        const UndirectedGraph g = gen.next_simple_graph();
        const auto [adj, deg] = adjacency_and_degree(g);
        const std::size_t n = g.vertex_count;
        PolyMatrix m(n, n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const Rational id = u == v ? 1 : 0;
                m(u, v) = Polynomial{id, -adj(u, v), deg(u, v) - id};
            }
        RationalFunction bass(determinant(m));
        const long excess = static_cast<long>(g.edges.size()) - static_cast<long>(n);
        for (long e = 0; e < std::labs(excess); ++e)
            bass = excess > 0 ? bass * RationalFunction(quad(1)) : bass / RationalFunction(quad(1));
        o.expect(hashimoto_zeta(symmetric_ihara(g)).inverse() == bass, "Bass form, graph " + std::to_string(k));
    }
    if (o.ok) o.detail = "K4 factors and Bass form on 10 simple graphs";
    return o;
}

Outcome criterion8() {
    Outcome o;
    RandomDigraphGenerator gen(8008);
    for (int k = 1; k <= 10; ++k) {
        const RandomInstance x = gen.next(), y = gen.next();
        const std::string tag = "pair " + std::to_string(k);

        // Bartholdi at q = 0 against Ihara weights
        const auto px = canonical_inverse_pairing(x.graph);
        const WeightedDigraph bq(x.graph, px, preset_weights(x.graph, Preset::bartholdi, Rational(0)));
        const WeightedDigraph ih(x.graph, px, preset_weights(x.graph, Preset::ihara));
        o.expect(ihara_zeta(bq).zeta == ihara_zeta(ih).zeta && hashimoto_zeta(bq) == hashimoto_zeta(ih),
                 "Bartholdi q=0, " + tag);

        // υ ≡ 0: factors 1 and det(I − tA_Δ)
        WeightScheme w0 = x.weights;
        w0.upsilon.assign(x.graph.arc_count(), Rational(0));
        const WeightedDigraph z(x.graph, px, w0);
        ScalarMatrix a(z.vertex_count(), z.vertex_count());
        for (ArcIndex i = 0; i < z.arc_count(); ++i) a(z.graph().arc(i).tail - 1, z.graph().arc(i).head - 1) += z.tau(i);
        const IharaResult zr = ihara_zeta(z);
        o.expect(zr.j_determinant == Polynomial(1), "upsilon=0 det(I+tJ), " + tag);
        o.expect(zr.vertex_determinant == RationalFunction(determinant(one_minus_t(a))), "upsilon=0 vertex factor, " + tag);
        o.expect(zr.zeta == hashimoto_zeta(z), "upsilon=0 main theorem, " + tag);

        // disjoint-union multiplicativity
        const WeightedDigraph wx = fixtures::from_instance(x), wy = fixtures::from_instance(y);
        auto [d, p] = disjoint_union(x.graph, wx.pairing(), y.graph, wy.pairing());
        WeightScheme w = x.weights;
        w.tau.insert(w.tau.end(), y.weights.tau.begin(), y.weights.tau.end());
        w.upsilon.insert(w.upsilon.end(), y.weights.upsilon.begin(), y.weights.upsilon.end());
        const WeightedDigraph u(std::move(d), std::move(p), std::move(w));
        o.expect(hashimoto_zeta(u) == hashimoto_zeta(wx) * hashimoto_zeta(wy), "union Hashimoto, " + tag);
        o.expect(ihara_zeta(u).zeta == ihara_zeta(wx).zeta * ihara_zeta(wy).zeta, "union Ihara, " + tag);
    }
    if (o.ok) o.detail = "Bartholdi q=0, upsilon=0 factors, 10 disjoint unions";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::optional<double> limit_seconds;
        std::function<Outcome()> run;
    };
    std::optional<std::vector<WeightedDigraph>> suite;
    auto get_suite = [&]() -> const std::vector<WeightedDigraph>& {
        if (!suite) suite = suite_digraphs();
        return *suite;
    };
    const std::vector<Criterion> criteria{
        {1, "Example classification and A/B matrices", 1.0, criterion1},
        {2, "main theorem on 200 random digraphs", 60.0, criterion2},
        {3, "N_m trace = brute force = reduced count", 60.0, criterion3},
        {4, "EXP = EULER = HASHIMOTO through t^10", std::nullopt, criterion4},
        {5, "block determinant of I + tJ", std::nullopt, [&] { return criterion5(get_suite()); }},
        {6, "proof-step identities", std::nullopt, [&] { return criterion6(get_suite()); }},
        {7, "K4 and Bass form", 10.0, criterion7},
        {8, "Bartholdi, upsilon = 0, disjoint union", std::nullopt, criterion8},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds && secs >= *c.limit_seconds)
            o.fail("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(*c.limit_seconds) + " s");
        if (!o.ok) ++failures;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << secs;
        std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail
                  << "; " << time.str() << " s]" << std::endl;
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
