#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace gzeta;

namespace {

std::vector<std::string> ids(const Digraph& d, const std::vector<ArcIndex>& arcs) {
    std::vector<std::string> out;
    for (ArcIndex a : arcs) out.push_back(d.arc(a).id);
    return out;
}

using Pairs = std::vector<VertexPair>;
using Ids = std::vector<std::string>;

} // namespace

TEST(Digraph, BuildAndLookup) {
    const Digraph d = fixtures::example_digraph();
    EXPECT_EQ(d.vertex_count(), 3u);
    EXPECT_EQ(d.arc_count(), 8u);
    EXPECT_EQ(d.index_of("a6"), 5u);
    EXPECT_FALSE(d.find("zz"));
    EXPECT_THROW(d.index_of("zz"), std::invalid_argument);
    EXPECT_EQ(d.arcs_between(2, 1), (std::vector<ArcIndex>{1, 2}));
    EXPECT_TRUE(d.arc(6).is_loop());
    EXPECT_FALSE(d.arc(0).is_loop());
}

TEST(Digraph, RejectsBadInput) {
    EXPECT_THROW(Digraph(2, {{"a", 1, 3}}), std::out_of_range);
    EXPECT_THROW(Digraph(2, {{"a", 0, 1}}), std::out_of_range);
    EXPECT_THROW(Digraph(2, {{"a", 1, 2}, {"a", 2, 1}}), std::invalid_argument);
    EXPECT_THROW(Digraph(2, {{"", 1, 2}}), std::invalid_argument);
    EXPECT_NO_THROW(Digraph(0, {}));
}

TEST(InversePairing, ExamplePairing) {
    const Digraph d = fixtures::example_digraph();
    const InversePairing p = canonical_inverse_pairing(d, fixtures::kExamplePairs);
    EXPECT_EQ(p.inverse_of(0), 1u); // a1 <-> a2
    EXPECT_EQ(p.inverse_of(1), 0u);
    EXPECT_FALSE(p.has_inverse(2)); // a3 unmatched
    EXPECT_EQ(p.inverse_of(3), 4u); // a4 <-> a5
    EXPECT_FALSE(p.has_inverse(5)); // a6 one-way
    EXPECT_EQ(p.inverse_of(6), 6u); // loops are self-inverse
    EXPECT_EQ(p.inverse_of(7), 7u);
    // completion in input order reproduces the same pairing without hints
    EXPECT_EQ(canonical_inverse_pairing(d), p);
}

TEST(InversePairing, UserChoiceIsRespected) {
    const Digraph d = fixtures::example_digraph();
    const InversePairing p = canonical_inverse_pairing(d, {{"a3", "a1"}});
    EXPECT_EQ(p.inverse_of(0), 2u);
    EXPECT_FALSE(p.has_inverse(1));
    const auto c = classify_arcs(d, p);
    EXPECT_EQ(ids(d, c.a1_bar), (Ids{"a2"}));
    EXPECT_EQ(ids(d, c.a_inv), (Ids{"a3", "a5"}));
}

TEST(InversePairing, Errors) {
    const Digraph d = fixtures::example_digraph();
    EXPECT_THROW(canonical_inverse_pairing(d, {{"a1", "a4"}}), std::invalid_argument); // not opposite
    EXPECT_THROW(canonical_inverse_pairing(d, {{"a7", "a8"}}), std::invalid_argument); // two loops
    EXPECT_THROW(canonical_inverse_pairing(d, {{"a1", "a2"}, {"a1", "a3"}}), std::invalid_argument);
    EXPECT_THROW(canonical_inverse_pairing(d, {{"a1", "nope"}}), std::invalid_argument);
    // tie at {1,2}: designated side is (1,2), pairing a2 with b1 leaves a1 stranded
    const Digraph tie(2, {{"a1", 1, 2}, {"a2", 1, 2}, {"b1", 2, 1}, {"b2", 2, 1}});
    EXPECT_NO_THROW(canonical_inverse_pairing(tie, {{"a2", "b1"}}));
    const Digraph tie2(2, {{"a1", 1, 2}, {"b1", 2, 1}, {"b2", 2, 1}});
    // a pairing using the larger side's arc twice is impossible; a1 may take either
    EXPECT_EQ(canonical_inverse_pairing(tie2, {{"b2", "a1"}}).inverse_of(0), 2u);
}

TEST(Classification, ExampleSets) {
    const Digraph d = fixtures::example_digraph();
    const auto c = classify_arcs(d, canonical_inverse_pairing(d, fixtures::kExamplePairs));
    EXPECT_EQ(c.phi1, (Pairs{{1, 2}, {2, 3}}));
    EXPECT_EQ(c.phi2, (Pairs{{1, 1}}));
    EXPECT_EQ(c.phi3, (Pairs{{1, 3}}));
    EXPECT_EQ(ids(d, c.a1), (Ids{"a1", "a4"}));
    EXPECT_EQ(ids(d, c.a_inv), (Ids{"a2", "a5"}));
    EXPECT_EQ(ids(d, c.a1_bar), (Ids{"a3"}));
    EXPECT_EQ(ids(d, c.a2), (Ids{"a7", "a8"}));
    EXPECT_EQ(ids(d, c.a3), (Ids{"a6"}));
    EXPECT_EQ(ids(d, c.a_cross()), (Ids{"a3", "a6"}));
    EXPECT_STREQ(class_name(c.class_of[2]), class_name(ArcClass::forward_bar));
}

TEST(Classification, SmallDigraphs) {
    const Digraph cycle(3, {{"x", 1, 2}, {"y", 2, 3}, {"z", 3, 1}});
    const auto c = classify_arcs(cycle, canonical_inverse_pairing(cycle));
    EXPECT_TRUE(c.phi1.empty());
    EXPECT_EQ(c.phi3, (Pairs{{1, 3}, {2, 1}, {3, 2}}));
    EXPECT_EQ(c.a3.size(), 3u);

    const Digraph loop(1, {{"l", 1, 1}});
    const auto cl = classify_arcs(loop, canonical_inverse_pairing(loop));
    EXPECT_EQ(cl.phi2, (Pairs{{1, 1}}));
    EXPECT_EQ(cl.a2, (std::vector<ArcIndex>{0}));

    // the side with fewer arcs is designated even when its tail is larger
    const Digraph skew(2, {{"p", 1, 2}, {"q", 1, 2}, {"r", 2, 1}});
    const auto cs = classify_arcs(skew, canonical_inverse_pairing(skew));
    EXPECT_EQ(cs.phi1, (Pairs{{2, 1}}));
    EXPECT_EQ(ids(skew, cs.a1), (Ids{"r"}));
    EXPECT_EQ(ids(skew, cs.a_inv), (Ids{"p"}));
    EXPECT_EQ(ids(skew, cs.a1_bar), (Ids{"q"}));
}

TEST(Classification, RejectsInconsistentPairings) {
    const Digraph d(2, {{"a", 1, 2}, {"b", 2, 1}, {"l", 1, 1}});
    InversePairing missing(3);
    missing.link(2, 2);
    EXPECT_THROW(classify_arcs(d, missing), std::invalid_argument); // smaller side left unpaired
    InversePairing loose(3);
    loose.link(0, 1);
    EXPECT_THROW(classify_arcs(d, loose), std::invalid_argument); // loop not self-inverse
    EXPECT_THROW(classify_arcs(d, InversePairing(2)), std::invalid_argument);
}

TEST(ClassificationProperty, PartitionAndInvolution) {
    RandomDigraphGenerator gen(101);
    for (int trial = 0; trial < 300; ++trial) {
        const RandomInstance inst = gen.next();
        const Digraph& d = inst.graph;
        const InversePairing p = canonical_inverse_pairing(d);
        const auto c = classify_arcs(d, p);

        std::vector<ArcIndex> all;
        for (const auto* part : {&c.a1, &c.a_inv, &c.a1_bar, &c.a2, &c.a3}) all.insert(all.end(), part->begin(), part->end());
        std::sort(all.begin(), all.end());
        ASSERT_EQ(all.size(), d.arc_count());
        for (ArcIndex i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);

        std::set<ArcIndex> with_inverse;
        for (ArcIndex a = 0; a < d.arc_count(); ++a) {
            if (!p.has_inverse(a)) continue;
            with_inverse.insert(a);
            const ArcIndex b = *p.inverse_of(a);
            EXPECT_EQ(p.inverse_of(b), a);
            EXPECT_EQ(d.arc(a).tail, d.arc(b).head);
            EXPECT_EQ(d.arc(a).head, d.arc(b).tail);
        }
        std::set<ArcIndex> paired(c.a1.begin(), c.a1.end());
        paired.insert(c.a_inv.begin(), c.a_inv.end());
        paired.insert(c.a2.begin(), c.a2.end());
        EXPECT_EQ(with_inverse, paired);
        for (ArcIndex a : c.a2) EXPECT_TRUE(d.arc(a).is_loop());
        for (ArcIndex a = 0; a < d.arc_count(); ++a)
            if (d.arc(a).is_loop()) {
                EXPECT_EQ(p.inverse_of(a), a);
            }
        // |A(1)| = Σ_{(u,v) ∈ Φ(1)} |A_uv| and |A(1)| = |A(-1)|
        std::size_t expected = 0;
        for (auto [u, v] : c.phi1) expected += d.arcs_between(u, v).size();
        EXPECT_EQ(c.a1.size(), expected);
        EXPECT_EQ(c.a1.size(), c.a_inv.size());
        // determinism
        EXPECT_EQ(canonical_inverse_pairing(d), p);
    }
}

TEST(Symmetrize, CompleteGraph) {
    UndirectedGraph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    const auto [d, p] = symmetrize(k4);
    EXPECT_EQ(d.arc_count(), 12u);
    EXPECT_EQ(p.pairs().size(), 6u);
    const auto c = classify_arcs(d, p);
    EXPECT_EQ(c.a1.size(), 6u);
    EXPECT_TRUE(c.a_cross().empty());
    EXPECT_EQ(d.arc(0).id, "a1");
    EXPECT_EQ(d.arc(1).tail, 2u);
    // the stored pairing agrees with the canonical one
    EXPECT_EQ(canonical_inverse_pairing(d), p);
}

TEST(Symmetrize, LoopsAndErrors) {
    const auto [d, p] = symmetrize(UndirectedGraph{2, {{1, 1}, {1, 2}, {1, 2}}});
    EXPECT_EQ(d.arc_count(), 5u);
    EXPECT_EQ(p.inverse_of(0), 0u);
    EXPECT_TRUE(classify_arcs(d, p).a_cross().empty());
    EXPECT_THROW(symmetrize(UndirectedGraph{2, {{1, 3}}}), std::out_of_range);
}

TEST(SymmetrizeProperty, NoArcsWithoutInverse) {
    RandomDigraphGenerator gen(102);
    for (int trial = 0; trial < 100; ++trial) {
        const UndirectedGraph g = gen.next_simple_graph();
        EXPECT_TRUE(g.is_simple());
        const auto [d, p] = symmetrize(g);
        const auto c = classify_arcs(d, p);
        EXPECT_TRUE(c.a_cross().empty());
        EXPECT_EQ(d.arc_count(), 2 * g.edges.size());
    }
}

TEST(AdjacencyAndDegree, Path) {
    const auto [a, deg] = adjacency_and_degree(UndirectedGraph{3, {{1, 2}, {2, 3}}});
    EXPECT_EQ(a, (ScalarMatrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
    EXPECT_EQ(deg, (ScalarMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
    EXPECT_FALSE((UndirectedGraph{2, {{1, 2}, {2, 1}}}).is_simple());
    EXPECT_FALSE((UndirectedGraph{2, {{1, 1}}}).is_simple());
}

TEST(Connectivity, Examples) {
    EXPECT_TRUE(is_connected(fixtures::example_digraph()));
    EXPECT_FALSE(is_connected(Digraph(3, {{"a", 1, 2}})));
    EXPECT_TRUE(is_connected(Digraph(1, {})));
}

TEST(DisjointUnion, IdsAndShift) {
    const Digraph a(2, {{"x", 1, 2}, {"y", 2, 1}}), b(1, {{"l", 1, 1}});
    const auto [d, p] = disjoint_union(a, canonical_inverse_pairing(a), b, canonical_inverse_pairing(b));
    EXPECT_EQ(d.vertex_count(), 3u);
    EXPECT_EQ(d.arc(2).id, "2.l");
    EXPECT_EQ(d.arc(2).tail, 3u);
    EXPECT_EQ(p.inverse_of(0), 1u);
    EXPECT_EQ(p.inverse_of(2), 2u);
    EXPECT_EQ(canonical_inverse_pairing(d), p);
}
