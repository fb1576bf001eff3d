#include "joinrig/families.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace joinrig;

TEST(Connelly, ValidAndInvalidParameters) {
    EXPECT_EQ(connelly_graph(5, 5, 3), complete_bipartite(5, 5));
    EXPECT_EQ(connelly_graph(6, 9, 4).edge_count(), 54u);
    EXPECT_THROW(connelly_graph(4, 6, 3), InvalidFamily);
    EXPECT_THROW(connelly_graph(5, 4, 3), InvalidFamily);
    EXPECT_THROW(connelly_graph(5, 6, 3), InvalidFamily);
}

TEST(PartialConing, NumberingAndCounts) {
    auto pc = partial_coning_graph(10, 6, 5);
    const auto& g = pc.graph;
    EXPECT_EQ(g.vertex_count(), 16u);
    EXPECT_EQ(g.edge_count(), 66u);
    EXPECT_EQ(pc.structure.extraneous.size(), 6u);
    EXPECT_EQ(pc.structure.left.size(), 10u);
    EXPECT_EQ(pc.structure.right.front(), 10u);
    for (Vertex leaf = 1; leaf <= 6; ++leaf)
        EXPECT_TRUE(g.adjacent(0, leaf));
    for (Vertex other = 7; other < 10; ++other)
        EXPECT_FALSE(g.adjacent(0, other));
    EXPECT_FALSE(join_structure_violation(g, pc.structure));
}

TEST(PartialConing, Errors) {
    EXPECT_THROW(partial_coning_graph(6, 5, 3), InvalidFamily); // d must exceed 3
    EXPECT_THROW(partial_coning_graph(8, 8, 5), InvalidFamily); // a > b
    EXPECT_THROW(partial_coning_graph(11, 5, 5), InvalidFamily); // b >= d+1
    EXPECT_THROW(partial_coning_graph(10, 7, 5), InvalidFamily); // a + b
    EXPECT_NO_THROW(partial_coning_graph(6, 5, 4));
}

TEST(HGraph, Counts) {
    auto h5 = h_graph(5);
    EXPECT_EQ(h5.graph.vertex_count(), 14u);
    EXPECT_EQ(h5.structure.extraneous.size(), 7u);
    EXPECT_EQ(h5.graph.vertex_count() + h5.structure.extraneous.size(), 21u);
    auto h3 = h_graph(3);
    EXPECT_EQ(h3.graph.vertex_count(), 8u);
    EXPECT_EQ(h3.structure.extraneous.size(), 2u);
    EXPECT_EQ(h3.graph.vertex_count() + h3.structure.extraneous.size(), 10u);
    EXPECT_THROW(h_graph(2), InvalidFamily);
    for (std::size_t d = 3; d <= 8; ++d) {
        auto h = h_graph(d);
        EXPECT_EQ(h.graph.vertex_count() + h.structure.extraneous.size(), quadric_dimension(d)) << d;
        EXPECT_TRUE(h.structure.is_balanced(d));
    }
}

TEST(ChainAttachment, Counts) {
    auto g = chain_attachment(5, 3, complete(6));
    EXPECT_EQ(g.vertex_count(), 14u);
    EXPECT_EQ(g.edge_count(), 56u);
    auto g7 = chain_attachment(6, 3, complete(7));
    EXPECT_EQ(g7.vertex_count(), 17u);
    EXPECT_THROW(chain_attachment(5, 2, complete(6)), InvalidFamily);
    EXPECT_THROW(chain_attachment(5, 4, complete(6)), InvalidFamily);
    EXPECT_THROW(chain_attachment(5, 3, complete(5)), InvalidFamily);
}

TEST(ChainAttachment, GeneralFormWithTwoReducesToCanonical) {
    EXPECT_EQ(chain_middle_total(5, 2), 8u);
    EXPECT_EQ(chain_attachment_general(5, 2, 3, complete(6)), chain_attachment(5, 3, complete(6)));
    auto g = chain_attachment_general(6, 3, 4, complete(7));
    // C_{3,4,8,4}: 19 chain vertices, 7 of which are glued into the host
    EXPECT_EQ(g.vertex_count(), 19u);
    EXPECT_THROW(chain_attachment_general(6, 3, 3, complete(7)), InvalidFamily);
    EXPECT_THROW(chain_attachment_general(5, 0, 3, complete(6)), InvalidFamily);
}

TEST(Presets, AllBuildAndAreNamedUniquely) {
    std::set<std::string> names;
    for (const auto& p : presets()) {
        EXPECT_TRUE(names.insert(p.name).second);
        EXPECT_NO_THROW(build_family(p.spec)) << p.name;
    }
    EXPECT_TRUE(find_preset("c3355-outlier"));
    EXPECT_FALSE(find_preset("nope"));
    auto outlier = build_family(find_preset("c3355-outlier")->spec);
    EXPECT_EQ(outlier.vertex_count(), 16u);
}

TEST(FamilyKinds, StringRoundTrip) {
    for (auto k : {FamilyKind::connelly, FamilyKind::partial_coning, FamilyKind::chain_attachment,
                   FamilyKind::chain_attachment_general, FamilyKind::h_graph, FamilyKind::chain_custom})
        EXPECT_EQ(family_kind_from_string(to_string(k)), k);
    EXPECT_FALSE(family_kind_from_string("octahedron"));
}

TEST(Verify, ConnellyK55AllClaimsPass) {
    auto v = verify_family<Fp>({.kind = FamilyKind::connelly, .a = 5, .b = 5, .d = 3});
    EXPECT_TRUE(v.all_pass());
    EXPECT_TRUE(v.report.counterexample_consistent);
    EXPECT_EQ(v.report.qrm_rank, 10u);
}

TEST(Verify, HGraphIsRigid) {
    auto v = verify_family<Fp>({.kind = FamilyKind::h_graph, .d = 6});
    EXPECT_TRUE(v.all_pass());
    EXPECT_TRUE(v.report.glr);
}

TEST(Verify, ChainAttachmentOntoLargerHostPasses) {
    auto v = verify_family<Fp>(find_preset("chain-2354-k7")->spec);
    EXPECT_TRUE(v.all_pass());
    for (const auto& c : v.claims)
        EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

TEST(Verify, ClosedFormChainStress) {
    // stress dimension of C_{2,i,2d-2-i,d-1} attached to K_{d+1} is (i-2)(d-i-1)
    Rng rng(5);
    for (auto [d, i] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 3}, {6, 3}, {6, 4}, {7, 4}}) {
        auto facts = canonical_chain_facts<Fp>(d, {2, i, 2 * d - 2 - i, d - 1}, rng, 2);
        EXPECT_EQ(facts.stress_dim, (i - 2) * (d - i - 1)) << d << "," << i;
    }
}

TEST(FamilyProperty, DeletingARedundantEdgeOfK55StaysNotGgr) {
    Rng rng(6);
    auto g = complete_bipartite(5, 5).without_edge(Edge(0, 5));
    EXPECT_EQ(ggr_certificate<Fp>(g, 3, rng).verdict, GgrVerdict::not_ggr_probable);
}

TEST(FamilyProperty, SandwichBetweenPartialAndFullCone) {
    // Adding a cone edge towards the full cone keeps the Hendrickson
    // conditions and the missing global rigidity certificate.
    auto base = partial_coning_graph(9, 7, 5).graph;
    for (Vertex u : {Vertex{7}, Vertex{8}}) {
        auto g = base.with_edge(Edge(0, u));
        auto rep = hendrickson_report<Fp>(g, 5);
        EXPECT_TRUE(rep.hendrickson_pass) << u;
        EXPECT_EQ(rep.ggr.verdict, GgrVerdict::not_ggr_probable) << u;
    }
}
