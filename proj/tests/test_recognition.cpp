#include "joinrig/families.hpp"
#include "joinrig/recognition.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace joinrig;

namespace {

std::size_t induced_edges(const Graph& g, const std::vector<Vertex>& cls) {
    std::size_t k = 0;
    for (auto a : cls)
        for (auto b : cls)
            k += a < b && g.adjacent(a, b);
    return k;
}

/// Random join of two random graphs, balanced for d, with shuffled labels.
Graph random_shuffled_join(std::size_t d, std::size_t n, Rng& rng) {
    const auto s = std::uniform_int_distribution<std::size_t>(d + 1, n - d - 1)(rng);
    auto left = oracle::random_graph(s, 1, 3, rng);
    auto right = oracle::random_graph(n - s, 1, 3, rng);
    auto g = join(left, right).graph;
    return g.relabelled(oracle::random_permutation(n, rng));
}

} // namespace

TEST(Recognition, CompleteBipartite) {
    auto js = recognize_balanced_join(complete_bipartite(4, 3), 2);
    ASSERT_TRUE(js);
    std::vector<std::size_t> sizes{js->left.size(), js->right.size()};
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 4}));
    EXPECT_TRUE(js->extraneous.empty());
    EXPECT_FALSE(recognize_balanced_join(complete_bipartite(4, 3), 3));
}

TEST(Recognition, CompleteGraphIsNotBalancedJoin) {
    // K_7 has only singleton complement components, so d=2 works but d=3 cannot
    EXPECT_FALSE(recognize_balanced_join(complete(7), 3));
    auto js = recognize_balanced_join(complete(7), 2);
    ASSERT_TRUE(js);
    EXPECT_EQ(js->left.size(), 3u);
}

TEST(Recognition, ChainAttachmentOntoK6) {
    auto g = chain_attachment(5, 3, complete(6));
    auto js = recognize_balanced_join(g, 5);
    ASSERT_TRUE(js);
    EXPECT_FALSE(join_structure_violation(g, *js));
    EXPECT_EQ(js->left.size(), 7u);
    EXPECT_EQ(js->right.size(), 7u);
    EXPECT_EQ(js->extraneous.size(), 7u);
    // (K_2 ∪ E_5) + (K_4 ∪ E_3)
    std::vector<std::size_t> inner{induced_edges(g, js->left), induced_edges(g, js->right)};
    std::sort(inner.begin(), inner.end());
    EXPECT_EQ(inner, (std::vector<std::size_t>{1, 6}));
}

TEST(Recognition, DoesNotReuseAComponent) {
    // cone over a path: complement components have sizes 1 and 7. With d = 1
    // the only candidate sizes are 2..6, so there is no balanced join; a table
    // update that reused the singleton would wrongly report size 2.
    Graph path(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    auto g = cone(path);
    EXPECT_FALSE(oracle::has_balanced_join_brute_force(g, 1));
    EXPECT_FALSE(recognize_balanced_join(g, 1));
    EXPECT_TRUE(recognize_join(g));
}

TEST(Recognition, TooFewVertices) {
    EXPECT_FALSE(recognize_balanced_join(complete_bipartite(2, 3), 2));
    EXPECT_FALSE(recognize_balanced_join(Graph(0), 1));
}

TEST(Recognition, UnbalancedJoin) {
    auto g = cone(Graph(3, {{0, 1}, {1, 2}}));
    auto js = recognize_join(g);
    ASSERT_TRUE(js);
    EXPECT_FALSE(join_structure_violation(g, *js));
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_FALSE(recognize_join(path));
}

TEST(RecognitionProperty, ShuffledJoinsAreRecognized) {
    Rng rng(71);
    for (int t = 0; t < 150; ++t) {
        const auto d = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const auto n = std::uniform_int_distribution<std::size_t>(2 * d + 2, 2 * d + 8)(rng);
        auto g = random_shuffled_join(d, n, rng);
        auto js = recognize_balanced_join(g, d);
        ASSERT_TRUE(js);
        EXPECT_FALSE(join_structure_violation(g, *js));
        EXPECT_TRUE(js->is_balanced(d));
    }
}

TEST(RecognitionProperty, AgreesWithBruteForceBipartitionSearch) {
    Rng rng(72);
    for (int t = 0; t < 300; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        const auto d = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        Graph g;
        if (t % 2 == 0 && n >= 2 * d + 2)
            g = random_shuffled_join(d, n, rng);
        else
            g = oracle::random_graph(n, std::uniform_int_distribution<unsigned>(5, 9)(rng), 10, rng);
        auto js = recognize_balanced_join(g, d);
        ASSERT_EQ(js.has_value(), oracle::has_balanced_join_brute_force(g, d)) << "n=" << n << " d=" << d;
        if (js) {
            EXPECT_FALSE(join_structure_violation(g, *js));
            EXPECT_TRUE(js->is_balanced(d));
        }
    }
}

TEST(RecognitionProperty, SparseGraphsWithConnectedComplementAreRejected) {
    Rng rng(73);
    int checked = 0;
    while (checked < 30) {
        auto g = oracle::random_graph(10, 1, 4, rng);
        if (!is_connected(complement(g)))
            continue;
        ++checked;
        EXPECT_FALSE(recognize_join(g));
        EXPECT_FALSE(recognize_balanced_join(g, 1));
    }
}
