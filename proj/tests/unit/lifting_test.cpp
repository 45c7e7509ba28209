#include <gtest/gtest.h>

#include <bit>

#include "fixtures.hpp"
#include "pathmin/generators.hpp"
#include "pathmin/lifting.hpp"
#include "pathmin/reference.hpp"

namespace pathmin {
namespace {

TEST(Lifting, RunningExample) {
    const auto wt = testing::t1();
    const auto oracle = wt.oracle();
    const CompOrder comp(oracle, wt.tree.root());
    const auto lift = build_lifting(wt.tree, comp);
    ASSERT_EQ(lift.levels(), 3u);
    EXPECT_EQ(lift.up(0, 4), 3);
    EXPECT_EQ(lift.up(1, 4), 2);
    EXPECT_EQ(lift.block_min(1, 4), 4);
    EXPECT_EQ(lift.up(2, 4), 0);
    EXPECT_EQ(lift.block_min(2, 4), 4);
    EXPECT_EQ(lift.block_min(1, 6), 5);
    EXPECT_EQ(lift.up(2, 6), kNoNode);
    EXPECT_EQ(lift.block_min(0, 0), kNoNode);
}

TEST(LowerDist, RunningExample) {
    const auto wt = testing::t1();
    const auto oracle = wt.oracle();
    const CompOrder comp(oracle, wt.tree.root());
    const auto lower = compute_lower_dist(wt.tree, build_lifting(wt.tree, comp), comp);
    EXPECT_EQ(lower.dist[3], 1);
    EXPECT_EQ(lower.parent[3], 2);
    EXPECT_EQ(lower.dist[6], 1);
    EXPECT_EQ(lower.parent[6], 5);
    for (const NodeId v : {0, 1, 2, 4, 5}) {
        EXPECT_EQ(lower.dist[static_cast<std::size_t>(v)], kInfiniteDistance) << v;
        EXPECT_EQ(lower.parent[static_cast<std::size_t>(v)], kNoNode) << v;
    }
}

TEST(Lifting, SingleNodeHasNoLevels) {
    const auto wt = testing::from_parents({kNoNode}, 0, {0});
    const auto oracle = wt.oracle();
    const CompOrder comp(oracle, 0);
    EXPECT_EQ(build_lifting(wt.tree, comp).levels(), 0u);
}

TEST(Lifting, MatchesBruteForceOnRandomTrees) {
    Rng rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const NodeId n = 1 + static_cast<NodeId>(rng() % 250);
        const auto tree = make_shape(kAllShapes[trial % 5], n, rng);
        const IntWeightOracle oracle(random_weights(n, trial % 3 == 0 ? 3 : n, rng));
        const CompOrder comp(oracle, tree.root());
        const auto lift = build_lifting(tree, comp);
        const BruteForceModel brute(tree, comp);
        const auto lower = compute_lower_dist(tree, lift, comp);

        for (NodeId v = 0; v < n; ++v) {
            for (unsigned k = 0; k < lift.levels(); ++k) {
                const NodeId span = NodeId{1} << k;
                if (tree.depth(v) < span) {
                    EXPECT_EQ(lift.up(k, v), kNoNode);
                    continue;
                }
                EXPECT_EQ(lift.up(k, v), tree.ancestor(v, span));
                EXPECT_EQ(lift.block_min(k, v), brute.brute_min(v, span).node);
            }
            if (v == tree.root()) {
                EXPECT_EQ(lower.dist[static_cast<std::size_t>(v)], kInfiniteDistance);
                continue;
            }
            const NodeId dist = brute.brute_lower_dist(v);
            EXPECT_EQ(lower.dist[static_cast<std::size_t>(v)], dist) << "v=" << v;
            EXPECT_EQ(lower.parent[static_cast<std::size_t>(v)],
                      dist == kInfiniteDistance ? kNoNode : tree.ancestor(v, dist));
        }
    }
}

TEST(Lifting, ComparisonBudget) {
    Rng rng(2);
    for (const Shape shape : kAllShapes) {
        const NodeId n = 2000;
        const auto tree = make_shape(shape, n, rng);
        const IntWeightOracle oracle(random_weights(n, n, rng));
        const CompOrder comp(oracle, tree.root());
        compute_lower_dist(tree, build_lifting(tree, comp), comp);
        const auto log_h = static_cast<std::uint64_t>(std::bit_width(static_cast<unsigned>(tree.height())) - 1);
        EXPECT_LE(comp.comparisons(), 2u * static_cast<std::uint64_t>(n) * (log_h + 2)) << shape_name(shape);
    }
}

}  // namespace
}  // namespace pathmin
