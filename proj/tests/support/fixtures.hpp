#pragma once

#include <cstdint>
#include <vector>

#include "pathmin/tree.hpp"

namespace pathmin::testing {

// Running example used throughout the tests:
//
//        0
//        | 5
//        1
//   3  /   \  2
//     2     5
//   4 |     | 6
//     3     6
//   1 |
//     4
//
// Node weights (edge into the node): 1:5 2:3 3:4 4:1 5:2 6:6.
inline WeightedTree t1() {
    const std::vector<WeightedEdge> edges{{0, 1, 5}, {1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {1, 5, 2}, {5, 6, 6}};
    return build_tree(7, edges, 0);
}

// Tree from a parent array with explicit node weights.
inline WeightedTree from_parents(std::vector<NodeId> parent, NodeId root, std::vector<std::int64_t> weights) {
    return {RootedTree(std::move(parent), root), std::move(weights)};
}

}  // namespace pathmin::testing
