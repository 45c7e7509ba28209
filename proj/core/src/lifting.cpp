#include "pathmin/lifting.hpp"

#include <bit>

namespace pathmin {

LiftingTables::LiftingTables(const RootedTree& tree, const CompOrder& comp)
    : levels_(tree.height() > 0 ? static_cast<unsigned>(std::bit_width(static_cast<unsigned>(tree.height()))) : 0),
      stride_(static_cast<std::size_t>(tree.size())),
      jumps_(levels_ * stride_, Jump{kNoNode, kNoNode}) {
    const NodeId n = tree.size();
    if (levels_ == 0) return;

    for (NodeId v = 0; v < n; ++v) {
        if (v != tree.root()) jumps_[static_cast<std::size_t>(v)] = {tree.parent(v), v};
    }
    for (unsigned k = 1; k < levels_; ++k) {
        const NodeId span = NodeId{1} << k;
        const Jump* prev = jumps_.data() + (k - 1) * stride_;
        Jump* cur = jumps_.data() + k * stride_;
        for (NodeId v = 0; v < n; ++v) {
            if (tree.depth(v) < span) continue;
            const Jump& lower = prev[v];
            const Jump& upper = prev[lower.ancestor];
            cur[v] = {upper.ancestor, comp.min(lower.block_min, upper.block_min)};
        }
    }
}

LiftingTables build_lifting(const RootedTree& tree, const CompOrder& comp) {
    return LiftingTables(tree, comp);
}

LowerAncestorData compute_lower_dist(const RootedTree& tree, const LiftingTables& lift, const CompOrder& comp) {
    const auto n = static_cast<std::size_t>(tree.size());
    LowerAncestorData lower{std::vector<NodeId>(n, kInfiniteDistance), std::vector<NodeId>(n, kNoNode)};

    for (NodeId v = 0; v < tree.size(); ++v) {
        if (v == tree.root()) continue;
        NodeId x = tree.parent(v);
        NodeId d = 1;
        for (unsigned t = lift.levels(); t-- > 0;) {
            // The block [x, pre_{2^t}(x)) exists only when it avoids the root.
            if (tree.depth(x) < (NodeId{1} << t)) continue;
            if (!comp(lift.block_min(t, x), v)) {
                x = lift.up(t, x);
                d += NodeId{1} << t;
            }
        }
        if (x != tree.root() && comp(x, v)) {
            lower.dist[static_cast<std::size_t>(v)] = d;
            lower.parent[static_cast<std::size_t>(v)] = x;
        }
    }
    return lower;
}

}  // namespace pathmin
