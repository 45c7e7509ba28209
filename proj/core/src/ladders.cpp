#include "pathmin/ladders.hpp"

#include <algorithm>
#include <ostream>
#include <ranges>

namespace pathmin {

LongestPathDecomposition longest_path_decomposition(const RootedTree& tree) {
    const auto n = static_cast<std::size_t>(tree.size());
    LongestPathDecomposition lpd;
    lpd.down.assign(n, 0);
    std::vector<NodeId> kept(n, kNoNode);

    const auto order = tree.top_down();
    for (NodeId v : std::views::reverse(order)) {
        for (NodeId c : tree.children(v)) {
            // Children are ascending, so strict > keeps the smallest id on ties.
            if (kept[static_cast<std::size_t>(v)] == kNoNode ||
                lpd.down[static_cast<std::size_t>(c)] + 1 > lpd.down[static_cast<std::size_t>(v)]) {
                lpd.down[static_cast<std::size_t>(v)] = lpd.down[static_cast<std::size_t>(c)] + 1;
                kept[static_cast<std::size_t>(v)] = c;
            }
        }
    }

    lpd.path_of.assign(n, kNoNode);
    for (NodeId top : order) {
        if (lpd.path_of[static_cast<std::size_t>(top)] != kNoNode) continue;
        const auto id = static_cast<NodeId>(lpd.paths.size());
        NodeId v = top;
        NodeId length = 1;
        lpd.path_of[static_cast<std::size_t>(v)] = id;
        while (kept[static_cast<std::size_t>(v)] != kNoNode) {
            v = kept[static_cast<std::size_t>(v)];
            lpd.path_of[static_cast<std::size_t>(v)] = id;
            ++length;
        }
        lpd.paths.push_back({v, length});
    }
    return lpd;
}

LadderDecomposition::LadderDecomposition(const LongestPathDecomposition& lpd, const RootedTree& tree) {
    std::size_t total = 0;
    for (const auto& p : lpd.paths) {
        total += static_cast<std::size_t>(std::min(2 * p.length, tree.depth(p.deepest) + 1));
    }
    nodes_.reserve(total);
    offsets_.reserve(lpd.paths.size() + 1);
    for (const auto& p : lpd.paths) {
        const NodeId length = std::min(2 * p.length, tree.depth(p.deepest) + 1);
        NodeId v = p.deepest;
        for (NodeId i = 0; i < length; ++i, v = tree.parent(v)) nodes_.push_back(v);
        offsets_.push_back(nodes_.size());
    }
    base_ = lpd.path_of;
}

LadderDecomposition extend_to_ladders(const LongestPathDecomposition& lpd, const RootedTree& tree) {
    return LadderDecomposition(lpd, tree);
}

void write_ladders(std::ostream& out, const LadderDecomposition& ladders) {
    for (std::size_t i = 0; i < ladders.ladder_count(); ++i) {
        const auto ladder = ladders.ladder(i);
        for (std::size_t j = 0; j < ladder.size(); ++j) {
            if (j != 0) out << ' ';
            out << ladder[j];
        }
        out << '\n';
    }
}

}  // namespace pathmin
