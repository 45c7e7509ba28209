#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pathmin/tree.hpp"

namespace pathmin {

// A root-ward path stored as its deepest node and its vertex count.
struct BasePath {
    NodeId deepest;
    NodeId length;

    bool operator==(const BasePath&) const = default;
};

struct LongestPathDecomposition {
    // down[v]: longest distance from v to a leaf in its subtree.
    std::vector<NodeId> down;
    // Paths are listed in the order their top vertices appear top-down.
    std::vector<BasePath> paths;
    // path_of[v]: index into `paths` of the path containing v.
    std::vector<NodeId> path_of;
};

// Every non-leaf keeps the child with the largest `down`, smallest id on ties.
LongestPathDecomposition longest_path_decomposition(const RootedTree& tree);

// Base paths extended upward to min(2 * length, depth(deepest) + 1) vertices.
// Ladder arrays run from the deepest node (position 0) toward the root and
// may overlap in their appended ancestors.
class LadderDecomposition {
  public:
    LadderDecomposition() = default;
    LadderDecomposition(const LongestPathDecomposition& lpd, const RootedTree& tree);

    std::size_t ladder_count() const { return offsets_.size() - 1; }
    std::span<const NodeId> ladder(std::size_t i) const {
        return {nodes_.data() + offsets_[i], nodes_.data() + offsets_[i + 1]};
    }
    NodeId deepest(std::size_t i) const { return nodes_[offsets_[i]]; }

    // Ladder built from the base path that contains v (appended ancestors
    // keep the ladder of their own base path).
    NodeId base_ladder(NodeId v) const { return base_[static_cast<std::size_t>(v)]; }

    std::size_t total_length() const { return nodes_.size(); }

    // All ladders concatenated; ladder i occupies [bounds()[i], bounds()[i + 1]).
    std::span<const NodeId> nodes() const { return nodes_; }
    std::span<const std::size_t> bounds() const { return offsets_; }

  private:
    std::vector<NodeId> nodes_;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> base_;
};

LadderDecomposition extend_to_ladders(const LongestPathDecomposition& lpd, const RootedTree& tree);

// Debug dump: one ladder per line, deepest node first.
void write_ladders(std::ostream& out, const LadderDecomposition& ladders);

}  // namespace pathmin
