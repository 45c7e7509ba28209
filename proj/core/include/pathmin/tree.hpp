#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathmin/oracle.hpp"

namespace pathmin {

struct WeightedEdge {
    NodeId u;
    NodeId v;
    std::int64_t weight;
};

class TreeError : public std::runtime_error {
  public:
    enum class Kind { OutOfRange, DuplicateEdge, Cycle, Disconnected, BadRoot };

    TreeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

// Immutable rooted tree over dense node ids 0..n-1. Children are kept in
// ascending id order so every derived decomposition is deterministic.
class RootedTree {
  public:
    RootedTree() = default;

    // parent[root] must be kNoNode; every other entry names a node of the tree.
    // Throws TreeError if the links do not form a single tree rooted at root.
    RootedTree(std::vector<NodeId> parent, NodeId root);

    NodeId size() const { return static_cast<NodeId>(parent_.size()); }
    NodeId root() const { return root_; }
    NodeId height() const { return height_; }

    NodeId parent(NodeId v) const { return parent_[idx(v)]; }
    NodeId depth(NodeId v) const { return depth_[idx(v)]; }
    std::span<const NodeId> children(NodeId v) const {
        return {child_list_.data() + child_begin_[idx(v)],
                child_list_.data() + child_begin_[idx(v) + 1]};
    }
    bool is_leaf(NodeId v) const { return children(v).empty(); }
    bool contains(NodeId v) const { return v >= 0 && v < size(); }

    // Nodes ordered so that every parent precedes its children (BFS from root).
    std::span<const NodeId> top_down() const { return order_; }

    std::span<const NodeId> parents() const { return parent_; }
    std::span<const NodeId> depths() const { return depth_; }

    // Ancestor at distance `steps` by walking parent links. O(steps).
    NodeId ancestor(NodeId v, NodeId steps) const;

  private:
    static std::size_t idx(NodeId v) { return static_cast<std::size_t>(v); }

    std::vector<NodeId> parent_;
    std::vector<NodeId> depth_;
    std::vector<NodeId> child_begin_;
    std::vector<NodeId> child_list_;
    std::vector<NodeId> order_;
    NodeId root_ = kNoNode;
    NodeId height_ = 0;
};

// A rooted tree together with the node-weight view of its edge weights:
// weights[v] is the weight of edge (parent(v), v); weights[root] is unused.
struct WeightedTree {
    RootedTree tree;
    std::vector<std::int64_t> weights;

    IntWeightOracle oracle() const { return IntWeightOracle(weights); }
};

// Orients an undirected edge list from `root`. Throws TreeError on
// out-of-range ids, duplicate edges, cycles, or disconnected input.
WeightedTree build_tree(NodeId n, std::span<const WeightedEdge> edges, NodeId root);

// Nodes v, parent(v), ..., excluding the ancestor at distance l.
// Throws std::invalid_argument for l < 0 and std::out_of_range for l > depth(v).
std::vector<NodeId> half_open_path(const RootedTree& tree, NodeId v, NodeId l);

}  // namespace pathmin
