#include "pathmin/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace pathmin {

namespace {

std::string edge_str(const WeightedEdge& e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

class DisjointSets {
  public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
};

}  // namespace

RootedTree::RootedTree(std::vector<NodeId> parent, NodeId root) : parent_(std::move(parent)), root_(root) {
    const auto n = static_cast<NodeId>(parent_.size());
    if (root < 0 || root >= n) {
        throw TreeError(TreeError::Kind::BadRoot, "root " + std::to_string(root) + " is not a node");
    }
    if (parent_[idx(root)] != kNoNode) {
        throw TreeError(TreeError::Kind::BadRoot, "root must not have a parent");
    }

    child_begin_.assign(idx(n) + 1, 0);
    for (NodeId v = 0; v < n; ++v) {
        if (v == root) continue;
        const NodeId p = parent_[idx(v)];
        if (p < 0 || p >= n) {
            throw TreeError(TreeError::Kind::OutOfRange,
                            "parent of node " + std::to_string(v) + " is out of range");
        }
        ++child_begin_[idx(p) + 1];
    }
    std::partial_sum(child_begin_.begin(), child_begin_.end(), child_begin_.begin());
    child_list_.resize(idx(n) - 1);
    std::vector<NodeId> fill(child_begin_.begin(), child_begin_.end() - 1);
    // Increasing v keeps each child list sorted.
    for (NodeId v = 0; v < n; ++v) {
        if (v != root) child_list_[idx(fill[idx(parent_[idx(v)])]++)] = v;
    }

    depth_.assign(idx(n), 0);
    order_.reserve(idx(n));
    order_.push_back(root);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const NodeId v = order_[head];
        for (NodeId c : children(v)) {
            depth_[idx(c)] = depth_[idx(v)] + 1;
            height_ = std::max(height_, depth_[idx(c)]);
            order_.push_back(c);
        }
    }
    if (order_.size() != idx(n)) {
        throw TreeError(TreeError::Kind::Cycle, "parent links contain a cycle");
    }
}

NodeId RootedTree::ancestor(NodeId v, NodeId steps) const {
    for (; steps > 0; --steps) v = parent(v);
    return v;
}

WeightedTree build_tree(NodeId n, std::span<const WeightedEdge> edges, NodeId root) {
    if (n < 1) throw TreeError(TreeError::Kind::OutOfRange, "a tree needs at least one node");
    if (root < 0 || root >= n) {
        throw TreeError(TreeError::Kind::BadRoot, "root " + std::to_string(root) + " is out of range");
    }

    std::set<std::pair<NodeId, NodeId>> seen;
    DisjointSets components(static_cast<std::size_t>(n));
    std::vector<std::vector<std::pair<NodeId, std::int64_t>>> adjacent(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw TreeError(TreeError::Kind::OutOfRange, "edge " + edge_str(e) + " names a node out of range");
        }
        if (e.u == e.v) throw TreeError(TreeError::Kind::Cycle, "self-loop " + edge_str(e));
        if (!seen.emplace(std::minmax(e.u, e.v)).second) {
            throw TreeError(TreeError::Kind::DuplicateEdge, "duplicate edge " + edge_str(e));
        }
        if (!components.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
            throw TreeError(TreeError::Kind::Cycle, "edge " + edge_str(e) + " closes a cycle");
        }
        adjacent[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.weight);
        adjacent[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.weight);
    }
    if (edges.size() + 1 != static_cast<std::size_t>(n)) {
        throw TreeError(TreeError::Kind::Disconnected,
                        std::to_string(n) + " nodes need " + std::to_string(n - 1) + " edges, got " +
                            std::to_string(edges.size()));
    }

    std::vector<NodeId> parent(static_cast<std::size_t>(n), kNoNode);
    std::vector<std::int64_t> weights(static_cast<std::size_t>(n), 0);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::vector<NodeId> stack{root};
    visited[static_cast<std::size_t>(root)] = true;
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (auto [w, weight] : adjacent[static_cast<std::size_t>(v)]) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = true;
            parent[static_cast<std::size_t>(w)] = v;
            weights[static_cast<std::size_t>(w)] = weight;
            stack.push_back(w);
        }
    }
    return {RootedTree(std::move(parent), root), std::move(weights)};
}

std::vector<NodeId> half_open_path(const RootedTree& tree, NodeId v, NodeId l) {
    if (!tree.contains(v)) throw std::invalid_argument("unknown node " + std::to_string(v));
    if (l < 0) throw std::invalid_argument("negative hop count");
    if (l > tree.depth(v)) {
        throw std::out_of_range("hop count " + std::to_string(l) + " exceeds depth " +
                                std::to_string(tree.depth(v)) + " of node " + std::to_string(v));
    }
    std::vector<NodeId> path;
    path.reserve(static_cast<std::size_t>(l));
    for (NodeId i = 0; i < l; ++i, v = tree.parent(v)) path.push_back(v);
    return path;
}

}  // namespace pathmin
