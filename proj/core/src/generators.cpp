#include "pathmin/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pathmin {

namespace {

// Applies a uniformly random relabelling to a parent array built on ids
// 0..n-1 with root 0.
RootedTree relabel(const std::vector<NodeId>& parent, Rng& rng) {
    const auto n = parent.size();
    std::vector<NodeId> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<NodeId> relabelled(n, kNoNode);
    for (std::size_t v = 1; v < n; ++v) {
        relabelled[static_cast<std::size_t>(label[v])] = label[static_cast<std::size_t>(parent[v])];
    }
    return RootedTree(std::move(relabelled), label[0]);
}

NodeId uniform_below(NodeId bound, Rng& rng) {
    return std::uniform_int_distribution<NodeId>(0, bound - 1)(rng);
}

}  // namespace

std::string_view shape_name(Shape shape) {
    switch (shape) {
        case Shape::Path: return "path";
        case Shape::Random: return "random";
        case Shape::Star: return "star";
        case Shape::Caterpillar: return "caterpillar";
        case Shape::Binary: return "binary";
    }
    return "?";
}

Shape parse_shape(std::string_view name) {
    for (Shape s : kAllShapes) {
        if (shape_name(s) == name) return s;
    }
    throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

RootedTree make_shape(Shape shape, NodeId n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("a tree needs at least one node");
    std::vector<NodeId> parent(static_cast<std::size_t>(n), kNoNode);
    switch (shape) {
        case Shape::Path:
            for (NodeId v = 1; v < n; ++v) parent[static_cast<std::size_t>(v)] = v - 1;
            break;
        case Shape::Star:
            for (NodeId v = 1; v < n; ++v) parent[static_cast<std::size_t>(v)] = 0;
            break;
        case Shape::Caterpillar: {
            const NodeId spine = (n + 1) / 2;
            for (NodeId v = 1; v < spine; ++v) parent[static_cast<std::size_t>(v)] = v - 1;
            for (NodeId v = spine; v < n; ++v) parent[static_cast<std::size_t>(v)] = v - spine;
            break;
        }
        case Shape::Binary:
            for (NodeId v = 1; v < n; ++v) parent[static_cast<std::size_t>(v)] = (v - 1) / 2;
            break;
        case Shape::Random:
            for (NodeId v = 1; v < n; ++v) parent[static_cast<std::size_t>(v)] = uniform_below(v, rng);
            return relabel(parent, rng);
    }
    return RootedTree(std::move(parent), 0);
}

RootedTree random_tree(NodeId n, NodeId height, Rng& rng) {
    if (n < 1 || height < 0 || height >= n || (n > 1 && height == 0)) {
        throw std::invalid_argument("no tree with " + std::to_string(n) + " nodes has height " +
                                    std::to_string(height));
    }
    std::vector<NodeId> parent(static_cast<std::size_t>(n), kNoNode);
    std::vector<NodeId> depth(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> open;  // nodes that may still take a child
    for (NodeId v = 0; v <= height; ++v) {
        if (v > 0) {
            parent[static_cast<std::size_t>(v)] = v - 1;
            depth[static_cast<std::size_t>(v)] = v;
        }
        if (v < height) open.push_back(v);
    }
    for (NodeId v = height + 1; v < n; ++v) {
        const NodeId p = open[static_cast<std::size_t>(uniform_below(static_cast<NodeId>(open.size()), rng))];
        parent[static_cast<std::size_t>(v)] = p;
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(p)] + 1;
        if (depth[static_cast<std::size_t>(v)] < height) open.push_back(v);
    }
    return relabel(parent, rng);
}

std::vector<std::int64_t> random_weights(NodeId n, std::int64_t range, Rng& rng) {
    std::uniform_int_distribution<std::int64_t> dist(0, std::max<std::int64_t>(range, 1) - 1);
    std::vector<std::int64_t> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = dist(rng);
    return w;
}

}  // namespace pathmin
