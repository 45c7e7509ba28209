#include "pathmin/reference.hpp"

#include <stdexcept>
#include <string>

namespace pathmin {

QueryResult BruteForceModel::brute_min(NodeId v, NodeId l) const {
    if (!tree_->contains(v)) throw std::invalid_argument("unknown node " + std::to_string(v));
    if (l < 0 || l > tree_->depth(v)) throw std::out_of_range("hop count out of range");
    if (l == 0) return QueryResult::empty();
    NodeId best = v;
    NodeId x = tree_->parent(v);
    for (NodeId i = 1; i < l; ++i, x = tree_->parent(x)) {
        if ((*comp_)(x, best)) best = x;
    }
    return QueryResult::min(best);
}

NodeId BruteForceModel::brute_lower_dist(NodeId v) const {
    if (!tree_->contains(v) || v == tree_->root()) {
        throw std::invalid_argument("lower distance is defined for non-root nodes only");
    }
    NodeId d = 1;
    for (NodeId x = tree_->parent(v); x != tree_->root(); x = tree_->parent(x), ++d) {
        if ((*comp_)(x, v)) return d;
    }
    return kInfiniteDistance;
}

PreLowerArray brute_pre_lower(std::span<const NodeId> array, const CompOrder& comp) {
    PreLowerArray pre(array.size(), kNoPosition);
    for (std::size_t i = 0; i < array.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (comp(array[j], array[i])) pre[i] = static_cast<Position>(j);
        }
    }
    return pre;
}

Position brute_range_min(std::span<const NodeId> array, std::size_t left, std::size_t right,
                         const CompOrder& comp) {
    if (left >= right || right > array.size()) throw std::invalid_argument("bad range");
    std::size_t best = left;
    for (std::size_t i = left + 1; i < right; ++i) {
        if (comp(array[i], array[best])) best = i;
    }
    return static_cast<Position>(best);
}

}  // namespace pathmin
