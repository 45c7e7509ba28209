#include "pathmin/pathmin.hpp"

#include <chrono>
#include <string>

namespace pathmin {

namespace {

class Fnv1a {
  public:
    template <typename T>
    void add(std::span<const T> values) {
        for (const T& value : values) add_value(static_cast<std::uint64_t>(static_cast<std::int64_t>(value)));
    }

    void add_value(std::uint64_t value) {
        for (int i = 0; i < 8; ++i, value >>= 8) {
            hash_ ^= value & 0xffU;
            hash_ *= 0x100000001b3ULL;
        }
    }

    std::uint64_t value() const { return hash_; }

  private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

PathMinIndex::PathMinIndex(RootedTree tree, const WeightOracle& oracle) : tree_(std::move(tree)) {
    const auto start = std::chrono::steady_clock::now();

    CountingOracle counted(oracle);
    const CompOrder comp(counted, tree_.root());

    // Ladders hold at most h + 1 nodes, so this covers every RMQ length too.
    lg_ = FloorLog(static_cast<std::size_t>(tree_.height()) + 1);

    ladders_ = extend_to_ladders(longest_path_decomposition(tree_), tree_);
    rmq_ = PackedRmq(ladders_.nodes(), ladders_.bounds(), comp);

    lift_ = build_lifting(tree_, comp);
    lower_ = compute_lower_dist(tree_, lift_, comp);

    const auto n = static_cast<std::size_t>(tree_.size());
    node_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        node_[v] = {tree_.depths()[v], lower_.dist[v]};
    }
    // Position of every node inside its own base ladder.
    std::vector<LadderSlot> home(n);
    const auto bounds = ladders_.bounds();
    for (std::size_t v = 0; v < n; ++v) {
        const auto ladder = static_cast<std::size_t>(ladders_.base_ladder(static_cast<NodeId>(v)));
        const NodeId bottom = tree_.depth(ladders_.deepest(ladder));
        home[v] = {static_cast<Position>(bounds[ladder]) + bottom - tree_.depths()[v],
                   static_cast<Position>(bounds[ladder + 1])};
    }
    jump_slot_.assign(lift_.levels() * n, LadderSlot{kNoPosition, kNoPosition});
    for (unsigned k = 0; k < lift_.levels(); ++k) {
        for (std::size_t v = 0; v < n; ++v) {
            const NodeId p = lift_.up(k, static_cast<NodeId>(v));
            if (p != kNoNode) jump_slot_[k * n + v] = home[static_cast<std::size_t>(p)];
        }
    }

    stats_.oracle_calls = counted.calls();
    stats_.comparisons = comp.comparisons();
    stats_.build_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

QueryResult PathMinIndex::query(NodeId v, NodeId l) const {
    if (!tree_.contains(v)) throw std::invalid_argument("unknown node " + std::to_string(v));
    if (l < 0 || l > tree_.depth(v)) {
        throw std::out_of_range("hop count " + std::to_string(l) + " is outside [0, " +
                                std::to_string(tree_.depth(v)) + "] for node " + std::to_string(v));
    }
    if (l == 0) return QueryResult::empty();
    return QueryResult::min(answer<false>(v, l, nullptr));
}

QueryTrace PathMinIndex::trace(NodeId v, NodeId l) const {
    if (!tree_.contains(v) || l < 1 || l > tree_.depth(v)) {
        throw std::out_of_range("trace needs 1 <= l <= depth(v)");
    }
    QueryTrace t;
    answer<true>(v, l, &t);
    return t;
}

std::uint64_t PathMinIndex::digest() const {
    Fnv1a h;
    h.add(tree_.parents());
    h.add(ladders_.nodes());
    h.add(ladders_.bounds());
    for (std::size_t i = 0; i < rmq_.levels() * rmq_.size(); ++i) {
        const auto& e = rmq_.block(static_cast<unsigned>(i / rmq_.size()), i % rmq_.size());
        h.add_value(static_cast<std::uint64_t>(e.pos));
        h.add_value(static_cast<std::uint64_t>(e.node));
    }
    h.add(std::span<const Position>(rmq_.pre_lower()));
    for (unsigned k = 0; k < lift_.levels(); ++k) {
        for (NodeId v = 0; v < tree_.size(); ++v) {
            h.add_value(static_cast<std::uint64_t>(lift_.up(k, v)));
            h.add_value(static_cast<std::uint64_t>(lift_.block_min(k, v)));
        }
    }
    h.add(std::span<const NodeId>(lower_.dist));
    h.add(std::span<const NodeId>(lower_.parent));
    return h.value();
}

void PathMinIndex::corrupt_for_testing(NodeId v) {
    if (!tree_.contains(v) || tree_.depth(v) < 2) {
        throw std::invalid_argument("corrupt_for_testing needs a node of depth >= 2");
    }
    lift_.mutable_jump(0, v).block_min = tree_.parent(v);
}

}  // namespace pathmin
