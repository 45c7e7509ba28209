#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pathmin/ladders.hpp"
#include "pathmin/lifting.hpp"
#include "pathmin/log_table.hpp"
#include "pathmin/oracle.hpp"
#include "pathmin/rmq.hpp"
#include "pathmin/tree.hpp"

namespace pathmin {

// Raised when an invariant that the construction guarantees is found broken.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct QueryResult {
    enum class Kind { Empty, Min };

    Kind kind = Kind::Empty;
    // Minimum node when kind == Min; it stands for edge (parent(node), node).
    NodeId node = kNoNode;

    static QueryResult empty() { return {}; }
    static QueryResult min(NodeId node) { return {Kind::Min, node}; }

    bool is_empty() const { return kind == Kind::Empty; }
    bool operator==(const QueryResult&) const = default;
};

struct BuildStats {
    std::uint64_t oracle_calls = 0;
    std::uint64_t comparisons = 0;
    double build_ms = 0.0;
};

// Intermediate values of one query, for tests and diagnostics.
struct QueryTrace {
    unsigned level = 0;        // k = lg[l]
    NodeId jump = kNoNode;     // p = pre_{2^k}(v)
    NodeId block = kNoNode;    // a, minimum on [v, p)
    NodeId ladder = kNoNode;   // b, minimum on [p, u); kNoNode when p == u
    NodeId gap = 0;            // depth(a) - depth(b)
    bool block_wins = true;
    NodeId result = kNoNode;
};

// Static leaf-to-ancestor path-minimum index. All comparisons happen in the
// constructor; queries read tables only and never touch an oracle.
class PathMinIndex {
  public:
    PathMinIndex(RootedTree tree, const WeightOracle& oracle);

    // Minimum on the half-open path [v, pre_l(v)), Empty for l == 0.
    // Throws std::invalid_argument for an unknown node and std::out_of_range
    // unless 0 <= l <= depth(v).
    QueryResult query(NodeId v, NodeId l) const;

    // Requires 1 <= l <= depth(v).
    NodeId query_unchecked(NodeId v, NodeId l) const { return answer<false>(v, l, nullptr); }

    QueryTrace trace(NodeId v, NodeId l) const;

    const RootedTree& tree() const { return tree_; }
    const FloorLog& lg() const { return lg_; }
    const LadderDecomposition& ladders() const { return ladders_; }
    // One segment per ladder; positions index ladders().nodes().
    const PackedRmq& ladder_rmq() const { return rmq_; }
    const PreLowerArray& ladder_pre_lower() const { return rmq_.pre_lower(); }
    const LiftingTables& lifting() const { return lift_; }
    const LowerAncestorData& lower() const { return lower_; }
    const BuildStats& stats() const { return stats_; }

    // FNV-1a over every stored table; equal digests mean equal stored minima.
    std::uint64_t digest() const;

    // Test hook: replaces the level-0 block minimum of v with its parent so
    // that the query (v, 1) answers wrongly. v must have depth >= 2.
    void corrupt_for_testing(NodeId v);

  private:
    template <bool Trace>
    NodeId answer(NodeId v, NodeId l, QueryTrace* trace) const;

    // Query-time copies laid out so that one query touches few cache lines.
    struct NodeSlot {
        NodeId depth;
        NodeId lower_dist;
    };
    // For lifting entry (k, v): where pre_{2^k}(v) sits in its base ladder,
    // and the end of that ladder, as positions into ladders_.nodes().
    struct LadderSlot {
        Position pos;
        Position end;
    };

    RootedTree tree_;
    FloorLog lg_;
    LadderDecomposition ladders_;
    PackedRmq rmq_;
    LiftingTables lift_;
    LowerAncestorData lower_;
    BuildStats stats_;

    std::vector<NodeSlot, detail::HugePageAllocator<NodeSlot>> node_;
    std::vector<LadderSlot, detail::HugePageAllocator<LadderSlot>> jump_slot_;
};

inline PathMinIndex preprocess(RootedTree tree, const WeightOracle& oracle) {
    return PathMinIndex(std::move(tree), oracle);
}

template <bool Trace>
NodeId PathMinIndex::answer(NodeId v, NodeId l, QueryTrace* trace) const {
    const unsigned k = lg_(static_cast<std::size_t>(l));
    const NodeId span = NodeId{1} << k;
    const Jump& jump = lift_.jump(k, v);
    const NodeId a = jump.block_min;
    if constexpr (Trace) {
        trace->level = k;
        trace->jump = jump.ancestor;
        trace->block = a;
    }
    if (l == span) {
        if constexpr (Trace) trace->result = a;
        return a;
    }

    // u = pre_l(v) lies l - 2^k < 2^k above p, so it is inside p's base ladder.
    const LadderSlot slot = jump_slot_[k * static_cast<std::size_t>(tree_.size()) + static_cast<std::size_t>(v)];
    const Position pos_u = slot.pos + (l - span);
    if (pos_u >= slot.end) [[unlikely]] {
        throw InternalError("ancestor at distance " + std::to_string(l) + " from node " + std::to_string(v) +
                            " is missing from the base ladder of node " + std::to_string(jump.ancestor));
    }
    const auto& min_entry = rmq_.query(static_cast<std::size_t>(slot.pos), static_cast<std::size_t>(pos_u), lg_);
    const NodeId b = min_entry.node;
    const NodeId depth_b = node_[static_cast<std::size_t>(v)].depth - span - (min_entry.pos - slot.pos);
    const NodeSlot& a_slot = node_[static_cast<std::size_t>(a)];
    const NodeId gap = a_slot.depth - depth_b;
    const bool block_wins = a_slot.lower_dist > gap;
    const NodeId result = block_wins ? a : b;
    if constexpr (Trace) {
        trace->ladder = b;
        trace->gap = gap;
        trace->block_wins = block_wins;
        trace->result = result;
    }
    return result;
}

}  // namespace pathmin
