#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "pathmin/detail/huge_page_allocator.hpp"
#include "pathmin/oracle.hpp"
#include "pathmin/tree.hpp"

namespace pathmin {

// One binary-lifting entry: the 2^k-th ancestor of v and the minimum on
// the half-open block [v, ancestor). Both are kNoNode when depth(v) < 2^k.
struct Jump {
    NodeId ancestor;
    NodeId block_min;
};

// Level-major lifting tables for levels 0..floor(log2 h).
class LiftingTables {
  public:
    LiftingTables() = default;
    LiftingTables(const RootedTree& tree, const CompOrder& comp);

    unsigned levels() const { return levels_; }
    const Jump& jump(unsigned k, NodeId v) const {
        return jumps_[k * stride_ + static_cast<std::size_t>(v)];
    }
    Jump& mutable_jump(unsigned k, NodeId v) { return jumps_[k * stride_ + static_cast<std::size_t>(v)]; }
    NodeId up(unsigned k, NodeId v) const { return jump(k, v).ancestor; }
    NodeId block_min(unsigned k, NodeId v) const { return jump(k, v).block_min; }

  private:
    unsigned levels_ = 0;
    std::size_t stride_ = 0;
    std::vector<Jump, detail::HugePageAllocator<Jump>> jumps_;
};

LiftingTables build_lifting(const RootedTree& tree, const CompOrder& comp);

inline constexpr NodeId kInfiniteDistance = std::numeric_limits<NodeId>::max();

// Nearest strictly lower proper ancestor of every non-root node.
struct LowerAncestorData {
    // kInfiniteDistance when no non-root ancestor is lower (always for the root).
    std::vector<NodeId> dist;
    // kNoNode wherever dist is infinite.
    std::vector<NodeId> parent;
};

// Descending-power search over the lifting blocks: O(log h) comparisons per node.
LowerAncestorData compute_lower_dist(const RootedTree& tree, const LiftingTables& lift, const CompOrder& comp);

}  // namespace pathmin
