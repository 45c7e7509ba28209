#pragma once

#include <span>

#include "pathmin/oracle.hpp"
#include "pathmin/pathmin.hpp"
#include "pathmin/rmq.hpp"
#include "pathmin/tree.hpp"

namespace pathmin {

// Definitional answers computed by direct scans. Shares the comparator
// (and so the id tie-break) with the index, but none of its structures.
class BruteForceModel {
  public:
    BruteForceModel(const RootedTree& tree, const CompOrder& comp) : tree_(&tree), comp_(&comp) {}

    // Walks l parents from v. Throws like PathMinIndex::query.
    QueryResult brute_min(NodeId v, NodeId l) const;

    // Distance to the first ancestor below the root that precedes v, or
    // kInfiniteDistance. Throws std::invalid_argument for the root.
    NodeId brute_lower_dist(NodeId v) const;

  private:
    const RootedTree* tree_;
    const CompOrder* comp_;
};

// O(m^2) scan of the preLower definition.
PreLowerArray brute_pre_lower(std::span<const NodeId> array, const CompOrder& comp);

// Position of the minimum over [left, right) by linear scan.
Position brute_range_min(std::span<const NodeId> array, std::size_t left, std::size_t right, const CompOrder& comp);

}  // namespace pathmin
