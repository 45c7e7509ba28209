#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathmin/detail/huge_page_allocator.hpp"
#include "pathmin/log_table.hpp"
#include "pathmin/oracle.hpp"

namespace pathmin {

using Position = std::int32_t;

inline constexpr Position kNoPosition = -1;

// preLower[i]: the largest j < i with A[j] before A[i] in the order, or
// kNoPosition.
using PreLowerArray = std::vector<Position, detail::HugePageAllocator<Position>>;

// Sparse table over positions of an array of node ids. Every choice between
// two candidate positions is made by the comparator at build time; the
// table stores positions, not node ids.
//
// The array may be split into consecutive segments that get independent
// tables sharing one level-major layout: blocks never cross a segment
// boundary, and entries that would are left as kNoPosition.
class SparseTable {
  public:
    SparseTable() = default;

    // Single segment. Throws std::invalid_argument on an empty array.
    SparseTable(std::span<const NodeId> array, const CompOrder& comp);

    // Segment i is array[bounds[i], bounds[i + 1]); bounds runs from 0 to
    // array.size() and every segment is non-empty.
    SparseTable(std::span<const NodeId> array, std::span<const std::size_t> bounds, const CompOrder& comp);

    std::size_t size() const { return size_; }
    unsigned levels() const { return levels_; }

    // Position of the minimum over [i, i + 2^k).
    Position block_min(unsigned k, std::size_t i) const { return table_[k * size_ + i]; }

    // All levels concatenated, level 0 first.
    std::span<const Position> raw() const { return table_; }

  private:
    std::size_t size_ = 0;
    unsigned levels_ = 0;
    std::vector<Position, detail::HugePageAllocator<Position>> table_;
};

SparseTable build_sparse_table(std::span<const NodeId> array, const CompOrder& comp);

// Monotone-stack construction; at most 2m comparisons.
PreLowerArray build_pre_lower(std::span<const NodeId> array, const CompOrder& comp);

// Per-segment preLower holding positions into the whole array.
PreLowerArray build_pre_lower(std::span<const NodeId> array, std::span<const std::size_t> bounds,
                              const CompOrder& comp);

// Position of the minimum over [left, right) without any comparison.
inline Position rmq_query_unchecked(const SparseTable& table, const PreLowerArray& pre_lower,
                                    std::size_t left, std::size_t right, const FloorLog& lg) {
    const unsigned k = lg(right - left);
    const Position m1 = table.block_min(k, left);
    const Position m2 = table.block_min(k, right - (std::size_t{1} << k));
    if (m1 == m2) return m1;
    return pre_lower[static_cast<std::size_t>(m2)] < m1 ? m2 : m1;
}

// Query-ready form of a (segmented) sparse table: every block entry carries
// the minimum's position, its node id and its preLower value, so the
// two-block resolution reads two entries and nothing else.
class PackedRmq {
  public:
    struct Entry {
        Position pos;
        NodeId node;
        Position pre_lower;
    };

    PackedRmq() = default;
    PackedRmq(std::span<const NodeId> array, std::span<const std::size_t> bounds, const CompOrder& comp);

    const Entry& block(unsigned k, std::size_t i) const { return entries_[k * size_ + i]; }
    const PreLowerArray& pre_lower() const { return pre_lower_; }
    std::size_t size() const { return size_; }
    unsigned levels() const { return levels_; }

    // Minimum over [left, right); same decision procedure as rmq_query_unchecked.
    const Entry& query(std::size_t left, std::size_t right, const FloorLog& lg) const {
        const unsigned k = lg(right - left);
        const Entry& m1 = block(k, left);
        const Entry& m2 = block(k, right - (std::size_t{1} << k));
        if (m1.pos == m2.pos) return m1;
        return m2.pre_lower < m1.pos ? m2 : m1;
    }

  private:
    std::size_t size_ = 0;
    unsigned levels_ = 0;
    PreLowerArray pre_lower_;
    std::vector<Entry, detail::HugePageAllocator<Entry>> entries_;
};

// Checked variant. Throws std::invalid_argument when left >= right and
// std::out_of_range when right exceeds the array or the log table.
Position rmq_query(const SparseTable& table, const PreLowerArray& pre_lower, std::size_t left,
                   std::size_t right, const FloorLog& lg);

}  // namespace pathmin
