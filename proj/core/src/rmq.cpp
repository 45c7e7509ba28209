#include "pathmin/rmq.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace pathmin {

namespace {

void check_bounds(std::span<const NodeId> array, std::span<const std::size_t> bounds) {
    if (array.empty()) throw std::invalid_argument("SparseTable: empty array");
    if (bounds.size() < 2 || bounds.front() != 0 || bounds.back() != array.size()) {
        throw std::invalid_argument("SparseTable: segment bounds must run from 0 to the array size");
    }
    for (std::size_t i = 1; i < bounds.size(); ++i) {
        if (bounds[i] <= bounds[i - 1]) throw std::invalid_argument("SparseTable: empty segment");
    }
}

}  // namespace

SparseTable::SparseTable(std::span<const NodeId> array, const CompOrder& comp)
    : SparseTable(array, std::array<std::size_t, 2>{0, array.size()}, comp) {}

SparseTable::SparseTable(std::span<const NodeId> array, std::span<const std::size_t> bounds, const CompOrder& comp)
    : size_(array.size()) {
    check_bounds(array, bounds);

    std::size_t longest = 0;
    for (std::size_t i = 1; i < bounds.size(); ++i) longest = std::max(longest, bounds[i] - bounds[i - 1]);
    levels_ = static_cast<unsigned>(std::bit_width(longest));
    table_.assign(levels_ * size_, kNoPosition);

    for (std::size_t i = 0; i < size_; ++i) table_[i] = static_cast<Position>(i);
    for (unsigned k = 1; k < levels_; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        const Position* prev = table_.data() + (k - 1) * size_;
        Position* cur = table_.data() + k * size_;
        for (std::size_t s = 1; s < bounds.size(); ++s) {
            const std::size_t begin = bounds[s - 1];
            const std::size_t end = bounds[s];
            if (end - begin < 2 * half) continue;
            for (std::size_t i = begin; i + 2 * half <= end; ++i) {
                const Position left = prev[i];
                const Position right = prev[i + half];
                cur[i] = comp(array[static_cast<std::size_t>(left)], array[static_cast<std::size_t>(right)]) ? left
                                                                                                             : right;
            }
        }
    }
}

SparseTable build_sparse_table(std::span<const NodeId> array, const CompOrder& comp) {
    return SparseTable(array, comp);
}

PreLowerArray build_pre_lower(std::span<const NodeId> array, const CompOrder& comp) {
    return build_pre_lower(array, std::array<std::size_t, 2>{0, array.size()}, comp);
}

PreLowerArray build_pre_lower(std::span<const NodeId> array, std::span<const std::size_t> bounds,
                              const CompOrder& comp) {
    PreLowerArray pre(array.size(), kNoPosition);
    std::vector<Position> stack;
    for (std::size_t s = 1; s < bounds.size(); ++s) {
        stack.clear();
        for (std::size_t i = bounds[s - 1]; i < bounds[s]; ++i) {
            while (!stack.empty() && comp(array[i], array[static_cast<std::size_t>(stack.back())])) {
                stack.pop_back();
            }
            if (!stack.empty()) pre[i] = stack.back();
            stack.push_back(static_cast<Position>(i));
        }
    }
    return pre;
}

PackedRmq::PackedRmq(std::span<const NodeId> array, std::span<const std::size_t> bounds, const CompOrder& comp)
    : size_(array.size()), pre_lower_(build_pre_lower(array, bounds, comp)) {
    const SparseTable table(array, bounds, comp);
    levels_ = table.levels();
    entries_.resize(table.raw().size());
    const auto raw = table.raw();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Position pos = raw[i];
        entries_[i] = pos == kNoPosition ? Entry{kNoPosition, kNoNode, kNoPosition}
                                         : Entry{pos, array[static_cast<std::size_t>(pos)],
                                                 pre_lower_[static_cast<std::size_t>(pos)]};
    }
}

Position rmq_query(const SparseTable& table, const PreLowerArray& pre_lower, std::size_t left,
                   std::size_t right, const FloorLog& lg) {
    if (left >= right) {
        throw std::invalid_argument("rmq_query: empty range [" + std::to_string(left) + ", " +
                                    std::to_string(right) + ")");
    }
    if (right > table.size() || right - left > lg.limit()) {
        throw std::out_of_range("rmq_query: range end " + std::to_string(right) + " out of bounds");
    }
    return rmq_query_unchecked(table, pre_lower, left, right, lg);
}

}  // namespace pathmin
