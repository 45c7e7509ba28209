#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace pathmin {

using NodeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;

// Strict comparison black box over node values. Implementations must behave
// like a fixed real-valued assignment: irreflexive, transitive, stable.
class WeightOracle {
  public:
    virtual ~WeightOracle() = default;

    // True iff value(a) < value(b).
    virtual bool less(NodeId a, NodeId b) const = 0;
};

// Oracle backed by explicit 64-bit integer node weights. The weight of the
// root is never consulted.
class IntWeightOracle final : public WeightOracle {
  public:
    explicit IntWeightOracle(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}

    bool less(NodeId a, NodeId b) const override {
        return weights_[static_cast<std::size_t>(a)] < weights_[static_cast<std::size_t>(b)];
    }

    const std::vector<std::int64_t>& weights() const { return weights_; }

  private:
    std::vector<std::int64_t> weights_;
};

// Counts every call forwarded to the wrapped oracle.
class CountingOracle final : public WeightOracle {
  public:
    using Snapshot = std::uint64_t;

    explicit CountingOracle(const WeightOracle& inner) : inner_(&inner) {}

    bool less(NodeId a, NodeId b) const override {
        ++calls_;
        return inner_->less(a, b);
    }

    std::uint64_t calls() const { return calls_; }
    Snapshot snapshot() const { return calls_; }
    bool no_calls_since(Snapshot s) const { return calls_ == s; }

  private:
    const WeightOracle* inner_;
    mutable std::uint64_t calls_ = 0;
};

// Strict total order on the nodes of one tree: values first, then ascending
// node id. The root is the maximum and is compared without touching the
// oracle. Each comparison costs at most two oracle calls.
class CompOrder {
  public:
    CompOrder(const WeightOracle& oracle, NodeId root) : oracle_(&oracle), root_(root) {}

    // Throws std::invalid_argument when v == u.
    bool operator()(NodeId v, NodeId u) const;

    // Returns whichever of the two distinct nodes precedes the other.
    NodeId min(NodeId v, NodeId u) const { return (*this)(v, u) ? v : u; }

    NodeId root() const { return root_; }
    std::uint64_t comparisons() const { return comparisons_; }

  private:
    const WeightOracle* oracle_;
    NodeId root_;
    mutable std::uint64_t comparisons_ = 0;
};

}  // namespace pathmin
