#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathmin/generators.hpp"
#include "pathmin/tree.hpp"

namespace pathmin {

// choice[c][i - 1] in [0, i) picks where the leaf hanging off spine node
// b_i of copy c falls: 0 is below b_1, j >= 1 is between b_j and b_{j+1}.
using WeightChoice = std::vector<std::vector<NodeId>>;

// q copies of a spine b_1..b_X under a shared dummy root, with a leaf on
// every spine node. Spine weights increase with depth; copies occupy
// disjoint value ranges.
struct AdversarialInstance {
    NodeId spine_length = 0;  // X
    NodeId copies = 0;        // q
    RootedTree tree;
    std::vector<std::int64_t> weights;

    // i is 1-based along the spine.
    NodeId spine(NodeId copy, NodeId i) const { return 1 + 2 * spine_length * copy + 2 * (i - 1); }
    NodeId leaf(NodeId copy, NodeId i) const { return spine(copy, i) + 1; }
};

// Throws std::invalid_argument for X < 1, q < 1, a malformed choice, or a
// pad_to smaller than 1 + 2qX. Padding leaves sit under the root with
// distinct values above every other weight.
AdversarialInstance generate_instance(NodeId x, NodeId q, const WeightChoice& choice,
                                      std::optional<NodeId> pad_to = std::nullopt);

WeightChoice max_choice(NodeId x, NodeId q);
WeightChoice random_choice(NodeId x, NodeId q, Rng& rng);

// Nearest smaller ancestor of every leaf, copy-major: kNoNode or a spine node.
std::vector<NodeId> answer_vector(const AdversarialInstance& instance);

struct Distinguishability {
    bool all_distinct = false;
    std::uint64_t count = 0;     // distinct answer tables seen
    std::uint64_t expected = 0;  // (X!)^q, or 2^s for the height-two family
};

inline constexpr std::uint64_t kEnumerationLimit = 100000;

// Enumerates every weight choice and compares the full tables of
// leaf-to-ancestor answers. Throws std::length_error past kEnumerationLimit.
Distinguishability check_distinguishability(NodeId x, NodeId q);

// (X!)^q, or nullopt once it exceeds `cap`.
std::optional<std::uint64_t> answer_vector_count(NodeId x, NodeId q, std::uint64_t cap = kEnumerationLimit);

// Smallest K with 2^K >= (X!)^q, i.e. ceil(q * log2(X!)), in exact arithmetic.
std::uint64_t info_lower_bound(NodeId x, NodeId q);

struct AdversaryParameters {
    NodeId x;
    NodeId q;
};

// X = floor(min(h/2, n/4)), q = floor((n-1) / 2X). Throws std::out_of_range
// unless 8 <= h <= n.
AdversaryParameters parameter_choice(NodeId n, NodeId h);

// Height-two family for small heights: s subtrees r -> b -> leaf; bit j of
// `orders` set means w(b) < w(leaf) in subtree j.
WeightedTree generate_height_two(NodeId subtrees, std::uint64_t orders);

// Exhaustive over all 2^s orders; throws std::length_error for s > 16.
Distinguishability check_height_two(NodeId subtrees);

}  // namespace pathmin
