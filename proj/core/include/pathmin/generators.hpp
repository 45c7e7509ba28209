#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pathmin/tree.hpp"

namespace pathmin {

using Rng = std::mt19937_64;

enum class Shape { Path, Random, Star, Caterpillar, Binary };

inline constexpr Shape kAllShapes[] = {Shape::Path, Shape::Random, Shape::Star, Shape::Caterpillar, Shape::Binary};

std::string_view shape_name(Shape shape);
// Throws std::invalid_argument for an unknown name.
Shape parse_shape(std::string_view name);

// path: chain rooted at 0. star: every node under 0. caterpillar: a spine of
// ceil(n/2) nodes with one leaf on each of the first floor(n/2) spine nodes.
// binary: heap-ordered complete binary tree. random: random recursive tree
// with shuffled labels.
RootedTree make_shape(Shape shape, NodeId n, Rng& rng);

// Random tree with exactly the given height: a grafted path of h + 1 nodes,
// the rest attached uniformly to earlier nodes of depth < h, then relabelled.
// Throws std::invalid_argument unless n >= 1 and (n == 1 ? h == 0 : 1 <= h < n).
RootedTree random_tree(NodeId n, NodeId height, Rng& rng);

// Node weights drawn uniformly from [0, range); small ranges force ties.
std::vector<std::int64_t> random_weights(NodeId n, std::int64_t range, Rng& rng);

}  // namespace pathmin
