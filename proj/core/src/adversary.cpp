#include "pathmin/adversary.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <stdexcept>
#include <string>

#include "pathmin/reference.hpp"

namespace pathmin {

namespace {

// Full table of leaf-to-ancestor answers over every leaf and every endpoint.
std::vector<NodeId> answer_table(const RootedTree& tree, std::span<const std::int64_t> weights) {
    const IntWeightOracle oracle({weights.begin(), weights.end()});
    const CompOrder comp(oracle, tree.root());
    const BruteForceModel model(tree, comp);
    std::vector<NodeId> table;
    for (NodeId v = 0; v < tree.size(); ++v) {
        if (!tree.is_leaf(v)) continue;
        for (NodeId l = 1; l <= tree.depth(v); ++l) table.push_back(model.brute_min(v, l).node);
    }
    return table;
}

}  // namespace

AdversarialInstance generate_instance(NodeId x, NodeId q, const WeightChoice& choice, std::optional<NodeId> pad_to) {
    if (x < 1 || q < 1) throw std::invalid_argument("spine length and copy count must be positive");
    if (choice.size() != static_cast<std::size_t>(q)) throw std::invalid_argument("choice needs one row per copy");
    for (const auto& row : choice) {
        if (row.size() != static_cast<std::size_t>(x)) throw std::invalid_argument("choice row must have X entries");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0 || row[i] > static_cast<NodeId>(i)) {
                throw std::invalid_argument("choice for leaf " + std::to_string(i + 1) + " must lie in [0, " +
                                            std::to_string(i + 1) + ")");
            }
        }
    }
    const NodeId core = 1 + 2 * q * x;
    const NodeId n = pad_to.value_or(core);
    if (n < core) throw std::invalid_argument("pad_to is smaller than the instance");

    AdversarialInstance inst;
    inst.spine_length = x;
    inst.copies = q;
    std::vector<NodeId> parent(static_cast<std::size_t>(n), 0);
    parent[0] = kNoNode;
    inst.weights.assign(static_cast<std::size_t>(n), 0);

    const std::int64_t stride = 10 * (static_cast<std::int64_t>(x) + 2);
    for (NodeId c = 0; c < q; ++c) {
        const std::int64_t offset = stride * c;
        for (NodeId i = 1; i <= x; ++i) {
            const auto b = static_cast<std::size_t>(inst.spine(c, i));
            const auto leaf = static_cast<std::size_t>(inst.leaf(c, i));
            parent[b] = i == 1 ? 0 : inst.spine(c, i - 1);
            parent[leaf] = static_cast<NodeId>(b);
            inst.weights[b] = offset + 10 * i;
            const NodeId j = choice[static_cast<std::size_t>(c)][static_cast<std::size_t>(i - 1)];
            inst.weights[leaf] = offset + (j == 0 ? 1 : 10 * static_cast<std::int64_t>(j) + 5);
        }
    }
    for (NodeId v = core; v < n; ++v) inst.weights[static_cast<std::size_t>(v)] = stride * q + 1 + (v - core);
    inst.tree = RootedTree(std::move(parent), 0);
    return inst;
}

WeightChoice max_choice(NodeId x, NodeId q) {
    WeightChoice choice(static_cast<std::size_t>(q), std::vector<NodeId>(static_cast<std::size_t>(x)));
    for (auto& row : choice) {
        for (NodeId i = 0; i < x; ++i) row[static_cast<std::size_t>(i)] = i;
    }
    return choice;
}

WeightChoice random_choice(NodeId x, NodeId q, Rng& rng) {
    WeightChoice choice = max_choice(x, q);
    for (auto& row : choice) {
        for (auto& j : row) j = std::uniform_int_distribution<NodeId>(0, j)(rng);
    }
    return choice;
}

std::vector<NodeId> answer_vector(const AdversarialInstance& inst) {
    const IntWeightOracle oracle(inst.weights);
    const CompOrder comp(oracle, inst.tree.root());
    const BruteForceModel model(inst.tree, comp);
    std::vector<NodeId> answers;
    answers.reserve(static_cast<std::size_t>(inst.copies * inst.spine_length));
    for (NodeId c = 0; c < inst.copies; ++c) {
        for (NodeId i = 1; i <= inst.spine_length; ++i) {
            const NodeId leaf = inst.leaf(c, i);
            const NodeId d = model.brute_lower_dist(leaf);
            answers.push_back(d == kInfiniteDistance ? kNoNode : inst.tree.ancestor(leaf, d));
        }
    }
    return answers;
}

std::optional<std::uint64_t> answer_vector_count(NodeId x, NodeId q, std::uint64_t cap) {
    std::uint64_t factorial = 1;
    for (NodeId i = 2; i <= x; ++i) {
        factorial *= static_cast<std::uint64_t>(i);
        if (factorial > cap) return std::nullopt;
    }
    std::uint64_t total = 1;
    for (NodeId c = 0; c < q; ++c) {
        total *= factorial;
        if (total > cap) return std::nullopt;
    }
    return total;
}

Distinguishability check_distinguishability(NodeId x, NodeId q) {
    if (x < 1 || q < 1) throw std::invalid_argument("spine length and copy count must be positive");
    const auto expected = answer_vector_count(x, q);
    if (!expected) {
        throw std::length_error("(X!)^q exceeds the enumeration limit of " + std::to_string(kEnumerationLimit));
    }

    // Odometer over every choice vector; digit i of each row runs over [0, i].
    WeightChoice choice(static_cast<std::size_t>(q), std::vector<NodeId>(static_cast<std::size_t>(x), 0));
    std::set<std::vector<NodeId>> tables;
    std::uint64_t enumerated = 0;
    while (true) {
        const auto inst = generate_instance(x, q, choice);
        tables.insert(answer_table(inst.tree, inst.weights));
        ++enumerated;

        bool advanced = false;
        for (auto& row : choice) {
            for (std::size_t i = 0; i < row.size() && !advanced; ++i) {
                if (row[i] < static_cast<NodeId>(i)) {
                    ++row[i];
                    advanced = true;
                } else {
                    row[i] = 0;
                }
            }
            if (advanced) break;
        }
        if (!advanced) break;
    }
    return {tables.size() == enumerated && enumerated == *expected, tables.size(), *expected};
}

std::uint64_t info_lower_bound(NodeId x, NodeId q) {
    if (x < 1 || q < 1) throw std::invalid_argument("spine length and copy count must be positive");
    using boost::multiprecision::cpp_int;
    cpp_int factorial = 1;
    for (NodeId i = 2; i <= x; ++i) factorial *= i;
    const cpp_int vectors = boost::multiprecision::pow(factorial, static_cast<unsigned>(q));
    if (vectors == 1) return 0;
    // 2^K >= V  <=>  K > log2(V - 1), i.e. K = bit length of V - 1.
    return static_cast<std::uint64_t>(boost::multiprecision::msb(cpp_int(vectors - 1))) + 1;
}

AdversaryParameters parameter_choice(NodeId n, NodeId h) {
    if (h < 8 || h > n) {
        throw std::out_of_range("parameter choice needs 8 <= h <= n (use the height-two family below 8)");
    }
    const NodeId x = std::min(h / 2, n / 4);
    return {x, (n - 1) / (2 * x)};
}

WeightedTree generate_height_two(NodeId subtrees, std::uint64_t orders) {
    if (subtrees < 1 || subtrees > 62) throw std::invalid_argument("height-two family needs 1..62 subtrees");
    const NodeId n = 1 + 2 * subtrees;
    std::vector<NodeId> parent(static_cast<std::size_t>(n), kNoNode);
    std::vector<std::int64_t> weights(static_cast<std::size_t>(n), 0);
    for (NodeId j = 0; j < subtrees; ++j) {
        const auto b = static_cast<std::size_t>(1 + 2 * j);
        parent[b] = 0;
        parent[b + 1] = static_cast<NodeId>(b);
        weights[b] = 10 * j + 5;
        weights[b + 1] = 10 * j + (((orders >> j) & 1U) != 0 ? 9 : 1);
    }
    return {RootedTree(std::move(parent), 0), std::move(weights)};
}

Distinguishability check_height_two(NodeId subtrees) {
    if (subtrees < 1 || subtrees > 16) throw std::length_error("height-two enumeration supports 1..16 subtrees");
    const std::uint64_t expected = std::uint64_t{1} << subtrees;
    std::set<std::vector<NodeId>> tables;
    for (std::uint64_t orders = 0; orders < expected; ++orders) {
        const auto wt = generate_height_two(subtrees, orders);
        tables.insert(answer_table(wt.tree, wt.weights));
    }
    return {tables.size() == expected, tables.size(), expected};
}

}  // namespace pathmin
