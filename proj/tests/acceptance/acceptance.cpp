// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "commands.hpp"
#include "pathmin/adversary.hpp"
#include "pathmin/generators.hpp"
#include "pathmin/ladders.hpp"
#include "pathmin/lifting.hpp"
#include "pathmin/pathmin.hpp"
#include "pathmin/reference.hpp"
#include "pathmin/rmq.hpp"

namespace {

using namespace pathmin;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t floor_log2(NodeId x) { return static_cast<std::uint64_t>(std::bit_width(static_cast<unsigned>(x)) - 1); }

// Shared across criteria 1, 4, 6 and 8; reported as criterion 2.
struct OracleGuard {
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;

    void record(bool clean) {
        ++checks;
        if (!clean) ++violations;
    }
};

struct Mismatches {
    std::uint64_t pre_lower = 0;
    std::uint64_t lower_dist = 0;
    std::uint64_t pre_lower_arrays = 0;
    std::uint64_t lower_dist_nodes = 0;
};

// Criterion 7 on one tree: ladder preLower and lowerDist against brute force.
void check_tree_oracles(const PathMinIndex& index, const IntWeightOracle& weights, Mismatches& m) {
    const RootedTree& tree = index.tree();
    const CompOrder comp(weights, tree.root());
    const auto nodes = index.ladders().nodes();
    const auto bounds = index.ladders().bounds();
    const auto& pre = index.ladder_pre_lower();
    for (std::size_t s = 1; s < bounds.size(); ++s) {
        const std::span<const NodeId> ladder(nodes.data() + bounds[s - 1], bounds[s] - bounds[s - 1]);
        const auto expected = brute_pre_lower(ladder, comp);
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            const Position want = expected[i] == kNoPosition ? kNoPosition
                                                             : expected[i] + static_cast<Position>(bounds[s - 1]);
            if (pre[bounds[s - 1] + i] != want) ++m.pre_lower;
        }
        ++m.pre_lower_arrays;
    }
    const BruteForceModel brute(tree, comp);
    for (NodeId v = 0; v < tree.size(); ++v) {
        if (v == tree.root()) continue;
        if (index.lower().dist[static_cast<std::size_t>(v)] != brute.brute_lower_dist(v)) ++m.lower_dist;
        ++m.lower_dist_nodes;
    }
}

Outcome criterion1(OracleGuard& guard, Mismatches& oracles) {
    const auto start = Clock::now();
    Rng rng(20240601);
    std::uint64_t queries = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t tie_trees = 0;
    const int trees = 250;
    for (int t = 0; t < trees; ++t) {
        const Shape shape = kAllShapes[t % 5];
        const NodeId n = 1 + static_cast<NodeId>(rng() % 300);
        RootedTree tree = make_shape(shape, n, rng);
        const std::int64_t range = t % 2 == 0 ? 3 : std::max<std::int64_t>(2, n / 4);
        const IntWeightOracle weights(random_weights(n, range, rng));
        {
            auto sorted = weights.weights();
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ++tie_trees;
        }
        const CountingOracle counter(weights);
        const PathMinIndex index(tree, counter);
        const CompOrder comp(weights, tree.root());
        const BruteForceModel brute(tree, comp);

        std::vector<QueryResult> expected;
        for (NodeId v = 0; v < n; ++v) {
            for (NodeId l = 0; l <= tree.depth(v); ++l) expected.push_back(brute.brute_min(v, l));
        }
        const auto snapshot = counter.snapshot();
        std::size_t i = 0;
        for (NodeId v = 0; v < n; ++v) {
            for (NodeId l = 0; l <= tree.depth(v); ++l, ++i) {
                if (index.query(v, l) != expected[i]) ++mismatches;
                ++queries;
            }
        }
        guard.record(counter.no_calls_since(snapshot));
        check_tree_oracles(index, weights, oracles);
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "trees=" << trees << " tie_trees=" << tie_trees << " queries=" << queries << " mismatches=" << mismatches
      << " seconds=" << elapsed;
    return {mismatches == 0 && trees >= 200 && elapsed < 60.0, d.str()};
}

Outcome criterion3() {
    const std::array<NodeId, 5> sizes{1 << 8, 1 << 10, 1 << 12, 1 << 14, 1 << 16};
    cli::BenchOptions options;
    options.seed = 1;
    options.queries = 1000;
    options.timing = false;
    bool pass = true;
    std::ostringstream d;
    for (const Shape shape : kAllShapes) {
        double ratio_1k = 0.0;
        double ratio_64k = 0.0;
        double worst = 0.0;
        for (const NodeId n : sizes) {
            const auto r = cli::bench_one(shape, n, options);
            const std::uint64_t bound = 10ull * static_cast<std::uint64_t>(n) * (floor_log2(std::max(r.h, 1)) + 2);
            if (r.oracle_calls > bound) pass = false;
            worst = std::max(worst, static_cast<double>(r.oracle_calls) / static_cast<double>(bound));
            if (n == (1 << 10)) ratio_1k = r.calls_per_nlogh;
            if (n == (1 << 16)) ratio_64k = r.calls_per_nlogh;
        }
        const bool flat = ratio_64k <= 1.5 * ratio_1k;
        if (!flat) pass = false;
        d << shape_name(shape) << ":max_calls/bound=" << worst << ",ratio_2^10=" << ratio_1k
          << ",ratio_2^16=" << ratio_64k << ' ';
    }
    return {pass, d.str()};
}

struct LatencyRun {
    double median_ns = 0.0;
    double leaf_median_ns = 0.0;
    double batch_ns = 0.0;
};

double median(std::vector<double> values) {
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

std::vector<std::pair<NodeId, NodeId>> random_queries(const RootedTree& tree, std::size_t count, Rng& rng,
                                                      bool leaves_only) {
    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < tree.size(); ++v) {
        if (tree.depth(v) >= 1 && (!leaves_only || tree.is_leaf(v))) candidates.push_back(v);
    }
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::vector<std::pair<NodeId, NodeId>> queries(count);
    for (auto& [v, l] : queries) {
        v = candidates[pick(rng)];
        l = std::uniform_int_distribution<NodeId>(1, tree.depth(v))(rng);
    }
    return queries;
}

std::vector<double> time_each(const PathMinIndex& index, const std::vector<std::pair<NodeId, NodeId>>& queries) {
    volatile NodeId sink = kNoNode;
    std::vector<double> ns(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const auto t0 = Clock::now();
        sink = index.query_unchecked(queries[i].first, queries[i].second);
        const auto t1 = Clock::now();
        ns[i] = std::chrono::duration<double, std::nano>(t1 - t0).count();
    }
    static_cast<void>(sink);
    return ns;
}

LatencyRun measure_latency(NodeId n, std::size_t count, OracleGuard& guard) {
    Rng rng(0x5eed0000ull + static_cast<std::uint64_t>(n));
    RootedTree tree = make_shape(Shape::Path, n, rng);
    const IntWeightOracle weights(random_weights(n, n, rng));
    const CountingOracle counter(weights);
    const PathMinIndex index(std::move(tree), counter);
    const auto snapshot = counter.snapshot();

    // Warm up code paths and the clock on an unrelated query set.
    time_each(index, random_queries(index.tree(), count / 10, rng, false));

    LatencyRun run;
    run.median_ns = median(time_each(index, random_queries(index.tree(), count, rng, false)));
    run.leaf_median_ns = median(time_each(index, random_queries(index.tree(), count, rng, true)));

    const auto batch = random_queries(index.tree(), count, rng, false);
    NodeId acc = 0;
    const auto t0 = Clock::now();
    for (const auto& [v, l] : batch) acc ^= index.query_unchecked(v, l);
    run.batch_ns = std::chrono::duration<double, std::nano>(Clock::now() - t0).count() /
                   static_cast<double>(batch.size());
    volatile NodeId sink = acc;
    static_cast<void>(sink);

    guard.record(counter.no_calls_since(snapshot));
    return run;
}

Outcome criterion4(OracleGuard& guard) {
    const std::size_t count = 200000;
    const auto small = measure_latency(1 << 10, count, guard);
    const auto large = measure_latency(1 << 20, count, guard);
    const double ratio = large.median_ns / small.median_ns;
    std::ostringstream d;
    d << "queries=" << count << " median_2^10=" << small.median_ns << "ns median_2^20=" << large.median_ns
      << "ns ratio=" << ratio << " (diagnostic: leaf-origin ratio=" << large.leaf_median_ns / small.leaf_median_ns
      << " batch ratio=" << large.batch_ns / small.batch_ns << ")";
    return {ratio <= 3.0, d.str()};
}

Outcome criterion5() {
    Rng rng(77);
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    const int trees = 120;
    for (int t = 0; t < trees; ++t) {
        const NodeId n = 1 + static_cast<NodeId>(rng() % 500);
        const RootedTree tree = t % 3 == 0 ? make_shape(kAllShapes[(t / 3) % 5], n, rng)
                                           : random_tree(n, n == 1 ? 0 : 1 + static_cast<NodeId>(rng() % (n - 1)), rng);
        const auto lpd = longest_path_decomposition(tree);
        const auto ladders = extend_to_ladders(lpd, tree);
        for (NodeId x = 0; x < n; ++x) {
            const auto ladder = ladders.ladder(static_cast<std::size_t>(ladders.base_ladder(x)));
            const auto pos_x = static_cast<std::size_t>(tree.depth(ladder[0]) - tree.depth(x));
            if (pos_x >= ladder.size() || ladder[pos_x] != x) {
                ++violations;
                continue;
            }
            // x attains every descendant distance up to down[x]; the segment
            // [y, x] is contained iff each node on it sits at its slot.
            const NodeId reach = std::min(lpd.down[static_cast<std::size_t>(x)], tree.depth(x));
            NodeId y = x;
            for (NodeId d = 1; d <= reach; ++d) {
                y = tree.parent(y);
                const std::size_t slot = pos_x + static_cast<std::size_t>(d);
                if (slot >= ladder.size() || ladder[slot] != y) ++violations;
                ++checked;
            }
        }
    }
    std::ostringstream d;
    d << "trees=" << trees << " (x,y) pairs=" << checked << " violations=" << violations;
    return {violations == 0 && trees >= 100, d.str()};
}

// Checks one array for criteria 6 and 7. Nodes are 1..m, node 0 is the root.
void check_array(const std::vector<std::int64_t>& values, OracleGuard& guard, std::uint64_t& mismatches,
                 std::uint64_t& queries, Mismatches& oracles) {
    const std::size_t m = values.size();
    std::vector<std::int64_t> w{0};
    w.insert(w.end(), values.begin(), values.end());
    const IntWeightOracle oracle(w);
    const CountingOracle counter(oracle);
    const CompOrder comp(counter, 0);
    const CompOrder plain(oracle, 0);
    std::vector<NodeId> array(m);
    std::iota(array.begin(), array.end(), 1);

    const auto table = build_sparse_table(array, comp);
    const auto pre = build_pre_lower(array, comp);
    const FloorLog lg(m);

    const auto brute_pre = brute_pre_lower(array, plain);
    if (!std::equal(pre.begin(), pre.end(), brute_pre.begin())) ++oracles.pre_lower;
    ++oracles.pre_lower_arrays;

    const auto calls = counter.snapshot();
    const auto comparisons = comp.comparisons();
    std::vector<Position> got;
    got.reserve(m * (m + 1) / 2);
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t r = l + 1; r <= m; ++r) got.push_back(rmq_query(table, pre, l, r, lg));
    }
    guard.record(counter.no_calls_since(calls) && comp.comparisons() == comparisons);

    std::size_t i = 0;
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t r = l + 1; r <= m; ++r, ++i) {
            if (got[i] != brute_range_min(array, l, r, plain)) ++mismatches;
            ++queries;
        }
    }

    // The same values read as a root-ward path: node m is deepest, node 1 sits under the root.
    std::vector<NodeId> parent(m + 1);
    parent[0] = kNoNode;
    for (std::size_t v = 1; v <= m; ++v) parent[v] = static_cast<NodeId>(v - 1);
    const RootedTree path(std::move(parent), 0);
    const auto lower = compute_lower_dist(path, build_lifting(path, plain), plain);
    const BruteForceModel brute(path, plain);
    for (NodeId v = 1; v <= static_cast<NodeId>(m); ++v) {
        if (lower.dist[static_cast<std::size_t>(v)] != brute.brute_lower_dist(v)) ++oracles.lower_dist;
        ++oracles.lower_dist_nodes;
    }
}

Outcome criterion6(OracleGuard& guard, Mismatches& oracles) {
    std::uint64_t mismatches = 0;
    std::uint64_t queries = 0;
    std::uint64_t arrays = 0;
    for (std::size_t m = 1; m <= 10; ++m) {
        std::vector<std::int64_t> values(m, 0);
        while (true) {
            check_array(values, guard, mismatches, queries, oracles);
            ++arrays;
            std::size_t i = 0;
            while (i < m && values[i] == 2) values[i++] = 0;
            if (i == m) break;
            ++values[i];
        }
    }
    Rng rng(606);
    for (int t = 0; t < 300; ++t) {
        const std::size_t m = 1 + rng() % 256;
        const std::uint64_t range = t % 3 == 0 ? 3 : (t % 3 == 1 ? 16 : 1u << 20);
        std::vector<std::int64_t> values(m);
        for (auto& v : values) v = static_cast<std::int64_t>(rng() % range);
        check_array(values, guard, mismatches, queries, oracles);
        ++arrays;
    }
    std::ostringstream d;
    d << "arrays=" << arrays << " ranges=" << queries << " mismatches=" << mismatches;
    return {mismatches == 0, d.str()};
}

Outcome criterion7(const Mismatches& m) {
    std::ostringstream d;
    d << "preLower arrays=" << m.pre_lower_arrays << " mismatches=" << m.pre_lower
      << " lowerDist nodes=" << m.lower_dist_nodes << " mismatches=" << m.lower_dist;
    return {m.pre_lower == 0 && m.lower_dist == 0 && m.pre_lower_arrays > 0 && m.lower_dist_nodes > 0, d.str()};
}

// Every choice vector of (x, q), in odometer order.
std::vector<WeightChoice> all_choices(NodeId x, NodeId q) {
    std::vector<WeightChoice> out;
    WeightChoice c(static_cast<std::size_t>(q), std::vector<NodeId>(static_cast<std::size_t>(x), 0));
    while (true) {
        out.push_back(c);
        bool carried = true;
        for (std::size_t copy = 0; copy < c.size() && carried; ++copy) {
            for (std::size_t i = 0; i < c[copy].size() && carried; ++i) {
                if (c[copy][i] + 1 < static_cast<NodeId>(i + 1)) {
                    ++c[copy][i];
                    carried = false;
                } else {
                    c[copy][i] = 0;
                }
            }
        }
        if (carried) return out;
    }
}

Outcome criterion8(OracleGuard& guard) {
    const auto start = Clock::now();
    bool pass = true;
    std::ostringstream d;
    for (const auto [x, q] : std::array<std::pair<NodeId, NodeId>, 5>{{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {4, 1}}}) {
        const auto result = check_distinguishability(x, q);
        std::uint64_t factorial = 1;
        for (NodeId i = 2; i <= x; ++i) factorial *= static_cast<std::uint64_t>(i);
        std::uint64_t expected = 1;
        for (NodeId i = 0; i < q; ++i) expected *= factorial;
        if (!result.all_distinct || result.count != expected || result.expected != expected) pass = false;

        const std::uint64_t floor = info_lower_bound(x, q);
        std::uint64_t min_calls = UINT64_MAX;
        std::uint64_t instances = 0;
        for (const auto& choice : all_choices(x, q)) {
            const auto inst = generate_instance(x, q, choice);
            const IntWeightOracle weights(inst.weights);
            const CountingOracle counter(weights);
            const PathMinIndex index(inst.tree, counter);
            const auto snapshot = counter.snapshot();
            for (NodeId v = 0; v < inst.tree.size(); ++v) {
                for (NodeId l = 0; l <= inst.tree.depth(v); ++l) static_cast<void>(index.query(v, l));
            }
            guard.record(counter.no_calls_since(snapshot));
            min_calls = std::min(min_calls, index.stats().oracle_calls);
            ++instances;
        }
        if (min_calls < floor || instances != expected) pass = false;
        d << "(" << x << "," << q << "):tables=" << result.count << "/" << expected << ",floor=" << floor
          << ",min_calls=" << min_calls << " ";
    }
    const double elapsed = seconds_since(start);
    d << "seconds=" << elapsed;
    return {pass && elapsed < 120.0, d.str()};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome criterion9() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("pathmin_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::array<std::string, 2> csv;
    bool exit_ok = true;
    for (std::size_t run = 0; run < 2; ++run) {
        const std::string path = (dir / ("bench" + std::to_string(run) + ".csv")).string();
        const std::vector<std::string> args{"pathmin",  "bench",   "--shapes",   "path,random,star,caterpillar,binary",
                                            "--sizes",  "256,4096", "--seed",     "42",
                                            "--queries", "2000",   "--no-timing", "--csv",
                                            path};
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        if (cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err) != cli::kSuccess) exit_ok = false;
        csv[run] = read_file(path);
    }
    fs::remove_all(dir);

    Rng rng(9);
    const RootedTree tree = random_tree(5000, 300, rng);
    const IntWeightOracle weights(random_weights(5000, 40, rng));
    const auto first = PathMinIndex(tree, weights).digest();
    const auto second = PathMinIndex(tree, weights).digest();

    std::ostringstream d;
    d << "csv_bytes=" << csv[0].size() << " csv_identical=" << (csv[0] == csv[1] ? "yes" : "no") << " digest=" << std::hex
      << first << (first == second ? " (identical)" : " (differs)");
    return {exit_ok && !csv[0].empty() && csv[0] == csv[1] && first == second, d.str()};
}

}  // namespace

int main() {
    OracleGuard guard;
    Mismatches oracles;
    std::array<Outcome, 10> results;
    std::array<double, 10> seconds{};
    const auto timed = [&](int id, const std::function<Outcome()>& run) {
        const auto start = Clock::now();
        results[static_cast<std::size_t>(id)] = run();
        seconds[static_cast<std::size_t>(id)] = seconds_since(start);
        std::cerr << "criterion " << id << " done in " << seconds[static_cast<std::size_t>(id)] << " s\n";
    };

    timed(1, [&] { return criterion1(guard, oracles); });
    timed(5, criterion5);
    timed(6, [&] { return criterion6(guard, oracles); });
    timed(7, [&] { return criterion7(oracles); });
    timed(8, [&] { return criterion8(guard); });
    timed(3, criterion3);
    timed(9, criterion9);
    timed(4, [&] { return criterion4(guard); });
    {
        std::ostringstream d;
        d << "guarded query batches=" << guard.checks << " with oracle or comparator calls=" << guard.violations;
        results[2] = {guard.violations == 0 && guard.checks > 0, d.str()};
    }

    static constexpr std::array<const char*, 10> kNames{
        "",
        "oracle equivalence (exhaustive, n <= 300)",
        "zero oracle calls at query time",
        "preprocessing call bound",
        "constant query time (median ratio <= 3x)",
        "base ladder coverage",
        "range minimum correctness without comparisons",
        "preLower and lowerDist match brute force",
        "lower-bound family distinguishability and floor",
        "determinism of bench CSV and stored minima",
    };
    int failures = 0;
    for (std::size_t id = 1; id <= 9; ++id) {
        const auto& r = results[id];
        if (!r.pass) ++failures;
        std::cout << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << " | " << kNames[id] << " | "
                  << r.detail << '\n';
    }
    std::cout << (failures == 0 ? "acceptance: PASS" : "acceptance: FAIL") << " (" << 9 - failures << "/9)\n";
    return failures == 0 ? 0 : 1;
}
