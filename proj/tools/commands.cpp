#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pathmin/adversary.hpp"
#include "pathmin/io.hpp"
#include "pathmin/ladders.hpp"
#include "pathmin/pathmin.hpp"
#include "pathmin/reference.hpp"

namespace pathmin::cli {

namespace {

WeightedTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tree file '" + path + "'");
    return read_tree(in);
}

void check_guard(const CountingOracle& counter, CountingOracle::Snapshot snapshot) {
    if (!counter.no_calls_since(snapshot)) {
        throw OracleGuardViolation("oracle was called " + std::to_string(counter.calls() - snapshot) +
                                   " time(s) after preprocessing");
    }
}

std::string describe(const QueryResult& r) {
    return r.is_empty() ? std::string("EMPTY") : std::to_string(r.node);
}

struct Mismatch {
    NodeId v;
    NodeId l;
    QueryResult expected;
    QueryResult actual;
};

// Compares the index against the reference on every (v, l) pair, or on a
// random sample of pairs for large trees.
std::optional<Mismatch> compare_with_reference(const PathMinIndex& index, const BruteForceModel& model,
                                               const VerifyOptions& options, Rng& rng, std::size_t& checked) {
    const RootedTree& tree = index.tree();
    auto check = [&](NodeId v, NodeId l) -> std::optional<Mismatch> {
        ++checked;
        const auto expected = model.brute_min(v, l);
        const auto actual = index.query(v, l);
        if (expected != actual) return Mismatch{v, l, expected, actual};
        return std::nullopt;
    };
    if (tree.size() <= options.exhaustive_limit) {
        for (NodeId v = 0; v < tree.size(); ++v) {
            for (NodeId l = 0; l <= tree.depth(v); ++l) {
                if (auto m = check(v, l)) return m;
            }
        }
        return std::nullopt;
    }
    std::uniform_int_distribution<NodeId> pick(0, tree.size() - 1);
    for (std::size_t i = 0; i < options.sampled_pairs; ++i) {
        const NodeId v = pick(rng);
        const NodeId l = std::uniform_int_distribution<NodeId>(0, tree.depth(v))(rng);
        if (auto m = check(v, l)) return m;
    }
    return std::nullopt;
}

std::string format_fixed(double value, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << value;
    return s.str();
}

template <typename T>
std::vector<T> split_list(const std::string& text, T (*parse)(const std::string&)) {
    std::vector<T> items;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) items.push_back(parse(item));
    }
    return items;
}

}  // namespace

int run_query(const std::string& tree_path, const std::string& queries_path, std::ostream& out, std::ostream& err) {
    WeightedTree wt;
    try {
        wt = load_tree(tree_path);
    } catch (const std::exception& e) {
        err << "error: " << tree_path << ": " << e.what() << '\n';
        return kUsageError;
    }
    std::ifstream queries(queries_path);
    if (!queries) {
        err << "error: cannot open query file '" << queries_path << "'\n";
        return kUsageError;
    }

    const IntWeightOracle weights = wt.oracle();
    const CountingOracle counter(weights);
    const PathMinIndex index(std::move(wt.tree), counter);
    const auto snapshot = counter.snapshot();

    std::string line;
    std::size_t line_number = 0;
    int status = kSuccess;
    while (std::getline(queries, line)) {
        ++line_number;
        try {
            const auto q = parse_query_line(line, line_number);
            if (!q) continue;
            const auto r = index.query(q->node, q->hops);
            if (r.is_empty()) {
                out << "EMPTY\n";
            } else {
                out << r.node << ' ' << index.tree().parent(r.node) << '\n';
            }
        } catch (const ParseError& e) {
            err << "error: " << queries_path << ": " << e.what() << '\n';
            status = kUsageError;
            break;
        } catch (const std::invalid_argument& e) {
            err << "error: " << queries_path << ": line " << line_number << ": " << e.what() << '\n';
            status = kUsageError;
            break;
        } catch (const std::out_of_range& e) {
            err << "error: " << queries_path << ": line " << line_number << ": " << e.what() << '\n';
            status = kUsageError;
            break;
        }
    }
    check_guard(counter, snapshot);
    return status;
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    Rng rng(options.seed);
    const int trials = options.tree_path ? 1 : options.trials;
    std::size_t checked = 0;
    for (int t = 0; t < trials; ++t) {
        WeightedTree wt;
        if (options.tree_path) {
            wt = load_tree(*options.tree_path);
        } else {
            wt.tree = random_tree(options.n, options.height, rng);
            // Alternate a tiny alphabet with a wider one so ties are common either way.
            const std::int64_t range = t % 2 == 0 ? 3 : std::max<std::int64_t>(2, options.n / 4);
            wt.weights = random_weights(options.n, range, rng);
        }

        const IntWeightOracle weights = wt.oracle();
        const CountingOracle counter(weights);
        PathMinIndex index(wt.tree, counter);
        if (options.corrupt) {
            for (NodeId v = 0; v < index.tree().size(); ++v) {
                if (index.tree().depth(v) >= 2) {
                    index.corrupt_for_testing(v);
                    break;
                }
            }
        }
        const auto snapshot = counter.snapshot();

        const CompOrder comp(weights, wt.tree.root());
        const BruteForceModel model(wt.tree, comp);
        const auto mismatch = compare_with_reference(index, model, options, rng, checked);
        check_guard(counter, snapshot);
        if (mismatch) {
            err << "verify: FAIL trial=" << t << " v=" << mismatch->v << " l=" << mismatch->l
                << " expected=" << describe(mismatch->expected) << " got=" << describe(mismatch->actual) << '\n';
            return kVerificationFailure;
        }
    }
    out << "verify: PASS trials=" << trials << " queries=" << checked << '\n';
    return kSuccess;
}

double calls_per_nlogh(std::uint64_t oracle_calls, NodeId n, NodeId h) {
    const int log_h = h >= 2 ? std::bit_width(static_cast<unsigned>(h)) - 1 : 1;
    return static_cast<double>(oracle_calls) / (static_cast<double>(n) * log_h);
}

BenchRecord bench_one(Shape shape, NodeId n, const BenchOptions& options) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(shape), static_cast<std::uint32_t>(n)};
    Rng rng(seq);
    RootedTree tree = make_shape(shape, n, rng);
    const IntWeightOracle weights(random_weights(n, n, rng));
    const CountingOracle counter(weights);
    const PathMinIndex index(std::move(tree), counter);
    const auto snapshot = counter.snapshot();
    const RootedTree& t = index.tree();

    BenchRecord record{shape, n, t.height(), options.timing ? index.stats().build_ms : 0.0,
                       index.stats().oracle_calls, calls_per_nlogh(index.stats().oracle_calls, n, t.height()),
                       0, 0.0, 0.0};

    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < n; ++v) {
        if (t.depth(v) >= 1) candidates.push_back(v);
    }
    if (candidates.empty()) return record;

    std::vector<std::pair<NodeId, NodeId>> queries(options.queries);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    for (auto& [v, l] : queries) {
        v = candidates[pick(rng)];
        l = std::uniform_int_distribution<NodeId>(1, t.depth(v))(rng);
    }

    volatile NodeId sink = kNoNode;
    double total_ns = 0.0;
    double max_ns = 0.0;
    for (const auto& [v, l] : queries) {
        const auto start = std::chrono::steady_clock::now();
        sink = index.query_unchecked(v, l);
        const auto stop = std::chrono::steady_clock::now();
        const double ns = std::chrono::duration<double, std::nano>(stop - start).count();
        total_ns += ns;
        max_ns = std::max(max_ns, ns);
    }
    check_guard(counter, snapshot);
    static_cast<void>(sink);

    record.queries = queries.size();
    if (options.timing) {
        record.avg_query_ns = total_ns / static_cast<double>(queries.size());
        record.max_query_ns = max_ns;
    }
    return record;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
    std::vector<BenchRecord> records;
    for (Shape shape : options.shapes) {
        for (NodeId n : options.sizes) records.push_back(bench_one(shape, n, options));
    }
    return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << '\n';
    for (const auto& r : records) {
        out << shape_name(r.shape) << ',' << r.n << ',' << r.h << ',' << format_fixed(r.build_ms, 3) << ','
            << r.oracle_calls << ',' << format_fixed(r.calls_per_nlogh, 4) << ',' << r.queries << ','
            << format_fixed(r.avg_query_ns, 1) << ',' << format_fixed(r.max_query_ns, 1) << '\n';
    }
}

int run_adversary(const AdversaryOptions& options, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    if (options.out_path) {
        file.open(*options.out_path);
        if (!file) {
            err << "error: cannot write '" << *options.out_path << "'\n";
            return kUsageError;
        }
    }
    std::ostream& tree_out = options.out_path ? static_cast<std::ostream&>(file) : out;
    std::ostream& report = options.out_path ? out : err;

    WeightedTree wt;
    std::uint64_t floor = 0;
    std::optional<Distinguishability> check;
    if (options.height_two) {
        const NodeId s = *options.height_two;
        Rng rng(options.seed);
        const std::uint64_t orders = options.random_choice ? rng() : ~std::uint64_t{0};
        wt = generate_height_two(s, orders);
        floor = static_cast<std::uint64_t>(s);
        if (options.check) check = check_height_two(s);
    } else {
        WeightChoice choice;
        if (options.random_choice) {
            Rng rng(options.seed);
            choice = random_choice(options.x, options.q, rng);
        } else {
            choice = max_choice(options.x, options.q);
        }
        auto inst = generate_instance(options.x, options.q, choice, options.pad_to);
        wt = {std::move(inst.tree), std::move(inst.weights)};
        floor = info_lower_bound(options.x, options.q);
        if (options.check) check = check_distinguishability(options.x, options.q);
    }

    write_tree(tree_out, wt.tree, wt.weights);

    const IntWeightOracle weights = wt.oracle();
    const PathMinIndex index(wt.tree, weights);
    if (check) {
        report << "vectors=" << check->count << " expected=" << check->expected << " floor=" << floor << '\n';
    } else {
        report << "nodes=" << wt.tree.size() << " height=" << wt.tree.height() << " floor=" << floor << '\n';
    }
    report << "index_calls=" << index.stats().oracle_calls << '\n';
    if (check && !check->all_distinct) return kVerificationFailure;
    return kSuccess;
}

int run_ladders(const std::string& tree_path, std::ostream& out, std::ostream& err) {
    try {
        const auto wt = load_tree(tree_path);
        write_ladders(out, extend_to_ladders(longest_path_decomposition(wt.tree), wt.tree));
    } catch (const std::exception& e) {
        err << "error: " << tree_path << ": " << e.what() << '\n';
        return kUsageError;
    }
    return kSuccess;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leaf-to-ancestor path-minimum index in the comparison-oracle model", "pathmin"};
    app.require_subcommand(1);

    std::string tree_path;
    std::string queries_path;
    auto* query = app.add_subcommand("query", "Answer queries 'v l' against a tree file");
    query->add_option("tree", tree_path, "Tree file")->required();
    query->add_option("queries", queries_path, "Query file")->required();

    VerifyOptions verify_opts;
    std::vector<std::int64_t> random_args;
    std::string verify_tree;
    auto* verify = app.add_subcommand("verify", "Check the index against the brute-force reference");
    auto* random_opt = verify->add_option("--random", random_args, "n h seed trials")->expected(4);
    auto* tree_opt = verify->add_option("--tree", verify_tree, "Tree file to verify");
    random_opt->excludes(tree_opt);
    verify->add_flag("--corrupt-for-testing", verify_opts.corrupt, "Damage one stored minimum (harness self-test)")
        ->group("");

    BenchOptions bench_opts;
    std::string shapes = "path,random,star,caterpillar,binary";
    std::string sizes = "256,1024,4096";
    std::string csv_path = "-";
    bool no_timing = false;
    auto* bench = app.add_subcommand("bench", "Measure preprocessing oracle calls and query latency");
    bench->add_option("--shapes", shapes, "Comma-separated shapes")->capture_default_str();
    bench->add_option("--sizes", sizes, "Comma-separated node counts")->capture_default_str();
    bench->add_option("--seed", bench_opts.seed, "Random seed")->envname("PATHMIN_SEED")->capture_default_str();
    bench->add_option("--queries", bench_opts.queries, "Timed queries per tree")->capture_default_str();
    bench->add_option("--csv", csv_path, "Output CSV path ('-' for stdout)")->capture_default_str();
    bench->add_flag("--no-timing", no_timing, "Write zeros in the timing columns (byte-reproducible output)");

    AdversaryOptions adv_opts;
    NodeId adv_n = 0;
    NodeId adv_h = 0;
    std::string out_path;
    auto* adversary = app.add_subcommand("adversary", "Emit a lower-bound instance");
    auto* x_opt = adversary->add_option("--x", adv_opts.x, "Spine length X");
    auto* q_opt = adversary->add_option("--q", adv_opts.q, "Number of copies q");
    auto* n_opt = adversary->add_option("--nodes", adv_n, "Derive X, q from a node budget (with --height)");
    auto* h_opt = adversary->add_option("--height", adv_h, "Height budget for --nodes");
    auto* two_opt = adversary->add_option("--height-two", adv_opts.height_two, "Height-two family with S subtrees");
    x_opt->needs(q_opt);
    q_opt->needs(x_opt);
    n_opt->needs(h_opt);
    h_opt->needs(n_opt);
    x_opt->excludes(n_opt)->excludes(two_opt);
    n_opt->excludes(two_opt);
    adversary->add_flag("--check", adv_opts.check, "Enumerate every weight choice and count distinct answer tables");
    adversary->add_option("--pad-to", adv_opts.pad_to, "Pad with leaves under the root up to N nodes");
    adversary->add_flag("--random-choice", adv_opts.random_choice, "Random leaf intervals instead of the maximal ones");
    adversary->add_option("--seed", adv_opts.seed, "Seed for --random-choice")->envname("PATHMIN_SEED");
    adversary->add_option("--out", out_path, "Write the tree file here instead of stdout");

    std::string ladders_tree;
    auto* ladders = app.add_subcommand("ladders", "Dump the ladder decomposition, one ladder per line");
    ladders->add_option("tree", ladders_tree, "Tree file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*query) return run_query(tree_path, queries_path, out, err);
        if (*verify) {
            if (!random_args.empty()) {
                if (random_args[0] < 1 || random_args[1] < 0 || random_args[3] < 0) {
                    err << "error: --random needs n >= 1, h >= 0, trials >= 0\n";
                    return kUsageError;
                }
                verify_opts.n = static_cast<NodeId>(random_args[0]);
                verify_opts.height = static_cast<NodeId>(random_args[1]);
                verify_opts.seed = static_cast<std::uint64_t>(random_args[2]);
                verify_opts.trials = static_cast<int>(random_args[3]);
            } else if (!verify_tree.empty()) {
                verify_opts.tree_path = verify_tree;
            } else {
                err << "error: verify needs --random or --tree\n";
                return kUsageError;
            }
            return run_verify(verify_opts, out, err);
        }
        if (*bench) {
            bench_opts.shapes = split_list<Shape>(shapes, [](const std::string& s) { return parse_shape(s); });
            bench_opts.sizes = split_list<NodeId>(sizes, [](const std::string& s) {
                const long long value = std::stoll(s);
                if (value < 1 || value > std::numeric_limits<NodeId>::max()) {
                    throw std::invalid_argument("size '" + s + "' out of range");
                }
                return static_cast<NodeId>(value);
            });
            bench_opts.timing = !no_timing;
            const auto records = run_bench(bench_opts);
            if (csv_path == "-") {
                write_bench_csv(out, records);
            } else {
                std::ofstream csv(csv_path);
                if (!csv) {
                    err << "error: cannot write '" << csv_path << "'\n";
                    return kUsageError;
                }
                write_bench_csv(csv, records);
            }
            return kSuccess;
        }
        if (*adversary) {
            if (adv_n > 0) {
                const auto params = parameter_choice(adv_n, adv_h);
                adv_opts.x = params.x;
                adv_opts.q = params.q;
            } else if (!adv_opts.height_two && adv_opts.x == 0) {
                err << "error: adversary needs --x/--q, --nodes/--height, or --height-two\n";
                return kUsageError;
            }
            if (!out_path.empty()) adv_opts.out_path = out_path;
            return run_adversary(adv_opts, out, err);
        }
        if (*ladders) return run_ladders(ladders_tree, out, err);
    } catch (const OracleGuardViolation& e) {
        err << "fatal: " << e.what() << '\n';
        return kInternalError;
    } catch (const InternalError& e) {
        err << "fatal: internal invariant violated: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace pathmin::cli
