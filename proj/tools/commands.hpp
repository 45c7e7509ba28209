#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathmin/generators.hpp"
#include "pathmin/tree.hpp"

namespace pathmin::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kInternalError = 3,
};

// Thrown when a query touches the oracle after preprocessing.
class OracleGuardViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

int run_query(const std::string& tree_path, const std::string& queries_path, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    // Random mode: n, h, seed, trials. Otherwise tree_path is used.
    NodeId n = 0;
    NodeId height = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::optional<std::string> tree_path;
    // Pairs checked per tree above this size are sampled rather than exhaustive.
    NodeId exhaustive_limit = 300;
    std::size_t sampled_pairs = 20000;
    bool corrupt = false;
};

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::vector<Shape> shapes;
    std::vector<NodeId> sizes;
    std::uint64_t seed = 1;
    std::size_t queries = 100000;
    bool timing = true;
};

struct BenchRecord {
    Shape shape;
    NodeId n;
    NodeId h;
    double build_ms;
    std::uint64_t oracle_calls;
    double calls_per_nlogh;
    std::size_t queries;
    double avg_query_ns;
    double max_query_ns;
};

inline constexpr const char* kBenchCsvHeader =
    "shape,n,h,build_ms,oracle_calls,calls_per_nlogh,queries,avg_query_ns,max_query_ns";

// oracle_calls / (n * max(1, floor(log2 h))).
double calls_per_nlogh(std::uint64_t oracle_calls, NodeId n, NodeId h);

BenchRecord bench_one(Shape shape, NodeId n, const BenchOptions& options);
std::vector<BenchRecord> run_bench(const BenchOptions& options);
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

struct AdversaryOptions {
    NodeId x = 0;
    NodeId q = 0;
    std::optional<NodeId> height_two;  // number of subtrees for the small-height family
    std::optional<NodeId> pad_to;
    bool check = false;
    bool random_choice = false;
    std::uint64_t seed = 1;
    std::optional<std::string> out_path;
};

int run_adversary(const AdversaryOptions& options, std::ostream& out, std::ostream& err);

int run_ladders(const std::string& tree_path, std::ostream& out, std::ostream& err);

// Full command line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pathmin::cli
