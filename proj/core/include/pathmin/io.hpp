#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pathmin/tree.hpp"

namespace pathmin {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Tree text format:
//   n root
//   u v w        (n - 1 undirected edges, 64-bit signed weights)
// Blank lines and lines starting with '#' are skipped.
// Throws ParseError on malformed lines and TreeError on invalid trees.
WeightedTree read_tree(std::istream& in);

// Writes each non-root node v as the edge "parent(v) v weights[v]", ascending v.
void write_tree(std::ostream& out, const RootedTree& tree, std::span<const std::int64_t> weights);

struct QueryLine {
    NodeId node;
    NodeId hops;
};

// Parses one line of a query file ("v l"). Returns nullopt for blank and
// comment lines; throws ParseError otherwise.
std::optional<QueryLine> parse_query_line(std::string_view line, std::size_t line_number);

}  // namespace pathmin
