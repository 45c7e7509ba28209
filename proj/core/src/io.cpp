#include "pathmin/io.hpp"

#include <charconv>
#include <limits>
#include <istream>
#include <ostream>
#include <vector>

namespace pathmin {

namespace {

// Splits a line into whitespace-separated integer fields.
template <typename Int>
std::vector<Int> parse_fields(std::string_view line, std::size_t line_number) {
    std::vector<Int> fields;
    std::size_t i = 0;
    while (true) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        Int value{};
        const auto [end, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || (end != line.data() + line.size() && *end != ' ' && *end != '\t' && *end != '\r')) {
            throw ParseError(line_number, "expected an integer near '" + std::string(line.substr(i, 16)) + "'");
        }
        fields.push_back(value);
        i = static_cast<std::size_t>(end - line.data());
    }
    return fields;
}

bool skippable(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

WeightedTree read_tree(std::istream& in) {
    std::string line;
    std::size_t line_number = 0;
    std::optional<std::pair<NodeId, NodeId>> header;
    std::vector<WeightedEdge> edges;
    while (std::getline(in, line)) {
        ++line_number;
        if (skippable(line)) continue;
        const auto fields = parse_fields<std::int64_t>(line, line_number);
        if (!header) {
            if (fields.size() != 2) throw ParseError(line_number, "header must be 'n root'");
            if (fields[0] < 1 || fields[0] > std::numeric_limits<NodeId>::max()) {
                throw ParseError(line_number, "node count out of range");
            }
            header.emplace(static_cast<NodeId>(fields[0]), static_cast<NodeId>(fields[1]));
            continue;
        }
        if (fields.size() != 3) throw ParseError(line_number, "edge must be 'u v w'");
        if (fields[0] < 0 || fields[0] >= header->first || fields[1] < 0 || fields[1] >= header->first) {
            throw TreeError(TreeError::Kind::OutOfRange, "line " + std::to_string(line_number) +
                                                             ": edge endpoint out of range");
        }
        edges.push_back({static_cast<NodeId>(fields[0]), static_cast<NodeId>(fields[1]), fields[2]});
    }
    if (!header) throw ParseError(line_number, "missing header");
    return build_tree(header->first, edges, header->second);
}

void write_tree(std::ostream& out, const RootedTree& tree, std::span<const std::int64_t> weights) {
    out << tree.size() << ' ' << tree.root() << '\n';
    for (NodeId v = 0; v < tree.size(); ++v) {
        if (v == tree.root()) continue;
        out << tree.parent(v) << ' ' << v << ' ' << weights[static_cast<std::size_t>(v)] << '\n';
    }
}

std::optional<QueryLine> parse_query_line(std::string_view line, std::size_t line_number) {
    if (skippable(line)) return std::nullopt;
    const auto fields = parse_fields<NodeId>(line, line_number);
    if (fields.size() != 2) throw ParseError(line_number, "query must be 'v l'");
    return QueryLine{fields[0], fields[1]};
}

}  // namespace pathmin
