#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "detours/graph.hpp"

namespace detours {

enum class graph_format { edge_list, dimacs };

graph_format parse_format(std::string_view name);  // "edge-list" | "dimacs"
std::string_view to_string(graph_format f);

struct parsed_graph {
    graph g;
    std::vector<std::string> labels;    // labels[id] is the input name of vertex id
    std::vector<std::string> warnings;  // e.g. duplicate edges that were dropped
};

// Edge list: "u v" per line, arbitrary labels numbered in order of first
// appearance; a line holding a single label declares an isolated vertex;
// '#' starts a comment. DIMACS: "c" comments, one "p edge N M" header,
// then "e u v" lines with 1-based ids.
// Malformed lines and self-loops throw parse_error; duplicate edges are
// dropped with a warning.
parsed_graph parse_graph(std::istream& in, graph_format format);
parsed_graph parse_graph_file(const std::string& path, graph_format format);

void write_edge_list(std::ostream& out, const graph& g, const std::vector<std::string>& comments = {});
void write_dimacs(std::ostream& out, const graph& g, const std::vector<std::string>& comments = {});

}  // namespace detours
