#include "detours/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "detours/error.hpp"

namespace detours {

graph_format parse_format(std::string_view name) {
    if (name == "edge-list" || name == "edges") return graph_format::edge_list;
    if (name == "dimacs") return graph_format::dimacs;
    throw input_error("unknown graph format '" + std::string(name) + "'");
}

std::string_view to_string(graph_format f) { return f == graph_format::edge_list ? "edge-list" : "dimacs"; }

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream s(line);
    std::vector<std::string> out;
    for (std::string t; s >> t;) out.push_back(std::move(t));
    return out;
}

class edge_collector {
public:
    void add(vertex u, vertex v, std::size_t line) {
        if (u == v) throw parse_error(line, "self-loop");
        if (!seen_.insert({std::min(u, v), std::max(u, v)}).second) {
            warnings_.push_back("line " + std::to_string(line) + ": duplicate edge ignored");
            return;
        }
        edges_.emplace_back(u, v);
    }
    std::vector<edge> take_edges() { return std::move(edges_); }
    std::vector<std::string> take_warnings() { return std::move(warnings_); }

private:
    std::set<edge> seen_;
    std::vector<edge> edges_;
    std::vector<std::string> warnings_;
};

parsed_graph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, vertex> ids;
    parsed_graph out;
    edge_collector edges;
    auto id_of = [&](const std::string& label) {
        auto [it, fresh] = ids.emplace(label, static_cast<vertex>(out.labels.size()));
        if (fresh) out.labels.push_back(label);
        return it->second;
    };

    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto t = tokens(line);
        if (t.empty()) continue;
        if (t.size() == 1) {
            id_of(t[0]);
            continue;
        }
        if (t.size() != 2) throw parse_error(no, "expected 'u v', got " + std::to_string(t.size()) + " fields");
        if (t[0] == t[1]) throw parse_error(no, "self-loop");
        const vertex u = id_of(t[0]);
        const vertex v = id_of(t[1]);
        edges.add(u, v, no);
    }
    out.g = graph(static_cast<int>(out.labels.size()), edges.take_edges());
    out.warnings = edges.take_warnings();
    return out;
}

int parse_int(const std::string& s, std::size_t line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw parse_error(line, "'" + s + "' is not an integer");
    }
    if (used != s.size()) throw parse_error(line, "'" + s + "' is not an integer");
    return value;
}

parsed_graph parse_dimacs(std::istream& in) {
    parsed_graph out;
    edge_collector edges;
    int n = -1;
    long declared_m = -1;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        const auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (n >= 0) throw parse_error(no, "second 'p' line");
            if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) throw parse_error(no, "expected 'p edge N M'");
            n = parse_int(t[2], no);
            declared_m = parse_int(t[3], no);
            if (n < 0 || declared_m < 0) throw parse_error(no, "negative size in header");
            continue;
        }
        if (t[0] == "e") {
            if (n < 0) throw parse_error(no, "edge before 'p' line");
            if (t.size() != 3) throw parse_error(no, "expected 'e u v'");
            const int u = parse_int(t[1], no);
            const int v = parse_int(t[2], no);
            if (u < 1 || v < 1 || u > n || v > n) throw parse_error(no, "vertex id out of range 1.." + std::to_string(n));
            edges.add(u - 1, v - 1, no);
            continue;
        }
        throw parse_error(no, "unknown line type '" + t[0] + "'");
    }
    if (n < 0) throw parse_error(0, "missing 'p edge N M' header");
    auto e = edges.take_edges();
    out.warnings = edges.take_warnings();
    if (static_cast<long>(e.size()) != declared_m && out.warnings.empty())
        out.warnings.push_back("header declares " + std::to_string(declared_m) + " edges, found " +
                               std::to_string(e.size()));
    out.g = graph(n, std::move(e));
    for (int v = 1; v <= n; ++v) out.labels.push_back(std::to_string(v));
    return out;
}

}  // namespace

parsed_graph parse_graph(std::istream& in, graph_format format) {
    return format == graph_format::edge_list ? parse_edge_list(in) : parse_dimacs(in);
}

parsed_graph parse_graph_file(const std::string& path, graph_format format) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_graph(in, format);
}

void write_edge_list(std::ostream& out, const graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    std::vector<char> touched(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) touched[static_cast<std::size_t>(u)] = touched[static_cast<std::size_t>(v)] = 1;
    // Declare isolated vertices first so ids keep their order on re-read
    // whenever vertex 0..k are isolated; otherwise labels still round-trip.
    for (vertex v = 0; v < g.order(); ++v)
        if (!touched[static_cast<std::size_t>(v)]) out << v << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dimacs(std::ostream& out, const graph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace detours
