#include "detours/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "detours/error.hpp"

namespace detours {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

std::uint64_t rng::below(std::uint64_t n) {
    if (n == 0) throw input_error("empty sampling range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x < limit) return x % n;
    }
}

graph gen_ktree(int n, int k, std::uint64_t seed) {
    if (k < 0) throw input_error("k must be non-negative");
    if (n < k + 1) throw input_error("k-tree needs n >= k+1");
    rng r(seed);
    std::vector<edge> edges;
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) edges.emplace_back(u, v);

    // Every k-subset of the starting clique, then the k new ones per vertex.
    std::vector<std::vector<vertex>> cliques;
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<vertex> c;
        for (int u = 0; u <= k; ++u)
            if (u != skip) c.push_back(u);
        cliques.push_back(std::move(c));
    }
    if (k == 0) cliques = {{}};

    for (vertex v = k + 1; v < n; ++v) {
        const auto base = cliques[static_cast<std::size_t>(r.below(cliques.size()))];
        for (vertex u : base) edges.emplace_back(u, v);
        for (std::size_t drop = 0; drop < base.size(); ++drop) {
            auto c = base;
            c[drop] = v;
            std::sort(c.begin(), c.end());
            cliques.push_back(std::move(c));
        }
        if (k == 0) cliques.push_back({});
    }
    return graph(n, std::move(edges));
}

graph subtree_intersection_graph(const std::vector<std::vector<int>>& subtrees) {
    std::vector<std::set<int>> nodes;
    for (const auto& s : subtrees) nodes.emplace_back(s.begin(), s.end());
    std::vector<edge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const bool meet = std::any_of(nodes[i].begin(), nodes[i].end(), [&](int x) { return nodes[j].count(x) > 0; });
            if (meet) edges.emplace_back(static_cast<vertex>(i), static_cast<vertex>(j));
        }
    return graph(static_cast<int>(subtrees.size()), std::move(edges));
}

graph gen_subtree_chordal(int n, double density, std::uint64_t seed) {
    if (n < 1) throw input_error("n must be at least 1");
    if (!(density > 0.0 && density <= 1.0)) throw input_error("density must lie in (0, 1]");
    const int hosts = std::max(1, static_cast<int>(std::ceil(n * density)) + 1);
    const int max_subtree = std::max(1, static_cast<int>(std::ceil(hosts * density)));
    rng r(seed);

    std::vector<std::vector<int>> host(static_cast<std::size_t>(hosts));
    for (int i = 1; i < hosts; ++i) {
        const int parent = static_cast<int>(r.below(static_cast<std::uint64_t>(i)));
        host[static_cast<std::size_t>(i)].push_back(parent);
        host[static_cast<std::size_t>(parent)].push_back(i);
    }

    std::vector<std::vector<int>> subtrees;
    for (int v = 0; v < n; ++v) {
        const auto target = 1 + r.below(static_cast<std::uint64_t>(max_subtree));
        std::vector<int> members{static_cast<int>(r.below(static_cast<std::uint64_t>(hosts)))};
        std::set<int> in(members.begin(), members.end());
        while (members.size() < target) {
            std::vector<int> frontier;
            for (int m : members)
                for (int nb : host[static_cast<std::size_t>(m)])
                    if (!in.count(nb)) frontier.push_back(nb);
            std::sort(frontier.begin(), frontier.end());
            frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
            const int pick = frontier[static_cast<std::size_t>(r.below(frontier.size()))];
            members.push_back(pick);
            in.insert(pick);
        }
        subtrees.push_back(std::move(members));
    }
    return subtree_intersection_graph(subtrees);
}

namespace {

graph petersen() {
    std::vector<edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return graph(10, std::move(e));
}

// Petersen graph with vertex 0 removed and a fresh pendant vertex on each
// of its three former neighbours.
graph petersen_split12() {
    const auto p = petersen();
    const auto rest = delete_vertices(p, {0});
    std::vector<edge> e = rest.g.edges();
    int next = rest.g.order();
    for (vertex nb : p.neighbors(0)) {
        const auto at = std::find(rest.original.begin(), rest.original.end(), nb) - rest.original.begin();
        e.emplace_back(static_cast<vertex>(at), next++);
    }
    return graph(next, std::move(e));
}

// Stand-in for Walther's 25-vertex counterexample, whose adjacency was not
// available here: the Petersen split with every pendant stretched to a
// 5-vertex path, plus a leaf (24) on the first pendant vertex that lies on no
// detour. Only the fixture properties are relied upon: 25 vertices,
// connected, no vertex common to all detours.
graph walther25() {
    return graph(25, {{0, 1},   {0, 5},   {0, 9},   {1, 2},   {1, 6},   {2, 3},   {2, 7},
                      {3, 8},   {3, 14},  {4, 6},   {4, 7},   {4, 19},  {5, 7},   {5, 8},
                      {6, 8},   {9, 10},  {9, 24},  {10, 11}, {11, 12}, {12, 13}, {14, 15},
                      {15, 16}, {16, 17}, {17, 18}, {19, 20}, {20, 21}, {21, 22}, {22, 23}});
}

bool parse_suffix(const std::string& name, const std::string& prefix, int& n) {
    if (name.rfind(prefix, 0) != 0) return false;
    const auto digits = name.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return false;
    n = std::stoi(digits);
    return true;
}

}  // namespace

graph named_graph(const std::string& name) {
    int n = 0;
    std::vector<edge> e;
    if (parse_suffix(name, "k_", n)) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
        return graph(n, std::move(e));
    }
    if (parse_suffix(name, "path_", n)) {
        for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
        return graph(n, std::move(e));
    }
    if (parse_suffix(name, "cycle_", n)) {
        if (n < 3) throw input_error("cycle needs at least 3 vertices");
        for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
        return graph(n, std::move(e));
    }
    if (parse_suffix(name, "star_", n)) {
        for (int v = 1; v <= n; ++v) e.emplace_back(0, v);
        return graph(n + 1, std::move(e));
    }
    if (name == "bowtie") return graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    if (name == "petersen") return petersen();
    if (name == "petersen_split12") return petersen_split12();
    if (name == "walther25") return walther25();
    throw input_error("unknown graph name '" + name + "'");
}

std::vector<std::string> named_graph_names() {
    return {"k_<n>", "path_<n>", "cycle_<n>", "star_<n>", "bowtie", "petersen", "petersen_split12", "walther25"};
}

graph generate(const gen_spec& spec) {
    switch (spec.kind) {
    case gen_kind::ktree: return gen_ktree(spec.n, spec.k, spec.seed);
    case gen_kind::subtree_chordal: return gen_subtree_chordal(spec.n, spec.density, spec.seed);
    case gen_kind::named: return named_graph(spec.name);
    }
    throw input_error("unknown generator kind");
}

std::vector<std::string> metadata(const gen_spec& spec) {
    std::vector<std::string> out;
    auto line = [&](const std::string& key, const auto& value) {
        std::ostringstream s;
        s << key << ' ' << value;
        out.push_back(s.str());
    };
    switch (spec.kind) {
    case gen_kind::ktree:
        line("kind", "ktree");
        line("n", spec.n);
        line("k", spec.k);
        line("seed", spec.seed);
        line("prng", prng_name);
        break;
    case gen_kind::subtree_chordal:
        line("kind", "subtree-chordal");
        line("n", spec.n);
        line("density", spec.density);
        line("seed", spec.seed);
        line("prng", prng_name);
        break;
    case gen_kind::named:
        line("kind", "named");
        line("name", spec.name);
        break;
    }
    return out;
}

gen_kind parse_gen_kind(const std::string& name) {
    if (name == "ktree") return gen_kind::ktree;
    if (name == "subtree-chordal") return gen_kind::subtree_chordal;
    if (name == "named") return gen_kind::named;
    throw input_error("unknown generator kind '" + name + "'");
}

std::string_view to_string(gen_kind k) {
    switch (k) {
    case gen_kind::ktree: return "ktree";
    case gen_kind::subtree_chordal: return "subtree-chordal";
    case gen_kind::named: return "named";
    }
    return "?";
}

std::vector<corpus_instance> generate_corpus(const corpus_spec& spec) {
    if (spec.kind == gen_kind::named) throw input_error("a corpus needs a random generator kind");
    if (spec.count < 0) throw input_error("count must be non-negative");
    if (spec.n_min < 1 || spec.n_max < spec.n_min) throw input_error("need 1 <= n-min <= n-max");
    if (spec.kind == gen_kind::ktree && (spec.k_min < 0 || spec.k_max < spec.k_min || spec.k_min + 1 > spec.n_max))
        throw input_error("need 0 <= k-min <= k-max and k-min + 1 <= n-max");

    std::vector<corpus_instance> out;
    const std::uint64_t attempts = 1000ULL * static_cast<std::uint64_t>(std::max(spec.count, 1));
    for (std::uint64_t i = 0; i < attempts && static_cast<int>(out.size()) < spec.count; ++i) {
        rng r(stream_seed(spec.seed, i));
        gen_spec g;
        g.kind = spec.kind;
        g.density = spec.density;
        if (spec.kind == gen_kind::ktree) {
            const int n_lo = std::max(spec.n_min, spec.k_min + 1);
            g.n = n_lo + static_cast<int>(r.below(static_cast<std::uint64_t>(spec.n_max - n_lo + 1)));
            const int k_hi = std::min(spec.k_max, g.n - 1);
            g.k = spec.k_min + static_cast<int>(r.below(static_cast<std::uint64_t>(k_hi - spec.k_min + 1)));
        } else {
            g.n = spec.n_min + static_cast<int>(r.below(static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1)));
        }
        g.seed = r.below(std::numeric_limits<std::uint64_t>::max());
        auto instance = generate(g);
        if (spec.require_connected && !is_connected(instance)) continue;
        if (spec.require_biconnected && !is_biconnected(instance)) continue;
        out.push_back({std::move(g), std::move(instance)});
    }
    if (static_cast<int>(out.size()) < spec.count)
        throw input_error("only " + std::to_string(out.size()) + " of " + std::to_string(spec.count) +
                          " instances passed the filters");
    return out;
}

}  // namespace detours
