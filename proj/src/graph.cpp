#include "detours/graph.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <numeric>
#include <string>

#include "detours/error.hpp"

namespace detours {

vertex_set::vertex_set(std::initializer_list<vertex> ids) : vertex_set(std::vector<vertex>(ids)) {}

vertex_set::vertex_set(std::vector<vertex> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool vertex_set::contains(vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

bool vertex_set::includes(const vertex_set& other) const {
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

bool vertex_set::intersects(const vertex_set& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

vertex_set set_union(const vertex_set& a, const vertex_set& b) {
    vertex_set r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
}

vertex_set set_intersection(const vertex_set& a, const vertex_set& b) {
    vertex_set r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
}

vertex_set set_difference(const vertex_set& a, const vertex_set& b) {
    vertex_set r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.ids_));
    return r;
}

graph::graph(int n, std::vector<edge> edges) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw input_error("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw input_error("duplicate edge (" + std::to_string(dup->first) + "," +
                          std::to_string(dup->second) + ")");
    for (auto [u, v] : edges) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    edges_ = std::move(edges);
}

bool graph::adjacent(vertex u, vertex v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

bool graph::is_clique(const vertex_set& s) const {
    const auto& ids = s.ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!adjacent(ids[i], ids[j])) return false;
    return true;
}

vertex_set graph::vertices() const {
    std::vector<vertex> all(static_cast<std::size_t>(n_));
    std::iota(all.begin(), all.end(), 0);
    return vertex_set(std::move(all));
}

namespace {

// Labels every vertex not in `removed` with the index of its component;
// components are discovered in increasing order of their smallest vertex.
std::vector<vertex_set> collect_components(const graph& g, const std::vector<char>& removed) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> seen(removed);
    std::vector<vertex_set> out;
    std::vector<vertex> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<vertex> members;
        seen[s] = 1;
        stack.push_back(static_cast<vertex>(s));
        while (!stack.empty()) {
            vertex v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

std::vector<char> membership(const graph& g, const vertex_set& s) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (vertex v : s) {
        if (v < 0 || v >= g.order()) throw input_error("vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

}  // namespace

std::vector<vertex_set> components(const graph& g) {
    return collect_components(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0));
}

std::vector<vertex_set> components_without(const graph& g, const vertex_set& s) {
    return collect_components(g, membership(g, s));
}

subgraph delete_vertices(const graph& g, const vertex_set& s) {
    const auto removed = membership(g, s);
    std::vector<vertex> new_id(static_cast<std::size_t>(g.order()), -1);
    subgraph out;
    for (vertex v = 0; v < g.order(); ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        new_id[static_cast<std::size_t>(v)] = static_cast<vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<edge> kept;
    for (auto [u, v] : g.edges()) {
        auto nu = new_id[static_cast<std::size_t>(u)];
        auto nv = new_id[static_cast<std::size_t>(v)];
        if (nu >= 0 && nv >= 0) kept.emplace_back(nu, nv);
    }
    out.g = graph(static_cast<int>(out.original.size()), std::move(kept));
    return out;
}

bool is_connected(const graph& g) { return components(g).size() == 1; }

bool is_biconnected(const graph& g) {
    const int n = g.order();
    if (n < 3 || !is_connected(g)) return false;

    // Iterative Tarjan low-point search for an articulation point.
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    int time = 0;
    int root_children = 0;
    std::vector<vertex> stack{0};
    disc[0] = low[0] = time++;
    while (!stack.empty()) {
        const vertex v = stack.back();
        const auto vi = static_cast<std::size_t>(v);
        auto nbrs = g.neighbors(v);
        if (next[vi] < nbrs.size()) {
            const vertex w = nbrs[next[vi]++];
            const auto wi = static_cast<std::size_t>(w);
            if (disc[wi] < 0) {
                parent[wi] = v;
                disc[wi] = low[wi] = time++;
                if (v == 0) ++root_children;
                stack.push_back(w);
            } else if (w != parent[vi]) {
                low[vi] = std::min(low[vi], disc[wi]);
            }
            continue;
        }
        stack.pop_back();
        const vertex p = parent[vi];
        if (p < 0) continue;
        const auto pi = static_cast<std::size_t>(p);
        low[pi] = std::min(low[pi], low[vi]);
        if (p != 0 && low[vi] >= disc[pi]) return false;
    }
    return root_children < 2;
}

vertex_mask to_mask(const vertex_set& s) {
    vertex_mask m = 0;
    for (vertex v : s) {
        if (v < 0 || v >= max_mask_order) throw input_error("vertex " + std::to_string(v) + " exceeds mask width");
        m |= vertex_mask{1} << v;
    }
    return m;
}

vertex_set from_mask(vertex_mask m) {
    std::vector<vertex> ids;
    while (m) {
        ids.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return vertex_set(std::move(ids));
}

}  // namespace detours
