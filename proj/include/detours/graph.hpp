#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace detours {

using vertex = int;
using edge = std::pair<vertex, vertex>;

// Sorted, duplicate-free set of vertex ids.
class vertex_set {
public:
    vertex_set() = default;
    vertex_set(std::initializer_list<vertex> ids);
    explicit vertex_set(std::vector<vertex> ids);

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(vertex v) const;
    bool includes(const vertex_set& other) const;   // other ⊆ *this
    bool intersects(const vertex_set& other) const;
    vertex front() const { return ids_.front(); }

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    const std::vector<vertex>& ids() const noexcept { return ids_; }

    friend vertex_set set_union(const vertex_set& a, const vertex_set& b);
    friend vertex_set set_intersection(const vertex_set& a, const vertex_set& b);
    friend vertex_set set_difference(const vertex_set& a, const vertex_set& b);

    friend bool operator==(const vertex_set&, const vertex_set&) = default;
    friend auto operator<=>(const vertex_set&, const vertex_set&) = default;

private:
    std::vector<vertex> ids_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class graph {
public:
    graph() = default;
    // Throws input_error on self-loops, duplicate edges or ids out of range.
    graph(int n, std::vector<edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    // Edges as (u, v) with u < v, sorted.
    const std::vector<edge>& edges() const noexcept { return edges_; }
    std::span<const vertex> neighbors(vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(vertex u, vertex v) const;
    bool is_clique(const vertex_set& s) const;
    vertex_set vertices() const;

    friend bool operator==(const graph& a, const graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<edge> edges_;
    std::vector<std::vector<vertex>> adj_;
};

// Induced subgraph plus the map from its ids back to the parent's ids.
struct subgraph {
    graph g;
    std::vector<vertex> original;
};

std::vector<vertex_set> components(const graph& g);
subgraph delete_vertices(const graph& g, const vertex_set& s);
bool is_connected(const graph& g);
bool is_biconnected(const graph& g);

// Components of G - s, labelled in terms of the original ids.
std::vector<vertex_set> components_without(const graph& g, const vertex_set& s);

// Search routines use 64-bit vertex masks; these throw resource_error beyond that.
using vertex_mask = std::uint64_t;
constexpr int max_mask_order = 64;
vertex_mask to_mask(const vertex_set& s);
vertex_set from_mask(vertex_mask m);

}  // namespace detours
