#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "detours/graph.hpp"

namespace detours {

// Node-expansion cap for the exact searches. Longest path is NP-hard, so
// the searches throw resource_error rather than run unbounded.
struct search_budget {
    std::uint64_t max_expansions = 10'000'000;
};

// A longest path, oriented so that the first id is smaller than the last.
struct detour {
    std::vector<vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    vertex front() const { return vertices.front(); }
    vertex back() const { return vertices.back(); }
    vertex_set members() const { return vertex_set(vertices); }
    friend auto operator<=>(const detour&, const detour&) = default;
};

// A longest cycle, rotated to start at its smallest id and oriented so
// the second id is smaller than the last.
struct longest_cycle {
    std::vector<vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    vertex_set members() const { return vertex_set(vertices); }
    friend auto operator<=>(const longest_cycle&, const longest_cycle&) = default;
};

// All longest paths or cycles of a graph, canonical and sorted.
template <class Item>
struct longest_set {
    std::size_t length = 0;
    std::vector<Item> items;

    bool empty() const noexcept { return items.empty(); }
    std::size_t size() const noexcept { return items.size(); }
    friend bool operator==(const longest_set&, const longest_set&) = default;
};

using detour_set = longest_set<detour>;
using cycle_set = longest_set<longest_cycle>;

detour canonical_detour(std::vector<vertex> path);
longest_cycle canonical_cycle(std::vector<vertex> cycle);

// Requires a connected graph with at most 64 vertices.
detour_set all_detours(const graph& g, search_budget budget = {});
// Requires a 2-connected graph with at most 64 vertices.
cycle_set all_longest_cycles(const graph& g, search_budget budget = {});

// Lexicographically smallest minimum-cardinality subset of `universe`
// meeting every family. `max_nodes` caps the branch-and-bound tree.
vertex_set min_hitting_set(const std::vector<vertex_set>& families, const vertex_set& universe,
                           std::uint64_t max_nodes = 1'000'000);

vertex_set common_intersection(const detour_set& ds);
vertex_set common_intersection(const cycle_set& cs);

template <class Item>
std::vector<vertex_set> member_sets(const longest_set<Item>& s) {
    std::vector<vertex_set> out;
    out.reserve(s.items.size());
    for (const auto& item : s.items) out.push_back(item.members());
    return out;
}

}  // namespace detours
