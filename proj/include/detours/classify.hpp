#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "detours/graph.hpp"
#include "detours/longest.hpp"

namespace detours {

enum class item_mode { path, cycle };

enum class spread { touching, crossing, disjoint };
enum class closure { open, closed, not_applicable };
enum class size_class { small, large, not_applicable };

std::string_view to_string(item_mode m);
std::string_view to_string(spread s);
std::string_view to_string(closure c);
std::string_view to_string(size_class s);

// Position of a detour or longest cycle relative to a clique X.
//
// A detour lying entirely inside X is reported as touching without a home.
// Touching items have a home (the component of G - X holding V(P) - X);
// touching paths are closed. A crossing path with an end vertex in X is
// neither open nor closed.
struct classification {
    spread kind = spread::disjoint;
    closure ends = closure::not_applicable;
    size_class size = size_class::not_applicable;
    std::optional<vertex> home;  // smallest vertex id of the home component
    std::size_t overlap = 0;     // |V(P) ∩ X|

    bool is_small() const { return size == size_class::small; }
    bool is_touching() const { return kind == spread::touching; }
    bool is_crossing() const { return kind == spread::crossing; }
    friend bool operator==(const classification&, const classification&) = default;
};

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Largest |V(P) ∩ X| for which P counts as small: ⌈ω/5⌉ for paths,
// ⌈ω/3⌉ for cycles.
struct small_threshold {
    int value = 0;
    item_mode mode = item_mode::path;

    static small_threshold for_mode(int omega, item_mode mode);
};

// (M, X, N) with no M-N edges and X a clique.
struct separation {
    vertex_set m;
    vertex_set x;
    vertex_set n_side;
};

// Throws input_error when `s` is not a separation of `g` around a clique.
void validate_separation(const graph& g, const separation& s);

// Throws input_error if x is not a clique.
bool is_clique_cut(const graph& g, const vertex_set& x);

// Components of G - X, precomputed for classifying many items against X.
class clique_view {
public:
    // Throws input_error if x is not a clique of g.
    clique_view(const graph& g, vertex_set x);

    const vertex_set& clique() const noexcept { return x_; }
    const std::vector<vertex_set>& components() const noexcept { return components_; }
    bool is_cut() const noexcept { return components_.size() >= 2; }
    bool in_clique(vertex v) const { return label_[static_cast<std::size_t>(v)] < 0; }
    // Smallest id of v's component; v must lie outside X.
    vertex component_of(vertex v) const { return label_[static_cast<std::size_t>(v)]; }

    classification classify(const detour& p, small_threshold t) const;
    classification classify(const longest_cycle& c, small_threshold t) const;

private:
    classification classify_vertices(const std::vector<vertex>& seq, bool is_path, small_threshold t) const;

    vertex_set x_;
    std::vector<vertex_set> components_;
    std::vector<vertex> label_;
};

classification classify(const graph& g, const vertex_set& x, const detour& p, small_threshold t);
classification classify(const graph& g, const vertex_set& x, const longest_cycle& c, small_threshold t);

// Throws input_error on an empty set.
bool is_total(const vertex_set& x, const detour_set& ds);
bool is_total(const vertex_set& x, const cycle_set& cs);

// Number of end vertices of p in `side`.
int end_count(const detour& p, const vertex_set& side);

// Checks the conclusion of the paste lemma for one pair of detours: if
// neither ends in X, both meet M and N, and f(p, M) = f(q, M), then p and q
// share a vertex of X. Vacuously true when a hypothesis fails.
bool paste_lemma_holds(const graph& g, const separation& s, const detour& p, const detour& q);

}  // namespace detours
