#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "detours/chordal.hpp"
#include "detours/classify.hpp"
#include "detours/longest.hpp"

namespace detours {

// Evidence that a clique is central. Item indices refer to the detour or
// cycle set the clique was checked against.
//   type 1: items = {a small crossing item}; no small touching item exists
//   type 2: items = {p, q}, small touching with different homes
//   type 3: within_bound (|X| <= bound) and/or no_small
struct central_witness {
    std::vector<std::size_t> items;
    bool within_bound = false;
    bool no_small = false;
    friend bool operator==(const central_witness&, const central_witness&) = default;
};

struct central_clique {
    vertex_set x;
    int type = 0;
    central_witness witness;
    friend bool operator==(const central_clique&, const central_clique&) = default;
};

// Out-arcs of the bags of a clique tree; each bag points at one neighbour.
struct orientation {
    std::vector<int> out_edge;      // out_edge[b] = bag that b points at
    std::pair<int, int> two_cycle;  // (b, b') with b < b' pointing at each other
};

// Bags first, then intersections of tree-adjacent bags not already listed;
// each group in lexicographic order.
std::vector<vertex_set> candidate_cliques(const tree_decomposition& td);

// Smallest central type X satisfies, with witness; nullopt if X is not
// total or satisfies no type. `bound` is the transversal bound for the mode.
std::optional<central_clique> is_central(const graph& g, const vertex_set& x, const detour_set& ds,
                                         small_threshold t, std::size_t bound);
std::optional<central_clique> is_central(const graph& g, const vertex_set& x, const cycle_set& cs,
                                         small_threshold t, std::size_t bound);

// Central candidate of the lowest type, earliest in candidate order among
// equals. Throws invariant_error if there is none.
central_clique find_central_clique(const graph& g, const tree_decomposition& td, const detour_set& ds,
                                   small_threshold t, std::size_t bound);
central_clique find_central_clique(const graph& g, const tree_decomposition& td, const cycle_set& cs,
                                   small_threshold t, std::size_t bound);

// Convenience entry point computing the clique tree, the items and the
// thresholds for `mode`.
central_clique find_central_clique(const graph& g, item_mode mode, search_budget budget = {});

// Orients every bag towards the home of its small touching items (total
// bags) or towards the items avoiding it (non-total bags) and returns the
// resulting directed 2-cycle. Requires that no bag is central; throws
// input_error otherwise.
orientation orientation_procedure(const graph& g, const tree_decomposition& td, const detour_set& ds,
                                  small_threshold t, std::size_t bound);
orientation orientation_procedure(const graph& g, const tree_decomposition& td, const cycle_set& cs,
                                  small_threshold t, std::size_t bound);

// The central clique B ∩ B' read off an orientation's 2-cycle, re-validated.
// Throws invariant_error if it is not central.
central_clique central_from_orientation(const graph& g, const tree_decomposition& td, const orientation& o,
                                        const detour_set& ds, small_threshold t, std::size_t bound);
central_clique central_from_orientation(const graph& g, const tree_decomposition& td, const orientation& o,
                                        const cycle_set& cs, small_threshold t, std::size_t bound);

// Re-derives the witness claims with classify; false if any claim fails.
bool witness_holds(const graph& g, const central_clique& c, const detour_set& ds, small_threshold t,
                   std::size_t bound);
bool witness_holds(const graph& g, const central_clique& c, const cycle_set& cs, small_threshold t,
                   std::size_t bound);

}  // namespace detours
