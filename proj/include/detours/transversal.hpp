#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "detours/central.hpp"
#include "detours/chordal.hpp"
#include "detours/classify.hpp"
#include "detours/longest.hpp"

namespace detours {

// 4⌈ω/5⌉ for paths, 2⌈ω/3⌉ for cycles. Throws input_error for omega < 1.
std::size_t bound_for(int omega, item_mode mode);

// The bounds next to the earlier max(1, ω-2) (paths) and max(1, ω-3)
// (cycles); `improved` when strictly smaller.
struct bound_row {
    int omega = 0;
    std::size_t path_bound = 0;
    std::size_t path_prior = 0;
    bool path_improved = false;
    std::size_t cycle_bound = 0;
    std::size_t cycle_prior = 0;
    bool cycle_improved = false;
};
std::vector<bound_row> bounds_table(int omega_max);

// Which rule of the family construction added a member.
enum class family_step {
    closed_crossing_single,    // all small closed crossing detours share a home
    closed_crossing_disjoint,  // two with different homes, disjoint inside X
    closed_crossing_meeting,   // two with different homes; every such pair meets in X
    open_crossing,             // no small touching detour exists
    touching_pair,             // two small touching items with different homes
    crossing_cycle,            // cycles: a small crossing cycle, no small touching one
};

std::string_view to_string(family_step s);

struct family_member {
    std::size_t item = 0;  // index into the detour / cycle set
    family_step step = family_step::open_crossing;
    friend bool operator==(const family_member&, const family_member&) = default;
};

struct family {
    std::vector<family_member> members;
    friend bool operator==(const family&, const family&) = default;
};

// Requires a central clique of type 1 or 2; throws input_error otherwise.
family build_family(const graph& g, const central_clique& x, const detour_set& ds, small_threshold t);
family build_family(const graph& g, const central_clique& x, const cycle_set& cs, small_threshold t);

struct transversal {
    vertex_set f;
    vertex_set x;  // the central clique F was taken from
    family fam;
    std::size_t bound = 0;
    item_mode mode = item_mode::path;
};

template <class Item>
struct verification {
    bool ok = true;
    std::optional<Item> uncovered;
};

verification<detour> verify_transversal(const detour_set& ds, const transversal& tv);
verification<longest_cycle> verify_transversal(const cycle_set& cs, const transversal& tv);

// Everything computed on the way to a transversal.
template <class Item>
struct construction {
    tree_decomposition td;
    int omega = 0;
    small_threshold threshold;
    longest_set<Item> items;
    central_clique central;
    transversal result;
};

// Path mode requires a connected chordal graph; cycle mode additionally a
// 2-connected one (precondition_error otherwise). The result is verified
// against every item before returning; a failure throws invariant_error.
construction<detour> construct_path_transversal(const graph& g, search_budget budget = {});
construction<longest_cycle> construct_cycle_transversal(const graph& g, search_budget budget = {});
transversal build_transversal(const graph& g, item_mode mode, search_budget budget = {});

// F from a known central clique; runs the family construction for types 1-2.
transversal transversal_from_central(const graph& g, const central_clique& c, const detour_set& ds,
                                     small_threshold t, std::size_t bound);
transversal transversal_from_central(const graph& g, const central_clique& c, const cycle_set& cs,
                                     small_threshold t, std::size_t bound);

struct optimum_report {
    std::size_t algo_size = 0;
    std::size_t opt_size = 0;
    std::size_t bound = 0;
    vertex_set optimum;
};

// Minimum transversal by exact hitting-set search, next to the constructed
// one. Throws invariant_error unless opt_size <= algo_size <= bound.
optimum_report compare_with_optimum(const graph& g, item_mode mode, search_budget budget = {},
                                    std::uint64_t oracle_nodes = 1'000'000);
optimum_report compare_with_optimum(const construction<detour>& c, std::uint64_t oracle_nodes = 1'000'000);
optimum_report compare_with_optimum(const construction<longest_cycle>& c, std::uint64_t oracle_nodes = 1'000'000);

}  // namespace detours
