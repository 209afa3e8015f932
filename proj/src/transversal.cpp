#include "detours/transversal.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <type_traits>

#include "detours/error.hpp"

namespace detours {

std::size_t bound_for(int omega, item_mode mode) {
    if (omega < 1) throw input_error("clique number must be at least 1");
    const auto b = mode == item_mode::path ? 4 * ceil_div(omega, 5) : 2 * ceil_div(omega, 3);
    return static_cast<std::size_t>(b);
}

std::vector<bound_row> bounds_table(int omega_max) {
    if (omega_max < 1) throw input_error("omega-max must be at least 1");
    std::vector<bound_row> rows;
    for (int w = 1; w <= omega_max; ++w) {
        bound_row r;
        r.omega = w;
        r.path_bound = bound_for(w, item_mode::path);
        r.path_prior = static_cast<std::size_t>(std::max(1, w - 2));
        r.path_improved = r.path_bound < r.path_prior;
        r.cycle_bound = bound_for(w, item_mode::cycle);
        r.cycle_prior = static_cast<std::size_t>(std::max(1, w - 3));
        r.cycle_improved = r.cycle_bound < r.cycle_prior;
        rows.push_back(r);
    }
    return rows;
}

std::string_view to_string(family_step s) {
    switch (s) {
    case family_step::closed_crossing_single: return "closed-crossing-single";
    case family_step::closed_crossing_disjoint: return "closed-crossing-disjoint";
    case family_step::closed_crossing_meeting: return "closed-crossing-meeting";
    case family_step::open_crossing: return "open-crossing";
    case family_step::touching_pair: return "touching-pair";
    case family_step::crossing_cycle: return "crossing-cycle";
    }
    return "?";
}

namespace {

template <class Item>
std::vector<classification> classify_all(const clique_view& view, const longest_set<Item>& s, small_threshold t) {
    std::vector<classification> out;
    out.reserve(s.items.size());
    for (const auto& item : s.items) out.push_back(view.classify(item, t));
    return out;
}

// First pair (i < j, lexicographic) from `pool` with different homes
// satisfying `accept`, where `accept` depends only on each item's home and
// its trace on X. Items sharing a key are interchangeable, so each key is
// tried once as a first element and once per first element as a second.
template <class Items, class Accept>
std::optional<std::pair<std::size_t, std::size_t>> first_pair(const std::vector<std::size_t>& pool,
                                                               const std::vector<classification>& cls,
                                                               const Items& items, const vertex_set& x,
                                                               Accept accept) {
    using key = std::pair<vertex, vertex_set>;
    std::vector<std::optional<key>> keys;
    keys.reserve(pool.size());
    for (std::size_t i : pool) {
        if (cls[i].home)
            keys.emplace_back(key{*cls[i].home, set_intersection(items[i].members(), x)});
        else
            keys.emplace_back(std::nullopt);
    }
    std::set<key> tried_first;
    for (std::size_t a = 0; a < pool.size(); ++a) {
        if (!keys[a] || !tried_first.insert(*keys[a]).second) continue;
        std::set<key> tried_second;
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            if (!keys[b] || keys[b]->first == keys[a]->first || !tried_second.insert(*keys[b]).second) continue;
            if (accept(pool[a], pool[b])) return std::pair{pool[a], pool[b]};
        }
    }
    return std::nullopt;
}

void require_family_type(const central_clique& x) {
    if (x.type != 1 && x.type != 2)
        throw input_error("family construction needs a central clique of type 1 or 2, got type " +
                          std::to_string(x.type));
}

}  // namespace

family build_family(const graph& g, const central_clique& x, const detour_set& ds, small_threshold t) {
    require_family_type(x);
    const clique_view view(g, x.x);
    const auto cls = classify_all(view, ds, t);

    std::vector<std::size_t> closed_crossing, open_crossing, touching;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& c = cls[i];
        if (!c.is_small()) continue;
        if (c.is_touching()) touching.push_back(i);
        if (c.is_crossing() && c.ends == closure::closed) closed_crossing.push_back(i);
        if (c.is_crossing() && c.ends == closure::open) open_crossing.push_back(i);
    }

    family fam;
    auto add = [&](std::size_t i, family_step s) { fam.members.push_back({i, s}); };

    // Small closed crossing detours.
    if (!closed_crossing.empty()) {
        const auto any_pair = first_pair(closed_crossing, cls, ds.items, x.x, [](std::size_t, std::size_t) { return true; });
        if (!any_pair) {
            add(closed_crossing.front(), family_step::closed_crossing_single);
        } else {
            const auto disjoint = first_pair(closed_crossing, cls, ds.items, x.x, [&](std::size_t a, std::size_t b) {
                return !set_intersection(ds.items[a].members(), ds.items[b].members()).intersects(x.x);
            });
            if (disjoint) {
                add(disjoint->first, family_step::closed_crossing_disjoint);
                add(disjoint->second, family_step::closed_crossing_disjoint);
            } else {
                add(any_pair->first, family_step::closed_crossing_meeting);
                add(any_pair->second, family_step::closed_crossing_meeting);
            }
        }
    }

    if (touching.empty()) {
        if (!open_crossing.empty()) add(open_crossing.front(), family_step::open_crossing);
        return fam;
    }
    const auto pair = first_pair(touching, cls, ds.items, x.x, [](std::size_t, std::size_t) { return true; });
    if (!pair) throw invariant_error("small touching detours exist but no two have different homes");
    add(pair->first, family_step::touching_pair);
    add(pair->second, family_step::touching_pair);
    return fam;
}

family build_family(const graph& g, const central_clique& x, const cycle_set& cs, small_threshold t) {
    require_family_type(x);
    const clique_view view(g, x.x);
    const auto cls = classify_all(view, cs, t);

    std::vector<std::size_t> crossing, touching;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (!cls[i].is_small()) continue;
        if (cls[i].is_touching()) touching.push_back(i);
        if (cls[i].is_crossing()) crossing.push_back(i);
    }

    family fam;
    if (touching.empty() && !crossing.empty()) {
        fam.members.push_back({crossing.front(), family_step::crossing_cycle});
        return fam;
    }
    const auto pair = first_pair(touching, cls, cs.items, x.x, [](std::size_t, std::size_t) { return true; });
    if (!pair) throw invariant_error("no small crossing cycle and no two small touching cycles with different homes");
    fam.members.push_back({pair->first, family_step::touching_pair});
    fam.members.push_back({pair->second, family_step::touching_pair});
    return fam;
}

namespace {

template <class Item>
verification<Item> verify(const longest_set<Item>& s, const transversal& tv) {
    verification<Item> out;
    for (const auto& item : s.items)
        if (!item.members().intersects(tv.f)) {
            out.ok = false;
            out.uncovered = item;
            return out;
        }
    return out;
}

std::string describe(const std::vector<vertex>& seq) {
    std::string s = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
    return s + "]";
}

template <class Item>
transversal from_central(const graph& g, const central_clique& c, const longest_set<Item>& s, small_threshold t,
                         std::size_t bound, item_mode mode) {
    transversal tv;
    tv.x = c.x;
    tv.bound = bound;
    tv.mode = mode;
    const std::size_t target = std::min(c.x.size(), bound);

    std::vector<vertex> f;
    if (c.type == 1 || c.type == 2) {
        tv.fam = build_family(g, c, s, t);
        vertex_set picked;
        for (const auto& m : tv.fam.members) picked = set_union(picked, set_intersection(s.items[m.item].members(), c.x));
        f = picked.ids();
    }
    for (vertex v : c.x) {
        if (f.size() >= target) break;
        if (std::find(f.begin(), f.end(), v) == f.end()) f.push_back(v);
    }
    tv.f = vertex_set(std::move(f));

    // Family members are small; in path mode, a member ending in X would
    // contain all of X, which only happens when |X| fits the bound.
    const clique_view view(g, c.x);
    for (const auto& m : tv.fam.members) {
        const auto& item = s.items[m.item];
        if (!view.classify(item, t).is_small())
            throw invariant_error("family member " + describe(item.vertices) + " is not small");
        if constexpr (std::is_same_v<Item, detour>) {
            if (c.x.size() > bound && (c.x.contains(item.front()) || c.x.contains(item.back())))
                throw invariant_error("family member " + describe(item.vertices) + " ends in the central clique");
        }
    }

    if (!c.x.includes(tv.f)) throw invariant_error("transversal is not inside the central clique");
    if (!g.is_clique(tv.f)) throw invariant_error("transversal does not induce a clique");
    if (tv.f.size() > bound)
        throw invariant_error("transversal of size " + std::to_string(tv.f.size()) + " exceeds bound " +
                              std::to_string(bound));
    const auto check = verify(s, tv);
    if (!check.ok) throw invariant_error("transversal misses " + describe(check.uncovered->vertices));
    return tv;
}

template <class Item, class Enumerate>
construction<Item> construct(const graph& g, item_mode mode, Enumerate enumerate) {
    if (!is_connected(g)) throw precondition_error("not connected");
    if (!is_chordal(g)) throw precondition_error("not chordal");
    if (mode == item_mode::cycle && !is_biconnected(g)) throw precondition_error("not 2-connected");

    construction<Item> out;
    out.td = clique_tree(g);
    out.omega = out.td.width() + 1;
    out.threshold = small_threshold::for_mode(out.omega, mode);
    const auto bound = bound_for(out.omega, mode);
    out.items = enumerate();
    out.central = find_central_clique(g, out.td, out.items, out.threshold, bound);
    out.result = from_central(g, out.central, out.items, out.threshold, bound, mode);
    return out;
}

}  // namespace

verification<detour> verify_transversal(const detour_set& ds, const transversal& tv) { return verify(ds, tv); }
verification<longest_cycle> verify_transversal(const cycle_set& cs, const transversal& tv) { return verify(cs, tv); }

transversal transversal_from_central(const graph& g, const central_clique& c, const detour_set& ds,
                                     small_threshold t, std::size_t bound) {
    return from_central(g, c, ds, t, bound, item_mode::path);
}
transversal transversal_from_central(const graph& g, const central_clique& c, const cycle_set& cs,
                                     small_threshold t, std::size_t bound) {
    return from_central(g, c, cs, t, bound, item_mode::cycle);
}

construction<detour> construct_path_transversal(const graph& g, search_budget budget) {
    return construct<detour>(g, item_mode::path, [&] { return all_detours(g, budget); });
}

construction<longest_cycle> construct_cycle_transversal(const graph& g, search_budget budget) {
    return construct<longest_cycle>(g, item_mode::cycle, [&] { return all_longest_cycles(g, budget); });
}

transversal build_transversal(const graph& g, item_mode mode, search_budget budget) {
    if (mode == item_mode::path) return construct_path_transversal(g, budget).result;
    return construct_cycle_transversal(g, budget).result;
}

namespace {

template <class Item>
optimum_report sandwich(const construction<Item>& c, std::uint64_t oracle_nodes) {
    const auto sets = member_sets(c.items);
    vertex_set universe;
    for (const auto& s : sets) universe = set_union(universe, s);
    optimum_report r;
    r.optimum = min_hitting_set(sets, universe, oracle_nodes);
    r.opt_size = r.optimum.size();
    r.algo_size = c.result.f.size();
    r.bound = c.result.bound;
    if (r.opt_size > r.algo_size || r.algo_size > r.bound)
        throw invariant_error("optimum " + std::to_string(r.opt_size) + ", constructed " +
                              std::to_string(r.algo_size) + ", bound " + std::to_string(r.bound) + " out of order");
    return r;
}

}  // namespace

optimum_report compare_with_optimum(const construction<detour>& c, std::uint64_t oracle_nodes) {
    return sandwich(c, oracle_nodes);
}
optimum_report compare_with_optimum(const construction<longest_cycle>& c, std::uint64_t oracle_nodes) {
    return sandwich(c, oracle_nodes);
}

optimum_report compare_with_optimum(const graph& g, item_mode mode, search_budget budget, std::uint64_t oracle_nodes) {
    if (mode == item_mode::path) return sandwich(construct_path_transversal(g, budget), oracle_nodes);
    return sandwich(construct_cycle_transversal(g, budget), oracle_nodes);
}

}  // namespace detours
