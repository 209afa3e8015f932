#include "detours/central.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "detours/error.hpp"
#include "detours/transversal.hpp"

namespace detours {

std::vector<vertex_set> candidate_cliques(const tree_decomposition& td) {
    std::vector<vertex_set> bags = td.bags;
    std::sort(bags.begin(), bags.end());
    bags.erase(std::unique(bags.begin(), bags.end()), bags.end());

    std::vector<vertex_set> cuts;
    for (auto [i, j] : td.tree_edges) {
        auto x = set_intersection(td.bags[static_cast<std::size_t>(i)], td.bags[static_cast<std::size_t>(j)]);
        if (!std::binary_search(bags.begin(), bags.end(), x)) cuts.push_back(std::move(x));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    bags.insert(bags.end(), cuts.begin(), cuts.end());
    return bags;
}

namespace {

template <class Item>
std::vector<classification> classify_all(const clique_view& view, const longest_set<Item>& s, small_threshold t) {
    std::vector<classification> out;
    out.reserve(s.items.size());
    for (const auto& item : s.items) out.push_back(view.classify(item, t));
    return out;
}

template <class Item>
std::optional<central_clique> check_central(const graph& g, const vertex_set& x, const longest_set<Item>& s,
                                            small_threshold t, std::size_t bound) {
    if (!is_total(x, s)) return std::nullopt;
    const clique_view view(g, x);
    const auto cls = classify_all(view, s, t);

    std::vector<std::size_t> touching, crossing;
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (!cls[i].is_small()) continue;
        if (cls[i].is_touching()) touching.push_back(i);
        if (cls[i].is_crossing()) crossing.push_back(i);
    }

    central_clique out;
    out.x = x;
    if (touching.empty() && !crossing.empty()) {
        out.type = 1;
        out.witness.items = {crossing.front()};
        return out;
    }
    // The first item with a home pairs with the first later one whose home
    // differs; if none differs, every later item shares that home.
    const auto first = std::find_if(touching.begin(), touching.end(), [&](std::size_t i) { return cls[i].home.has_value(); });
    if (first != touching.end()) {
        const auto second = std::find_if(first + 1, touching.end(), [&](std::size_t i) {
            return cls[i].home && *cls[i].home != *cls[*first].home;
        });
        if (second != touching.end()) {
            out.type = 2;
            out.witness.items = {*first, *second};
            return out;
        }
    }
    out.witness.within_bound = x.size() <= bound;
    out.witness.no_small = touching.empty() && crossing.empty();
    if (out.witness.within_bound || out.witness.no_small) {
        out.type = 3;
        return out;
    }
    return std::nullopt;
}

template <class Item>
central_clique scan(const graph& g, const tree_decomposition& td, const longest_set<Item>& s, small_threshold t,
                    std::size_t bound) {
    // Lowest central type wins; candidate order breaks ties.
    const auto candidates = candidate_cliques(td);
    std::optional<central_clique> best;
    for (const auto& x : candidates) {
        auto c = check_central(g, x, s, t, bound);
        if (c && (!best || c->type < best->type)) best = std::move(c);
        if (best && best->type == 1) break;
    }
    if (best) return *best;

    std::ostringstream dump;
    dump << "no central clique among " << candidates.size() << " candidates (threshold " << t.value << ", bound "
         << bound << ", " << s.items.size() << " items):";
    for (const auto& x : candidates) {
        dump << " {";
        for (vertex v : x) dump << ' ' << v;
        dump << " }" << (is_total(x, s) ? "total" : "non-total");
    }
    throw invariant_error(dump.str());
}

// Neighbour of bag b whose side of the tree holds a bag containing v.
int side_towards(const tree_decomposition& td, const std::vector<std::vector<int>>& adj, int b, vertex v) {
    for (int start : adj[static_cast<std::size_t>(b)]) {
        std::vector<char> seen(td.bags.size(), 0);
        seen[static_cast<std::size_t>(b)] = 1;
        seen[static_cast<std::size_t>(start)] = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            if (td.bags[static_cast<std::size_t>(cur)].contains(v)) return start;
            for (int nb : adj[static_cast<std::size_t>(cur)])
                if (!seen[static_cast<std::size_t>(nb)]) {
                    seen[static_cast<std::size_t>(nb)] = 1;
                    stack.push_back(nb);
                }
        }
    }
    throw invariant_error("vertex " + std::to_string(v) + " lies in no subtree beside bag " + std::to_string(b));
}

template <class Item>
orientation orient(const graph& g, const tree_decomposition& td, const longest_set<Item>& s, small_threshold t,
                   std::size_t bound) {
    for (std::size_t b = 0; b < td.bags.size(); ++b)
        if (check_central(g, td.bags[b], s, t, bound))
            throw input_error("orientation premise violated: bag " + std::to_string(b) + " is central");

    const auto adj = td.adjacency();
    orientation out;
    out.out_edge.assign(td.bags.size(), -1);
    for (std::size_t bi = 0; bi < td.bags.size(); ++bi) {
        const int b = static_cast<int>(bi);
        const auto& bag = td.bags[bi];
        if (is_total(bag, s)) {
            const clique_view view(g, bag);
            std::optional<vertex> home;
            for (const auto& item : s.items) {
                const auto c = view.classify(item, t);
                if (!c.is_small() || !c.is_touching() || !c.home) continue;
                if (home && *home != *c.home)
                    throw invariant_error("non-central total bag " + std::to_string(b) +
                                          " has small touching items without a common home");
                home = c.home;
            }
            if (!home)
                throw invariant_error("non-central total bag " + std::to_string(b) + " has no small touching item");
            out.out_edge[bi] = side_towards(td, adj, b, *home);
        } else {
            int target = -1;
            for (const auto& item : s.items) {
                if (item.members().intersects(bag)) continue;
                const int side = side_towards(td, adj, b, item.vertices.front());
                if (target >= 0 && side != target)
                    throw invariant_error("items avoiding bag " + std::to_string(b) + " lie on different sides");
                target = side;
            }
            out.out_edge[bi] = target;
        }
    }
    for (std::size_t bi = 0; bi < td.bags.size(); ++bi) {
        const int to = out.out_edge[bi];
        if (to < 0) throw invariant_error("bag " + std::to_string(bi) + " has no out-arc");
        if (out.out_edge[static_cast<std::size_t>(to)] == static_cast<int>(bi)) {
            out.two_cycle = {static_cast<int>(bi), to};
            return out;
        }
    }
    throw invariant_error("orientation has no directed 2-cycle");
}

template <class Item>
central_clique from_orientation(const graph& g, const tree_decomposition& td, const orientation& o,
                                const longest_set<Item>& s, small_threshold t, std::size_t bound) {
    const auto [b, b2] = o.two_cycle;
    const auto x = set_intersection(td.bags[static_cast<std::size_t>(b)], td.bags[static_cast<std::size_t>(b2)]);
    if (auto c = check_central(g, x, s, t, bound)) return *c;
    throw invariant_error("2-cycle (" + std::to_string(b) + "," + std::to_string(b2) +
                          ") does not yield a central clique");
}

template <class Item>
bool witness_ok(const graph& g, const central_clique& c, const longest_set<Item>& s, small_threshold t,
                std::size_t bound) {
    if (c.type < 1 || c.type > 3 || !is_total(c.x, s)) return false;
    const clique_view view(g, c.x);
    const auto cls = classify_all(view, s, t);
    auto at = [&](std::size_t i) -> const classification& { return cls.at(i); };
    const auto& w = c.witness;
    switch (c.type) {
    case 1: {
        if (w.items.size() != 1) return false;
        const auto& p = at(w.items[0]);
        if (!p.is_small() || !p.is_crossing()) return false;
        return std::none_of(cls.begin(), cls.end(), [](const classification& k) { return k.is_small() && k.is_touching(); });
    }
    case 2: {
        if (w.items.size() != 2) return false;
        const auto& p = at(w.items[0]);
        const auto& q = at(w.items[1]);
        return p.is_small() && q.is_small() && p.is_touching() && q.is_touching() && p.home && q.home &&
               *p.home != *q.home;
    }
    default: {
        if (!w.within_bound && !w.no_small) return false;
        if (w.within_bound && c.x.size() > bound) return false;
        if (w.no_small && std::any_of(cls.begin(), cls.end(), [](const classification& k) { return k.is_small(); }))
            return false;
        return true;
    }
    }
}

}  // namespace

std::optional<central_clique> is_central(const graph& g, const vertex_set& x, const detour_set& ds,
                                         small_threshold t, std::size_t bound) {
    return check_central(g, x, ds, t, bound);
}
std::optional<central_clique> is_central(const graph& g, const vertex_set& x, const cycle_set& cs,
                                         small_threshold t, std::size_t bound) {
    return check_central(g, x, cs, t, bound);
}

central_clique find_central_clique(const graph& g, const tree_decomposition& td, const detour_set& ds,
                                   small_threshold t, std::size_t bound) {
    return scan(g, td, ds, t, bound);
}
central_clique find_central_clique(const graph& g, const tree_decomposition& td, const cycle_set& cs,
                                   small_threshold t, std::size_t bound) {
    return scan(g, td, cs, t, bound);
}

central_clique find_central_clique(const graph& g, item_mode mode, search_budget budget) {
    if (!is_connected(g)) throw precondition_error("not connected");
    if (!is_chordal(g)) throw precondition_error("not chordal");
    const auto td = clique_tree(g);
    const int omega = td.width() + 1;
    const auto t = small_threshold::for_mode(omega, mode);
    const auto bound = bound_for(omega, mode);
    if (mode == item_mode::path) return scan(g, td, all_detours(g, budget), t, bound);
    return scan(g, td, all_longest_cycles(g, budget), t, bound);
}

orientation orientation_procedure(const graph& g, const tree_decomposition& td, const detour_set& ds,
                                  small_threshold t, std::size_t bound) {
    return orient(g, td, ds, t, bound);
}
orientation orientation_procedure(const graph& g, const tree_decomposition& td, const cycle_set& cs,
                                  small_threshold t, std::size_t bound) {
    return orient(g, td, cs, t, bound);
}

central_clique central_from_orientation(const graph& g, const tree_decomposition& td, const orientation& o,
                                        const detour_set& ds, small_threshold t, std::size_t bound) {
    return from_orientation(g, td, o, ds, t, bound);
}
central_clique central_from_orientation(const graph& g, const tree_decomposition& td, const orientation& o,
                                        const cycle_set& cs, small_threshold t, std::size_t bound) {
    return from_orientation(g, td, o, cs, t, bound);
}

bool witness_holds(const graph& g, const central_clique& c, const detour_set& ds, small_threshold t,
                   std::size_t bound) {
    return witness_ok(g, c, ds, t, bound);
}
bool witness_holds(const graph& g, const central_clique& c, const cycle_set& cs, small_threshold t,
                   std::size_t bound) {
    return witness_ok(g, c, cs, t, bound);
}

}  // namespace detours
