#include "detours/classify.hpp"

#include <algorithm>

#include "detours/error.hpp"

namespace detours {

std::string_view to_string(item_mode m) { return m == item_mode::path ? "path" : "cycle"; }

std::string_view to_string(spread s) {
    switch (s) {
    case spread::touching: return "touching";
    case spread::crossing: return "crossing";
    case spread::disjoint: return "disjoint";
    }
    return "?";
}

std::string_view to_string(closure c) {
    switch (c) {
    case closure::open: return "open";
    case closure::closed: return "closed";
    case closure::not_applicable: return "n/a";
    }
    return "?";
}

std::string_view to_string(size_class s) {
    switch (s) {
    case size_class::small: return "small";
    case size_class::large: return "large";
    case size_class::not_applicable: return "n/a";
    }
    return "?";
}

small_threshold small_threshold::for_mode(int omega, item_mode mode) {
    if (omega < 0) throw input_error("negative clique number");
    return {ceil_div(omega, mode == item_mode::path ? 5 : 3), mode};
}

void validate_separation(const graph& g, const separation& s) {
    if (!g.is_clique(s.x)) throw input_error("separator is not a clique");
    const auto all = set_union(set_union(s.m, s.x), s.n_side);
    if (all != g.vertices() || s.m.size() + s.x.size() + s.n_side.size() != all.size())
        throw input_error("(M, X, N) is not a partition of the vertex set");
    for (auto [u, v] : g.edges())
        if ((s.m.contains(u) && s.n_side.contains(v)) || (s.m.contains(v) && s.n_side.contains(u)))
            throw input_error("edge joins M and N");
}

bool is_clique_cut(const graph& g, const vertex_set& x) { return clique_view(g, x).is_cut(); }

clique_view::clique_view(const graph& g, vertex_set x)
    : x_(std::move(x)), label_(static_cast<std::size_t>(g.order()), -1) {
    if (!x_.empty() && (x_.front() < 0 || x_.ids().back() >= g.order()))
        throw input_error("clique vertex out of range");
    if (!g.is_clique(x_)) throw input_error("vertex set is not a clique");
    components_ = components_without(g, x_);
    for (const auto& c : components_)
        for (vertex v : c) label_[static_cast<std::size_t>(v)] = c.front();
}

classification clique_view::classify(const detour& p, small_threshold t) const {
    return classify_vertices(p.vertices, true, t);
}

classification clique_view::classify(const longest_cycle& c, small_threshold t) const {
    return classify_vertices(c.vertices, false, t);
}

classification clique_view::classify_vertices(const std::vector<vertex>& seq, bool is_path, small_threshold t) const {
    classification out;
    std::vector<vertex> homes;
    for (vertex v : seq) {
        if (in_clique(v))
            ++out.overlap;
        else
            homes.push_back(component_of(v));
    }
    if (out.overlap == 0) return out;

    out.size = out.overlap <= static_cast<std::size_t>(t.value) ? size_class::small : size_class::large;
    std::sort(homes.begin(), homes.end());
    homes.erase(std::unique(homes.begin(), homes.end()), homes.end());

    if (homes.size() <= 1) {
        out.kind = spread::touching;
        if (homes.size() == 1) {
            out.home = homes.front();
            if (is_path) out.ends = closure::closed;
        }
        return out;
    }

    out.kind = spread::crossing;
    if (!is_path) return out;
    const vertex a = seq.front();
    const vertex b = seq.back();
    if (in_clique(a) || in_clique(b)) return out;
    if (component_of(a) == component_of(b)) {
        out.ends = closure::closed;
        out.home = component_of(a);
    } else {
        out.ends = closure::open;
    }
    return out;
}

classification classify(const graph& g, const vertex_set& x, const detour& p, small_threshold t) {
    return clique_view(g, x).classify(p, t);
}

classification classify(const graph& g, const vertex_set& x, const longest_cycle& c, small_threshold t) {
    return clique_view(g, x).classify(c, t);
}

namespace {

template <class Item>
bool total(const vertex_set& x, const longest_set<Item>& s) {
    if (s.items.empty()) throw input_error("totality against an empty family");
    return std::all_of(s.items.begin(), s.items.end(), [&](const Item& item) {
        return std::any_of(item.vertices.begin(), item.vertices.end(), [&](vertex v) { return x.contains(v); });
    });
}

bool meets(const detour& p, const vertex_set& side) {
    return std::any_of(p.vertices.begin(), p.vertices.end(), [&](vertex v) { return side.contains(v); });
}

}  // namespace

bool is_total(const vertex_set& x, const detour_set& ds) { return total(x, ds); }
bool is_total(const vertex_set& x, const cycle_set& cs) { return total(x, cs); }

int end_count(const detour& p, const vertex_set& side) {
    if (p.vertices.empty()) return 0;
    if (p.vertices.size() == 1) return side.contains(p.front()) ? 1 : 0;
    return (side.contains(p.front()) ? 1 : 0) + (side.contains(p.back()) ? 1 : 0);
}

bool paste_lemma_holds(const graph& g, const separation& s, const detour& p, const detour& q) {
    validate_separation(g, s);
    if (!is_clique_cut(g, s.x)) throw input_error("separator is not a clique-cut");
    if (end_count(p, s.x) > 0 || end_count(q, s.x) > 0) return true;
    if (!meets(p, s.m) || !meets(p, s.n_side) || !meets(q, s.m) || !meets(q, s.n_side)) return true;
    if (end_count(p, s.m) != end_count(q, s.m)) return true;
    return set_intersection(p.members(), q.members()).intersects(s.x);
}

}  // namespace detours
