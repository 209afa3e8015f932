#include "detours/longest.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "detours/error.hpp"

namespace detours {

detour canonical_detour(std::vector<vertex> path) {
    if (path.size() > 1 && path.front() > path.back()) std::reverse(path.begin(), path.end());
    return detour{std::move(path)};
}

longest_cycle canonical_cycle(std::vector<vertex> cycle) {
    if (cycle.empty()) return {};
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
    return longest_cycle{std::move(cycle)};
}

namespace {

class path_search {
public:
    path_search(const graph& g, search_budget budget) : budget_(budget) {
        if (g.order() > max_mask_order) {
            search_stats s;
            s.budget = budget.max_expansions;
            throw resource_error("exact search supports at most 64 vertices, got " + std::to_string(g.order()), s);
        }
        n_ = g.order();
        nbr_.resize(static_cast<std::size_t>(n_));
        for (vertex v = 0; v < n_; ++v)
            for (vertex w : g.neighbors(v)) nbr_[static_cast<std::size_t>(v)] |= vertex_mask{1} << w;
        stats_.budget = budget.max_expansions;
    }

    std::size_t longest_path() {
        for (vertex s = 0; s < n_ && best_ < static_cast<std::size_t>(n_); ++s) {
            path_ = {s};
            grow(bit(s), phase::find_path);
        }
        return best_;
    }

    std::vector<detour> paths_of_length(std::size_t length) {
        target_ = length;
        for (vertex s = 0; s < n_; ++s) {
            path_ = {s};
            if (length == 1) {
                found_paths_.push_back(detour{path_});
                continue;
            }
            grow(bit(s), phase::list_paths);
        }
        return std::move(found_paths_);
    }

    std::size_t circumference() {
        for (vertex s = 0; s < n_ && best_ < static_cast<std::size_t>(n_ - s); ++s) {
            path_ = {s};
            grow(bit(s) | below(s), phase::find_cycle);
        }
        return best_;
    }

    std::vector<longest_cycle> cycles_of_length(std::size_t length) {
        target_ = length;
        for (vertex s = 0; s + static_cast<vertex>(length) <= n_; ++s) {
            path_ = {s};
            grow(bit(s) | below(s), phase::list_cycles);
        }
        return std::move(found_cycles_);
    }

private:
    enum class phase { find_path, list_paths, find_cycle, list_cycles };

    static vertex_mask bit(vertex v) { return vertex_mask{1} << v; }
    static vertex_mask below(vertex v) { return bit(v) - 1; }

    // Number of blocked-free vertices reachable from v.
    int reachable(vertex v, vertex_mask blocked) const {
        vertex_mask seen = 0;
        vertex_mask frontier = nbr_[static_cast<std::size_t>(v)] & ~blocked;
        while (frontier) {
            seen |= frontier;
            vertex_mask next = 0;
            for (vertex_mask f = frontier; f; f &= f - 1)
                next |= nbr_[static_cast<std::size_t>(std::countr_zero(f))];
            frontier = next & ~blocked & ~seen;
        }
        return std::popcount(seen);
    }

    void charge() {
        if (++stats_.expansions > budget_.max_expansions) {
            stats_.best_length = best_;
            stats_.found = found_paths_.size() + found_cycles_.size();
            throw resource_error("longest path/cycle search exceeded its budget", stats_);
        }
    }

    void grow(vertex_mask blocked, phase mode) {
        charge();
        const vertex end = path_.back();
        const vertex start = path_.front();
        const std::size_t len = path_.size();

        switch (mode) {
        case phase::find_path:
            best_ = std::max(best_, len);
            break;
        case phase::list_paths:
            if (len == target_) {
                if (start < end) found_paths_.push_back(detour{path_});
                return;
            }
            break;
        case phase::find_cycle:
            if (len >= 3 && (nbr_[static_cast<std::size_t>(end)] & bit(start))) best_ = std::max(best_, len);
            break;
        case phase::list_cycles:
            if (len == target_) {
                if ((nbr_[static_cast<std::size_t>(end)] & bit(start)) && path_[1] < end)
                    found_cycles_.push_back(longest_cycle{path_});
                return;
            }
            break;
        }

        const std::size_t bound = len + static_cast<std::size_t>(reachable(end, blocked));
        const bool listing = mode == phase::list_paths || mode == phase::list_cycles;
        if (listing ? bound < target_ : bound <= best_) return;

        for (vertex_mask next = nbr_[static_cast<std::size_t>(end)] & ~blocked; next; next &= next - 1) {
            const vertex w = std::countr_zero(next);
            path_.push_back(w);
            grow(blocked | bit(w), mode);
            path_.pop_back();
            if (mode == phase::find_path && best_ == static_cast<std::size_t>(n_)) return;
        }
    }

    int n_ = 0;
    std::vector<vertex_mask> nbr_;
    search_budget budget_;
    search_stats stats_;
    std::vector<vertex> path_;
    std::size_t best_ = 0;
    std::size_t target_ = 0;
    std::vector<detour> found_paths_;
    std::vector<longest_cycle> found_cycles_;
};

template <class Item>
vertex_set intersect_all(const longest_set<Item>& s) {
    if (s.items.empty()) throw input_error("common intersection of an empty family");
    vertex_set acc = s.items.front().members();
    for (const auto& item : s.items) acc = set_intersection(acc, item.members());
    return acc;
}

}  // namespace

detour_set all_detours(const graph& g, search_budget budget) {
    if (!is_connected(g)) throw precondition_error("not connected");
    path_search search(g, budget);
    detour_set out;
    out.length = search.longest_path();
    out.items = search.paths_of_length(out.length);
    std::sort(out.items.begin(), out.items.end());
    return out;
}

cycle_set all_longest_cycles(const graph& g, search_budget budget) {
    if (!is_biconnected(g)) throw precondition_error("not 2-connected");
    path_search search(g, budget);
    cycle_set out;
    out.length = search.circumference();
    out.items = search.cycles_of_length(out.length);
    std::sort(out.items.begin(), out.items.end());
    return out;
}

vertex_set common_intersection(const detour_set& ds) { return intersect_all(ds); }
vertex_set common_intersection(const cycle_set& cs) { return intersect_all(cs); }

namespace {

class hitting_set_search {
public:
    hitting_set_search(std::vector<vertex_mask> families, std::uint64_t max_nodes)
        : families_(std::move(families)), max_nodes_(max_nodes) {}

    // Lexicographically first hitting set of exactly `k` bit positions.
    bool solve(int k, int universe_bits) {
        k_ = k;
        bits_ = universe_bits;
        return step(0, 0, 0);
    }

    vertex_mask chosen() const { return chosen_; }

private:
    bool step(int from, int count, vertex_mask chosen) {
        if (++nodes_ > max_nodes_) {
            search_stats s;
            s.expansions = nodes_ - 1;
            s.budget = max_nodes_;
            throw resource_error("minimum hitting set search exceeded its budget", s);
        }
        const vertex_mask reachable = from >= max_mask_order ? 0 : ~((vertex_mask{1} << from) - 1);
        int disjoint = 0;
        vertex_mask used = 0;
        bool all_hit = true;
        for (vertex_mask f : families_) {
            if (f & chosen) continue;
            all_hit = false;
            if (!(f & reachable)) return false;
            if (!(f & used)) {
                ++disjoint;
                used |= f;
            }
        }
        if (all_hit) {
            chosen_ = chosen;
            return true;
        }
        if (disjoint > k_ - count) return false;
        for (int b = from; b < bits_; ++b)
            if (step(b + 1, count + 1, chosen | (vertex_mask{1} << b))) return true;
        return false;
    }

    std::vector<vertex_mask> families_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    int k_ = 0;
    int bits_ = 0;
    vertex_mask chosen_ = 0;
};

}  // namespace

vertex_set min_hitting_set(const std::vector<vertex_set>& families, const vertex_set& universe, std::uint64_t max_nodes) {
    vertex_set used;
    for (const auto& f : families) {
        if (f.empty()) throw input_error("an empty family cannot be hit");
        if (!universe.includes(f)) throw input_error("family member not contained in the universe");
        used = set_union(used, f);
    }
    if (used.size() > static_cast<std::size_t>(max_mask_order)) {
        search_stats s;
        s.budget = max_nodes;
        throw resource_error("hitting set universe exceeds 64 vertices", s);
    }

    const auto& ids = used.ids();
    auto bit_of = [&](vertex v) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::vector<vertex_mask> masks;
    for (const auto& f : families) {
        vertex_mask m = 0;
        for (vertex v : f) m |= vertex_mask{1} << bit_of(v);
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    // A superset of another family is hit whenever the smaller one is.
    std::vector<vertex_mask> minimal;
    for (vertex_mask m : masks) {
        bool redundant = std::any_of(masks.begin(), masks.end(),
                                     [m](vertex_mask o) { return o != m && (o & m) == o; });
        if (!redundant) minimal.push_back(m);
    }

    hitting_set_search search(std::move(minimal), max_nodes);
    const int bits = static_cast<int>(ids.size());
    for (int k = 0; k <= bits; ++k) {
        if (!search.solve(k, bits)) continue;
        std::vector<vertex> out;
        for (vertex_mask m = search.chosen(); m; m &= m - 1) out.push_back(ids[static_cast<std::size_t>(std::countr_zero(m))]);
        return vertex_set(std::move(out));
    }
    throw invariant_error("hitting set search failed to terminate with a solution");
}

}  // namespace detours
