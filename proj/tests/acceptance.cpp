#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "detours/central.hpp"
#include "detours/chordal.hpp"
#include "detours/classify.hpp"
#include "detours/error.hpp"
#include "detours/generators.hpp"
#include "detours/longest.hpp"
#include "detours/transversal.hpp"
#include "oracles.hpp"

using namespace detours;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> problems;

    void fail(const std::string& what) {
        pass = false;
        if (problems.size() < 10) problems.push_back(what);
    }
};

int failed_criteria = 0;

void report(int criterion, const outcome& o, double secs) {
    for (const auto& p : o.problems) std::printf("  criterion %d: %s\n", criterion, p.c_str());
    std::printf("%s criterion %d: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", criterion, o.summary.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed_criteria;
}

std::string describe(const corpus_instance& c) {
    std::ostringstream s;
    s << to_string(c.spec.kind) << " n=" << c.spec.n << " k=" << c.spec.k << " density=" << c.spec.density
      << " seed=" << c.spec.seed;
    return s.str();
}

// Largest n per k at which enumerating every detour of a random k-tree
// stays within the default search budget.
int path_cap(int k) { return k <= 3 ? 16 : k == 4 ? 13 : 11; }

std::vector<corpus_instance> path_corpus() {
    std::vector<corpus_instance> out;
    for (int k = 1; k <= 5; ++k) {
        corpus_spec s;
        s.kind = gen_kind::ktree;
        s.count = 100;
        s.n_min = k + 2;
        s.n_max = path_cap(k);
        s.k_min = s.k_max = k;
        s.seed = 1000 + static_cast<std::uint64_t>(k);
        for (auto& c : generate_corpus(s)) out.push_back(std::move(c));
    }
    for (double density : {0.35, 0.5, 0.8}) {
        corpus_spec s;
        s.kind = gen_kind::subtree_chordal;
        s.count = 34;
        s.n_min = 6;
        s.n_max = 10;
        s.density = density;
        s.seed = 2000 + static_cast<std::uint64_t>(density * 100);
        for (auto& c : generate_corpus(s)) out.push_back(std::move(c));
    }
    return out;
}

std::vector<corpus_instance> cycle_corpus() {
    std::vector<corpus_instance> out;
    for (int k = 2; k <= 5; ++k) {
        corpus_spec s;
        s.kind = gen_kind::ktree;
        s.count = 55;
        s.n_min = k + 2;
        s.n_max = 14;
        s.k_min = s.k_max = k;
        s.seed = 3000 + static_cast<std::uint64_t>(k);
        s.require_biconnected = true;
        for (auto& c : generate_corpus(s)) out.push_back(std::move(c));
    }
    return out;
}

template <class Item>
struct solved {
    const corpus_instance* instance = nullptr;
    std::optional<construction<Item>> c;
    std::string error;
};

template <class Item, class Build>
std::vector<solved<Item>> solve_all(const std::vector<corpus_instance>& corpus, Build build) {
    std::vector<solved<Item>> out;
    out.reserve(corpus.size());
    for (const auto& inst : corpus) {
        solved<Item> s;
        s.instance = &inst;
        try {
            s.c = build(inst.g);
        } catch (const error& e) {
            s.error = e.what();
        }
        out.push_back(std::move(s));
    }
    return out;
}

// All nonempty cliques, as subsets of maximal cliques.
std::vector<std::uint64_t> all_cliques(const graph& g) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t k : oracle::maximal_cliques(g))
        for (std::uint64_t s = k; s; s = (s - 1) & k) seen.insert(s);
    return {seen.begin(), seen.end()};
}

int pair_index(int u, int v) { return u < v ? v * (v - 1) / 2 + u : u * (u - 1) / 2 + v; }

struct edge_bits {
    std::array<std::uint64_t, 2> w{};
    void set(int u, int v) {
        const int i = pair_index(u, v);
        w[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
    }
    bool meets(const edge_bits& o) const { return (w[0] & o.w[0]) || (w[1] & o.w[1]); }
};

struct detour_bits {
    std::uint64_t members = 0;
    std::uint64_t ends = 0;
    edge_bits edges;
};

std::vector<detour_bits> bits_of(const detour_set& ds) {
    std::vector<detour_bits> out;
    out.reserve(ds.size());
    for (const auto& p : ds.items) {
        detour_bits b;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            b.members |= std::uint64_t{1} << p.vertices[i];
            if (i > 0) b.edges.set(p.vertices[i - 1], p.vertices[i]);
        }
        b.ends = (std::uint64_t{1} << p.front()) | (std::uint64_t{1} << p.back());
        out.push_back(b);
    }
    return out;
}

outcome criterion_1(const std::vector<solved<detour>>& runs) {
    outcome o;
    std::size_t brute_checked = 0;
    std::map<int, int> per_k;
    for (const auto& r : runs) {
        const auto& inst = *r.instance;
        if (!r.c) {
            o.fail(describe(inst) + ": " + r.error);
            continue;
        }
        const auto& c = *r.c;
        const auto& tv = c.result;
        ++per_k[inst.spec.kind == gen_kind::ktree ? inst.spec.k : 0];
        if (!inst.g.is_clique(tv.f)) o.fail(describe(inst) + ": F is not a clique");
        if (tv.f.size() > 4 * static_cast<std::size_t>(ceil_div(c.omega, 5)))
            o.fail(describe(inst) + ": |F| exceeds 4*ceil(omega/5)");
        if (c.omega != oracle::clique_number(inst.g)) o.fail(describe(inst) + ": omega disagrees with brute force");
        if (!verify_transversal(c.items, tv).ok) o.fail(describe(inst) + ": F misses a detour");
        if (inst.g.order() <= 9) {
            ++brute_checked;
            const auto f = oracle::mask_of(tv.f.ids());
            for (const auto& p : oracle::longest_paths(inst.g))
                if (!(oracle::mask_of(p) & f)) {
                    o.fail(describe(inst) + ": F misses a brute-force longest path");
                    break;
                }
        }
    }
    std::ostringstream s;
    s << runs.size() << " instances (";
    for (auto [k, count] : per_k) s << (k ? "k=" + std::to_string(k) : std::string("subtree")) << ":" << count << " ";
    s << "), " << brute_checked << " also checked against brute-force longest paths";
    o.summary = s.str();
    if (runs.size() < 500) o.fail("fewer than 500 instances");
    return o;
}

outcome criterion_2(const std::vector<solved<longest_cycle>>& runs) {
    outcome o;
    std::size_t brute_checked = 0;
    for (const auto& r : runs) {
        const auto& inst = *r.instance;
        if (!r.c) {
            o.fail(describe(inst) + ": " + r.error);
            continue;
        }
        const auto& c = *r.c;
        if (!oracle::biconnected(inst.g)) o.fail(describe(inst) + ": not 2-connected by brute force");
        if (c.result.f.size() > 2 * static_cast<std::size_t>(ceil_div(c.omega, 3)))
            o.fail(describe(inst) + ": |F| exceeds 2*ceil(omega/3)");
        if (!inst.g.is_clique(c.result.f)) o.fail(describe(inst) + ": F is not a clique");
        if (!verify_transversal(c.items, c.result).ok) o.fail(describe(inst) + ": F misses a cycle");
        if (inst.g.order() <= 10) {
            ++brute_checked;
            const auto f = oracle::mask_of(c.result.f.ids());
            for (const auto& cyc : oracle::longest_cycles(inst.g))
                if (!(oracle::mask_of(cyc) & f)) {
                    o.fail(describe(inst) + ": F misses a brute-force longest cycle");
                    break;
                }
        }
    }
    o.summary = std::to_string(runs.size()) + " 2-connected k-trees (k=2..5, n<=14), " + std::to_string(brute_checked) +
                " also checked against brute-force longest cycles";
    if (runs.size() < 200) o.fail("fewer than 200 instances");
    return o;
}

outcome criterion_3(const std::vector<solved<detour>>& runs) {
    outcome o;
    std::size_t instances = 0, separations = 0, calls = 0, class_pairs = 0;
    for (const auto& r : runs) {
        const auto& inst = *r.instance;
        if (!r.c || inst.g.order() > 12) continue;
        ++instances;
        const auto& ds = r.c->items;
        const auto bits = bits_of(ds);
        for (std::uint64_t xm : all_cliques(inst.g)) {
            const vertex_set x = from_mask(xm);
            const clique_view view(inst.g, x);
            if (view.is_cut() != is_clique_cut(inst.g, x)) o.fail(describe(inst) + ": is_clique_cut disagrees");
            if (!view.is_cut()) continue;
            const auto& comps = view.components();
            const std::size_t parts = comps.size();
            std::vector<std::uint64_t> comp_masks;
            for (const auto& comp : comps) comp_masks.push_back(to_mask(comp));
            for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << (parts - 1)); ++choice) {
                std::uint64_t m = 0;
                for (std::size_t i = 0; i < parts; ++i)
                    if (choice >> i & 1) m |= comp_masks[i];
                const std::uint64_t nside = to_mask(inst.g.vertices()) & ~m & ~xm;
                const separation sep{from_mask(m), x, from_mask(nside)};
                ++separations;

                // Detours sharing (eligible, f(P,M), P ∩ X) behave identically
                // in the lemma; keep one representative per class.
                std::map<std::tuple<bool, int, std::uint64_t>, std::vector<std::size_t>> classes;
                for (std::size_t i = 0; i < bits.size(); ++i) {
                    const auto& b = bits[i];
                    const bool eligible = !(b.ends & xm) && (b.members & m) && (b.members & nside);
                    const int f = std::popcount(b.ends & m);
                    auto& members = classes[{eligible, f, b.members & xm}];
                    if (members.size() < 2) members.push_back(i);
                }
                for (auto a = classes.begin(); a != classes.end(); ++a)
                    for (auto b = a; b != classes.end(); ++b) {
                        const std::size_t p = a->second.front();
                        const std::size_t q = a == b ? a->second.back() : b->second.front();
                        ++class_pairs;
                        ++calls;
                        const bool got = paste_lemma_holds(inst.g, sep, ds.items[p], ds.items[q]);
                        const auto [ea, fa, xa] = a->first;
                        const auto [eb, fb, xb] = b->first;
                        const bool expected = !(ea && eb && fa == fb) || (xa & xb) != 0;
                        if (!got) o.fail(describe(inst) + ": paste lemma fails for a detour pair");
                        if (got != expected) o.fail(describe(inst) + ": paste_lemma_holds disagrees with direct check");
                    }
            }
        }
    }
    std::ostringstream s;
    s << instances << " instances with n<=12, " << separations << " clique-cut separations, " << calls
      << " representative detour pairs (every pair belongs to one of these classes)";
    o.summary = s.str();
    if (instances == 0) o.fail("no instances");
    return o;
}

outcome criterion_4(const std::vector<solved<detour>>& runs) {
    outcome o;
    std::size_t instances = 0, cliques = 0, triggered = 0;
    for (const auto& r : runs) {
        const auto& inst = *r.instance;
        if (!r.c || inst.g.order() > 12) continue;
        ++instances;
        const auto bits = bits_of(r.c->items);
        for (std::uint64_t xm : all_cliques(inst.g)) {
            ++cliques;
            edge_bits xe;
            for (std::uint64_t a = xm; a; a &= a - 1)
                for (std::uint64_t b = a & (a - 1); b; b &= b - 1) xe.set(std::countr_zero(a), std::countr_zero(b));
            for (const auto& b : bits) {
                if (!(b.ends & xm) && !b.edges.meets(xe)) continue;
                ++triggered;
                if (xm & ~b.members) {
                    o.fail(describe(inst) + ": a detour ending in or using an edge of a clique misses part of it");
                    break;
                }
            }
        }
    }
    std::ostringstream s;
    s << instances << " instances with n<=12, " << cliques << " cliques, " << triggered
      << " (clique, detour) pairs where the detour ends in X or uses an edge of X";
    o.summary = s.str();
    if (instances == 0) o.fail("no instances");
    return o;
}

struct orientation_tally {
    std::size_t instances = 0;
    std::size_t premise = 0;
    std::size_t validated = 0;
};

template <class Item>
void central_checks(const corpus_instance& inst, const construction<Item>& c, small_threshold t, std::size_t bound,
                    outcome& o, orientation_tally& tally) {
    ++tally.instances;
    const auto& s = c.items;
    try {
        const auto found = find_central_clique(inst.g, c.td, s, t, bound);
        if (!witness_holds(inst.g, found, s, t, bound)) o.fail(describe(inst) + ": central witness does not hold");
        if (!inst.g.is_clique(found.x) || !is_total(found.x, s))
            o.fail(describe(inst) + ": central clique is not a total clique");
    } catch (const error& e) {
        o.fail(describe(inst) + ": find_central_clique: " + e.what());
        return;
    }
    const bool some_bag = std::any_of(c.td.bags.begin(), c.td.bags.end(),
                                      [&](const vertex_set& b) { return is_central(inst.g, b, s, t, bound).has_value(); });
    if (some_bag) return;
    ++tally.premise;
    try {
        const auto orient = orientation_procedure(inst.g, c.td, s, t, bound);
        const auto [b1, b2] = orient.two_cycle;
        if (orient.out_edge.at(static_cast<std::size_t>(b1)) != b2 || orient.out_edge.at(static_cast<std::size_t>(b2)) != b1)
            o.fail(describe(inst) + ": orientation has no 2-cycle");
        const auto x = central_from_orientation(inst.g, c.td, orient, s, t, bound);
        if (witness_holds(inst.g, x, s, t, bound))
            ++tally.validated;
        else
            o.fail(describe(inst) + ": clique from the 2-cycle is not central");
    } catch (const error& e) {
        o.fail(describe(inst) + ": orientation: " + e.what());
    }
}

outcome criterion_5(const std::vector<solved<detour>>& paths, const std::vector<solved<longest_cycle>>& cycles) {
    outcome o;
    orientation_tally natural, stressed;
    for (const auto& r : paths)
        if (r.c) central_checks(*r.instance, *r.c, r.c->threshold, r.c->result.bound, o, natural);
    for (const auto& r : cycles)
        if (r.c) central_checks(*r.instance, *r.c, r.c->threshold, r.c->result.bound, o, natural);

    // Natural thresholds leave some bag central on every corpus instance, so
    // the orientation is also run with bound 0 and thresholds below the
    // item length, where the premise does occur.
    for (std::uint64_t seed = 0; seed < 1500; ++seed) {
        corpus_instance inst;
        inst.spec.kind = gen_kind::subtree_chordal;
        inst.spec.n = 4 + static_cast<int>(seed % 5);
        inst.spec.density = 0.7;
        inst.spec.seed = seed;
        inst.g = generate(inst.spec);
        if (!is_connected(inst.g)) continue;
        construction<detour> c;
        c.td = clique_tree(inst.g);
        c.items = all_detours(inst.g);
        for (int t = 1; t <= std::min(3, static_cast<int>(c.items.length) - 1); ++t)
            central_checks(inst, c, small_threshold{t, item_mode::path}, 0, o, stressed);
    }

    std::ostringstream s;
    s << natural.instances << " corpus instances: central clique found and validated; no central bag on "
      << natural.premise << " of them (" << natural.validated << " validated via orientation); stress runs: "
      << stressed.instances << ", premise held on " << stressed.premise << ", " << stressed.validated
      << " validated via orientation";
    o.summary = s.str();
    if (stressed.premise == 0) o.fail("the orientation premise never occurred, orientation untested");
    return o;
}

outcome criterion_6() {
    outcome o;
    const auto rows = bounds_table(200);
    std::set<int> path_expected{15, 19, 20, 23, 24, 25};
    std::set<int> cycle_expected{12};
    for (int w = 27; w <= 200; ++w) path_expected.insert(w);
    for (int w = 14; w <= 200; ++w) cycle_expected.insert(w);
    std::set<int> path_got, cycle_got;
    for (const auto& r : rows) {
        const int w = r.omega;
        const std::size_t path_new = 4 * static_cast<std::size_t>((w + 4) / 5);
        const std::size_t cycle_new = 2 * static_cast<std::size_t>((w + 2) / 3);
        const std::size_t path_old = static_cast<std::size_t>(std::max(1, w - 2));
        const std::size_t cycle_old = static_cast<std::size_t>(std::max(1, w - 3));
        if (r.path_bound != path_new || r.cycle_bound != cycle_new || r.path_prior != path_old ||
            r.cycle_prior != cycle_old || bound_for(w, item_mode::path) != path_new ||
            bound_for(w, item_mode::cycle) != cycle_new)
            o.fail("bound values differ at omega=" + std::to_string(w));
        if (r.path_improved != (path_new < path_old) || r.cycle_improved != (cycle_new < cycle_old))
            o.fail("improvement flag inconsistent at omega=" + std::to_string(w));
        if (r.path_improved) path_got.insert(w);
        if (r.cycle_improved) cycle_got.insert(w);
    }
    if (rows.size() != 200) o.fail("table does not cover omega=1..200");
    if (path_got != path_expected) o.fail("path improvement set differs from {15,19,20,23,24,25} u [27,200]");
    if (cycle_got != cycle_expected) o.fail("cycle improvement set differs from {12} u [14,200]");
    o.summary = "omega=1..200: path improved on " + std::to_string(path_got.size()) + " values, cycle on " +
                std::to_string(cycle_got.size());
    return o;
}

outcome criterion_7() {
    outcome o;
    const graph p = named_graph("petersen_split12");
    const auto ds = all_detours(p);
    const auto common = common_intersection(ds);
    const auto hit = min_hitting_set(member_sets(ds), p.vertices());
    std::vector<std::uint64_t> masks;
    for (const auto& d : ds.items) masks.push_back(oracle::mask_of(d.vertices));
    const int brute_hit = oracle::min_hitting_size(masks);
    std::uint64_t brute_common = oracle::all_of(p.order());
    for (auto m : masks) brute_common &= m;
    if (!common.empty() || brute_common != 0) o.fail("petersen_split12: detours share a vertex");
    if (hit.size() < 2 || static_cast<int>(hit.size()) != brute_hit) o.fail("petersen_split12: hitting set size wrong");
    if (oracle::chordal(p) != is_chordal(p)) o.fail("petersen_split12: chordality disagrees with brute force");

    const graph w = named_graph("walther25");
    const auto wd = all_detours(w);
    const auto wcommon = common_intersection(wd);
    if (w.order() != 25) o.fail("walther25 does not have 25 vertices");
    if (!is_connected(w) || !oracle::connected(w)) o.fail("walther25 is not connected");
    if (!wcommon.empty()) o.fail("walther25: detours share a vertex");

    std::ostringstream s;
    s << "petersen_split12: " << ds.size() << " detours on " << ds.length << " vertices, empty intersection, minimum "
      << "hitting set " << hit.size() << " (brute force " << brute_hit << "); walther25: n=" << w.order() << ", "
      << wd.size() << " detours on " << wd.length << " vertices, empty intersection";
    o.summary = s.str();
    return o;
}

template <class Item>
void sandwich(const solved<Item>& r, bool path_mode, outcome& o, std::size_t& checked, std::size_t& infeasible,
              std::size_t& brute) {
    const auto& inst = *r.instance;
    if (!r.c) return;
    const auto& c = *r.c;
    optimum_report rep;
    try {
        rep = compare_with_optimum(c);
    } catch (const resource_error&) {
        ++infeasible;
        return;
    } catch (const error& e) {
        o.fail(describe(inst) + ": " + e.what());
        return;
    }
    ++checked;
    if (!(rep.opt_size <= rep.algo_size && rep.algo_size <= rep.bound))
        o.fail(describe(inst) + ": opt <= algo <= bound violated");
    if (path_mode && rep.opt_size > 4 * static_cast<std::size_t>(ceil_div(c.omega, 5)))
        o.fail(describe(inst) + ": optimum exceeds 4*ceil(omega/5)");
    if (inst.g.order() <= 10 && c.items.size() <= 3000) {
        std::vector<std::uint64_t> masks;
        for (const auto& item : c.items.items) masks.push_back(oracle::mask_of(item.vertices));
        if (oracle::min_hitting_size(masks) != static_cast<int>(rep.opt_size))
            o.fail(describe(inst) + ": optimum size disagrees with brute force");
        if (!oracle::hits_all(masks, oracle::mask_of(rep.optimum.ids())))
            o.fail(describe(inst) + ": reported optimum misses an item");
        ++brute;
    }
}

outcome criterion_8(const std::vector<solved<detour>>& paths, const std::vector<solved<longest_cycle>>& cycles) {
    outcome o;
    std::size_t checked = 0, infeasible = 0, brute = 0;
    for (const auto& r : paths) sandwich(r, true, o, checked, infeasible, brute);
    for (const auto& r : cycles) sandwich(r, false, o, checked, infeasible, brute);
    o.summary = std::to_string(checked) + " instances with a feasible oracle (" + std::to_string(infeasible) +
                " infeasible), " + std::to_string(brute) + " optima confirmed by brute force";
    if (checked == 0) o.fail("no feasible oracle run");
    return o;
}

outcome criterion_9() {
    outcome o;
    rng r(9);
    std::size_t chordal_count = 0;
    const int total = 10000;
    for (int i = 0; i < total; ++i) {
        const int n = 1 + static_cast<int>(r.below(8));
        graph g;
        if (i % 2 == 0) {
            const std::uint64_t percent = 10 + r.below(81);
            std::vector<edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (r.below(100) < percent) edges.emplace_back(u, v);
            g = graph(n, std::move(edges));
        } else {
            // A chordal graph with one edge toggled: near the boundary.
            const graph base = gen_subtree_chordal(n, 0.2 + 0.1 * static_cast<double>(r.below(8)), r.below(1u << 30));
            std::set<edge> edges(base.edges().begin(), base.edges().end());
            if (n >= 2) {
                const int u = static_cast<int>(r.below(static_cast<std::uint64_t>(n)));
                int v = static_cast<int>(r.below(static_cast<std::uint64_t>(n - 1)));
                if (v >= u) ++v;
                const edge e{std::min(u, v), std::max(u, v)};
                if (!edges.erase(e)) edges.insert(e);
            }
            g = graph(n, std::vector<edge>(edges.begin(), edges.end()));
        }
        const bool fast = is_chordal(g);
        chordal_count += fast;
        if (fast != oracle::chordal(g)) {
            std::ostringstream s;
            s << "disagreement on graph " << i << " (n=" << n << ", m=" << g.size() << ")";
            o.fail(s.str());
        }
    }
    o.summary = std::to_string(total) + " random graphs with n<=8 (" + std::to_string(chordal_count) + " chordal)";
    return o;
}

template <class F>
void timed(int criterion, F run) {
    const auto t0 = clock_type::now();
    outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o.fail(std::string("unexpected exception: ") + e.what());
    }
    report(criterion, o, seconds_since(t0));
}

}  // namespace

int main() {
    const auto t0 = clock_type::now();
    const auto paths = path_corpus();
    const auto cycles = cycle_corpus();
    const auto path_runs = solve_all<detour>(paths, [](const graph& g) { return construct_path_transversal(g); });
    const auto cycle_runs =
        solve_all<longest_cycle>(cycles, [](const graph& g) { return construct_cycle_transversal(g); });
    std::printf("corpora: %zu path instances, %zu cycle instances, built in %.1f s\n", paths.size(), cycles.size(),
                seconds_since(t0));

    timed(1, [&] { return criterion_1(path_runs); });
    timed(2, [&] { return criterion_2(cycle_runs); });
    timed(3, [&] { return criterion_3(path_runs); });
    timed(4, [&] { return criterion_4(path_runs); });
    timed(5, [&] { return criterion_5(path_runs, cycle_runs); });
    timed(6, [&] { return criterion_6(); });
    timed(7, [&] { return criterion_7(); });
    timed(8, [&] { return criterion_8(path_runs, cycle_runs); });
    timed(9, [&] {
        const auto start = clock_type::now();
        auto o = criterion_9();
        if (seconds_since(start) >= 60.0) o.fail("took a minute or longer");
        return o;
    });
    std::printf("total %.1f s, %d criteria failed\n", seconds_since(t0), failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
