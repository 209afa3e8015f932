#include "detours/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "detours/error.hpp"

namespace detours {

int tree_decomposition::width() const {
    std::size_t widest = 0;
    for (const auto& b : bags) widest = std::max(widest, b.size());
    return static_cast<int>(widest) - 1;
}

std::vector<std::vector<int>> tree_decomposition::adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [i, j] : tree_edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

elimination_ordering mcs_order(const graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> weight(n, 0);
    std::vector<char> numbered(n, 0);
    elimination_ordering out;
    out.order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!numbered[v] && (pick == n || weight[v] > weight[pick])) pick = v;
        numbered[pick] = 1;
        out.order.push_back(static_cast<vertex>(pick));
        for (vertex w : g.neighbors(static_cast<vertex>(pick)))
            if (!numbered[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    return out;
}

bool is_peo(const graph& g, const elimination_ordering& o) {
    const auto n = static_cast<std::size_t>(g.order());
    if (o.order.size() != n) throw input_error("ordering is not a permutation of the vertices");
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = o.order[i];
        if (v < 0 || static_cast<std::size_t>(v) >= n || pos[static_cast<std::size_t>(v)] != n)
            throw input_error("ordering is not a permutation of the vertices");
        pos[static_cast<std::size_t>(v)] = i;
    }
    for (vertex v : o.order) {
        std::vector<vertex> later;
        for (vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) later.push_back(w);
        if (!g.is_clique(vertex_set(std::move(later)))) return false;
    }
    return true;
}

namespace {

elimination_ordering reversed(elimination_ordering o) {
    std::reverse(o.order.begin(), o.order.end());
    return o;
}

void require_chordal(const graph& g, const elimination_ordering& peo) {
    if (!is_peo(g, peo)) throw precondition_error("not chordal");
}

}  // namespace

bool is_chordal(const graph& g) { return is_peo(g, reversed(mcs_order(g))); }

std::vector<vertex_set> maximal_cliques(const graph& g) {
    const auto peo = reversed(mcs_order(g));
    require_chordal(g, peo);
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(peo.order[i])] = i;

    // Every maximal clique is {v} ∪ (later neighbours of v) for some v.
    std::vector<vertex_set> candidates;
    for (vertex v : peo.order) {
        std::vector<vertex> c{v};
        for (vertex w : g.neighbors(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)]) c.push_back(w);
        candidates.emplace_back(std::move(c));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<vertex_set> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
            dominated = i != j && candidates[j].size() > candidates[i].size() && candidates[j].includes(candidates[i]);
        if (!dominated) out.push_back(candidates[i]);
    }
    return out;
}

int clique_number(const graph& g) {
    std::size_t omega = 0;
    for (const auto& c : maximal_cliques(g)) omega = std::max(omega, c.size());
    return static_cast<int>(omega);
}

namespace {

struct union_find {
    std::vector<int> parent;
    explicit union_find(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

// Contracts tree edges whose bags are nested, keeping the larger bag.
void reduce(tree_decomposition& td) {
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [i, j] : td.tree_edges) {
            const auto& bi = td.bags[static_cast<std::size_t>(i)];
            const auto& bj = td.bags[static_cast<std::size_t>(j)];
            if (!bi.includes(bj) && !bj.includes(bi)) continue;
            const int keep = bi.includes(bj) ? i : j;
            const int drop = keep == i ? j : i;
            std::vector<std::pair<int, int>> edges;
            for (auto [a, b] : td.tree_edges) {
                if ((a == i && b == j)) continue;
                auto relabel = [&](int x) {
                    if (x == drop) x = keep;
                    return x > drop ? x - 1 : x;
                };
                a = relabel(a);
                b = relabel(b);
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            td.bags.erase(td.bags.begin() + drop);
            std::sort(edges.begin(), edges.end());
            td.tree_edges = std::move(edges);
            changed = true;
            break;
        }
    }
}

}  // namespace

tree_decomposition clique_tree(const graph& g) {
    if (!is_connected(g)) throw precondition_error("not connected");
    tree_decomposition td;
    td.bags = maximal_cliques(g);

    std::vector<std::tuple<std::size_t, int, int>> weighted;
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        for (std::size_t j = i + 1; j < td.bags.size(); ++j) {
            const auto w = set_intersection(td.bags[i], td.bags[j]).size();
            if (w > 0) weighted.emplace_back(w, static_cast<int>(i), static_cast<int>(j));
        }
    std::stable_sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
    });
    union_find uf(td.bags.size());
    for (auto [w, i, j] : weighted)
        if (uf.unite(i, j)) td.tree_edges.emplace_back(i, j);
    std::sort(td.tree_edges.begin(), td.tree_edges.end());
    reduce(td);

    if (auto bad = tree_decomposition_violations(g, td); !bad.empty())
        throw invariant_error("clique tree construction failed: " + bad.front());
    return td;
}

std::vector<std::string> tree_decomposition_violations(const graph& g, const tree_decomposition& td) {
    std::vector<std::string> out;
    const auto m = td.bags.size();
    if (m == 0) {
        if (g.order() > 0) out.emplace_back("no bags");
        return out;
    }

    if (td.tree_edges.size() + 1 != m) out.emplace_back("edge count is not bags - 1");
    union_find uf(m);
    for (auto [i, j] : td.tree_edges) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= m || static_cast<std::size_t>(j) >= m) {
            out.emplace_back("tree edge out of range");
            return out;
        }
        if (!uf.unite(i, j)) out.emplace_back("tree edges contain a cycle");
    }
    for (std::size_t i = 1; i < m; ++i)
        if (uf.find(static_cast<int>(i)) != uf.find(0)) {
            out.emplace_back("tree is disconnected");
            break;
        }

    const auto adj = td.adjacency();
    for (vertex v = 0; v < g.order(); ++v) {
        std::vector<char> holds(m, 0);
        std::size_t count = 0, first = m;
        for (std::size_t i = 0; i < m; ++i)
            if (td.bags[i].contains(v)) {
                holds[i] = 1;
                ++count;
                first = std::min(first, i);
            }
        if (count == 0) {
            out.push_back("vertex " + std::to_string(v) + " is in no bag");
            continue;
        }
        std::vector<char> seen(m, 0);
        std::vector<std::size_t> stack{first};
        seen[first] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            auto b = stack.back();
            stack.pop_back();
            ++reached;
            for (int nb : adj[b]) {
                const auto u = static_cast<std::size_t>(nb);
                if (holds[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        if (reached != count) out.push_back("bags holding vertex " + std::to_string(v) + " are not a subtree");
    }

    for (auto [u, v] : g.edges()) {
        bool covered = std::any_of(td.bags.begin(), td.bags.end(),
                                   [&](const vertex_set& b) { return b.contains(u) && b.contains(v); });
        if (!covered) out.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!g.is_clique(td.bags[i])) out.push_back("bag " + std::to_string(i) + " is not a clique");
    for (auto [i, j] : td.tree_edges) {
        const auto& a = td.bags[static_cast<std::size_t>(i)];
        const auto& b = td.bags[static_cast<std::size_t>(j)];
        if (a.includes(b) || b.includes(a))
            out.push_back("adjacent bags " + std::to_string(i) + "," + std::to_string(j) + " are nested");
    }
    return out;
}

}  // namespace detours
