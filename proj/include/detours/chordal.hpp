#pragma once

#include <string>
#include <vector>

#include "detours/graph.hpp"

namespace detours {

// A permutation of 0..n-1.
struct elimination_ordering {
    std::vector<vertex> order;
};

// Tree of bags. For chordal graphs every bag is a maximal clique.
struct tree_decomposition {
    std::vector<vertex_set> bags;
    std::vector<std::pair<int, int>> tree_edges;  // (i, j) with i < j, sorted

    int width() const;
    std::vector<std::vector<int>> adjacency() const;
};

// Maximum cardinality search; ties go to the smallest id. On a chordal
// graph the reverse of the returned order is a perfect elimination ordering.
elimination_ordering mcs_order(const graph& g);
bool is_peo(const graph& g, const elimination_ordering& o);
bool is_chordal(const graph& g);

// Requires a chordal graph. Sorted lexicographically.
std::vector<vertex_set> maximal_cliques(const graph& g);
int clique_number(const graph& g);

// Maximum-weight spanning tree over the maximal cliques, weight |B ∩ B'|.
// Requires a connected chordal graph.
tree_decomposition clique_tree(const graph& g);

// Human-readable descriptions of every violated decomposition invariant;
// empty when `td` is a valid reduced clique tree of `g`.
std::vector<std::string> tree_decomposition_violations(const graph& g, const tree_decomposition& td);

}  // namespace detours
