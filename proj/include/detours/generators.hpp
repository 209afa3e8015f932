#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "detours/graph.hpp"

namespace detours {

// Instance streams: std::mt19937_64 seeded through one SplitMix64 step, so
// (seed, stream) pairs give independent, portable sequences.
inline constexpr const char* prng_name = "mt19937_64/splitmix64-seeded";

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
    // Uniform in [0, n); rejection sampling keeps this identical across
    // standard libraries.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

// K_{k+1}, then each new vertex joins a uniformly chosen existing k-clique.
graph gen_ktree(int n, int k, std::uint64_t seed);

// Intersection graph of n random subtrees of a random host tree with
// max(1, ⌈n·density⌉ + 1) nodes; each subtree has a uniform size in
// [1, ⌈hosts·density⌉]. Chordal; possibly disconnected.
graph gen_subtree_chordal(int n, double density, std::uint64_t seed);

// Vertex i is adjacent to j iff subtrees i and j share a host node.
graph subtree_intersection_graph(const std::vector<std::vector<int>>& subtrees);

// k_<n>, path_<n>, cycle_<n>, star_<n> (n leaves), bowtie, petersen,
// petersen_split12, walther25.
graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

enum class gen_kind { ktree, subtree_chordal, named };

struct gen_spec {
    gen_kind kind = gen_kind::ktree;
    int n = 0;
    int k = 0;
    double density = 0.5;
    std::uint64_t seed = 0;
    std::string name;
};

graph generate(const gen_spec& spec);
// One line per parameter, "key value", recorded verbatim.
std::vector<std::string> metadata(const gen_spec& spec);

gen_kind parse_gen_kind(const std::string& name);  // ktree | subtree-chordal | named
std::string_view to_string(gen_kind k);

// Seeded random instances kept only if they pass the filters. Attempt i
// draws n in [n_min, n_max] and k in [k_min, min(k_max, n-1)] from stream i.
struct corpus_spec {
    gen_kind kind = gen_kind::ktree;
    int count = 0;
    int n_min = 1;
    int n_max = 1;
    int k_min = 1;
    int k_max = 1;
    double density = 0.5;
    std::uint64_t seed = 0;
    bool require_connected = true;
    bool require_biconnected = false;
};

struct corpus_instance {
    gen_spec spec;
    graph g;
};

// Throws input_error on invalid ranges or if 1000·count attempts do not
// yield enough instances.
std::vector<corpus_instance> generate_corpus(const corpus_spec& spec);

}  // namespace detours
